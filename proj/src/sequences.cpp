#include "dissoc/sequences.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace dissoc {

namespace {

Count run_recurrence(int k, std::array<unsigned, 3> base) {
    if (k < 0) throw std::domain_error("sequence index must be >= 0");
    if (k < 3) return base[k];
    Count a = base[0], b = base[1], c = base[2];
    for (int i = 3; i <= k; ++i) {
        Count next = c + 2 * b + a;
        a = std::move(b);
        b = std::move(c);
        c = std::move(next);
    }
    return c;
}

// value <= (num/den)^exp, exactly. Negative exponents flip the fraction.
bool leq_ratio_pow(const Count& value, unsigned long num, unsigned long den, long exp) {
    mpz_class num_pow, den_pow;
    const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_ui_pow_ui(num_pow.get_mpz_t(), num, e);
    mpz_ui_pow_ui(den_pow.get_mpz_t(), den, e);
    if (exp >= 0) return value * den_pow <= num_pow;
    return value * num_pow <= den_pow;
}

}  // namespace

Count seq_f(int k) { return run_recurrence(k, {1, 1, 3}); }

Count seq_g(int k) { return run_recurrence(k, {1, 2, 4}); }

int psi_lower(int n) {
    if (n < 1) throw std::domain_error("order must be >= 1");
    return (2 * n + 2) / 3;
}

int psi_upper_subcubic(int n) {
    if (n < 1) throw std::domain_error("order must be >= 1");
    return (4 * n + 2) / 5;
}

Count phi_bound_sharp(int n, int psi) {
    if (psi < psi_lower(n) || psi > psi_upper_subcubic(n))
        throw std::domain_error("infeasible (n, psi) pair: n=" + std::to_string(n) +
                                " psi=" + std::to_string(psi));
    const long raw = 4L * n - 5L * psi + (psi % 2 == 0 ? 2 : 1);
    // Within the window the argument is always an even nonnegative integer;
    // the guard documents the parity contract.
    if (raw < 0 || raw % 2 != 0)
        throw std::domain_error("parity-infeasible (n, psi) pair: n=" + std::to_string(n) +
                                " psi=" + std::to_string(psi));
    const int arg = static_cast<int>(raw / 2);
    return psi % 2 == 0 ? seq_f(arg) : seq_g(arg);
}

BoundReport phi_bound_checks(int n, int psi, const Count& phi) {
    BoundReport report;
    report.n = n;
    report.psi = psi;
    report.phi = phi;
    report.lower_ok = 3L * psi >= 2L * n;
    report.upper_ok = 5L * psi <= 4L * n + 2;
    report.thm32_ok = leq_ratio_pow(phi, 1466, 1000, 4L * n - 5L * psi + 2);
    report.cor_n_ok = leq_ratio_pow(phi, 129, 100, n + 1L);
    report.cor_psi_ok = leq_ratio_pow(phi, 1466, 1000, psi + 2L);
    report.sharp_applicable = report.lower_ok && report.upper_ok;
    if (report.sharp_applicable) {
        report.sharp_bound = phi_bound_sharp(n, psi);
        report.sharp_ok = phi <= report.sharp_bound;
        report.sharp_attained = phi == report.sharp_bound;
    }
    return report;
}

}  // namespace dissoc
