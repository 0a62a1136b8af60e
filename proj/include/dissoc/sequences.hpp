#pragma once

#include <gmpxx.h>

#include "dissoc/engine.hpp"

namespace dissoc {

/// f(0)=1, f(1)=1, f(2)=3, f(k)=f(k-1)+2f(k-2)+f(k-3).
Count seq_f(int k);

/// g(0)=1, g(1)=2, g(2)=4, g(k)=g(k-1)+2g(k-2)+g(k-3).
Count seq_g(int k);

/// ceil(2n/3): every tree of order n has dissociation number at least this.
int psi_lower(int n);

/// floor((4n+2)/5): no subcubic tree of order n exceeds this.
int psi_upper_subcubic(int n);

/// The sharp count bound: f((4n-5*psi+2)/2) for even psi, g((4n-5*psi+1)/2)
/// for odd. Throws std::domain_error when (n, psi) lies outside the
/// subcubic-feasible window or the selected argument is not a nonnegative
/// integer.
Count phi_bound_sharp(int n, int psi);

/// Per-tree verdicts for every closed-form bound. Comparisons are exact: the
/// stated decimal constants enter as the rationals 1466/1000 and 129/100, so
/// no floating point is involved anywhere.
struct BoundReport {
    int n = 0;
    int psi = 0;
    Count phi = 0;
    bool lower_ok = false;       // psi >= ceil(2n/3)
    bool upper_ok = false;       // psi <= floor((4n+2)/5)
    bool thm32_ok = false;       // phi <= (1466/1000)^(4n-5psi+2)
    bool cor_n_ok = false;       // phi <= (129/100)^(n+1)
    bool cor_psi_ok = false;     // phi <= (1466/1000)^(psi+2)
    bool sharp_applicable = false;  // (n, psi) inside the subcubic window
    Count sharp_bound = 0;
    bool sharp_ok = false;       // phi <= sharp_bound
    bool sharp_attained = false; // phi == sharp_bound

    bool all_ok() const {
        return lower_ok && upper_ok && thm32_ok && cor_n_ok && cor_psi_ok && sharp_ok;
    }
};

BoundReport phi_bound_checks(int n, int psi, const Count& phi);

}  // namespace dissoc
