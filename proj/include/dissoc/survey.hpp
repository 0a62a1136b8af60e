#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dissoc/engine.hpp"
#include "dissoc/sequences.hpp"
#include "dissoc/tree.hpp"

namespace dissoc {

/// One line of survey.csv: a tree's class, its computed quantities, and a
/// verdict per theorem. Every *_ok field must hold in a passing survey;
/// lemma31_ok is vacuously true when no leaf satisfies the hypothesis.
struct SurveyRow {
    int n = 0;
    int psi = 0;
    Count phi = 0;
    std::string code;
    bool lower_ok = false;
    bool upper_ok = false;
    bool thm32_ok = false;
    bool cor_n_ok = false;
    bool cor_psi_ok = false;
    bool sharp_ok = false;
    bool sharp_attained = false;
    bool lemma31_ok = false;

    bool all_ok() const {
        return lower_ok && upper_ok && thm32_ok && cor_n_ok && cor_psi_ok && sharp_ok &&
               lemma31_ok;
    }
};

/// Aggregate over one (n, psi) cell: how close the surveyed classes come to
/// the sharp bound and whether a constructed extremal tree is among the
/// classes attaining the maximum.
struct ExtremalRecord {
    int n = 0;
    int psi = 0;
    Count max_phi = 0;
    Count bound = 0;
    bool attained = false;
    std::vector<std::string> attaining_codes;
    bool construction_match = false;
};

struct SurveySummary {
    std::uint64_t rows = 0;
    std::uint64_t failures = 0;         // rows with any violated check
    std::uint64_t attainment_gaps = 0;  // cells with max_phi < bound
    std::uint64_t lemma31_checks = 0;   // qualifying leaves tested
};

/// Verdicts of the leaf-deletion counting lemma: for every leaf v with
/// psi(T-v) = psi(T), the count avoiding v is at most each of the two
/// containing counts and at most a third of the total.
struct Lemma31Outcome {
    std::uint64_t checks = 0;
    bool ok = true;
};

Lemma31Outcome check_lemma31(const Tree& t, int psi_value, const Count& phi_value);

/// Everything run_survey computes for a single tree.
SurveyRow evaluate_tree(const Tree& t, std::uint64_t* lemma_checks = nullptr);

struct SurveyOptions {
    int max_n = 14;
    std::filesystem::path out_dir;
    int jobs = 1;  // <= 1 means sequential
};

/// Enumerates every subcubic class up to max_n, evaluates each tree
/// (parallel across trees when jobs > 1), and writes survey.csv,
/// extremal.json and summary.json in deterministic order. Returns the
/// summary. Throws on I/O failure or when max_n exceeds the generator
/// ceiling.
SurveySummary run_survey(const SurveyOptions& options);

std::vector<SurveyRow> load_survey_csv(const std::filesystem::path& file);
std::vector<ExtremalRecord> load_extremal_json(const std::filesystem::path& file);

/// Renders the human-readable per-cell table and theorem scoreboard from a
/// completed survey directory. Throws when the survey files are missing or
/// corrupt.
std::string render_report(const std::filesystem::path& survey_dir);

}  // namespace dissoc
