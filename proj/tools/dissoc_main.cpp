// dissoc: dissociation numbers, maximum-dissociation-set counts, extremal
// subcubic families, and the exhaustive theorem survey, from the command
// line. Exit codes: 0 success / all checks pass, 1 usage or I/O errors,
// 2 a bound check failed (the "finding" exit).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "dissoc/canonical.hpp"
#include "dissoc/engine.hpp"
#include "dissoc/families.hpp"
#include "dissoc/oracle.hpp"
#include "dissoc/sequences.hpp"
#include "dissoc/survey.hpp"
#include "dissoc/tree.hpp"
#include "dissoc/treegen.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFinding = 2;

dissoc::Tree load_tree(const std::string& file) {
    if (file == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return dissoc::parse_tree(buffer.str());
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return dissoc::parse_tree(buffer.str());
}

json report_to_json(const dissoc::BoundReport& report, int max_deg) {
    json out = {{"n", report.n},
                {"psi", report.psi},
                {"phi", report.phi.get_str()},
                {"max_degree", max_deg},
                {"subcubic", max_deg <= 3},
                {"lower_ok", report.lower_ok},
                {"upper_ok", report.upper_ok},
                {"thm32_ok", report.thm32_ok},
                {"cor_n_ok", report.cor_n_ok},
                {"cor_psi_ok", report.cor_psi_ok},
                {"sharp_applicable", report.sharp_applicable}};
    if (report.sharp_applicable) {
        out["sharp_bound"] = report.sharp_bound.get_str();
        out["sharp_ok"] = report.sharp_ok;
        out["sharp_attained"] = report.sharp_attained;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum dissociation sets in trees"};
    app.require_subcommand(1);

    std::string file;
    std::optional<std::uint64_t> limit;
    int vertex = 0;
    int oracle_cap = 24;

    auto* cmd_psi = app.add_subcommand("psi", "dissociation number of a tree");
    cmd_psi->add_option("file", file, "edge-list file, - for stdin")->required();

    auto* cmd_phi = app.add_subcommand("phi", "number of maximum dissociation sets");
    cmd_phi->add_option("file", file)->required();

    auto* cmd_enum = app.add_subcommand("enum", "list maximum dissociation sets");
    cmd_enum->add_option("file", file)->required();
    std::uint64_t limit_value = 0;
    auto* limit_opt = cmd_enum->add_option("--limit", limit_value, "stop after this many sets");

    auto* cmd_profile = app.add_subcommand("profile", "per-vertex counts of maximum sets");
    cmd_profile->add_option("file", file)->required();
    cmd_profile->add_option("--vertex", vertex, "designated vertex")->required();

    auto* cmd_check = app.add_subcommand("check", "evaluate every bound on one tree");
    cmd_check->add_option("file", file)->required();

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force ground truth");
    cmd_oracle->add_option("file", file)->required();
    cmd_oracle->add_option("--cap", oracle_cap, "refuse orders above this")->capture_default_str();

    auto* cmd_gen = app.add_subcommand("gen", "construct trees");
    cmd_gen->require_subcommand(1);

    std::string kind;
    int param = 1;
    auto* gen_family = cmd_gen->add_subcommand("family", "one of the extremal families");
    gen_family->add_option("--kind", kind, "T | T1 | T2 | K1chain | K2chain")->required();
    gen_family->add_option("--param", param, "ell for T/T1/T2, m for chains")->required();

    int gen_n = 0;
    int gen_psi = 0;
    int variant = -1;
    auto* gen_extremal = cmd_gen->add_subcommand("extremal", "extremal tree for (n, psi)");
    gen_extremal->add_option("--n", gen_n)->required();
    gen_extremal->add_option("--psi", gen_psi)->required();
    gen_extremal->add_option("--variant", variant, "select one construction variant (0-based)");

    std::uint64_t seed = 0;
    auto* gen_random = cmd_gen->add_subcommand("random", "seeded random subcubic tree");
    gen_random->add_option("--n", gen_n)->required();
    gen_random->add_option("--seed", seed)->required();

    int max_n = 14;
    int jobs = 1;
    std::string out_dir;
    auto* cmd_survey = app.add_subcommand("survey", "verify every theorem exhaustively");
    cmd_survey->add_option("--max-n", max_n, "largest order to survey")->required();
    cmd_survey->add_option("--out", out_dir, "output directory")->required();
    cmd_survey->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    std::string report_dir;
    auto* cmd_report = app.add_subcommand("report", "render tables from a survey directory");
    cmd_report->add_option("dir", report_dir)->required();

    limit_opt->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        // normalize: help/version exit 0, every usage problem exits 1
        return app.exit(err) == 0 ? kExitOk : kExitError;
    }

    try {
        if (*cmd_psi) {
            std::cout << dissoc::psi(load_tree(file)) << '\n';
        } else if (*cmd_phi) {
            std::cout << dissoc::phi(load_tree(file)).get_str() << '\n';
        } else if (*cmd_enum) {
            if (*limit_opt) limit = limit_value;
            dissoc::Tree t = load_tree(file);
            dissoc::MdsEnumerator sets(t);
            std::uint64_t emitted = 0;
            while (!limit || emitted < *limit) {
                auto set = sets.next();
                if (!set) break;
                for (std::size_t i = 0; i < set->size(); ++i)
                    std::cout << (i ? " " : "") << (*set)[i];
                std::cout << '\n';
                ++emitted;
            }
            if (limit && sets.total() > *limit)
                std::cout << "# truncated after " << emitted << " of "
                          << sets.total().get_str() << " sets\n";
        } else if (*cmd_profile) {
            dissoc::RootProfile profile = dissoc::root_profile(load_tree(file), vertex);
            json out = {{"psi", profile.psi},
                        {"phi_out", profile.phi_out.get_str()},
                        {"phi_in0", profile.phi_in0.get_str()},
                        {"phi_in1", profile.phi_in1.get_str()}};
            std::cout << out.dump(2) << '\n';
        } else if (*cmd_check) {
            dissoc::Tree t = load_tree(file);
            auto [psi_value, phi_value] = dissoc::psi_phi(t);
            dissoc::BoundReport report =
                dissoc::phi_bound_checks(t.order(), psi_value, phi_value);
            std::cout << report_to_json(report, dissoc::max_degree(t)).dump(2) << '\n';
            return report.all_ok() ? kExitOk : kExitFinding;
        } else if (*cmd_oracle) {
            dissoc::OracleResult result = dissoc::brute_force(load_tree(file), oracle_cap);
            json sets = json::array();
            for (const auto& set : result.sets) sets.push_back(set);
            json out = {{"psi", result.psi}, {"phi", result.phi.get_str()}, {"sets", sets}};
            std::cout << out.dump(2) << '\n';
        } else if (*gen_family) {
            dissoc::BuiltFamily built = [&] {
                if (kind == "T") return dissoc::build_T(param);
                if (kind == "T1") return dissoc::build_T1(param);
                if (kind == "T2") return dissoc::build_T2(param);
                if (kind == "K1chain") return dissoc::build_chain(dissoc::ChainBase::k1, param);
                if (kind == "K2chain") return dissoc::build_chain(dissoc::ChainBase::k2, param);
                throw std::runtime_error("unknown family kind: " + kind);
            }();
            std::cout << dissoc::serialize_tree(built.tree);
        } else if (*gen_extremal) {
            std::vector<dissoc::BuiltFamily> variants = dissoc::build_extremal(gen_n, gen_psi);
            if (variant >= 0) {
                if (variant >= static_cast<int>(variants.size()))
                    throw std::domain_error("variant index out of range; " +
                                            std::to_string(variants.size()) + " available");
                std::cout << dissoc::serialize_tree(variants[variant].tree);
            } else {
                for (std::size_t i = 0; i < variants.size(); ++i) {
                    if (variants.size() > 1) std::cout << "# variant " << i << '\n';
                    std::cout << dissoc::serialize_tree(variants[i].tree);
                }
            }
        } else if (*gen_random) {
            std::cout << dissoc::serialize_tree(dissoc::random_subcubic(gen_n, seed));
        } else if (*cmd_survey) {
            dissoc::SurveySummary summary =
                dissoc::run_survey({max_n, std::filesystem::path(out_dir), jobs});
            std::cout << "rows: " << summary.rows << "\nfailures: " << summary.failures
                      << "\nattainment gaps: " << summary.attainment_gaps
                      << "\nlemma31 checks: " << summary.lemma31_checks << '\n';
            if (summary.failures > 0 || summary.attainment_gaps > 0) return kExitFinding;
        } else if (*cmd_report) {
            std::cout << dissoc::render_report(report_dir);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitError;
    }
    return kExitOk;
}
