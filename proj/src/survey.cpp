#include "dissoc/survey.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dissoc/canonical.hpp"
#include "dissoc/families.hpp"
#include "dissoc/treegen.hpp"

namespace dissoc {

namespace {

using nlohmann::json;

std::string to_decimal(const Count& value) { return value.get_str(); }

void write_file(const std::filesystem::path& file, const std::string& content) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for " + file.string());
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("missing survey file: " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

constexpr const char* kCsvHeader =
    "n,psi,phi,code,lower_ok,upper_ok,thm32_ok,cor_n_ok,cor_psi_ok,sharp_ok,"
    "sharp_attained,lemma31_ok";

std::string csv_line(const SurveyRow& row) {
    std::ostringstream out;
    out << row.n << ',' << row.psi << ',' << to_decimal(row.phi) << ',' << row.code;
    for (bool flag : {row.lower_ok, row.upper_ok, row.thm32_ok, row.cor_n_ok, row.cor_psi_ok,
                      row.sharp_ok, row.sharp_attained, row.lemma31_ok})
        out << ',' << (flag ? '1' : '0');
    return out.str();
}

}  // namespace

Lemma31Outcome check_lemma31(const Tree& t, int psi_value, const Count& phi_value) {
    Lemma31Outcome outcome;
    if (t.order() < 2) return outcome;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) != 1) continue;
        if (psi(remove_leaf(t, v)) != psi_value) continue;  // hypothesis
        ++outcome.checks;
        RootProfile profile = root_profile(t, v);
        const bool leq_both =
            profile.phi_out <= profile.phi_in0 && profile.phi_out <= profile.phi_in1;
        const bool third = 3 * profile.phi_out <= phi_value;
        if (!leq_both || !third) outcome.ok = false;
    }
    return outcome;
}

SurveyRow evaluate_tree(const Tree& t, std::uint64_t* lemma_checks) {
    auto [psi_value, phi_value] = psi_phi(t);

    SurveyRow row;
    row.n = t.order();
    row.psi = psi_value;
    row.phi = std::move(phi_value);
    row.code = canonical_code(t).code;

    BoundReport report = phi_bound_checks(row.n, row.psi, row.phi);
    row.lower_ok = report.lower_ok;
    row.upper_ok = report.upper_ok;
    row.thm32_ok = report.thm32_ok;
    row.cor_n_ok = report.cor_n_ok;
    row.cor_psi_ok = report.cor_psi_ok;
    row.sharp_ok = report.sharp_applicable && report.sharp_ok;
    row.sharp_attained = report.sharp_applicable && report.sharp_attained;

    Lemma31Outcome lemma = check_lemma31(t, row.psi, row.phi);
    row.lemma31_ok = lemma.ok;
    if (lemma_checks) *lemma_checks = lemma.checks;
    return row;
}

SurveySummary run_survey(const SurveyOptions& options) {
    if (options.max_n < 1 || options.max_n > kEnumerationCeiling)
        throw std::domain_error("run_survey: max_n must lie in 1.." +
                                std::to_string(kEnumerationCeiling));
    std::filesystem::create_directories(options.out_dir);

    std::vector<SurveyRow> rows;
    std::uint64_t lemma_checks_total = 0;

    for (int n = 1; n <= options.max_n; ++n) {
        std::vector<Tree> classes = enumerate_subcubic(n);
        std::vector<SurveyRow> level(classes.size());
        std::vector<std::uint64_t> checks(classes.size(), 0);

        const int jobs = std::max(1, options.jobs);
        if (jobs == 1 || classes.size() < 2) {
            for (std::size_t i = 0; i < classes.size(); ++i)
                level[i] = evaluate_tree(classes[i], &checks[i]);
        } else {
            // Pure per-tree work; results land in per-index slots so the
            // output order never depends on scheduling.
            std::atomic<std::size_t> cursor{0};
            auto worker = [&] {
                for (;;) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= classes.size()) return;
                    level[i] = evaluate_tree(classes[i], &checks[i]);
                }
            };
            std::vector<std::thread> pool;
            const int spawn = std::min<int>(jobs, static_cast<int>(classes.size()));
            pool.reserve(spawn);
            for (int i = 0; i < spawn; ++i) pool.emplace_back(worker);
            for (auto& thread : pool) thread.join();
        }

        // classes arrive sorted by canonical code, so rows stay in
        // deterministic (n, code) order
        for (std::size_t i = 0; i < classes.size(); ++i) {
            rows.push_back(std::move(level[i]));
            lemma_checks_total += checks[i];
        }
    }

    // per-(n, psi) extremal slices
    std::map<std::pair<int, int>, std::vector<const SurveyRow*>> cells;
    for (const SurveyRow& row : rows) cells[{row.n, row.psi}].push_back(&row);

    std::vector<ExtremalRecord> records;
    std::uint64_t gaps = 0;
    for (const auto& [key, members] : cells) {
        ExtremalRecord record;
        record.n = key.first;
        record.psi = key.second;
        record.bound = phi_bound_sharp(record.n, record.psi);
        for (const SurveyRow* row : members)
            if (row->phi > record.max_phi) record.max_phi = row->phi;
        for (const SurveyRow* row : members)
            if (row->phi == record.max_phi) record.attaining_codes.push_back(row->code);
        std::sort(record.attaining_codes.begin(), record.attaining_codes.end());
        record.attained = record.max_phi == record.bound;
        if (!record.attained) ++gaps;
        for (const BuiltFamily& variant : build_extremal(record.n, record.psi)) {
            const std::string code = canonical_code(variant.tree).code;
            if (std::find(record.attaining_codes.begin(), record.attaining_codes.end(), code) !=
                record.attaining_codes.end()) {
                record.construction_match = true;
                break;
            }
        }
        records.push_back(std::move(record));
    }

    SurveySummary summary;
    summary.rows = rows.size();
    summary.attainment_gaps = gaps;
    summary.lemma31_checks = lemma_checks_total;
    for (const SurveyRow& row : rows)
        if (!row.all_ok()) ++summary.failures;

    std::ostringstream csv;
    csv << kCsvHeader << '\n';
    for (const SurveyRow& row : rows) csv << csv_line(row) << '\n';
    write_file(options.out_dir / "survey.csv", csv.str());

    json extremal = json::array();
    for (const ExtremalRecord& record : records) {
        extremal.push_back({{"n", record.n},
                            {"psi", record.psi},
                            {"max_phi", to_decimal(record.max_phi)},
                            {"bound", to_decimal(record.bound)},
                            {"attained", record.attained},
                            {"attaining_codes", record.attaining_codes},
                            {"construction_match", record.construction_match}});
    }
    write_file(options.out_dir / "extremal.json", extremal.dump(2) + "\n");

    json meta = {{"max_n", options.max_n},
                 {"rows", summary.rows},
                 {"failures", summary.failures},
                 {"attainment_gaps", summary.attainment_gaps},
                 {"lemma31_checks", summary.lemma31_checks}};
    write_file(options.out_dir / "summary.json", meta.dump(2) + "\n");

    return summary;
}

std::vector<SurveyRow> load_survey_csv(const std::filesystem::path& file) {
    std::istringstream in(read_file(file));
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("corrupt survey csv: bad header in " + file.string());
    std::vector<SurveyRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (start <= line.size()) {
            const std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        if (fields.size() != 12)
            throw std::runtime_error("corrupt survey csv: bad row in " + file.string());
        SurveyRow row;
        row.n = std::stoi(fields[0]);
        row.psi = std::stoi(fields[1]);
        row.phi = Count(fields[2]);
        row.code = fields[3];
        bool* flags[] = {&row.lower_ok, &row.upper_ok,  &row.thm32_ok,
                         &row.cor_n_ok, &row.cor_psi_ok, &row.sharp_ok,
                         &row.sharp_attained, &row.lemma31_ok};
        for (std::size_t i = 0; i < 8; ++i) *flags[i] = fields[4 + i] == "1";
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ExtremalRecord> load_extremal_json(const std::filesystem::path& file) {
    json parsed = json::parse(read_file(file));
    std::vector<ExtremalRecord> records;
    for (const json& item : parsed) {
        ExtremalRecord record;
        record.n = item.at("n").get<int>();
        record.psi = item.at("psi").get<int>();
        record.max_phi = Count(item.at("max_phi").get<std::string>());
        record.bound = Count(item.at("bound").get<std::string>());
        record.attained = item.at("attained").get<bool>();
        record.attaining_codes = item.at("attaining_codes").get<std::vector<std::string>>();
        record.construction_match = item.at("construction_match").get<bool>();
        records.push_back(std::move(record));
    }
    return records;
}

std::string render_report(const std::filesystem::path& survey_dir) {
    const std::vector<SurveyRow> rows = load_survey_csv(survey_dir / "survey.csv");
    const std::vector<ExtremalRecord> records = load_extremal_json(survey_dir / "extremal.json");
    const json meta = json::parse(read_file(survey_dir / "summary.json"));

    std::map<std::pair<int, int>, std::uint64_t> class_counts;
    for (const SurveyRow& row : rows) ++class_counts[{row.n, row.psi}];

    std::ostringstream out;
    out << "survey of subcubic trees up to n = " << meta.at("max_n").get<int>() << "\n";
    out << "rows: " << rows.size() << "   failures: " << meta.at("failures").get<std::uint64_t>()
        << "   attainment gaps: " << meta.at("attainment_gaps").get<std::uint64_t>() << "\n\n";

    out << "extremal cells\n";
    out << "   n  psi  classes    max_phi      bound  attained  construction\n";
    for (const ExtremalRecord& record : records) {
        std::ostringstream line;
        line.width(4);
        line << record.n;
        line.width(5);
        line << record.psi;
        line.width(9);
        line << class_counts[{record.n, record.psi}];
        line.width(11);
        line << record.max_phi.get_str();
        line.width(11);
        line << record.bound.get_str();
        line << (record.attained ? "       yes" : "        NO");
        line << (record.construction_match ? "           yes" : "            NO");
        out << line.str() << "\n";
    }

    struct Column {
        const char* name;
        bool SurveyRow::* flag;
    };
    const Column columns[] = {
        {"psi lower bound (2n/3)", &SurveyRow::lower_ok},
        {"psi upper bound ((4n+2)/5)", &SurveyRow::upper_ok},
        {"count bound 1.466^(4n-5psi+2)", &SurveyRow::thm32_ok},
        {"count bound 1.29^(n+1)", &SurveyRow::cor_n_ok},
        {"count bound 1.466^(psi+2)", &SurveyRow::cor_psi_ok},
        {"sharp f/g bound", &SurveyRow::sharp_ok},
        {"leaf-deletion lemma", &SurveyRow::lemma31_ok},
    };
    out << "\ntheorem scoreboard (trees checked / passed)\n";
    for (const Column& column : columns) {
        std::uint64_t passed = 0;
        for (const SurveyRow& row : rows) passed += (row.*column.flag) ? 1 : 0;
        out << "  " << column.name << ": " << rows.size() << " / " << passed << "\n";
    }
    out << "  leaf-deletion lemma qualifying leaves: "
        << meta.at("lemma31_checks").get<std::uint64_t>() << "\n";
    return out.str();
}

}  // namespace dissoc
