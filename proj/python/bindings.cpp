#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>

#include "dissoc/canonical.hpp"
#include "dissoc/engine.hpp"
#include "dissoc/families.hpp"
#include "dissoc/oracle.hpp"
#include "dissoc/sequences.hpp"
#include "dissoc/survey.hpp"
#include "dissoc/tree.hpp"
#include "dissoc/treegen.hpp"

namespace py = pybind11;

namespace {

// GMP integers cross the boundary as exact python ints, via decimal strings.
py::int_ to_py(const dissoc::Count& value) {
    PyObject* obj = PyLong_FromString(value.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::dict report_to_dict(const dissoc::BoundReport& report) {
    py::dict out;
    out["n"] = report.n;
    out["psi"] = report.psi;
    out["phi"] = to_py(report.phi);
    out["lower_ok"] = report.lower_ok;
    out["upper_ok"] = report.upper_ok;
    out["thm32_ok"] = report.thm32_ok;
    out["cor_n_ok"] = report.cor_n_ok;
    out["cor_psi_ok"] = report.cor_psi_ok;
    out["sharp_applicable"] = report.sharp_applicable;
    if (report.sharp_applicable) {
        out["sharp_bound"] = to_py(report.sharp_bound);
        out["sharp_ok"] = report.sharp_ok;
        out["sharp_attained"] = report.sharp_attained;
    }
    return out;
}

py::tuple built_to_tuple(const dissoc::BuiltFamily& built) {
    return py::make_tuple(built.tree,
                          py::make_tuple(built.prediction.n, built.prediction.psi,
                                         to_py(built.prediction.phi)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "maximum dissociation sets in trees: counting DP, oracle, "
              "extremal families, exhaustive survey";

    py::register_exception<dissoc::TreeError>(m, "TreeError", PyExc_ValueError);

    py::class_<dissoc::Tree>(m, "Tree")
        .def_static(
            "from_edges",
            [](int n, const std::vector<std::pair<int, int>>& edges) {
                return dissoc::Tree::from_edges(n, edges);
            },
            py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &dissoc::Tree::order)
        .def_property_readonly("edges",
                               [](const dissoc::Tree& t) { return t.edges(); })
        .def("neighbors", &dissoc::Tree::neighbors, py::arg("v"))
        .def("degree", &dissoc::Tree::degree, py::arg("v"))
        .def("__eq__", [](const dissoc::Tree& a, const dissoc::Tree& b) { return a == b; })
        .def("__repr__", [](const dissoc::Tree& t) {
            return "<Tree n=" + std::to_string(t.order()) + ">";
        });

    m.def("parse_tree", &dissoc::parse_tree, py::arg("text"));
    m.def("serialize_tree", &dissoc::serialize_tree, py::arg("tree"));
    m.def("max_degree", &dissoc::max_degree, py::arg("tree"));
    m.def(
        "attach_pendant_edge",
        [](const dissoc::Tree& t, int v) {
            dissoc::Attachment a = dissoc::attach_pendant_edge(t, v);
            return py::make_tuple(a.tree, a.degree_warning);
        },
        py::arg("tree"), py::arg("v"), "returns (tree, degree_warning)");
    m.def(
        "attach_p5",
        [](const dissoc::Tree& t, int u) {
            dissoc::Attachment a = dissoc::attach_p5(t, u);
            return py::make_tuple(a.tree, a.degree_warning);
        },
        py::arg("tree"), py::arg("u"), "returns (tree, degree_warning)");
    m.def("remove_leaf", &dissoc::remove_leaf, py::arg("tree"), py::arg("leaf"));
    m.def(
        "canonical_code",
        [](const dissoc::Tree& t) { return dissoc::canonical_code(t).code; },
        py::arg("tree"));

    m.def("psi", &dissoc::psi, py::arg("tree"));
    m.def(
        "phi", [](const dissoc::Tree& t) { return to_py(dissoc::phi(t)); }, py::arg("tree"));
    m.def("tau3", &dissoc::tau3, py::arg("tree"));
    m.def(
        "root_profile",
        [](const dissoc::Tree& t, int v) {
            dissoc::RootProfile profile = dissoc::root_profile(t, v);
            py::dict out;
            out["psi"] = profile.psi;
            out["phi_out"] = to_py(profile.phi_out);
            out["phi_in0"] = to_py(profile.phi_in0);
            out["phi_in1"] = to_py(profile.phi_in1);
            return out;
        },
        py::arg("tree"), py::arg("v"));
    m.def("is_dissociation_set", &dissoc::is_dissociation_set, py::arg("tree"), py::arg("s"));
    m.def(
        "enumerate_mds",
        [](const dissoc::Tree& t, std::optional<std::uint64_t> limit) {
            dissoc::EnumerateResult result = dissoc::enumerate_mds(t, limit);
            return py::make_tuple(result.sets, result.truncated);
        },
        py::arg("tree"), py::arg("limit") = py::none(),
        "returns (sets, truncated), sets in lexicographic order");

    py::class_<dissoc::MdsEnumerator>(m, "MdsEnumerator",
                                      "lazily yields maximum dissociation sets as sorted "
                                      "vertex lists, lexicographically")
        .def(py::init<const dissoc::Tree&>(), py::arg("tree"))
        .def_property_readonly("psi", &dissoc::MdsEnumerator::psi)
        .def_property_readonly(
            "total", [](const dissoc::MdsEnumerator& e) { return to_py(e.total()); })
        .def("__iter__", [](py::object self) { return self; })
        .def("__next__", [](dissoc::MdsEnumerator& e) {
            auto set = e.next();
            if (!set) throw py::stop_iteration();
            return *set;
        });

    m.def(
        "brute_force",
        [](const dissoc::Tree& t, int hard_cap) {
            dissoc::OracleResult result = dissoc::brute_force(t, hard_cap);
            py::dict out;
            out["psi"] = result.psi;
            out["phi"] = to_py(result.phi);
            out["sets"] = result.sets;
            return out;
        },
        py::arg("tree"), py::arg("hard_cap") = 24);

    m.def("seq_f", [](int k) { return to_py(dissoc::seq_f(k)); }, py::arg("k"));
    m.def("seq_g", [](int k) { return to_py(dissoc::seq_g(k)); }, py::arg("k"));
    m.def("psi_lower", &dissoc::psi_lower, py::arg("n"));
    m.def("psi_upper_subcubic", &dissoc::psi_upper_subcubic, py::arg("n"));
    m.def(
        "phi_bound_sharp",
        [](int n, int psi) { return to_py(dissoc::phi_bound_sharp(n, psi)); }, py::arg("n"),
        py::arg("psi"));
    m.def(
        "phi_bound_checks",
        [](int n, int psi, const std::string& phi) {
            return report_to_dict(dissoc::phi_bound_checks(n, psi, dissoc::Count(phi)));
        },
        py::arg("n"), py::arg("psi"), py::arg("phi"),
        "phi as a decimal string; returns the verdicts as a dict");

    m.def("build_T", [](int ell) { return built_to_tuple(dissoc::build_T(ell)); },
          py::arg("ell"), "returns (tree, (n, psi, phi))");
    m.def("build_T1", [](int ell) { return built_to_tuple(dissoc::build_T1(ell)); },
          py::arg("ell"));
    m.def("build_T2", [](int ell) { return built_to_tuple(dissoc::build_T2(ell)); },
          py::arg("ell"));
    m.def(
        "build_chain",
        [](const std::string& base, int m) {
            if (base != "K1" && base != "K2")
                throw py::value_error("base must be 'K1' or 'K2'");
            return built_to_tuple(dissoc::build_chain(
                base == "K1" ? dissoc::ChainBase::k1 : dissoc::ChainBase::k2, m));
        },
        py::arg("base"), py::arg("m"));
    m.def(
        "chain_family",
        [](const std::string& base, int m) {
            if (base != "K1" && base != "K2")
                throw py::value_error("base must be 'K1' or 'K2'");
            return dissoc::chain_family(
                base == "K1" ? dissoc::ChainBase::k1 : dissoc::ChainBase::k2, m);
        },
        py::arg("base"), py::arg("m"));
    m.def(
        "build_extremal",
        [](int n, int psi) {
            py::list out;
            for (const dissoc::BuiltFamily& built : dissoc::build_extremal(n, psi))
                out.append(built_to_tuple(built));
            return out;
        },
        py::arg("n"), py::arg("psi"));

    m.def("enumerate_subcubic", [](int n) { return dissoc::enumerate_subcubic(n); },
          py::arg("n"));
    m.def("enumerate_trees", &dissoc::enumerate_trees, py::arg("n"), py::arg("max_degree"),
          py::arg("ceiling") = dissoc::kEnumerationCeiling);
    m.def("random_subcubic", &dissoc::random_subcubic, py::arg("n"), py::arg("seed"));

    m.def(
        "run_survey",
        [](int max_n, const std::filesystem::path& out_dir, int jobs) {
            dissoc::SurveySummary summary = dissoc::run_survey({max_n, out_dir, jobs});
            py::dict out;
            out["rows"] = summary.rows;
            out["failures"] = summary.failures;
            out["attainment_gaps"] = summary.attainment_gaps;
            out["lemma31_checks"] = summary.lemma31_checks;
            return out;
        },
        py::arg("max_n"), py::arg("out_dir"), py::arg("jobs") = 1);
    m.def("render_report", &dissoc::render_report, py::arg("survey_dir"));
}
