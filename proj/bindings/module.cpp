#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "dickson/errors.hpp"
#include "dickson/field.hpp"
#include "dickson/frame.hpp"
#include "dickson/identities.hpp"
#include "dickson/koszul.hpp"
#include "dickson/milnor.hpp"
#include "dickson/poly.hpp"
#include "dickson/qexpr.hpp"
#include "dickson/report.hpp"
#include "dickson/sumnorm.hpp"
#include "dickson/util.hpp"

namespace py = pybind11;
using namespace dickson;

namespace {

// The C++ side passes frames around as shared_ptr-to-const; a small handle
// keeps that arrangement off the python surface.
struct Frame {
    FramePtr ptr;

    const DicksonFrame& get() const { return *ptr; }
};

Budget budget_for(uint64_t max_dense_terms) {
    Budget b;
    if (max_dense_terms)
        b.max_dense_terms = max_dense_terms;
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dickson invariants over F_p, primitive derivations on them, "
              "structural coefficient extraction and truncated Koszul homology.";

    m.attr("__version__") = kToolVersion;
    m.attr("SCHEMA_VERSION") = kSchemaVersion;

    py::register_exception<Falsification>(m, "FalsificationError", PyExc_RuntimeError);
    py::register_exception<BudgetError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "QParseError", PyExc_ValueError);

    py::class_<PrimeField>(m, "PrimeField")
        .def(py::init<uint32_t>(), py::arg("p"))
        .def_property_readonly("p", &PrimeField::p)
        .def("add", &PrimeField::add)
        .def("sub", &PrimeField::sub)
        .def("mul", &PrimeField::mul)
        .def("neg", &PrimeField::neg)
        .def("inv", &PrimeField::inv)
        .def("pow", &PrimeField::pow)
        .def("reduce", &PrimeField::reduce)
        .def(py::self == py::self)
        .def("__repr__", [](const PrimeField& f) {
            return "PrimeField(" + std::to_string(f.p()) + ")";
        });

    py::class_<Poly>(m, "Poly")
        .def_static("zero", &Poly::zero, py::arg("field"), py::arg("nvars"))
        .def_static("one", &Poly::one, py::arg("field"), py::arg("nvars"))
        .def_static("constant", &Poly::constant, py::arg("field"), py::arg("nvars"), py::arg("c"))
        .def_static("variable", &Poly::variable, py::arg("field"), py::arg("nvars"), py::arg("j"))
        .def_static("parse_term_form", &Poly::parse_term_form, py::arg("field"), py::arg("nvars"),
                    py::arg("text"))
        .def_property_readonly("field", &Poly::field)
        .def_property_readonly("nvars", &Poly::nvars)
        .def("is_zero", &Poly::is_zero)
        .def("term_count", &Poly::term_count)
        .def("degree", &Poly::degree)
        .def("is_homogeneous", &Poly::is_homogeneous)
        .def("partial", &Poly::partial, py::arg("j"))
        .def("scaled", &Poly::scaled, py::arg("c"))
        .def("pow", &Poly::pow, py::arg("k"))
        .def("exact_div", &Poly::exact_div, py::arg("b"))
        .def("pth_root", &Poly::pth_root)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("str_x", &Poly::str_x)
        .def("term_form", &Poly::term_form)
        .def("__str__", &Poly::str_x)
        .def("__repr__", [](const Poly& a) { return "Poly(" + a.term_form() + ")"; });

    py::class_<DicksonPoly>(m, "DicksonPoly")
        .def_property_readonly("frame", [](const DicksonPoly& a) { return Frame{a.frame()}; })
        .def_property_readonly("rep", &DicksonPoly::rep)
        .def("is_zero", &DicksonPoly::is_zero)
        .def("weighted_degree", &DicksonPoly::weighted_degree)
        .def("scaled", &DicksonPoly::scaled, py::arg("c"))
        .def("pow", &DicksonPoly::pow, py::arg("k"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__str__", &DicksonPoly::str)
        .def("__repr__", [](const DicksonPoly& a) { return "DicksonPoly(" + a.str() + ")"; });

    py::class_<Frame>(m, "DicksonFrame")
        .def_static(
            "build",
            [](uint32_t p, size_t n, uint64_t max_dense_terms) {
                return Frame{DicksonFrame::build(PrimeField(p), n, budget_for(max_dense_terms))};
            },
            py::arg("p"), py::arg("n"), py::arg("max_dense_terms") = 0)
        .def_property_readonly("p", [](const Frame& fr) { return fr.get().field().p(); })
        .def_property_readonly("n", [](const Frame& fr) { return fr.get().n(); })
        .def("L", [](const Frame& fr) { return fr.get().L(); })
        .def("L_hat", [](const Frame& fr, size_t s) { return fr.get().L_hat(s); }, py::arg("s"))
        .def("Q", [](const Frame& fr, size_t s) { return fr.get().Q(s); }, py::arg("s"))
        .def("weight", [](const Frame& fr, size_t s) { return fr.get().weight(s); }, py::arg("s"))
        .def("weights",
             [](const Frame& fr) {
                 auto w = fr.get().weights();
                 return std::vector<uint64_t>(w.begin(), w.end());
             })
        .def("zero", [](const Frame& fr) { return fr.get().zero(); })
        .def("one", [](const Frame& fr) { return fr.get().one(); })
        .def("constant", [](const Frame& fr, uint32_t c) { return fr.get().constant(c); },
             py::arg("c"))
        .def("generator", [](const Frame& fr, size_t s) { return fr.get().generator(s); },
             py::arg("s"))
        .def("from_rep", [](const Frame& fr, const Poly& rep) { return fr.get().from_rep(rep); },
             py::arg("rep"))
        .def(
            "expand",
            [](const Frame& fr, const DicksonPoly& a, uint64_t max_dense_terms) {
                return fr.get().expand(a, budget_for(max_dense_terms));
            },
            py::arg("a"), py::arg("max_dense_terms") = 0)
        .def(
            "express",
            [](const Frame& fr, const Poly& g, uint64_t max_dense_terms) {
                return fr.get().express(g, budget_for(max_dense_terms));
            },
            py::arg("g"), py::arg("max_dense_terms") = 0)
        .def("parse",
             [](const Frame& fr, std::string_view src) { return parse_q_expression(fr.ptr, src); },
             py::arg("src"))
        .def(
            "__eq__", [](const Frame& a, const Frame& b) { return a.ptr == b.ptr; },
            py::is_operator())
        .def("__repr__", [](const Frame& fr) {
            return "DicksonFrame(p=" + std::to_string(fr.get().field().p()) +
                   ", n=" + std::to_string(fr.get().n()) + ")";
        });

    m.def("st_delta", &st_delta, py::arg("g"), py::arg("i"),
          "The primitive derivation x_j -> x_j^(p^i) applied to g, i >= 1.");
    m.def("st_iterate", &st_iterate, py::arg("g"), py::arg("i"), py::arg("m"),
          "m-fold brute-force application of st_delta.");

    py::class_<SumCoefficients>(m, "SumCoefficients")
        .def_static(
            "extract",
            [](const Frame& fr, uint32_t i, uint64_t max_dense_terms) {
                return SumCoefficients::extract(fr.ptr, i, budget_for(max_dense_terms));
            },
            py::arg("frame"), py::arg("i"), py::arg("max_dense_terms") = 0,
            "Extract the coefficients of St(Q_s) = (-1)^n Q_0 (A_s + B Q_s), certifying the "
            "shape and the p-th root claims on the way.")
        .def_property_readonly("frame", [](const SumCoefficients& sc) { return Frame{sc.frame}; })
        .def_readonly("i", &SumCoefficients::i)
        .def_readonly("A", &SumCoefficients::A)
        .def_readonly("B", &SumCoefficients::B)
        .def_readonly("Proot", &SumCoefficients::Proot)
        .def_readonly("Rroot", &SumCoefficients::Rroot)
        .def("delta_q", &SumCoefficients::delta_q, py::arg("s"));

    m.def("normalized_delta", &normalized_delta, py::arg("sc"), py::arg("g"));
    m.def("delta_iterate_closed", &delta_iterate_closed, py::arg("sc"), py::arg("s"),
          py::arg("m"));
    m.def("st_iterate_closed", &st_iterate_closed, py::arg("sc"), py::arg("s"), py::arg("m"));
    m.def(
        "chain_rule_st",
        [](const SumCoefficients& sc, const DicksonPoly& g, uint64_t max_dense_terms) {
            return chain_rule_st(sc, g, budget_for(max_dense_terms));
        },
        py::arg("sc"), py::arg("g"), py::arg("max_dense_terms") = 0);

    py::class_<StirlingTable>(m, "StirlingTable")
        .def(py::init<uint32_t>(), py::arg("max_m"))
        .def_property_readonly("max_m", &StirlingTable::max_m)
        .def("exact", &StirlingTable::exact, py::arg("m"), py::arg("j"))
        .def("mod_p", &StirlingTable::mod_p, py::arg("field"), py::arg("m"), py::arg("j"));

    py::class_<Witness>(m, "Witness")
        .def_readonly("lhs", &Witness::lhs)
        .def_readonly("rhs", &Witness::rhs)
        .def_readonly("diff", &Witness::diff)
        .def("__repr__", [](const Witness& w) {
            return "Witness(lhs=" + w.lhs + ", rhs=" + w.rhs + ")";
        });

    py::class_<VerificationResult>(m, "VerificationResult")
        .def_readonly("name", &VerificationResult::name)
        .def_readonly("params", &VerificationResult::params)
        .def_property_readonly(
            "status", [](const VerificationResult& r) { return to_string(r.status); })
        .def_readonly("note", &VerificationResult::note)
        .def_readonly("witness", &VerificationResult::witness)
        .def("passed", &VerificationResult::passed)
        .def("__repr__", [](const VerificationResult& r) {
            return "VerificationResult(" + r.name + ": " + to_string(r.status) + ")";
        });

    m.def(
        "verify_kernel_family",
        [](const SumCoefficients& sc, const DicksonPoly& F, size_t s) {
            return verify_kernel_family(sc, F, s);
        },
        py::arg("sc"), py::arg("F"), py::arg("s"));
    m.def(
        "verify_global_properties",
        [](const SumCoefficients& sc, const std::vector<DicksonPoly>& samples) {
            return verify_global_properties(sc, samples);
        },
        py::arg("sc"), py::arg("samples"));
    m.def(
        "verify_invariant_ratios",
        [](const SumCoefficients& sc, size_t s) { return verify_invariant_ratios(sc, s); },
        py::arg("sc"), py::arg("s"));
    m.def(
        "verify_ratio_action",
        [](const SumCoefficients& sc, size_t s, const Poly& Phi) {
            return verify_ratio_action(sc, s, Phi);
        },
        py::arg("sc"), py::arg("s"), py::arg("Phi"));
    m.def(
        "verify_chain_rule",
        [](const SumCoefficients& sc, const DicksonPoly& f) { return verify_chain_rule(sc, f); },
        py::arg("sc"), py::arg("f"));

    py::class_<AbstractRing>(m, "AbstractRing")
        .def(py::init<const PrimeField&, std::vector<std::string>, std::vector<uint64_t>>(),
             py::arg("field"), py::arg("var_names"), py::arg("var_degrees"))
        .def_readonly("field", &AbstractRing::f)
        .def_readonly("k", &AbstractRing::k)
        .def_readonly("var_names", &AbstractRing::var_names)
        .def_readonly("var_degrees", &AbstractRing::var_degrees);

    py::class_<KoszulInstance>(m, "KoszulInstance")
        .def(py::init<AbstractRing, std::vector<Poly>, std::optional<std::vector<uint64_t>>>(),
             py::arg("ring"), py::arg("coeffs"), py::arg("degrees") = std::nullopt)
        .def_readonly("ring", &KoszulInstance::ring)
        .def_readonly("c", &KoszulInstance::c)
        .def_readonly("c_degrees", &KoszulInstance::c_degrees)
        .def_property_readonly("m", &KoszulInstance::m);

    py::class_<GradedHomologyReport>(m, "GradedHomologyReport")
        .def_readonly("instance", &GradedHomologyReport::instance)
        .def_readonly("D", &GradedHomologyReport::D)
        .def_readonly("expected_h0", &GradedHomologyReport::expected_h0)
        .def_readonly("h0_matches_expected", &GradedHomologyReport::h0_matches_expected)
        .def_readonly("h_positive_vanishes", &GradedHomologyReport::h_positive_vanishes)
        .def("h", &GradedHomologyReport::h, py::arg("q"), py::arg("d"))
        .def("to_json", [](const GradedHomologyReport& r) { return r.to_json().dump(); });

    m.def(
        "homology_dims",
        [](const KoszulInstance& inst, uint64_t D, uint64_t max_dense_terms) {
            return homology_dims(inst, D, budget_for(max_dense_terms));
        },
        py::arg("inst"), py::arg("D"), py::arg("max_dense_terms") = 0);
    m.def(
        "tuan_instance",
        [](uint32_t p, size_t n, uint32_t j) { return tuan_instance(PrimeField(p), n, j); },
        py::arg("p"), py::arg("n"), py::arg("j"),
        "F_p[y_1..y_n, V] with c_s = y_s^(p^j), every variable in degree 1.");
    m.def("expected_quotient_hilbert", &expected_quotient_hilbert, py::arg("inst"), py::arg("D"));
    m.def("jacobian_det", &jacobian_det, py::arg("inst"));
    m.def(
        "dump_boundary_matrix",
        [](const KoszulInstance& inst, uint32_t q, uint64_t d, uint64_t max_dense_terms) {
            return dump_boundary_matrix(inst, q, d, budget_for(max_dense_terms));
        },
        py::arg("inst"), py::arg("q"), py::arg("d"), py::arg("max_dense_terms") = 0);
    m.def("encode_in_ratio_variables", &encode_in_ratio_variables, py::arg("g"));

    py::class_<MargolisReport>(m, "MargolisReport")
        .def_property_readonly("pose",
                               [](const MargolisReport& r) { return to_string(r.pose); })
        .def_readonly("coeff_status", &MargolisReport::coeff_status)
        .def_readonly("full", &MargolisReport::full)
        .def_readonly("zero_witness", &MargolisReport::zero_witness)
        .def_readonly("jacobian", &MargolisReport::jacobian)
        .def_readonly("substitute", &MargolisReport::substitute)
        .def_readonly("substitute_jacobian", &MargolisReport::substitute_jacobian)
        .def_readonly("notes", &MargolisReport::notes)
        .def("to_json", [](const MargolisReport& r) { return r.to_json().dump(); });

    m.def(
        "dickson_margolis_check",
        [](const SumCoefficients& sc, uint64_t D, uint64_t max_dense_terms) {
            return dickson_margolis_check(sc, D, budget_for(max_dense_terms));
        },
        py::arg("sc"), py::arg("D"), py::arg("max_dense_terms") = 0);

    m.def("default_config_json", [] {
        RunConfig cfg;
        cfg.grid = RunConfig::default_grid();
        return cfg.to_json().dump();
    });
    m.def(
        "run_grid_json",
        [](const std::string& config) {
            RunConfig cfg = RunConfig::from_json(nlohmann::json::parse(config));
            return run_grid(cfg).to_json().dump();
        },
        py::arg("config"), "Run a full verification grid; config and result are JSON strings.");
    m.def(
        "run_cell_json",
        [](uint32_t p, uint32_t n, uint32_t i, uint32_t max_m) {
            RunConfig cfg;
            GridCell cell{p, n, i};
            cfg.grid = {cell};
            cfg.max_m = max_m;
            return run_cell(cell, cfg).to_json().dump();
        },
        py::arg("p"), py::arg("n"), py::arg("i"), py::arg("max_m") = 0,
        "Identity checks and iterate tables for a single (p, n, i) cell, as a JSON string.");
    m.def(
        "report_text",
        [](const std::string& report) {
            return Report::from_json(nlohmann::json::parse(report)).to_text();
        },
        py::arg("report"));
    m.def(
        "tuan_entry_json",
        [](uint32_t p, size_t n, uint32_t j, uint64_t D, uint64_t max_dense_terms) {
            return tuan_entry(p, n, j, D, budget_for(max_dense_terms)).dump();
        },
        py::arg("p"), py::arg("n"), py::arg("j"), py::arg("D"), py::arg("max_dense_terms") = 0);
    m.def(
        "custom_entry_json",
        [](const KoszulInstance& inst, uint64_t D, uint64_t max_dense_terms) {
            return custom_entry(inst, D, budget_for(max_dense_terms)).dump();
        },
        py::arg("inst"), py::arg("D"), py::arg("max_dense_terms") = 0);
    m.def(
        "koszul_entry_status",
        [](const std::string& entry) { return koszul_entry_status(nlohmann::json::parse(entry)); },
        py::arg("entry"));
    m.def(
        "koszul_entry_text",
        [](const std::string& entry) { return koszul_entry_text(nlohmann::json::parse(entry)); },
        py::arg("entry"));
}
