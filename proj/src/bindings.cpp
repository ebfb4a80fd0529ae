#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nhmf/classical.hpp"
#include "nhmf/errors.hpp"
#include "nhmf/json_io.hpp"
#include "nhmf/nearly.hpp"
#include "nhmf/qseries.hpp"
#include "nhmf/ratmat.hpp"
#include "nhmf/rational.hpp"
#include "nhmf/sl2rep.hpp"
#include "nhmf/structure.hpp"

namespace py = pybind11;

namespace pybind11 {
namespace detail {

// mpq_class <-> fractions.Fraction, mediated by the shared "p/q" string
// form. Ints are accepted on input; floats are rejected to keep exactness.
template <>
struct type_caster<mpq_class> {
  public:
    PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr()))
            return false;
        if (!PyLong_Check(src.ptr())) {
            object fraction = module_::import("fractions").attr("Fraction");
            if (!isinstance(src, fraction))
                return false;
        }
        std::string text = str(src);
        try {
            value = nhmf::parse_rational(text);
        } catch (const nhmf::ParseError&) {
            return false;
        }
        return true;
    }

    static handle cast(const mpq_class& src, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        return fraction(nhmf::rational_to_string(src)).release();
    }
};

} // namespace detail
} // namespace pybind11

namespace {

std::string qseries_repr(const nhmf::QSeries& s) {
    std::string out = "QSeries(truncation=" + std::to_string(s.truncation()) + ", [";
    for (long n = 0; n <= s.truncation(); ++n) {
        if (n > 0)
            out += ", ";
        out += nhmf::rational_to_string(s.coeff(n));
    }
    return out + "])";
}

} // namespace

PYBIND11_MODULE(_core, m) {
    using namespace nhmf;

    m.doc() = "Nearly holomorphic modular forms of level one (exact arithmetic core)";

    py::register_exception<TruncationTooSmall>(m, "TruncationTooSmall");
    py::register_exception<NotInSpace>(m, "NotInSpace");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<DomainError>(m, "DomainError");

    py::class_<QSeries>(m, "QSeries")
        .def(py::init<long>(), py::arg("truncation"))
        .def(py::init<long, std::vector<Rational>>(), py::arg("truncation"), py::arg("coeffs"))
        .def_static("constant", &QSeries::constant, py::arg("value"), py::arg("truncation"))
        .def("truncation", &QSeries::truncation)
        .def("coeff", &QSeries::coeff, py::arg("n"))
        .def("coeffs", &QSeries::coeffs)
        .def("is_zero", &QSeries::is_zero)
        .def("truncated", &QSeries::truncated, py::arg("n"))
        .def("derivative", &QSeries::derivative)
        .def("__add__", [](const QSeries& a, const QSeries& b) { return a + b; })
        .def("__sub__", [](const QSeries& a, const QSeries& b) { return a - b; })
        .def("__mul__", [](const QSeries& a, const QSeries& b) { return a * b; })
        .def("__mul__", [](const QSeries& a, const Rational& c) { return c * a; })
        .def("__rmul__", [](const QSeries& a, const Rational& c) { return c * a; })
        .def("__neg__", [](const QSeries& a) { return -a; })
        .def("__eq__", [](const QSeries& a, const QSeries& b) { return a == b; })
        .def("__repr__", &qseries_repr);

    py::class_<HolomorphicForm>(m, "HolomorphicForm")
        .def(py::init<int, QSeries>(), py::arg("weight"), py::arg("series"))
        .def("weight", &HolomorphicForm::weight)
        .def("series", &HolomorphicForm::series)
        .def("truncation", &HolomorphicForm::truncation)
        .def("is_cusp_form", &HolomorphicForm::is_cusp_form)
        .def("__eq__", [](const HolomorphicForm& a, const HolomorphicForm& b) { return a == b; });

    py::class_<MoebiusElement>(m, "MoebiusElement")
        .def(py::init<long, long, long, long>(), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
        .def_static("identity", &MoebiusElement::identity)
        .def_readonly("a", &MoebiusElement::a)
        .def_readonly("b", &MoebiusElement::b)
        .def_readonly("c", &MoebiusElement::c)
        .def_readonly("d", &MoebiusElement::d)
        .def("__mul__", &MoebiusElement::operator*)
        .def("apply", &MoebiusElement::apply, py::arg("tau"));

    py::class_<NearlyForm>(m, "NearlyForm")
        .def(py::init<int, long>(), py::arg("weight"), py::arg("truncation"))
        .def(py::init<int, long, std::vector<QSeries>>(), py::arg("weight"), py::arg("truncation"),
             py::arg("x_coeffs"))
        .def_static("from_holomorphic", &NearlyForm::from_holomorphic, py::arg("f"))
        .def_static("constant", &NearlyForm::constant, py::arg("value"), py::arg("truncation"))
        .def("weight", &NearlyForm::weight)
        .def("truncation", &NearlyForm::truncation)
        .def("degree", &NearlyForm::degree)
        .def("coeff_x", &NearlyForm::coeff_x, py::arg("j"))
        .def("x_coeffs", &NearlyForm::x_coeffs)
        .def("is_zero", &NearlyForm::is_zero)
        .def("is_cuspidal", &NearlyForm::is_cuspidal)
        .def("truncated", &NearlyForm::truncated, py::arg("n"))
        .def("__add__", [](const NearlyForm& a, const NearlyForm& b) { return a + b; })
        .def("__sub__", [](const NearlyForm& a, const NearlyForm& b) { return a - b; })
        .def("__mul__", [](const NearlyForm& a, const NearlyForm& b) { return a * b; })
        .def("__mul__", [](const NearlyForm& a, const Rational& c) { return c * a; })
        .def("__rmul__", [](const NearlyForm& a, const Rational& c) { return c * a; })
        .def("__neg__", [](const NearlyForm& a) { return -a; })
        .def("__eq__", [](const NearlyForm& a, const NearlyForm& b) { return a == b; });

    m.def("bernoulli", &bernoulli, py::arg("n"));
    m.def("eisenstein_q", &eisenstein_q, py::arg("k"), py::arg("truncation"));
    m.def("e2_hol", &e2_hol, py::arg("truncation"));
    m.def("delta_q", &delta_q, py::arg("truncation"));
    m.def("dim_m", &dim_M, py::arg("k"));
    m.def("dim_s", &dim_S, py::arg("k"));
    m.def("basis_m", &basis_M, py::arg("k"), py::arg("truncation"));
    m.def("basis_s", &basis_S, py::arg("k"), py::arg("truncation"));
    m.def("divisor_sigma",
          [](long n, long r) { return Rational(divisor_sigma(n, r)); }, py::arg("n"), py::arg("r"));

    m.def("e2_star", &e2_star, py::arg("truncation"));
    // "raise" is a Python keyword; also qualify to dodge ::raise from csignal.
    m.def("raise_", &nhmf::raise, py::arg("f"));
    m.def("lower", &nhmf::lower, py::arg("f"));
    m.def("raise_n", &nhmf::raise_n, py::arg("f"), py::arg("m"));
    m.def("casimir", &nhmf::casimir, py::arg("f"));
    m.def("evaluate", &evaluate, py::arg("f"), py::arg("tau"));
    m.def("slash_numeric", &slash_numeric, py::arg("f"), py::arg("g"), py::arg("tau"));
    m.def("lift_value", &lift_value, py::arg("f"), py::arg("g"));

    py::class_<RatMat>(m, "RatMat")
        .def(py::init<long, long>(), py::arg("rows"), py::arg("cols"))
        .def_static("identity", &RatMat::identity, py::arg("n"))
        .def("rows", &RatMat::rows)
        .def("cols", &RatMat::cols)
        .def("at", [](const RatMat& m_, long r, long c) { return m_.at(r, c); }, py::arg("r"), py::arg("c"))
        .def("is_zero", &RatMat::is_zero)
        .def("transposed", &RatMat::transposed)
        .def("__eq__", [](const RatMat& a, const RatMat& b) { return a == b; });
    m.def("rank", &rank, py::arg("m"));

    py::class_<WeightModule>(m, "WeightModule")
        .def_readonly("weights", &WeightModule::weights)
        .def_readonly("act_h", &WeightModule::act_h)
        .def_readonly("act_r", &WeightModule::act_r)
        .def_readonly("act_l", &WeightModule::act_l)
        .def("size", &WeightModule::size)
        .def("depth", &WeightModule::depth);

    py::class_<CommutatorResiduals>(m, "CommutatorResiduals")
        .def_readonly("hr", &CommutatorResiduals::hr)
        .def_readonly("hl", &CommutatorResiduals::hl)
        .def_readonly("rl", &CommutatorResiduals::rl)
        .def("all_zero", &CommutatorResiduals::all_zero);

    py::class_<E2ModuleReport>(m, "E2ModuleReport")
        .def_readonly("depth", &E2ModuleReport::depth)
        .def_readonly("trivial_line_stable", &E2ModuleReport::trivial_line_stable)
        .def_readonly("lowering_hits_line", &E2ModuleReport::lowering_hits_line)
        .def_readonly("chain_weights_ok", &E2ModuleReport::chain_weights_ok)
        .def_readonly("chain_degrees_ok", &E2ModuleReport::chain_degrees_ok)
        .def_readonly("nonsplit_witness", &E2ModuleReport::nonsplit_witness)
        .def_readonly("ladder_match", &E2ModuleReport::ladder_match)
        .def_readonly("quotient_weights", &E2ModuleReport::quotient_weights)
        .def_readonly("mismatches", &E2ModuleReport::mismatches)
        .def("ok", &E2ModuleReport::ok);

    m.def("lowest_weight_module", &lowest_weight_module, py::arg("ell"), py::arg("depth"));
    m.def("verma_module", &verma_module, py::arg("lam"), py::arg("depth"));
    m.def("singular_weights", &singular_weights, py::arg("lam"), py::arg("depth"));
    m.def("dual_module", &dual_module, py::arg("m"));
    m.def("casimir_scalar", &casimir_scalar, py::arg("lam"));
    m.def("commutator_residuals", &commutator_residuals, py::arg("m"));
    m.def("casimir_matrix", &casimir_matrix, py::arg("m"));
    m.def("e2_module_structure", &e2_module_structure, py::arg("depth"));

    py::class_<GeneratorLabel>(m, "GeneratorLabel")
        .def_readonly("is_e2", &GeneratorLabel::is_e2)
        .def_readonly("ell", &GeneratorLabel::ell)
        .def_readonly("index", &GeneratorLabel::index);

    py::class_<SpanningGenerator>(m, "SpanningGenerator")
        .def_readonly("label", &SpanningGenerator::label)
        .def_readonly("form", &SpanningGenerator::form);

    py::class_<SpanningSet>(m, "SpanningSet")
        .def_readonly("weight", &SpanningSet::weight)
        .def_readonly("degree_bound", &SpanningSet::degree_bound)
        .def_readonly("truncation", &SpanningSet::truncation)
        .def_readonly("cuspidal", &SpanningSet::cuspidal)
        .def_readonly("generators", &SpanningSet::generators);

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("weight", &Decomposition::weight)
        .def_readonly("truncation", &Decomposition::truncation)
        .def_readonly("parts", &Decomposition::parts)
        .def_readonly("e2_coeff", &Decomposition::e2_coeff);

    m.def("dim_n", &dim_N, py::arg("k"), py::arg("p"));
    m.def("spanning_set", &spanning_set, py::arg("k"), py::arg("p"), py::arg("truncation"));
    m.def("cuspidal_spanning_set", &cuspidal_spanning_set, py::arg("k"), py::arg("p"), py::arg("truncation"));
    m.def("decompose", &decompose, py::arg("f"), py::arg("p"));
    m.def("decompose_cuspidal", &decompose_cuspidal, py::arg("f"), py::arg("p"));
    m.def("eisenstein_split", &eisenstein_split, py::arg("d"));
    m.def("reassemble", &reassemble, py::arg("d"));
    m.def("coefficient_matrix", &coefficient_matrix, py::arg("s"), py::arg("n_max"));
    m.def("petersson_constant", &petersson_constant, py::arg("k"), py::arg("v"));

    m.def("form_to_json", [](const NearlyForm& f) { return form_to_json(f).dump(); }, py::arg("f"));
    m.def("form_from_json", [](const std::string& s) { return form_from_json(parse_json(s)); }, py::arg("text"));
    m.def("decomposition_to_json", [](const Decomposition& d) { return decomposition_to_json(d).dump(); },
          py::arg("d"));
    m.def("decomposition_from_json",
          [](const std::string& s) { return decomposition_from_json(parse_json(s)); }, py::arg("text"));
}
