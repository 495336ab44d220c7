// Python bindings. Frame, coframe and multi-indices are 1-based here, as in
// definition files and reports.

#include "algcalc/calculus.hpp"
#include "algcalc/definition.hpp"
#include "algcalc/eds.hpp"
#include "algcalc/ids.hpp"
#include "algcalc/parser.hpp"
#include "algcalc/run.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace algcalc;

namespace {

std::size_t to_zero_based(std::size_t i, std::size_t bound, const char* what) {
    if (i < 1 || i > bound)
        throw py::index_error(std::string(what) + " index " + std::to_string(i) + " outside 1.." + std::to_string(bound));
    return i - 1;
}

MultiIndex to_key(const std::vector<std::size_t>& indices, std::size_t rank) {
    MultiIndex key;
    for (std::size_t i : indices) key.push_back(to_zero_based(i, rank, "frame"));
    return key;
}

/// Accepts a ScalarExpr, an int, or an expression string over `coords`.
ScalarExpr as_expr(const py::handle& h, const std::vector<Coordinate>& coords) {
    if (py::isinstance<ScalarExpr>(h)) return h.cast<ScalarExpr>();
    if (py::isinstance<py::int_>(h)) return parse_expr(py::str(h).cast<std::string>(), coords);
    if (py::isinstance<py::str>(h)) return parse_expr(h.cast<std::string>(), coords);
    throw py::type_error("expected an expression string, int or ScalarExpr");
}

Rational to_rational(const py::handle& h) {
    py::object frac = py::module_::import("fractions").attr("Fraction")(h);
    return Rational(py::str(frac.attr("numerator")).cast<std::string>() + "/" +
                    py::str(frac.attr("denominator")).cast<std::string>());
}

py::object to_fraction(const Rational& q) {
    return py::module_::import("fractions").attr("Fraction")(rational_to_string(q));
}

SubbundleSpec as_subbundle(const std::vector<Section>& generators) { return SubbundleSpec{generators}; }

py::dict witness_dict(const Witness& w, const std::vector<std::string>& names) {
    py::dict d;
    d["label"] = w.label;
    d["indices"] = w.indices;
    d["residual"] = w.residual.to_string(names);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact exterior calculus and involutivity checks on Lie algebroids";

    auto base_error = py::register_exception<Error>(m, "AlgcalcError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
    py::register_exception<DefinitionError>(m, "DefinitionError", base_error.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base_error.ptr());
    py::register_exception<RankDeficiency>(m, "RankDeficiency", base_error.ptr());
    py::register_exception<DivisionByZero>(m, "DivisionByZero", base_error.ptr());
    py::register_exception<PoleError>(m, "PoleError", base_error.ptr());
    py::register_exception<UsageError>(m, "UsageError", base_error.ptr());

    py::class_<ScalarExpr>(m, "ScalarExpr")
        .def(py::init<long>(), py::arg("value") = 0)
        .def_property_readonly("is_zero", &ScalarExpr::is_zero)
        .def_property_readonly("is_polynomial", &ScalarExpr::is_polynomial)
        .def("to_string", [](const ScalarExpr& e, const std::vector<std::string>& names) { return e.to_string(names); },
             py::arg("names") = std::vector<std::string>{})
        .def("__str__", [](const ScalarExpr& e) { return e.to_string(); })
        .def("__repr__", [](const ScalarExpr& e) { return "ScalarExpr('" + e.to_string() + "')"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def("__pow__", &ScalarExpr::pow)
        .def("__hash__", [](const ScalarExpr& e) { return py::hash(py::str(e.to_string())); })
        .def("evaluate", [](const ScalarExpr& e, const std::vector<py::object>& point) {
            std::vector<Rational> pt;
            for (const auto& v : point) pt.push_back(to_rational(v));
            return to_fraction(eval_at(e, pt));
        }, py::arg("point"), "Exact value at a point given as ints, strings or Fractions.");

    py::implicitly_convertible<py::int_, ScalarExpr>();

    m.def("parse_expr", [](const std::string& text, const std::vector<std::string>& coords) {
        return parse_expr(text, make_coordinates(coords));
    }, py::arg("text"), py::arg("coords"));
    m.def("partial", &partial, py::arg("expr"), py::arg("index"), py::arg("n"),
          "Derivative with respect to the 1-based coordinate `index` of an n-dimensional chart.");

    py::class_<Section>(m, "Section")
        .def_property_readonly("rank", &Section::rank)
        .def_property_readonly("components", &Section::components)
        .def_property_readonly("is_zero", &Section::is_zero)
        .def_static("frame", [](std::size_t p, std::size_t a) {
            return Section::frame(p, to_zero_based(a, p, "frame"));
        }, py::arg("rank"), py::arg("index"))
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("__rmul__", [](const Section& s, const ScalarExpr& f) { return f * s; })
        .def("__repr__", [](const Section& s) {
            std::string out = "Section(";
            for (std::size_t a = 0; a < s.rank(); ++a) out += (a ? ", " : "") + s[a].to_string();
            return out + ")";
        });

    py::class_<DifferentialForm>(m, "DifferentialForm")
        .def_property_readonly("rank", &DifferentialForm::rank)
        .def_property_readonly("degree", &DifferentialForm::degree)
        .def_property_readonly("is_zero", &DifferentialForm::is_zero)
        .def_static("coframe", [](std::size_t p, std::size_t a) {
            return DifferentialForm::coframe(p, to_zero_based(a, p, "coframe"));
        }, py::arg("rank"), py::arg("index"))
        .def("coefficient", [](const DifferentialForm& w, const std::vector<std::size_t>& indices) {
            return w.coefficient(to_key(indices, w.rank()));
        }, py::arg("indices"), "Coefficient on the increasing 1-based multi-index.")
        .def("terms", [](const DifferentialForm& w) {
            py::dict d;
            for (const auto& [key, c] : w.terms()) {
                py::tuple t(key.size());
                for (std::size_t i = 0; i < key.size(); ++i) t[i] = key[i] + 1;
                d[t] = c;
            }
            return d;
        })
        .def("to_string", [](const DifferentialForm& w, const std::vector<std::string>& names) { return w.to_string(names); },
             py::arg("names") = std::vector<std::string>{})
        .def("__str__", [](const DifferentialForm& w) { return w.to_string(); })
        .def("__repr__", [](const DifferentialForm& w) { return "DifferentialForm('" + w.to_string() + "')"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def("__rmul__", [](const DifferentialForm& w, const ScalarExpr& f) { return f * w; })
        .def("__xor__", [](const DifferentialForm& a, const DifferentialForm& b) { return wedge(a, b); });

    py::class_<LieAlgebroid>(m, "LieAlgebroid")
        .def(py::init([](const std::vector<std::string>& coords, std::size_t rank,
                         const std::vector<std::vector<std::string>>& anchor,
                         const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>>& brackets) {
            LieAlgebroid A(make_coordinates(coords), rank);
            if (anchor.size() != coords.size()) throw DimensionError("anchor needs one row per coordinate");
            for (std::size_t i = 0; i < anchor.size(); ++i) {
                if (anchor[i].size() != rank) throw DimensionError("anchor rows need one entry per frame index");
                for (std::size_t a = 0; a < rank; ++a) A.set_anchor(i, a, parse_expr(anchor[i][a], A.coords()));
            }
            for (const auto& [a, b, c, value] : brackets)
                A.set_bracket(to_zero_based(a, rank, "frame"), to_zero_based(b, rank, "frame"),
                              to_zero_based(c, rank, "frame"), parse_expr(value, A.coords()));
            return A;
        }), py::arg("coords"), py::arg("rank"), py::arg("anchor"), py::arg("brackets") = py::list(),
             "brackets: (a, b, c, value) sets [t_a, t_b] to contain value * t_c (1-based).")
        .def_static("tangent", &LieAlgebroid::tangent, py::arg("n"))
        .def_property_readonly("base_dim", &LieAlgebroid::base_dim)
        .def_property_readonly("rank", &LieAlgebroid::rank)
        .def_property_readonly("coordinate_names", &LieAlgebroid::coordinate_names)
        .def("anchor", [](const LieAlgebroid& A, std::size_t i, std::size_t a) {
            return A.anchor(to_zero_based(i, A.base_dim(), "coordinate"), to_zero_based(a, A.rank(), "frame"));
        })
        .def("structure", [](const LieAlgebroid& A, std::size_t a, std::size_t b, std::size_t c) {
            return A.structure(to_zero_based(a, A.rank(), "frame"), to_zero_based(b, A.rank(), "frame"),
                               to_zero_based(c, A.rank(), "frame"));
        }, "Structure function L^c_{ab}.")
        .def("expr", [](const LieAlgebroid& A, const std::string& text) { return parse_expr(text, A.coords()); })
        .def("section", [](const LieAlgebroid& A, const std::vector<py::object>& comps) {
            if (comps.size() != A.rank()) throw DimensionError("section needs one component per frame index");
            std::vector<ScalarExpr> out;
            for (const auto& c : comps) out.push_back(as_expr(c, A.coords()));
            return Section(std::move(out));
        }, py::arg("components"))
        .def("form", [](const LieAlgebroid& A, std::size_t degree, const py::dict& terms) {
            DifferentialForm w(A.rank(), degree);
            for (const auto& [k, v] : terms) {
                const auto indices = k.cast<std::vector<std::size_t>>();
                w.add(to_key(indices, A.rank()), as_expr(v, A.coords()));
            }
            return w;
        }, py::arg("degree"), py::arg("terms") = py::dict(),
             "Form from {(i1, ..., iq): coefficient} with increasing 1-based indices.")
        .def("scalar", [](const LieAlgebroid& A, const py::object& f) {
            return DifferentialForm::scalar(A.rank(), as_expr(f, A.coords()));
        })
        .def("__repr__", [](const LieAlgebroid& A) {
            return "LieAlgebroid(base_dim=" + std::to_string(A.base_dim()) + ", rank=" + std::to_string(A.rank()) + ")";
        });

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("name", &CheckReport::name)
        .def_property_readonly("passed", &CheckReport::passed)
        .def_readonly("children", &CheckReport::children)
        .def("witnesses", [](const CheckReport& r, const std::vector<std::string>& names) {
            py::list out;
            for (const auto& w : r.witnesses) out.append(witness_dict(w, names));
            return out;
        }, py::arg("names") = std::vector<std::string>{})
        .def("__bool__", &CheckReport::passed)
        .def("__repr__", [](const CheckReport& r) {
            return "CheckReport('" + r.name + "', " + (r.passed() ? "pass" : "fail") + ")";
        });

    // Algebroid operations.
    m.def("bracket", &bracket, py::arg("algebroid"), py::arg("u"), py::arg("v"));
    m.def("anchor_apply", &anchor_apply, py::arg("algebroid"), py::arg("z"), py::arg("f"));
    m.def("validate", &validate, py::arg("algebroid"));

    // Exterior calculus.
    m.def("wedge", &wedge);
    m.def("interior", &interior, py::arg("z"), py::arg("form"));
    m.def("apply_form", [](const DifferentialForm& w, const std::vector<Section>& s) { return apply_form(w, s); },
          py::arg("form"), py::arg("sections"));
    m.def("ext_deriv", &ext_deriv, py::arg("algebroid"), py::arg("form"));
    m.def("lie_derivative", &lie_derivative, py::arg("algebroid"), py::arg("z"), py::arg("form"));
    m.def("maurer_cartan_check", &maurer_cartan_check, py::arg("algebroid"));
    m.def("verify_calculus_identities", [](const LieAlgebroid& A, std::size_t samples, std::uint64_t seed) {
        SamplingBudget budget;
        budget.samples = samples;
        return verify_calculus_identities(A, budget, seed);
    }, py::arg("algebroid"), py::arg("samples") = 50, py::arg("seed") = 0);

    // Subbundles, given as lists of generator sections.
    m.def("annihilator", [](const LieAlgebroid& A, const std::vector<Section>& gens) {
        return annihilator(A, as_subbundle(gens)).coforms;
    }, py::arg("algebroid"), py::arg("generators"));
    m.def("involutive_bracket_test", [](const LieAlgebroid& A, const std::vector<Section>& gens) {
        return involutive_bracket_test(A, as_subbundle(gens));
    }, py::arg("algebroid"), py::arg("generators"));
    m.def("cartan_test", [](const LieAlgebroid& A, const std::vector<Section>& gens) {
        return cartan_test(A, as_subbundle(gens)).report;
    }, py::arg("algebroid"), py::arg("generators"));
    m.def("eds_closure_check", [](const LieAlgebroid& A, const std::vector<Section>& gens) {
        return eds_closure_check(A, as_subbundle(gens));
    }, py::arg("algebroid"), py::arg("generators"));
    m.def("involutivity_verdicts", [](const LieAlgebroid& A, const std::vector<Section>& gens) {
        const EquivalenceReport eq = eds_involutivity_equivalence(A, as_subbundle(gens));
        py::dict d;
        d["agree"] = eq.report.passed();
        d["bracket"] = eq.bracket_verdict;
        d["cartan"] = eq.cartan_verdict;
        d["closure"] = eq.closure_verdict;
        return d;
    }, py::arg("algebroid"), py::arg("generators"),
       "Runs the bracket, Cartan and closure tests and reports each verdict.");
    m.def("ideal_membership", [](const LieAlgebroid& A, const std::vector<Section>& gens, const DifferentialForm& w) {
        return ideal_membership(GeneratedIdeal::of(A, as_subbundle(gens)), w);
    }, py::arg("algebroid"), py::arg("generators"), py::arg("form"));
    m.def("ideal_certificate", [](const LieAlgebroid& A, const std::vector<Section>& gens, const DifferentialForm& w) {
        return ideal_certificate(GeneratedIdeal::of(A, as_subbundle(gens)), w);
    }, py::arg("algebroid"), py::arg("generators"), py::arg("form"),
       "Forms Omega_a with form = sum Omega_a ^ Theta^a, or None for non-members.");
    m.def("vanishes_on_ids", [](const DifferentialForm& w, const std::vector<Section>& gens) {
        return vanishes_on_ids(w, as_subbundle(gens));
    }, py::arg("form"), py::arg("generators"));

    // Definition files and check runs.
    py::class_<ProblemDefinition>(m, "Definition")
        .def_readonly("algebroid", &ProblemDefinition::algebroid)
        .def_property_readonly("subbundles", [](const ProblemDefinition& d) {
            std::map<std::string, std::vector<Section>> out;
            for (const auto& [name, spec] : d.subbundles) out[name] = spec.generators;
            return out;
        })
        .def_readonly("forms", &ProblemDefinition::forms)
        .def_readonly("description", &ProblemDefinition::description)
        .def("to_json", &to_json_text)
        .def(py::self == py::self);
    m.def("parse_definition", [](const std::string& text) { return parse_definition(text); }, py::arg("text"));
    m.def("load_definition", &load_definition, py::arg("path"));

    py::class_<RunReport>(m, "RunReport")
        .def_property_readonly("passed", &RunReport::passed)
        .def_readonly("seed", &RunReport::seed)
        .def_readonly("input_digest", &RunReport::input_digest)
        .def_property_readonly("checks", [](const RunReport& r) {
            std::vector<CheckReport> out;
            for (const auto& c : r.checks) out.push_back(c.report);
            return out;
        })
        .def("to_json", [](const RunReport& r, bool timing) { return emit_report(r, ReportFormat::json, {}, timing); },
             py::arg("include_timing") = false)
        .def("to_text", [](const RunReport& r, bool timing) { return emit_report(r, ReportFormat::text, {}, timing); },
             py::arg("include_timing") = false);
    m.def("default_selection", &default_selection, py::arg("definition"));
    m.def("run_checks", [](const ProblemDefinition& def, std::optional<std::vector<std::string>> selection,
                           std::uint64_t seed, std::size_t samples) {
        RunOptions opt;
        opt.seed = seed;
        opt.identity_samples = samples;
        return run_checks(def, selection ? *selection : default_selection(def), opt);
    }, py::arg("definition"), py::arg("selection") = py::none(), py::arg("seed") = 0, py::arg("samples") = 50);
}
