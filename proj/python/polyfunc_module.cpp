#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyfunc/cli.hpp"
#include "polyfunc/oracle.hpp"
#include "polyfunc/parse.hpp"

namespace py = pybind11;
using namespace polyfunc;

namespace {

// Ring handle exposed to Python; RingInstance itself stays const-shared.
struct PyRing {
    Ring ring;
};

py::int_ to_pyint(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

ProblemSpec make_spec(const PyRing& r, const std::vector<std::string>& moduli,
                      const std::string& target) {
    std::vector<IdealGen> sources;
    for (const auto& s : moduli) sources.push_back(parse_ideal(s, r.ring));
    return ProblemSpec(r.ring, std::move(sources), parse_ideal(target, r.ring));
}

py::list form_to_list(const CanonicalForm& form) {
    py::list out;
    for (const auto& t : form.terms) {
        py::tuple k(t.index.parts.size());
        for (size_t i = 0; i < t.index.parts.size(); ++i) k[i] = t.index.parts[i];
        py::dict d;
        d["k"] = k;
        d["coeff"] = to_string(t.coeff);
        d["modulus"] = to_string(t.modulus);
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(polyfunc, m) {
    m.doc() = "polynomial functions between residue class rings of Z and F_q[t]";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<PyRing>(m, "Ring")
        .def_static("integers", [] { return PyRing{RingInstance::integers()}; })
        .def_static(
            "gf", [](uint32_t p, uint32_t s) { return PyRing{RingInstance::gf(p, s)}; },
            py::arg("p"), py::arg("s") = 1)
        .def_property_readonly("kind",
                               [](const PyRing& r) {
                                   return r.ring->is_integers() ? std::string("z")
                                                                : std::string("gf");
                               })
        .def_property_readonly("q", [](const PyRing& r) {
            return r.ring->is_integers() ? 0 : r.ring->field_order();
        })
        .def("__repr__", [](const PyRing& r) {
            if (r.ring->is_integers()) return std::string("Ring.integers()");
            return "Ring.gf(" + std::to_string(r.ring->characteristic()) + ", " +
                   std::to_string(r.ring->extension_degree()) + ")";
        });

    m.def(
        "count",
        [](const PyRing& r, const std::vector<std::string>& moduli, const std::string& target) {
            return to_pyint(count(make_spec(r, moduli, target)));
        },
        py::arg("ring"), py::arg("moduli"), py::arg("target"),
        "number of polynomial functions from D/I_1 x ... x D/I_r to D/J");

    m.def(
        "count_chen",
        [](const std::vector<long long>& n_list, long long mm) {
            Ring z = RingInstance::integers();
            std::vector<IdealGen> ns;
            for (long long n : n_list) ns.push_back(IdealGen(BaseElement::integer(z, n)));
            return to_pyint(count_chen(ns, IdealGen(BaseElement::integer(z, mm))));
        },
        py::arg("n_list"), py::arg("m"));

    m.def(
        "count_poly_ring",
        [](const PyRing& r, const std::vector<std::string>& f_list, const std::string& g) {
            std::vector<IdealGen> fs;
            for (const auto& f : f_list) fs.push_back(parse_ideal(f, r.ring));
            return to_pyint(count_poly_ring(fs, parse_ideal(g, r.ring)));
        },
        py::arg("ring"), py::arg("f_list"), py::arg("g"));

    m.def(
        "count_prime_power",
        [](const PyRing& r, const std::string& target, uint32_t arity) {
            return to_pyint(count_prime_power(parse_ideal(target, r.ring), arity).value);
        },
        py::arg("ring"), py::arg("target"), py::arg("r") = 1);

    m.def(
        "lambda_bound",
        [](const PyRing& r, const std::string& target) {
            return lambda_bound(parse_ideal(target, r.ring));
        },
        py::arg("ring"), py::arg("target"));

    m.def(
        "mu_bound",
        [](const PyRing& r, const std::string& source, const std::string& target) {
            return mu_bound(parse_ideal(source, r.ring), parse_ideal(target, r.ring));
        },
        py::arg("ring"), py::arg("source"), py::arg("target"));

    m.def(
        "canonicalize",
        [](const PyRing& r, const std::vector<std::string>& moduli, const std::string& target,
           const std::string& poly) {
            ProblemSpec spec = make_spec(r, moduli, target);
            return form_to_list(canonicalize(parse_poly(poly, r.ring, spec.arity()), spec));
        },
        py::arg("ring"), py::arg("moduli"), py::arg("target"), py::arg("poly"));

    m.def(
        "canonical_monomial",
        [](const PyRing& r, const std::vector<std::string>& moduli, const std::string& target,
           const std::string& poly) {
            ProblemSpec spec = make_spec(r, moduli, target);
            CanonicalForm c = canonicalize(parse_poly(poly, r.ring, spec.arity()), spec);
            return render_poly(canonical_monomial(c, spec));
        },
        py::arg("ring"), py::arg("moduli"), py::arg("target"), py::arg("poly"));

    m.def(
        "equivalent",
        [](const PyRing& r, const std::vector<std::string>& moduli, const std::string& target,
           const std::string& lhs, const std::string& rhs) {
            ProblemSpec spec = make_spec(r, moduli, target);
            return equivalent(parse_poly(lhs, r.ring, spec.arity()),
                              parse_poly(rhs, r.ring, spec.arity()), spec);
        },
        py::arg("ring"), py::arg("moduli"), py::arg("target"), py::arg("lhs"), py::arg("rhs"));

    m.def(
        "table",
        [](const PyRing& r, const std::vector<std::string>& moduli, const std::string& target,
           const std::string& poly) {
            ProblemSpec spec = make_spec(r, moduli, target);
            FunctionTable t = evaluate_table(parse_poly(poly, r.ring, spec.arity()), spec);
            std::vector<std::string> out;
            for (const auto& v : t.values()) out.push_back(to_string(v));
            return out;
        },
        py::arg("ring"), py::arg("moduli"), py::arg("target"), py::arg("poly"));

    m.def(
        "interpolate",
        [](const PyRing& r, const std::vector<std::string>& moduli, const std::string& target,
           const std::vector<std::string>& values) {
            ProblemSpec spec = make_spec(r, moduli, target);
            std::vector<BaseElement> vals;
            for (const auto& v : values) vals.push_back(parse_element(v, r.ring));
            InterpolationResult res = interpolate(FunctionTable(spec, std::move(vals)));
            py::dict out;
            out["realizable"] = res.ok();
            if (res.ok()) {
                out["terms"] = form_to_list(*res.form);
                out["monomial"] = render_poly(canonical_monomial(*res.form, spec));
            } else {
                out["witness"] = res.witness->str(spec);
            }
            return out;
        },
        py::arg("ring"), py::arg("moduli"), py::arg("target"), py::arg("values"));

    m.def(
        "all_functions_polynomial",
        [](const PyRing& r, const std::vector<std::string>& moduli, const std::string& target) {
            return all_functions_polynomial(make_spec(r, moduli, target));
        },
        py::arg("ring"), py::arg("moduli"), py::arg("target"));

    m.def(
        "simultaneous_term",
        [](const PyRing& r, uint64_t k) { return to_string(simultaneous_term(r.ring, k)); },
        py::arg("ring"), py::arg("k"));

    m.def(
        "generalized_factorial",
        [](const PyRing& r, uint64_t k) { return to_string(generalized_factorial(r.ring, k)); },
        py::arg("ring"), py::arg("k"));

    m.def(
        "factorial_ideal",
        [](const PyRing& r, const std::string& source, uint64_t k) {
            return to_string(factorial_ideal(parse_ideal(source, r.ring), k));
        },
        py::arg("ring"), py::arg("source"), py::arg("k"));

    m.def(
        "brute_force_count",
        [](const PyRing& r, const std::vector<std::string>& moduli, const std::string& target,
           uint64_t budget) {
            return to_pyint(brute_force_count(make_spec(r, moduli, target), budget));
        },
        py::arg("ring"), py::arg("moduli"), py::arg("target"),
        py::arg("budget") = kDefaultBudget);

    m.def(
        "is_realizable",
        [](const PyRing& r, const std::vector<std::string>& moduli, const std::string& target,
           const std::vector<std::string>& values, uint64_t budget) {
            ProblemSpec spec = make_spec(r, moduli, target);
            std::vector<BaseElement> vals;
            for (const auto& v : values) vals.push_back(parse_element(v, r.ring));
            return is_realizable(FunctionTable(spec, std::move(vals)), budget);
        },
        py::arg("ring"), py::arg("moduli"), py::arg("target"), py::arg("values"),
        py::arg("budget") = kDefaultBudget);

    m.def(
        "ordering_cross_check",
        [](const PyRing& r, const std::string& modulus, uint64_t budget) {
            return ordering_cross_check(parse_ideal(modulus, r.ring), budget).all_agree;
        },
        py::arg("ring"), py::arg("modulus"), py::arg("budget") = kDefaultBudget);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "run a CLI invocation in-process; returns (exit_code, stdout, stderr)");

    m.attr("DEFAULT_BUDGET") = kDefaultBudget;
}
