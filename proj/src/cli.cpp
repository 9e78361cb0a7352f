#include "polyfunc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "polyfunc/oracle.hpp"
#include "polyfunc/parse.hpp"

namespace polyfunc {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
    std::string ring = "z";
    uint32_t p = 2;
    uint32_t s = 1;
    std::vector<std::string> moduli;       // -n (z) or -f (gf)
    std::string target;                    // -m (z) or -g (gf)
    std::vector<std::string> moduli_gf;
    std::string target_gf;
};

struct Invocation {
    bool json = false;
    uint64_t budget = kDefaultBudget;
    std::ostream* out = nullptr;
};

Ring make_ring(const CommonOptions& o) {
    if (o.ring == "z") return RingInstance::integers();
    if (o.ring == "gf") return RingInstance::gf(o.p, o.s);
    throw ParseError("ring must be z or gf", 0);
}

Json ring_json(const Ring& ring) {
    if (ring->is_integers()) return Json{{"kind", "z"}};
    std::string defining;
    for (size_t i = ring->defining_poly().size(); i-- > 0;) {
        uint32_t c = ring->defining_poly()[i];
        if (!c) continue;
        if (!defining.empty()) defining += " + ";
        std::string mono = (i == 0) ? "" : (i == 1 ? "u" : "u^" + std::to_string(i));
        if (i == 0)
            defining += std::to_string(c);
        else
            defining += (c == 1 ? mono : std::to_string(c) + "*" + mono);
    }
    return Json{{"kind", "gf"},
                {"p", std::to_string(ring->characteristic())},
                {"s", std::to_string(ring->extension_degree())},
                {"defining", defining}};
}

ProblemSpec make_spec(const CommonOptions& o, const Ring& ring) {
    const auto& srcs = ring->is_integers() ? o.moduli : o.moduli_gf;
    const auto& tgt = ring->is_integers() ? o.target : o.target_gf;
    if (srcs.empty())
        throw ParseError(ring->is_integers() ? "missing source moduli -n" : "missing source moduli -f", 0);
    if (tgt.empty())
        throw ParseError(ring->is_integers() ? "missing target modulus -m" : "missing target modulus -g", 0);
    std::vector<IdealGen> sources;
    for (const auto& s : srcs) sources.push_back(parse_ideal(s, ring));
    return ProblemSpec(ring, std::move(sources), parse_ideal(tgt, ring));
}

Json spec_json(const ProblemSpec& spec) {
    Json moduli = Json::array();
    for (const auto& I : spec.sources()) moduli.push_back(to_string(I));
    return Json{{"ring", ring_json(spec.ring())},
                {"moduli", moduli},
                {"target", to_string(spec.target())}};
}

Json form_json(const CanonicalForm& form) {
    Json terms = Json::array();
    for (const auto& t : form.terms) {
        Json idx = Json::array();
        for (uint64_t k : t.index.parts) idx.push_back(std::to_string(k));
        terms.push_back(Json{{"k", idx}, {"coeff", to_string(t.coeff)}, {"modulus", to_string(t.modulus)}});
    }
    return terms;
}

void emit(const Invocation& inv, const Json& doc, const std::string& human) {
    if (inv.json)
        *inv.out << doc.dump(2) << "\n";
    else
        *inv.out << human;
}

std::string human_form(const CanonicalForm& form, const std::string& label) {
    std::ostringstream os;
    os << label << ":\n";
    if (form.terms.empty()) os << "  (zero function)\n";
    for (const auto& t : form.terms)
        os << "  k=" << t.index.str() << ": " << to_string(t.coeff) << " (mod "
           << to_string(t.modulus) << ")\n";
    return os.str();
}

bool all_sources_equal_target(const ProblemSpec& spec) {
    for (const auto& I : spec.sources())
        if (!(I == spec.target())) return false;
    return true;
}

// --- subcommand bodies ------------------------------------------------------

void cmd_count(const CommonOptions& o, const Invocation& inv) {
    Ring ring = make_ring(o);
    ProblemSpec spec = make_spec(o, ring);
    BigInt n = count(spec);
    Json cross = Json::object();
    std::ostringstream human;
    human << n.str() << "\n";
    if (ring->is_integers()) {
        BigInt chen = count_chen(spec.sources(), spec.target());
        cross["chen"] = chen.str();
        human << "cross-check (Chen closed form): " << chen.str() << "\n";
    } else {
        BigInt poly = count_poly_ring(spec.sources(), spec.target());
        cross["poly_ring"] = poly.str();
        human << "cross-check (F_q[t] closed form): " << poly.str() << "\n";
    }
    if (all_sources_equal_target(spec)) {
        PrimePowerCount pp = count_prime_power(spec.target(), spec.arity());
        cross["prime_power"] = pp.value.str();
        human << "cross-check (prime-power formula): " << pp.value.str() << "\n";
        if (pp.lex_interval_differs)
            cross["prime_power_note"] =
                "componentwise index set used; it is not a lex interval for r > 1";
    }
    Json doc{{"command", "count"},
             {"spec", spec_json(spec)},
             {"result", Json{{"count", n.str()}}},
             {"cross_checks", cross},
             {"witnesses", Json::array()}};
    emit(inv, doc, human.str());
}

void cmd_canonical(const CommonOptions& o, const Invocation& inv, const std::string& poly) {
    Ring ring = make_ring(o);
    ProblemSpec spec = make_spec(o, ring);
    MVPoly F = parse_poly(poly, ring, spec.arity());
    CanonicalForm form = canonicalize(F, spec);
    MVPoly mono = canonical_monomial(form, spec);
    std::ostringstream human;
    human << human_form(form, "falling-factorial canonical form");
    human << "monomial form: " << render_poly(mono) << "\n";
    Json doc{{"command", "canonical"},
             {"spec", spec_json(spec)},
             {"result", Json{{"falling", form_json(form)}, {"monomial", render_poly(mono)}}},
             {"cross_checks", Json::object()},
             {"witnesses", Json::array()}};
    emit(inv, doc, human.str());
}

void cmd_equiv(const CommonOptions& o, const Invocation& inv, const std::string& lhs,
               const std::string& rhs) {
    Ring ring = make_ring(o);
    ProblemSpec spec = make_spec(o, ring);
    bool eq = equivalent(parse_poly(lhs, ring, spec.arity()), parse_poly(rhs, ring, spec.arity()),
                         spec);
    Json doc{{"command", "equiv"},
             {"spec", spec_json(spec)},
             {"result", Json{{"equivalent", eq}}},
             {"cross_checks", Json::object()},
             {"witnesses", Json::array()}};
    emit(inv, doc, std::string(eq ? "true" : "false") + "\n");
}

void cmd_table(const CommonOptions& o, const Invocation& inv, const std::string& poly) {
    Ring ring = make_ring(o);
    ProblemSpec spec = make_spec(o, ring);
    FunctionTable table = evaluate_table(parse_poly(poly, ring, spec.arity()), spec);
    Json values = Json::array();
    std::ostringstream human;
    for (size_t i = 0; i < table.values().size(); ++i) {
        values.push_back(to_string(table.values()[i]));
        if (i) human << ", ";
        human << to_string(table.values()[i]);
    }
    human << "\n";
    Json doc{{"command", "table"},
             {"spec", spec_json(spec)},
             {"result", Json{{"values", values}}},
             {"cross_checks", Json::object()},
             {"witnesses", Json::array()}};
    emit(inv, doc, human.str());
}

void cmd_interp(const CommonOptions& o, const Invocation& inv,
                const std::vector<std::string>& value_strings) {
    Ring ring = make_ring(o);
    ProblemSpec spec = make_spec(o, ring);
    std::vector<BaseElement> values;
    for (const auto& s : value_strings) values.push_back(parse_element(s, ring));
    FunctionTable table(spec, std::move(values));
    InterpolationResult res = interpolate(table);
    std::ostringstream human;
    Json result = Json::object();
    Json witnesses = Json::array();
    if (res.ok()) {
        human << human_form(*res.form, "canonical form");
        human << "monomial form: " << render_poly(canonical_monomial(*res.form, spec)) << "\n";
        result["realizable"] = true;
        result["falling"] = form_json(*res.form);
        result["monomial"] = render_poly(canonical_monomial(*res.form, spec));
    } else {
        std::string w = res.witness->str(spec);
        human << "NotPolynomial: " << w << "\n";
        result["realizable"] = false;
        witnesses.push_back(w);
    }
    Json doc{{"command", "interp"},
             {"spec", spec_json(spec)},
             {"result", result},
             {"cross_checks", Json::object()},
             {"witnesses", witnesses}};
    emit(inv, doc, human.str());
}

void cmd_ordering(const CommonOptions& o, const Invocation& inv, const std::string& modulus,
                  uint64_t length) {
    Ring ring = make_ring(o);
    IdealGen K = parse_ideal(modulus, ring);
    if (K.is_zero() || K.is_unit()) throw DomainError("-K must be a nonzero non-unit generator");
    std::ostringstream human;
    Json terms = Json::array();
    human << "a_k:";
    for (uint64_t k = 0; k < length; ++k) {
        std::string t = to_string(simultaneous_term(ring, k));
        terms.push_back(t);
        human << (k ? ", " : " ") << t;
    }
    human << "\n";
    std::vector<BaseElement> X = residues_mod(K);
    Json primes = Json::array();
    for (const auto& [P, e] : factorize(K)) {
        PSequence seq = p_sequence_of(X, P);
        Json exps = Json::array();
        human << "P=" << to_string(P) << ": exponents";
        for (uint64_t k = 0; k < length; ++k) {
            std::string v = k < seq.exponents.size() && seq.exponents[k]
                                ? std::to_string(*seq.exponents[k])
                                : "inf";
            exps.push_back(v);
            human << (k ? ", " : " ") << v;
        }
        human << "\n";
        primes.push_back(Json{{"prime", to_string(P)}, {"exponents", exps}});
        (void)e;
    }
    Json doc{{"command", "ordering"},
             {"spec", Json{{"ring", ring_json(ring)}, {"modulus", to_string(K)},
                           {"length", std::to_string(length)}}},
             {"result", Json{{"terms", terms}, {"p_sequences", primes}}},
             {"cross_checks", Json::object()},
             {"witnesses", Json::array()}};
    emit(inv, doc, human.str());
}

void cmd_factorial(const CommonOptions& o, const Invocation& inv, uint64_t k,
                   const std::string& source) {
    Ring ring = make_ring(o);
    BaseElement w = generalized_factorial(ring, k);
    std::ostringstream human;
    human << "w_" << k << " = " << to_string(w) << "\n";
    Json result{{"w", to_string(w)}};
    Json spec{{"ring", ring_json(ring)}, {"k", std::to_string(k)}};
    if (!source.empty()) {
        IdealGen I = parse_ideal(source, ring);
        IdealGen v = factorial_ideal(I, k);
        human << "v_" << k << "(D/" << to_string(I) << ") = <" << to_string(v) << ">\n";
        result["v"] = to_string(v);
        spec["source"] = to_string(I);
    }
    Json doc{{"command", "factorial"},
             {"spec", spec},
             {"result", result},
             {"cross_checks", Json::object()},
             {"witnesses", Json::array()}};
    emit(inv, doc, human.str());
}

void cmd_selfcheck(const CommonOptions& o, const Invocation& inv, int& exit_code) {
    Ring ring = make_ring(o);
    ProblemSpec spec = make_spec(o, ring);
    std::ostringstream human;
    Json checks = Json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        human << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
        checks.push_back(Json{{"name", name}, {"ok", ok}, {"detail", detail}});
        all_ok = all_ok && ok;
    };

    BigInt n = count(spec);
    BigInt closed = ring->is_integers() ? count_chen(spec.sources(), spec.target())
                                        : count_poly_ring(spec.sources(), spec.target());
    record("closed form", n == closed, n.str() + " vs " + closed.str());
    if (all_sources_equal_target(spec)) {
        PrimePowerCount pp = count_prime_power(spec.target(), spec.arity());
        record("prime-power formula", n == pp.value, n.str() + " vs " + pp.value.str());
    }
    BigInt brute = brute_force_count(spec, inv.budget);
    record("brute-force sweep", n == brute, n.str() + " vs " + brute.str());
    BigInt canon = brute_force_count_by_canonical(spec, inv.budget);
    record("canonical-form dedup", brute == canon, brute.str() + " vs " + canon.str());
    OrderingCheckReport rep = ordering_cross_check(spec.modulus(), inv.budget);
    record("ordering invariance", rep.all_agree,
           "K=" + to_string(rep.modulus) + ", " + std::to_string(rep.entries.size()) + " primes");

    Json doc{{"command", "selfcheck"},
             {"spec", spec_json(spec)},
             {"result", Json{{"ok", all_ok}, {"checks", checks}}},
             {"cross_checks", Json::object()},
             {"witnesses", Json::array()}};
    emit(inv, doc, human.str() + (all_ok ? "selfcheck: OK\n" : "selfcheck: FAILED\n"));
    if (!all_ok) exit_code = 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"polynomial functions between residue class rings of Z and F_q[t]"};
    app.require_subcommand(1);

    Invocation inv;
    inv.out = &out;
    app.add_flag("--json", inv.json, "machine-readable output");
    app.add_option("--budget", inv.budget, "evaluation budget for exhaustive sweeps")
        ->envname("POLYFUNC_BUDGET");

    auto add_common = [](CLI::App* cmd, CommonOptions& o, bool with_spec) {
        cmd->fallthrough();  // lets --json / --budget appear after the subcommand
        cmd->add_option("--ring", o.ring, "base domain: z or gf")->required();
        cmd->add_option("-p", o.p, "field characteristic (gf)");
        cmd->add_option("-s", o.s, "field extension degree (gf)");
        if (with_spec) {
            cmd->add_option("-n", o.moduli, "source moduli (z)")->delimiter(',');
            cmd->add_option("-m", o.target, "target modulus (z)");
            cmd->add_option("-f", o.moduli_gf, "source moduli (gf)")->delimiter(',');
            cmd->add_option("-g", o.target_gf, "target modulus (gf)");
        }
    };

    CommonOptions o_count, o_canon, o_equiv, o_interp, o_table, o_ord, o_fact, o_self;
    std::string poly_canon, poly_table, lhs, rhs, ord_modulus, fact_source;
    std::vector<std::string> interp_values;
    uint64_t ord_length = 8, fact_k = 0;

    auto* c_count = app.add_subcommand("count", "number of polynomial functions");
    add_common(c_count, o_count, true);

    auto* c_canon = app.add_subcommand("canonical", "canonical forms of a polynomial");
    add_common(c_canon, o_canon, true);
    c_canon->add_option("--poly", poly_canon, "polynomial expression")->required();

    auto* c_equiv = app.add_subcommand("equiv", "do two polynomials represent the same function");
    add_common(c_equiv, o_equiv, true);
    c_equiv->add_option("--lhs", lhs, "first polynomial")->required();
    c_equiv->add_option("--rhs", rhs, "second polynomial")->required();

    auto* c_interp = app.add_subcommand("interp", "interpolate a value table");
    add_common(c_interp, o_interp, true);
    c_interp
        ->add_option("--values", interp_values,
                     "value grid in lex order over the residue tuples (last variable fastest)")
        ->required()
        ->delimiter(',');

    auto* c_table = app.add_subcommand("table", "value grid of a polynomial");
    add_common(c_table, o_table, true);
    c_table->add_option("--poly", poly_table, "polynomial expression")->required();

    auto* c_ord = app.add_subcommand("ordering", "simultaneous ordering and P-sequences");
    add_common(c_ord, o_ord, false);
    c_ord->add_option("-K", ord_modulus, "modulus generator")->required();
    c_ord->add_option("-L,--length", ord_length, "number of terms");

    auto* c_fact = app.add_subcommand("factorial", "generalized factorial and factorial ideal");
    add_common(c_fact, o_fact, false);
    c_fact->add_option("-k", fact_k, "index")->required();
    c_fact->add_option("-I", fact_source, "source ideal generator");

    auto* c_self = app.add_subcommand("selfcheck", "run the brute-force oracle sweeps");
    add_common(c_self, o_self, true);

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> cargs;
        cargs.push_back("polyfunc");
        for (const auto& a : argv) cargs.push_back(a.c_str());
        app.parse((int)cargs.size(), cargs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    }

    int exit_code = 0;
    try {
        if (c_count->parsed()) cmd_count(o_count, inv);
        if (c_canon->parsed()) cmd_canonical(o_canon, inv, poly_canon);
        if (c_equiv->parsed()) cmd_equiv(o_equiv, inv, lhs, rhs);
        if (c_interp->parsed()) cmd_interp(o_interp, inv, interp_values);
        if (c_table->parsed()) cmd_table(o_table, inv, poly_table);
        if (c_ord->parsed()) cmd_ordering(o_ord, inv, ord_modulus, ord_length);
        if (c_fact->parsed()) cmd_factorial(o_fact, inv, fact_k, fact_source);
        if (c_self->parsed()) cmd_selfcheck(o_self, inv, exit_code);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << " (at offset " << e.offset << ")\n";
        return 2;
    } catch (const BudgetError& e) {
        err << "budget refusal: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace polyfunc
