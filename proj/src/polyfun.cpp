#include "polyfunc/polyfun.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polyfunc {

// ---------------------------------------------------------------------------
// MultiIndex
// ---------------------------------------------------------------------------

bool MultiIndex::lex_less(const MultiIndex& a, const MultiIndex& b) {
    return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                        b.parts.end());
}

std::string MultiIndex::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// MVPoly
// ---------------------------------------------------------------------------

MVPoly::MVPoly(Ring ring, uint32_t arity) : ring_(std::move(ring)), arity_(arity) {
    if (!ring_) throw DomainError("polynomial needs a ring instance");
}

MVPoly MVPoly::constant(Ring ring, uint32_t arity, BaseElement value) {
    MVPoly p(std::move(ring), arity);
    p.add_term(MultiIndex{std::vector<uint64_t>(arity, 0)}, value);
    return p;
}

MVPoly MVPoly::variable(Ring ring, uint32_t arity, uint32_t index) {
    if (index >= arity) throw DomainError("variable index out of range");
    MVPoly p(ring, arity);
    MultiIndex k{std::vector<uint64_t>(arity, 0)};
    k.parts[index] = 1;
    p.add_term(k, BaseElement::one(ring));
    return p;
}

MVPoly MVPoly::monomial(Ring ring, uint32_t arity, MultiIndex k, BaseElement coeff) {
    if (k.parts.size() != arity) throw DomainError("multi-index arity mismatch");
    MVPoly p(std::move(ring), arity);
    p.add_term(k, coeff);
    return p;
}

BaseElement MVPoly::coeff(const MultiIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? BaseElement::zero(ring_) : it->second;
}

void MVPoly::add_term(const MultiIndex& k, const BaseElement& c) {
    if (k.parts.size() != arity_) throw DomainError("multi-index arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool MVPoly::operator==(const MVPoly& other) const {
    return ring_->same_instance(*other.ring_) && arity_ == other.arity_ && terms_ == other.terms_;
}

MVPoly operator+(const MVPoly& a, const MVPoly& b) {
    if (a.arity_ != b.arity_) throw DomainError("arity mismatch");
    MVPoly out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, c);
    return out;
}

MVPoly operator-(const MVPoly& a, const MVPoly& b) {
    if (a.arity_ != b.arity_) throw DomainError("arity mismatch");
    MVPoly out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
    return out;
}

MVPoly operator*(const MVPoly& a, const MVPoly& b) {
    if (a.arity_ != b.arity_) throw DomainError("arity mismatch");
    MVPoly out(a.ring_, a.arity_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            MultiIndex k = ka;
            for (size_t i = 0; i < k.parts.size(); ++i) k.parts[i] += kb.parts[i];
            out.add_term(k, ca * cb);
        }
    return out;
}

MVPoly MVPoly::operator-() const {
    MVPoly out(ring_, arity_);
    for (const auto& [k, c] : terms_) out.add_term(k, -c);
    return out;
}

MVPoly MVPoly::pow(uint64_t e) const {
    MVPoly result = MVPoly::constant(ring_, arity_, BaseElement::one(ring_));
    MVPoly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

BaseElement MVPoly::evaluate(const std::vector<BaseElement>& point) const {
    if (point.size() != arity_) throw DomainError("evaluation point arity mismatch");
    std::vector<std::vector<BaseElement>> pows(arity_);
    for (uint32_t i = 0; i < arity_; ++i) pows[i].push_back(BaseElement::one(ring_));
    BaseElement sum = BaseElement::zero(ring_);
    for (const auto& [k, c] : terms_) {
        BaseElement val = c;
        for (uint32_t i = 0; i < arity_; ++i) {
            uint64_t e = k.parts[i];
            while (pows[i].size() <= e) pows[i].push_back(pows[i].back() * point[i]);
            if (e) val = val * pows[i][e];
        }
        sum = sum + val;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// ProblemSpec / FunctionTable
// ---------------------------------------------------------------------------

ProblemSpec::ProblemSpec(Ring ring, std::vector<IdealGen> sources, IdealGen target)
    : ring_(std::move(ring)), sources_(std::move(sources)), target_(std::move(target)) {
    if (!ring_) throw DomainError("problem spec needs a ring instance");
    if (sources_.empty()) throw DomainError("at least one source ideal is required");
    auto check = [&](const IdealGen& I) {
        if (!I.valid() || !I.ring()->same_instance(*ring_))
            throw DomainError("ideal from a different ring instance");
        if (I.is_zero() || I.is_unit()) throw DomainError("ideals must be nonzero and non-unit");
    };
    for (const auto& I : sources_) check(I);
    check(target_);
    K_ = target_;
    for (const auto& I : sources_) K_ = ideal_lcm(K_, I);
}

std::vector<size_t> ProblemSpec::grid_dims() const {
    std::vector<size_t> dims;
    BigInt total = 1;
    for (const auto& I : sources_) {
        BigInt n = I.norm();
        total *= n;
        if (total > (BigInt(1) << 22)) throw DomainError("value grid too large to enumerate");
        dims.push_back(n.convert_to<size_t>());
    }
    return dims;
}

size_t ProblemSpec::grid_size() const {
    size_t total = 1;
    for (size_t d : grid_dims()) total *= d;
    return total;
}

FunctionTable::FunctionTable(ProblemSpec spec, std::vector<BaseElement> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
    if (values_.size() != spec_.grid_size())
        throw DomainError("value grid has the wrong number of entries");
    for (auto& v : values_) v = mod(v, spec_.target().generator());
}

// ---------------------------------------------------------------------------
// lambda / mu / annihilator moduli
// ---------------------------------------------------------------------------

uint64_t lambda_bound(const IdealGen& J) {
    if (J.is_zero() || J.is_unit()) throw DomainError("lambda requires a nonzero non-unit ideal");
    const Ring& ring = J.ring();
    BigInt bound = J.norm();  // J | w_{|D/J|}, so the search terminates
    if (ring->is_integers()) {
        const BigInt& m = J.generator().int_value();
        BigInt r = 1;
        for (uint64_t k = 1;; ++k) {
            r = r * k % m;
            if (r == 0) return k;
        }
    }
    std::vector<BaseElement> amod;  // a_j reduced mod J
    amod.push_back(BaseElement::zero(ring));
    for (uint64_t k = 1; BigInt(k) <= bound; ++k) {
        BaseElement ak = simultaneous_term(ring, k);
        BaseElement akm = mod(ak, J.generator());
        BaseElement w = BaseElement::one(ring);
        for (uint64_t j = 0; j < k; ++j) w = mod(w * (akm - amod[j]), J.generator());
        if (w.is_zero()) return k;
        amod.push_back(akm);
    }
    throw DomainError("lambda search failed");  // unreachable
}

uint64_t mu_bound(const IdealGen& I, const IdealGen& J) {
    if (I.is_zero() || I.is_unit()) throw DomainError("mu requires a nonzero non-unit ideal");
    uint64_t lam = lambda_bound(J);
    BigInt n = I.norm();
    if (n <= lam) return n.convert_to<uint64_t>();
    return lam;
}

namespace {

// Per-spec context: the mu-box and w_k mod J tables shared by the
// representation and counting paths.
struct SpecContext {
    std::vector<uint64_t> mus;
    std::vector<BaseElement> wmod;  // w_k mod J for k < max(mus)

    explicit SpecContext(const ProblemSpec& spec) {
        uint64_t lam = lambda_bound(spec.target());
        uint64_t maxmu = 0;
        for (const auto& I : spec.sources()) {
            BigInt n = I.norm();
            uint64_t mu = n <= lam ? n.convert_to<uint64_t>() : lam;
            mus.push_back(mu);
            maxmu = std::max(maxmu, mu);
        }
        const Ring& ring = spec.ring();
        const BaseElement& jg = spec.target().generator();
        std::vector<BaseElement> amod;
        wmod.reserve(maxmu);
        for (uint64_t k = 0; k < maxmu; ++k) {
            BaseElement ak = mod(simultaneous_term(ring, k), jg);
            BaseElement w = BaseElement::one(ring);
            for (uint64_t j = 0; j < k; ++j) w = mod(w * (ak - amod[j]), jg);
            wmod.push_back(w);
            amod.push_back(ak);
        }
    }

    BaseElement box_product_mod(const std::vector<uint64_t>& k, const ProblemSpec& spec) const {
        BaseElement c = BaseElement::one(spec.ring());
        for (uint64_t ki : k) c = mod(c * wmod[ki], spec.target().generator());
        return c;
    }
};

bool odometer_next(std::vector<uint64_t>& k, const std::vector<uint64_t>& dims) {
    for (size_t i = k.size(); i-- > 0;) {
        if (++k[i] < dims[i]) return true;
        k[i] = 0;
    }
    return false;
}

bool odometer_next_sizes(std::vector<size_t>& k, const std::vector<size_t>& dims) {
    for (size_t i = k.size(); i-- > 0;) {
        if (++k[i] < dims[i]) return true;
        k[i] = 0;
    }
    return false;
}

}  // namespace

IdealGen ann_modulus(const MultiIndex& k, const ProblemSpec& spec) {
    if (k.parts.size() != spec.arity()) throw DomainError("multi-index arity mismatch");
    SpecContext ctx(spec);
    for (size_t i = 0; i < k.parts.size(); ++i)
        if (k.parts[i] >= ctx.mus[i]) throw DomainError("multi-index outside the mu box");
    BaseElement c = ctx.box_product_mod(k.parts, spec);
    BaseElement g = gcd(spec.target().generator(), c);
    return IdealGen(exact_div(spec.target().generator(), g));
}

// ---------------------------------------------------------------------------
// Falling-factorial basis
// ---------------------------------------------------------------------------

namespace {

MVPoly scale(const MVPoly& p, const BaseElement& c) {
    MVPoly out(p.ring(), p.arity());
    for (const auto& [k, v] : p.terms()) out.add_term(k, v * c);
    return out;
}

void falling_expand(const MVPoly& F, uint32_t v, std::vector<uint64_t>& prefix,
                    std::map<MultiIndex, BaseElement, LexLess>& out) {
    if (F.is_zero()) return;
    const Ring& ring = F.ring();
    const uint32_t r = F.arity();
    if (v == r) {
        // All variables consumed; F is a constant.
        out[MultiIndex{prefix}] = F.coeff(MultiIndex{std::vector<uint64_t>(r, 0)});
        return;
    }
    uint64_t maxdeg = 0;
    for (const auto& [k, c] : F.terms()) maxdeg = std::max(maxdeg, k.parts[v]);
    std::vector<MVPoly> cs(maxdeg + 1, MVPoly(ring, r));
    for (const auto& [k, c] : F.terms()) {
        MultiIndex k2 = k;
        uint64_t d = k2.parts[v];
        k2.parts[v] = 0;
        cs[d].add_term(k2, c);
    }
    // Repeated synthetic remainder by (x_v - a_j); the j-th remainder is the
    // coefficient of (x_v)_j.
    uint64_t j = 0;
    while (!cs.empty()) {
        BaseElement a = simultaneous_term(ring, j);
        MVPoly b(ring, r);
        if (cs.size() == 1) {
            b = std::move(cs[0]);
            cs.clear();
        } else {
            std::vector<MVPoly> q(cs.size() - 1, MVPoly(ring, r));
            q[cs.size() - 2] = cs[cs.size() - 1];
            for (size_t d = cs.size() - 2; d >= 1; --d) q[d - 1] = cs[d] + scale(q[d], a);
            b = cs[0] + scale(q[0], a);
            cs = std::move(q);
        }
        if (!b.is_zero()) {
            prefix[v] = j;
            falling_expand(b, v + 1, prefix, out);
            prefix[v] = 0;
        }
        ++j;
    }
}

}  // namespace

std::map<MultiIndex, BaseElement, LexLess> to_falling_basis(const MVPoly& F,
                                                            const ProblemSpec& spec) {
    if (F.arity() != spec.arity()) throw DomainError("wrong number of variables for this problem");
    if (!F.ring()->same_instance(*spec.ring()))
        throw DomainError("polynomial from a different ring instance");
    std::map<MultiIndex, BaseElement, LexLess> out;
    std::vector<uint64_t> prefix(F.arity(), 0);
    falling_expand(F, 0, prefix, out);
    return out;
}

CanonicalForm canonicalize(const MVPoly& F, const ProblemSpec& spec) {
    auto falling = to_falling_basis(F, spec);
    SpecContext ctx(spec);
    CanonicalForm form;
    for (const auto& [k, c] : falling) {
        bool in_box = true;
        for (size_t i = 0; i < k.parts.size(); ++i)
            if (k.parts[i] >= ctx.mus[i]) {
                in_box = false;  // (x)_k ~ 0 beyond the mu cutoff
                break;
            }
        if (!in_box) continue;
        BaseElement prod = ctx.box_product_mod(k.parts, spec);
        BaseElement g = gcd(spec.target().generator(), prod);
        IdealGen modulus(exact_div(spec.target().generator(), g));
        if (modulus.is_unit()) continue;  // coefficient forced to 0
        BaseElement reduced = mod(c, modulus.generator());
        if (reduced.is_zero()) continue;
        form.terms.push_back({k, reduced, modulus});
    }
    return form;
}

MVPoly canonical_monomial(const CanonicalForm& form, const ProblemSpec& spec) {
    MVPoly result(spec.ring(), spec.arity());
    std::map<MultiIndex, BaseElement, LexLess> work;
    for (const auto& t : form.terms) work[t.index] = t.coeff;
    while (!work.empty()) {
        auto it = std::prev(work.end());  // lex-largest live index
        MultiIndex j = it->first;
        BaseElement fj = it->second;
        work.erase(it);
        IdealGen modulus = ann_modulus(j, spec);
        if (modulus.is_unit()) continue;
        BaseElement mj = mod(fj, modulus.generator());
        if (mj.is_zero()) continue;
        result.add_term(j, mj);
        // Compensate: m_j x^j = m_j (x)_j + lower falling terms, so the lower
        // falling coefficients lose the expansion of m_j x^j.
        auto expansion = to_falling_basis(MVPoly::monomial(spec.ring(), spec.arity(), j, mj), spec);
        for (const auto& [k, c] : expansion) {
            if (k == j) continue;
            auto [wit, inserted] = work.emplace(k, -c);
            if (!inserted) {
                wit->second = wit->second - c;
                if (wit->second.is_zero()) work.erase(wit);
            } else if (wit->second.is_zero()) {
                work.erase(wit);
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Tables and equivalence
// ---------------------------------------------------------------------------

FunctionTable evaluate_table(const MVPoly& F, const ProblemSpec& spec) {
    if (F.arity() != spec.arity()) throw DomainError("wrong number of variables for this problem");
    std::vector<std::vector<BaseElement>> residues;
    for (const auto& I : spec.sources()) residues.push_back(residues_mod(I));
    std::vector<size_t> dims = spec.grid_dims();
    std::vector<size_t> idx(dims.size(), 0);
    std::vector<BaseElement> values;
    values.reserve(spec.grid_size());
    do {
        std::vector<BaseElement> point;
        point.reserve(dims.size());
        for (size_t i = 0; i < dims.size(); ++i) point.push_back(residues[i][idx[i]]);
        values.push_back(mod(F.evaluate(point), spec.target().generator()));
    } while (odometer_next_sizes(idx, dims));
    return FunctionTable(spec, std::move(values));
}

BaseElement evaluate_canonical_at(const CanonicalForm& form, const ProblemSpec& spec,
                                  const std::vector<BaseElement>& point) {
    if (point.size() != spec.arity()) throw DomainError("evaluation point arity mismatch");
    const Ring& ring = spec.ring();
    const BaseElement& jg = spec.target().generator();
    uint64_t maxk = 0;
    for (const auto& t : form.terms)
        for (uint64_t ki : t.index.parts) maxk = std::max(maxk, ki);
    // Falling-factorial values per variable: ff[i][c] = prod_{j<c}(x_i - a_j).
    std::vector<std::vector<BaseElement>> ff(point.size());
    for (size_t i = 0; i < point.size(); ++i) {
        ff[i].push_back(BaseElement::one(ring));
        for (uint64_t c = 0; c < maxk; ++c)
            ff[i].push_back(mod(ff[i].back() * (point[i] - simultaneous_term(ring, c)), jg));
    }
    BaseElement sum = BaseElement::zero(ring);
    for (const auto& t : form.terms) {
        BaseElement val = t.coeff;
        for (size_t i = 0; i < point.size(); ++i) val = mod(val * ff[i][t.index.parts[i]], jg);
        sum = mod(sum + val, jg);
    }
    return sum;
}

bool equivalent(const MVPoly& F, const MVPoly& G, const ProblemSpec& spec) {
    return canonicalize(F, spec) == canonicalize(G, spec);
}

bool all_functions_polynomial(const ProblemSpec& spec) {
    auto primes = factorize(spec.target());
    for (const auto& [P, e] : primes) {
        BigInt np = P.norm();
        for (const auto& I : spec.sources()) {
            if (I.norm() > np) return false;  // pigeonhole: some pair collides mod P
            if (np <= 4096) {
                std::set<BigInt> seen;
                for (const auto& x : residues_mod(I))
                    if (!seen.insert(element_index(mod(x, P.generator()))).second) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Interpolation
// ---------------------------------------------------------------------------

std::string InterpolationWitness::str(const ProblemSpec& spec) const {
    std::ostringstream os;
    if (kind == Kind::UnsolvableCongruence) {
        os << to_string(lhs_coeff) << "*b = " << to_string(rhs) << " (mod "
           << to_string(spec.target()) << ") has no solution at k=" << index.str();
    } else {
        os << "table value " << to_string(expected) << " at (";
        for (size_t i = 0; i < point.size(); ++i) {
            if (i) os << ",";
            os << to_string(point[i]);
        }
        os << ") but the solved form yields " << to_string(actual);
    }
    return os.str();
}

InterpolationResult interpolate(const FunctionTable& table) {
    const ProblemSpec& spec = table.spec();
    const Ring& ring = spec.ring();
    const BaseElement& jg = spec.target().generator();
    SpecContext ctx(spec);
    std::vector<size_t> dims = spec.grid_dims();
    std::vector<std::vector<BaseElement>> residues;
    for (const auto& I : spec.sources()) residues.push_back(residues_mod(I));

    // fv[i][x][c] = prod_{j<c}(residues[i][x] - a_j) mod J, c <= mu_i.
    std::vector<std::vector<std::vector<BaseElement>>> fv(spec.arity());
    for (uint32_t i = 0; i < spec.arity(); ++i) {
        fv[i].resize(dims[i]);
        for (size_t x = 0; x < dims[i]; ++x) {
            fv[i][x].push_back(BaseElement::one(ring));
            for (uint64_t c = 0; c < ctx.mus[i]; ++c)
                fv[i][x].push_back(
                    mod(fv[i][x].back() * (residues[i][x] - simultaneous_term(ring, c)), jg));
        }
    }

    auto flat_index = [&](const std::vector<uint64_t>& k) {
        size_t idx = 0;
        for (size_t i = 0; i < k.size(); ++i) idx = idx * dims[i] + (size_t)k[i];
        return idx;
    };

    CanonicalForm solved;
    std::vector<uint64_t> k(spec.arity(), 0);
    do {
        // Residual equation at the node (a_{k_1},...,a_{k_r}): basis elements
        // with lex-larger index vanish there, so only solved terms contribute.
        BaseElement partial = BaseElement::zero(ring);
        for (const auto& t : solved.terms) {
            BaseElement val = t.coeff;
            for (uint32_t i = 0; i < spec.arity(); ++i)
                val = mod(val * fv[i][k[i]][t.index.parts[i]], jg);
            partial = mod(partial + val, jg);
        }
        BaseElement ck = BaseElement::one(ring);
        for (uint32_t i = 0; i < spec.arity(); ++i) ck = mod(ck * fv[i][k[i]][k[i]], jg);
        BaseElement dk = mod(table.values()[flat_index(k)] - partial, jg);
        auto sol = solve_linear_congruence(ck, dk, spec.target());
        if (!sol) {
            InterpolationResult out;
            out.witness = InterpolationWitness{InterpolationWitness::Kind::UnsolvableCongruence,
                                               MultiIndex{k},
                                               ck,
                                               dk,
                                               {},
                                               BaseElement(),
                                               BaseElement()};
            out.partial = solved;
            return out;
        }
        if (!sol->is_zero()) {
            BaseElement g = gcd(jg, ck);
            solved.terms.push_back({MultiIndex{k}, *sol, IdealGen(exact_div(jg, g))});
        }
    } while (odometer_next(k, ctx.mus));

    // The solve constrains only the box nodes; check the whole grid.
    std::vector<size_t> idx(dims.size(), 0);
    do {
        BaseElement got = BaseElement::zero(ring);
        for (const auto& t : solved.terms) {
            BaseElement val = t.coeff;
            for (uint32_t i = 0; i < spec.arity(); ++i)
                val = mod(val * fv[i][idx[i]][t.index.parts[i]], jg);
            got = mod(got + val, jg);
        }
        size_t flat = 0;
        for (size_t i = 0; i < idx.size(); ++i) flat = flat * dims[i] + idx[i];
        const BaseElement& expected = table.values()[flat];
        if (!(got == expected)) {
            InterpolationResult out;
            std::vector<BaseElement> point;
            for (size_t i = 0; i < idx.size(); ++i) point.push_back(residues[i][idx[i]]);
            out.witness = InterpolationWitness{InterpolationWitness::Kind::GridMismatch,
                                               MultiIndex{},
                                               BaseElement(),
                                               BaseElement(),
                                               std::move(point),
                                               expected,
                                               got};
            out.partial = solved;
            return out;
        }
    } while (odometer_next_sizes(idx, dims));

    InterpolationResult out;
    out.form = std::move(solved);
    return out;
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

BigInt count(const ProblemSpec& spec) {
    SpecContext ctx(spec);
    BigInt nj = spec.target().norm();
    BigInt total = 1;
    std::vector<uint64_t> k(spec.arity(), 0);
    do {
        BaseElement c = ctx.box_product_mod(k, spec);
        BaseElement g = gcd(spec.target().generator(), c);
        total *= nj / IdealGen(g).norm();
    } while (odometer_next(k, ctx.mus));
    return total;
}

PrimePowerCount count_prime_power(const IdealGen& J, uint32_t r) {
    if (r < 1) throw DomainError("arity must be at least 1");
    if (J.is_zero() || J.is_unit()) throw DomainError("count requires a nonzero non-unit ideal");
    auto primes = factorize(J);
    BigInt total = 1;
    for (const auto& [P, e] : primes) {
        BigInt np = P.norm();
        // digit_sum(k) = sum_j floor(k / N^j), the P-adic valuation of w_k.
        auto digit_sum = [&](uint64_t kk) {
            uint64_t s = 0;
            BigInt pw = np;
            while (pw <= kk) {
                s += (BigInt(kk) / pw).convert_to<uint64_t>();
                pw *= np;
            }
            return s;
        };
        uint64_t kmax = 0;
        while (digit_sum(kmax) < e) {
            ++kmax;
            if (kmax > (uint64_t(1) << 24)) throw DomainError("prime-power index box too large");
        }
        BigInt box = 1;
        for (uint32_t i = 0; i < r; ++i) {
            box *= kmax;
            if (box > (BigInt(1) << 24)) throw DomainError("prime-power index box too large");
        }
        if (kmax == 0) continue;
        std::vector<uint64_t> sums(kmax);
        for (uint64_t kk = 0; kk < kmax; ++kk) sums[kk] = digit_sum(kk);
        std::vector<uint64_t> k(r, 0);
        std::vector<uint64_t> dims(r, kmax);
        do {
            uint64_t s = 0;
            for (uint64_t kl : k) s += sums[kl];
            if (s < e) total *= boost::multiprecision::pow(np, (unsigned)(e - s));
        } while (odometer_next(k, dims));
    }
    return {total, r >= 2};
}

BigInt count_chen(const std::vector<IdealGen>& n_list, const IdealGen& m) {
    if (!m.ring()->is_integers()) throw DomainError("Chen's formula applies to the integers");
    if (m.is_zero() || m.is_unit()) throw DomainError("target must be nonzero and non-unit");
    const BigInt& mi = m.generator().int_value();
    uint64_t lam = lambda_bound(m);
    std::vector<uint64_t> mus;
    uint64_t maxmu = 0;
    for (const auto& n : n_list) {
        if (!n.ring()->is_integers() || n.is_zero() || n.is_unit())
            throw DomainError("source moduli must be nonzero non-unit integer ideals");
        BigInt nn = n.norm();
        uint64_t mu = nn <= lam ? nn.convert_to<uint64_t>() : lam;
        mus.push_back(mu);
        maxmu = std::max(maxmu, mu);
    }
    std::vector<BigInt> factmod;  // k! mod m
    factmod.push_back(1);
    for (uint64_t kk = 1; kk < maxmu; ++kk) factmod.push_back(factmod.back() * kk % mi);
    BigInt total = 1;
    std::vector<uint64_t> k(n_list.size(), 0);
    do {
        BigInt prod = 1;
        for (uint64_t ki : k) prod = prod * factmod[ki] % mi;
        total *= mi / boost::multiprecision::gcd(mi, prod == 0 ? mi : prod);
    } while (odometer_next(k, mus));
    return total;
}

BigInt count_poly_ring(const std::vector<IdealGen>& f_list, const IdealGen& g) {
    if (g.ring()->is_integers()) throw DomainError("this formula applies to F_q[t]");
    if (g.is_zero() || g.is_unit()) throw DomainError("target must be nonzero and non-unit");
    const Ring& ring = g.ring();
    uint64_t lam = lambda_bound(g);
    std::vector<uint64_t> mus;
    uint64_t maxmu = 0;
    for (const auto& f : f_list) {
        if (f.ring()->is_integers() || f.is_zero() || f.is_unit())
            throw DomainError("source moduli must be nonzero non-unit polynomial ideals");
        BigInt nn = f.norm();
        uint64_t mu = nn <= lam ? nn.convert_to<uint64_t>() : lam;
        mus.push_back(mu);
        maxmu = std::max(maxmu, mu);
    }
    const BaseElement& gg = g.generator();
    std::vector<BaseElement> wmod, amod;
    for (uint64_t kk = 0; kk < maxmu; ++kk) {
        BaseElement ak = mod(simultaneous_term(ring, kk), gg);
        BaseElement w = BaseElement::one(ring);
        for (uint64_t j = 0; j < kk; ++j) w = mod(w * (ak - amod[j]), gg);
        wmod.push_back(w);
        amod.push_back(ak);
    }
    BigInt q = ring->field_order();
    BigInt total = 1;
    std::vector<uint64_t> k(f_list.size(), 0);
    do {
        BaseElement prod = BaseElement::one(ring);
        for (uint64_t ki : k) prod = mod(prod * wmod[ki], gg);
        BaseElement gc = gcd(gg, prod);
        long degdiff = gg.poly_value().degree() - gc.poly_value().degree();
        total *= boost::multiprecision::pow(q, (unsigned)degdiff);
    } while (odometer_next(k, mus));
    return total;
}

// ---------------------------------------------------------------------------
// Canonical form text key
// ---------------------------------------------------------------------------

std::string CanonicalForm::key() const {
    std::string out;
    for (const auto& t : terms) {
        out += t.index.str();
        out += "=";
        out += to_string(t.coeff);
        out += "/";
        out += to_string(t.modulus);
        out += ";";
    }
    return out;
}

}  // namespace polyfunc
