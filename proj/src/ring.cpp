#include "polyfunc/ring.hpp"

#include <algorithm>
#include <sstream>

namespace polyfunc {

namespace {

// ---------------------------------------------------------------------------
// F_p[u] helpers used to bootstrap F_{p^s}: vectors of residues mod p,
// lowest degree first, trimmed.
// ---------------------------------------------------------------------------

using FpPoly = std::vector<uint32_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (uint32_t)(((uint64_t)out[i + j] + (uint64_t)a[i] * b[j]) % p);
    fp_trim(out);
    return out;
}

// Remainder of a modulo monic b.
FpPoly fp_rem(FpPoly a, const FpPoly& b, uint32_t p) {
    fp_trim(a);
    while (a.size() >= b.size()) {
        uint32_t lead = a.back();  // b is monic
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = (uint64_t)lead * b[i] % p;
            a[i + shift] = (uint32_t)((a[i + shift] + p - sub) % p);
        }
        fp_trim(a);
    }
    return a;
}

bool fp_is_irreducible(const FpPoly& f, uint32_t p) {
    // Trial division by all monic polynomials of degree 1..deg(f)/2.
    size_t deg = f.size() - 1;
    if (deg == 0) return false;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            FpPoly cand(d + 1, 0);
            uint64_t v = idx;
            for (size_t i = 0; i < d; ++i) {
                cand[i] = (uint32_t)(v % p);
                v /= p;
            }
            cand[d] = 1;
            if (fp_rem(f, cand, p).empty()) return false;
        }
    }
    return true;
}

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingInstance
// ---------------------------------------------------------------------------

Ring RingInstance::integers() {
    static Ring instance = [] {
        auto r = std::shared_ptr<RingInstance>(new RingInstance());
        r->kind_ = RingKind::Integers;
        return Ring(r);
    }();
    return instance;
}

Ring RingInstance::gf(uint32_t p, uint32_t s) {
    if (!is_prime_u32(p)) throw DomainError("characteristic must be prime");
    if (s < 1) throw DomainError("extension degree must be >= 1");
    // Lexicographically smallest monic irreducible of degree s over F_p,
    // coefficients compared from the constant term up.
    uint64_t count = 1;
    for (uint32_t i = 0; i < s; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<uint32_t> cand(s + 1, 0);
        uint64_t v = idx;
        for (uint32_t i = 0; i < s; ++i) {
            // idx runs with the constant coefficient most significant so the
            // first hit is the lex-smallest tuple (c_0, c_1, ..., c_{s-1}).
            cand[s - 1 - i] = (uint32_t)(v % p);
            v /= p;
        }
        cand[s] = 1;
        if (fp_is_irreducible(cand, p)) return gf(p, s, std::move(cand));
    }
    throw DomainError("no irreducible polynomial found");  // unreachable
}

Ring RingInstance::gf(uint32_t p, uint32_t s, std::vector<uint32_t> defining) {
    if (!is_prime_u32(p)) throw DomainError("characteristic must be prime");
    if (s < 1) throw DomainError("extension degree must be >= 1");
    if (defining.size() != (size_t)s + 1 || defining.back() != 1)
        throw DomainError("defining polynomial must be monic of degree s");
    for (uint32_t& c : defining) c %= p;
    defining.back() = 1;
    if (!fp_is_irreducible(defining, p))
        throw DomainError("defining polynomial is reducible over F_p");
    uint64_t q = 1;
    for (uint32_t i = 0; i < s; ++i) {
        if (q > (uint64_t)1 << 40) throw DomainError("field order too large");
        q *= p;
    }
    auto r = std::shared_ptr<RingInstance>(new RingInstance());
    r->kind_ = RingKind::PolyOverGF;
    r->p_ = p;
    r->s_ = s;
    r->q_ = q;
    r->defining_ = std::move(defining);
    return Ring(r);
}

bool RingInstance::same_instance(const RingInstance& other) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == RingKind::Integers) return true;
    return p_ == other.p_ && s_ == other.s_ && defining_ == other.defining_;
}

GFElement RingInstance::fq_zero() const { return GFElement{std::vector<uint32_t>(s_, 0)}; }

GFElement RingInstance::fq_one() const {
    GFElement e = fq_zero();
    e.coords[0] = 1;
    return e;
}

GFElement RingInstance::fq_add(const GFElement& a, const GFElement& b) const {
    GFElement out = fq_zero();
    for (uint32_t i = 0; i < s_; ++i) out.coords[i] = (a.coords[i] + b.coords[i]) % p_;
    return out;
}

GFElement RingInstance::fq_sub(const GFElement& a, const GFElement& b) const {
    GFElement out = fq_zero();
    for (uint32_t i = 0; i < s_; ++i) out.coords[i] = (a.coords[i] + p_ - b.coords[i]) % p_;
    return out;
}

GFElement RingInstance::fq_neg(const GFElement& a) const { return fq_sub(fq_zero(), a); }

GFElement RingInstance::fq_mul(const GFElement& a, const GFElement& b) const {
    FpPoly prod = fp_mul(FpPoly(a.coords.begin(), a.coords.end()),
                         FpPoly(b.coords.begin(), b.coords.end()), p_);
    FpPoly rem = fp_rem(std::move(prod), defining_, p_);
    GFElement out = fq_zero();
    for (size_t i = 0; i < rem.size(); ++i) out.coords[i] = rem[i];
    return out;
}

GFElement RingInstance::fq_inv(const GFElement& a) const {
    if (a.is_zero()) throw DomainError("inverse of zero in F_q");
    // a^(q-2) by square and multiply.
    uint64_t e = q_ - 2;
    GFElement result = fq_one();
    GFElement base = a;
    while (e) {
        if (e & 1) result = fq_mul(result, base);
        base = fq_mul(base, base);
        e >>= 1;
    }
    return result;
}

GFElement RingInstance::fq_from_index(uint64_t index) const {
    if (index >= q_) throw DomainError("field element index out of range");
    GFElement e = fq_zero();
    for (uint32_t i = 0; i < s_ && index; ++i) {
        e.coords[i] = (uint32_t)(index % p_);
        index /= p_;
    }
    return e;
}

uint64_t RingInstance::fq_index(const GFElement& a) const {
    uint64_t idx = 0;
    for (uint32_t i = s_; i-- > 0;) idx = idx * p_ + a.coords[i];
    return idx;
}

// ---------------------------------------------------------------------------
// BasePolynomial arithmetic (internal; surfaced through BaseElement)
// ---------------------------------------------------------------------------

namespace {

void bp_trim(BasePolynomial& a) {
    while (!a.coeffs.empty() && a.coeffs.back().is_zero()) a.coeffs.pop_back();
}

BasePolynomial bp_add(const RingInstance& r, const BasePolynomial& a, const BasePolynomial& b) {
    BasePolynomial out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), r.fq_zero());
    for (size_t i = 0; i < out.coeffs.size(); ++i) {
        GFElement lhs = i < a.coeffs.size() ? a.coeffs[i] : r.fq_zero();
        GFElement rhs = i < b.coeffs.size() ? b.coeffs[i] : r.fq_zero();
        out.coeffs[i] = r.fq_add(lhs, rhs);
    }
    bp_trim(out);
    return out;
}

BasePolynomial bp_neg(const RingInstance& r, const BasePolynomial& a) {
    BasePolynomial out = a;
    for (auto& c : out.coeffs) c = r.fq_neg(c);
    return out;
}

BasePolynomial bp_sub(const RingInstance& r, const BasePolynomial& a, const BasePolynomial& b) {
    return bp_add(r, a, bp_neg(r, b));
}

BasePolynomial bp_mul(const RingInstance& r, const BasePolynomial& a, const BasePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BasePolynomial out;
    out.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1, r.fq_zero());
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] = r.fq_add(out.coeffs[i + j], r.fq_mul(a.coeffs[i], b.coeffs[j]));
    }
    bp_trim(out);
    return out;
}

// Long division; divisor must be nonzero.
std::pair<BasePolynomial, BasePolynomial> bp_divmod(const RingInstance& r, BasePolynomial a,
                                                    const BasePolynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    BasePolynomial q;
    if (a.coeffs.size() < b.coeffs.size()) return {q, a};
    q.coeffs.resize(a.coeffs.size() - b.coeffs.size() + 1, r.fq_zero());
    GFElement lead_inv = r.fq_inv(b.coeffs.back());
    for (size_t shift = q.coeffs.size(); shift-- > 0;) {
        size_t k = shift + b.coeffs.size() - 1;
        GFElement factor = r.fq_mul(a.coeffs[k], lead_inv);
        if (factor.is_zero()) continue;
        q.coeffs[shift] = factor;
        for (size_t i = 0; i < b.coeffs.size(); ++i)
            a.coeffs[i + shift] = r.fq_sub(a.coeffs[i + shift], r.fq_mul(factor, b.coeffs[i]));
    }
    bp_trim(a);
    bp_trim(q);
    return {q, a};
}

BasePolynomial bp_make_monic(const RingInstance& r, BasePolynomial a) {
    if (a.is_zero()) return a;
    GFElement inv = r.fq_inv(a.coeffs.back());
    for (auto& c : a.coeffs) c = r.fq_mul(c, inv);
    return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// BaseElement
// ---------------------------------------------------------------------------

BaseElement BaseElement::integer(Ring ring, BigInt value) {
    if (!ring || !ring->is_integers()) throw DomainError("integer element in non-integer ring");
    BaseElement e;
    e.ring_ = std::move(ring);
    e.int_ = std::move(value);
    return e;
}

BaseElement BaseElement::polynomial(Ring ring, BasePolynomial value) {
    if (!ring || ring->is_integers()) throw DomainError("polynomial element in integer ring");
    for (const auto& c : value.coeffs)
        if (c.coords.size() != ring->extension_degree())
            throw DomainError("coefficient has wrong coordinate length");
    BaseElement e;
    e.ring_ = std::move(ring);
    bp_trim(value);
    e.poly_ = std::move(value);
    return e;
}

BaseElement BaseElement::zero(const Ring& ring) {
    return ring->is_integers() ? integer(ring, 0) : polynomial(ring, {});
}

BaseElement BaseElement::one(const Ring& ring) {
    if (ring->is_integers()) return integer(ring, 1);
    BasePolynomial p;
    p.coeffs.push_back(ring->fq_one());
    return polynomial(ring, std::move(p));
}

bool BaseElement::is_zero() const {
    return ring_->is_integers() ? int_ == 0 : poly_.is_zero();
}

bool BaseElement::is_one() const {
    if (ring_->is_integers()) return int_ == 1;
    return poly_.coeffs.size() == 1 && poly_.coeffs[0] == ring_->fq_one();
}

const BigInt& BaseElement::int_value() const {
    if (!ring_->is_integers()) throw DomainError("not an integer element");
    return int_;
}

const BasePolynomial& BaseElement::poly_value() const {
    if (ring_->is_integers()) throw DomainError("not a polynomial element");
    return poly_;
}

bool BaseElement::operator==(const BaseElement& other) const {
    if (!ring_ || !other.ring_) return ring_ == other.ring_;
    if (!ring_->same_instance(*other.ring_)) return false;
    return ring_->is_integers() ? int_ == other.int_ : poly_ == other.poly_;
}

void require_same_ring(const BaseElement& a, const BaseElement& b) {
    if (!a.valid() || !b.valid() || !a.ring()->same_instance(*b.ring()))
        throw DomainError("operands belong to different ring instances");
}

BaseElement BaseElement::operator-() const {
    if (ring_->is_integers()) return integer(ring_, -int_);
    return polynomial(ring_, bp_neg(*ring_, poly_));
}

BaseElement operator+(const BaseElement& a, const BaseElement& b) {
    require_same_ring(a, b);
    if (a.ring_->is_integers()) return BaseElement::integer(a.ring_, a.int_ + b.int_);
    return BaseElement::polynomial(a.ring_, bp_add(*a.ring_, a.poly_, b.poly_));
}

BaseElement operator-(const BaseElement& a, const BaseElement& b) {
    require_same_ring(a, b);
    if (a.ring_->is_integers()) return BaseElement::integer(a.ring_, a.int_ - b.int_);
    return BaseElement::polynomial(a.ring_, bp_sub(*a.ring_, a.poly_, b.poly_));
}

BaseElement operator*(const BaseElement& a, const BaseElement& b) {
    require_same_ring(a, b);
    if (a.ring_->is_integers()) return BaseElement::integer(a.ring_, a.int_ * b.int_);
    return BaseElement::polynomial(a.ring_, bp_mul(*a.ring_, a.poly_, b.poly_));
}

// ---------------------------------------------------------------------------
// Division, gcd
// ---------------------------------------------------------------------------

DivMod divmod(const BaseElement& a, const BaseElement& b) {
    require_same_ring(a, b);
    if (b.is_zero()) throw DomainError("division by zero");
    const Ring& ring = a.ring();
    if (ring->is_integers()) {
        BigInt q = a.int_value() / b.int_value();
        BigInt r = a.int_value() - q * b.int_value();
        if (r < 0) {
            // canonical remainder in [0, |b|)
            if (b.int_value() > 0) {
                q -= 1;
                r += b.int_value();
            } else {
                q += 1;
                r -= b.int_value();
            }
        }
        return {BaseElement::integer(ring, q), BaseElement::integer(ring, r)};
    }
    auto [q, r] = bp_divmod(*ring, a.poly_value(), b.poly_value());
    return {BaseElement::polynomial(ring, std::move(q)), BaseElement::polynomial(ring, std::move(r))};
}

BaseElement mod(const BaseElement& a, const BaseElement& b) { return divmod(a, b).remainder; }

BaseElement exact_div(const BaseElement& a, const BaseElement& b) {
    DivMod dm = divmod(a, b);
    if (!dm.remainder.is_zero()) throw DomainError("division is not exact");
    return dm.quotient;
}

bool divides(const BaseElement& a, const BaseElement& b) {
    require_same_ring(a, b);
    if (a.is_zero()) return b.is_zero();
    return mod(b, a).is_zero();
}

namespace {

BaseElement normalize(const BaseElement& a) {
    if (a.ring()->is_integers()) {
        BigInt v = a.int_value();
        if (v < 0) v = -v;
        return BaseElement::integer(a.ring(), std::move(v));
    }
    return BaseElement::polynomial(a.ring(), bp_make_monic(*a.ring(), a.poly_value()));
}

}  // namespace

BaseElement gcd(const BaseElement& a, const BaseElement& b) {
    require_same_ring(a, b);
    BaseElement x = a, y = b;
    while (!y.is_zero()) {
        BaseElement r = mod(x, y);
        x = y;
        y = r;
    }
    return normalize(x);
}

ExtendedGcd extended_gcd(const BaseElement& a, const BaseElement& b) {
    require_same_ring(a, b);
    const Ring& ring = a.ring();
    BaseElement old_r = a, r = b;
    BaseElement old_s = BaseElement::one(ring), s = BaseElement::zero(ring);
    BaseElement old_t = BaseElement::zero(ring), t = BaseElement::one(ring);
    while (!r.is_zero()) {
        DivMod dm = divmod(old_r, r);
        old_r = r;
        r = dm.remainder;
        BaseElement ns = old_s - dm.quotient * s;
        old_s = s;
        s = ns;
        BaseElement nt = old_t - dm.quotient * t;
        old_t = t;
        t = nt;
    }
    // Normalize so g is canonical (nonnegative / monic).
    if (ring->is_integers()) {
        if (old_r.int_value() < 0) {
            old_r = -old_r;
            old_s = -old_s;
            old_t = -old_t;
        }
    } else if (!old_r.is_zero()) {
        GFElement inv = ring->fq_inv(old_r.poly_value().coeffs.back());
        BasePolynomial unit;
        unit.coeffs.push_back(inv);
        BaseElement u = BaseElement::polynomial(ring, std::move(unit));
        old_r = old_r * u;
        old_s = old_s * u;
        old_t = old_t * u;
    }
    return {old_r, old_s, old_t};
}

// ---------------------------------------------------------------------------
// IdealGen
// ---------------------------------------------------------------------------

IdealGen::IdealGen(BaseElement generator) : gen_(normalize(generator)) {}

BigInt IdealGen::norm() const {
    if (is_zero()) throw DomainError("zero ideal has no finite norm");
    if (ring()->is_integers()) return gen_.int_value();
    BigInt q = ring()->field_order();
    BigInt out = 1;
    for (long i = 0; i < gen_.poly_value().degree(); ++i) out *= q;
    return out;
}

IdealGen ideal_gcd(const IdealGen& a, const IdealGen& b) {
    return IdealGen(gcd(a.generator(), b.generator()));
}

IdealGen ideal_lcm(const IdealGen& a, const IdealGen& b) {
    if (a.is_zero() || b.is_zero()) return IdealGen(BaseElement::zero(a.ring()));
    BaseElement g = gcd(a.generator(), b.generator());
    return IdealGen(exact_div(a.generator(), g) * b.generator());
}

// ---------------------------------------------------------------------------
// Valuation and factorization
// ---------------------------------------------------------------------------

uint64_t valuation(const BaseElement& a, const IdealGen& prime) {
    if (a.is_zero()) throw DomainError("valuation of zero is infinite");
    uint64_t v = 0;
    BaseElement x = a;
    while (true) {
        DivMod dm = divmod(x, prime.generator());
        if (!dm.remainder.is_zero()) return v;
        x = dm.quotient;
        ++v;
    }
}

std::vector<std::pair<IdealGen, uint32_t>> factorize(const IdealGen& g) {
    if (g.is_zero() || g.is_unit()) throw DomainError("factorize requires a nonzero non-unit ideal");
    std::vector<std::pair<IdealGen, uint32_t>> out;
    const Ring& ring = g.ring();
    if (ring->is_integers()) {
        BigInt n = g.generator().int_value();
        for (BigInt d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                uint32_t e = 0;
                while (n % d == 0) {
                    n /= d;
                    ++e;
                }
                out.emplace_back(IdealGen(BaseElement::integer(ring, d)), e);
            }
        }
        if (n > 1) out.emplace_back(IdealGen(BaseElement::integer(ring, n)), 1);
        return out;
    }
    // Trial division by monic polynomials of increasing degree; dividing out
    // smaller degrees first guarantees every hit is irreducible.
    BaseElement rem = g.generator();
    uint64_t q = ring->field_order();
    for (long d = 1; 2 * d <= rem.poly_value().degree(); ++d) {
        BigInt count = 1;
        for (long i = 0; i < d; ++i) count *= q;
        for (BigInt idx = 0; idx < count; ++idx) {
            BasePolynomial cand;
            cand.coeffs.resize(d + 1, ring->fq_zero());
            BigInt v = idx;
            for (long i = 0; i < d; ++i) {
                cand.coeffs[i] = ring->fq_from_index((v % q).convert_to<uint64_t>());
                v /= q;
            }
            cand.coeffs[d] = ring->fq_one();
            BaseElement c = BaseElement::polynomial(ring, std::move(cand));
            if (divides(c, rem)) {
                uint32_t e = 0;
                while (divides(c, rem)) {
                    rem = exact_div(rem, c);
                    ++e;
                }
                out.emplace_back(IdealGen(c), e);
            }
            if (2 * d > rem.poly_value().degree()) break;
        }
    }
    if (rem.poly_value().degree() >= 1) out.emplace_back(IdealGen(rem), 1);
    // Canonical order: ascending degree, then digit index of the generator.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long da = a.first.generator().poly_value().degree();
        long db = b.first.generator().poly_value().degree();
        if (da != db) return da < db;
        return element_index(a.first.generator()) < element_index(b.first.generator());
    });
    return out;
}

bool is_prime_ideal(const IdealGen& g) {
    if (g.is_zero() || g.is_unit()) return false;
    auto f = factorize(g);
    return f.size() == 1 && f[0].second == 1;
}

// ---------------------------------------------------------------------------
// CRT
// ---------------------------------------------------------------------------

BaseElement crt_combine(const std::vector<BaseElement>& residues,
                        const std::vector<IdealGen>& moduli) {
    if (residues.empty() || residues.size() != moduli.size())
        throw DomainError("crt_combine needs matching nonempty residue/modulus lists");
    for (const auto& m : moduli)
        if (m.is_zero()) throw DomainError("crt_combine requires nonzero moduli");
    BaseElement x = mod(residues[0], moduli[0].generator());
    BaseElement m = moduli[0].generator();
    for (size_t i = 1; i < residues.size(); ++i) {
        const BaseElement& mi = moduli[i].generator();
        ExtendedGcd eg = extended_gcd(m, mi);
        if (!eg.g.is_one()) throw DomainError("crt_combine moduli are not pairwise coprime");
        // x + m * (s * (r_i - x)) solves both congruences since s*m = 1 (mod m_i).
        BaseElement u = mod(eg.s * (residues[i] - x), mi);
        x = x + m * u;
        m = m * mi;
        x = mod(x, m);
    }
    return x;
}

// ---------------------------------------------------------------------------
// Canonical residues and domain enumeration
// ---------------------------------------------------------------------------

BaseElement element_at_index(const Ring& ring, const BigInt& index) {
    if (index < 0) throw DomainError("negative enumeration index");
    if (ring->is_integers()) return BaseElement::integer(ring, index);
    BasePolynomial out;
    BigInt q = ring->field_order();
    BigInt v = index;
    while (v > 0) {
        out.coeffs.push_back(ring->fq_from_index((v % q).convert_to<uint64_t>()));
        v /= q;
    }
    return BaseElement::polynomial(ring, std::move(out));
}

BigInt element_index(const BaseElement& x) {
    const Ring& ring = x.ring();
    if (ring->is_integers()) {
        if (x.int_value() < 0) throw DomainError("negative integer has no enumeration index");
        return x.int_value();
    }
    BigInt q = ring->field_order();
    BigInt idx = 0;
    const auto& cs = x.poly_value().coeffs;
    for (size_t i = cs.size(); i-- > 0;) idx = idx * q + ring->fq_index(cs[i]);
    return idx;
}

std::vector<BaseElement> residues_mod(const IdealGen& I) {
    if (I.is_zero() || I.is_unit())
        throw DomainError("residues_mod requires a nonzero non-unit ideal");
    BigInt n = I.norm();
    if (n > (BigInt(1) << 22)) throw DomainError("residue set too large to enumerate");
    std::vector<BaseElement> out;
    out.reserve((size_t)n);
    for (BigInt k = 0; k < n; ++k) out.push_back(element_at_index(I.ring(), k));
    return out;
}

// ---------------------------------------------------------------------------
// Ideals in the quotient R = D/K
// ---------------------------------------------------------------------------

IdealGen ideal_in_quotient(const IdealGen& a, const IdealGen& K) {
    if (K.is_zero()) throw DomainError("quotient modulus must be nonzero");
    return ideal_gcd(a, K);
}

bool ideal_contains(const IdealGen& bigger, const IdealGen& smaller, const IdealGen& K) {
    IdealGen a = ideal_in_quotient(bigger, K);
    IdealGen b = ideal_in_quotient(smaller, K);
    return divides(a.generator(), b.generator());
}

// ---------------------------------------------------------------------------
// Linear congruences
// ---------------------------------------------------------------------------

std::optional<BaseElement> solve_linear_congruence(const BaseElement& c, const BaseElement& d,
                                                   const IdealGen& m) {
    require_same_ring(c, d);
    if (!c.ring()->same_instance(*m.ring())) throw DomainError("modulus from a different ring");
    if (m.is_zero()) throw DomainError("congruence modulus must be nonzero");
    const Ring& ring = c.ring();
    BaseElement cm = mod(c, m.generator());
    BaseElement dm = mod(d, m.generator());
    BaseElement g = gcd(cm, m.generator());  // = m when c = 0 (mod m)
    if (!divides(g, dm)) return std::nullopt;
    BaseElement mr = exact_div(m.generator(), g);
    if (mr.is_one()) return BaseElement::zero(ring);
    BaseElement cr = mod(exact_div(cm, g), mr);
    BaseElement dr = mod(exact_div(dm, g), mr);
    ExtendedGcd eg = extended_gcd(cr, mr);
    // cr and mr are coprime, so eg.g is a unit and eg.s inverts cr mod mr.
    BaseElement x = mod(eg.s * dr, mr);
    // Solutions mod m are x + u*mr; x (degree/value below mr) has the
    // smallest index in residues_mod(m).
    return x;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

std::string to_string(const GFElement& a, const RingInstance& ring) {
    if (a.is_zero()) return "0";
    if (ring.extension_degree() == 1) return std::to_string(a.coords[0]);
    std::string out;
    for (size_t i = a.coords.size(); i-- > 0;) {
        uint32_t c = a.coords[i];
        if (!c) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += (i == 1) ? "u" : "u^" + std::to_string(i);
        }
    }
    return out;
}

std::string to_string(const BaseElement& x) {
    if (!x.valid()) return "<invalid>";
    const Ring& ring = x.ring();
    if (ring->is_integers()) return x.int_value().str();
    const auto& cs = x.poly_value().coeffs;
    if (cs.empty()) return "0";
    std::string out;
    for (size_t i = cs.size(); i-- > 0;) {
        if (cs[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string coeff = to_string(cs[i], *ring);
        bool unit_coeff = coeff == "1";
        bool composite = coeff.find(' ') != std::string::npos;
        if (i == 0) {
            out += composite ? "(" + coeff + ")" : coeff;
        } else {
            if (!unit_coeff) out += composite ? "(" + coeff + ")*" : coeff + "*";
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

std::string to_string(const IdealGen& I) { return to_string(I.generator()); }

}  // namespace polyfunc
