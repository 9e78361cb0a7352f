#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfunc {

using BigInt = boost::multiprecision::cpp_int;

/// Operation called outside its mathematical domain (zero ideal where a
/// nonzero one is required, mixed ring instances, non-coprime CRT moduli...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive computation refused because it would exceed its budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input; `offset` is the byte position of the problem.
struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& msg, size_t off) : std::runtime_error(msg), offset(off) {}
};

enum class RingKind { Integers, PolyOverGF };

/// Element of F_{p^s}: coordinates w.r.t. the power basis of F_q over F_p.
/// Length is exactly s, entries in [0, p).
struct GFElement {
    std::vector<uint32_t> coords;
    bool operator==(const GFElement&) const = default;
    bool is_zero() const {
        for (uint32_t c : coords)
            if (c) return false;
        return true;
    }
};

/// Univariate polynomial over F_q in the variable t, lowest degree first,
/// no trailing zero coefficients. The zero polynomial is the empty sequence.
struct BasePolynomial {
    std::vector<GFElement> coeffs;
    bool operator==(const BasePolynomial&) const = default;
    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return (long)coeffs.size() - 1; }
};

class RingInstance;
using Ring = std::shared_ptr<const RingInstance>;

/// One of the two concrete base domains: the rational integers Z, or the
/// polynomial ring F_q[t] with q = p^s. Immutable; share freely.
class RingInstance {
  public:
    static Ring integers();
    /// F_q[t] with the canonical defining irreducible of F_{p^s} over F_p
    /// (the lexicographically smallest one, coefficients compared from the
    /// constant term up).
    static Ring gf(uint32_t p, uint32_t s = 1);
    /// F_q[t] with an explicit monic defining polynomial of degree s
    /// (coefficients mod p, lowest first, length s+1). Irreducibility over
    /// F_p is verified at construction.
    static Ring gf(uint32_t p, uint32_t s, std::vector<uint32_t> defining);

    RingKind kind() const { return kind_; }
    bool is_integers() const { return kind_ == RingKind::Integers; }
    uint32_t characteristic() const { return p_; }
    uint32_t extension_degree() const { return s_; }
    uint64_t field_order() const { return q_; }
    const std::vector<uint32_t>& defining_poly() const { return defining_; }

    bool same_instance(const RingInstance& other) const;

    // F_q arithmetic on power-basis coordinate vectors.
    GFElement fq_zero() const;
    GFElement fq_one() const;
    GFElement fq_add(const GFElement& a, const GFElement& b) const;
    GFElement fq_sub(const GFElement& a, const GFElement& b) const;
    GFElement fq_neg(const GFElement& a) const;
    GFElement fq_mul(const GFElement& a, const GFElement& b) const;
    GFElement fq_inv(const GFElement& a) const;
    /// Element with index k in the fixed enumeration of F_q: base-p digits
    /// of k read as power-basis coordinates (index 0 is 0, index 1 is 1).
    GFElement fq_from_index(uint64_t index) const;
    uint64_t fq_index(const GFElement& a) const;

  private:
    RingInstance() = default;
    RingKind kind_ = RingKind::Integers;
    uint32_t p_ = 0;
    uint32_t s_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> defining_;
};

/// Element of the base domain: an arbitrary-precision integer or a
/// polynomial over F_q, consistent with the ambient ring instance.
class BaseElement {
  public:
    BaseElement() = default;
    static BaseElement integer(Ring ring, BigInt value);
    static BaseElement polynomial(Ring ring, BasePolynomial value);
    static BaseElement zero(const Ring& ring);
    static BaseElement one(const Ring& ring);

    const Ring& ring() const { return ring_; }
    bool valid() const { return ring_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;
    const BigInt& int_value() const;
    const BasePolynomial& poly_value() const;

    bool operator==(const BaseElement& other) const;
    bool operator!=(const BaseElement& other) const { return !(*this == other); }

    BaseElement operator-() const;
    friend BaseElement operator+(const BaseElement& a, const BaseElement& b);
    friend BaseElement operator-(const BaseElement& a, const BaseElement& b);
    friend BaseElement operator*(const BaseElement& a, const BaseElement& b);

  private:
    Ring ring_;
    BigInt int_;
    BasePolynomial poly_;
};

/// Ideal of the base domain by canonical generator: a nonnegative integer, a
/// monic polynomial, or zero. Two equal ideals have identical generators.
class IdealGen {
  public:
    IdealGen() = default;
    explicit IdealGen(BaseElement generator);

    const BaseElement& generator() const { return gen_; }
    const Ring& ring() const { return gen_.ring(); }
    bool valid() const { return gen_.valid(); }
    bool is_zero() const { return gen_.is_zero(); }
    bool is_unit() const { return gen_.is_one(); }
    /// |D/I| for a nonzero ideal: the generator for Z, q^deg for F_q[t].
    BigInt norm() const;

    bool operator==(const IdealGen& other) const { return gen_ == other.gen_; }
    bool operator!=(const IdealGen& other) const { return !(*this == other); }

  private:
    BaseElement gen_;
};

struct DivMod {
    BaseElement quotient;
    BaseElement remainder;
};

struct ExtendedGcd {
    BaseElement g;  // normalized gcd
    BaseElement s;  // s*a + t*b = g
    BaseElement t;
};

void require_same_ring(const BaseElement& a, const BaseElement& b);

/// Euclidean gcd, normalized (nonnegative / monic); gcd(0,0) = 0.
BaseElement gcd(const BaseElement& a, const BaseElement& b);
ExtendedGcd extended_gcd(const BaseElement& a, const BaseElement& b);

/// Division with canonical remainder: 0 <= r < |b| over Z, deg r < deg b
/// over F_q[t]. The divisor must be nonzero.
DivMod divmod(const BaseElement& a, const BaseElement& b);
BaseElement mod(const BaseElement& a, const BaseElement& b);
/// Quotient of an exact division; the remainder must vanish.
BaseElement exact_div(const BaseElement& a, const BaseElement& b);
bool divides(const BaseElement& a, const BaseElement& b);

/// Exponent of the highest power of the prime dividing a nonzero element.
uint64_t valuation(const BaseElement& a, const IdealGen& prime);

/// Prime factorization of a nonzero non-unit ideal, primes sorted
/// canonically (ascending generator / ascending degree then digit index).
std::vector<std::pair<IdealGen, uint32_t>> factorize(const IdealGen& g);

bool is_prime_ideal(const IdealGen& g);

/// Solution of the simultaneous congruences x = residues[l] (mod moduli[l])
/// for pairwise coprime nonzero moduli, reduced mod the product.
BaseElement crt_combine(const std::vector<BaseElement>& residues,
                        const std::vector<IdealGen>& moduli);

/// The canonical complete set of residues modulo a nonzero non-unit ideal:
/// {0,...,n-1} over Z, polynomials of degree < deg g in digit order over
/// F_q[t]. Element 0 comes first; the order is the simultaneous ordering
/// restricted to the first |D/I| terms.
std::vector<BaseElement> residues_mod(const IdealGen& I);

/// k-th element of the canonical enumeration of the domain: k itself over Z,
/// the base-q digit expansion sum a_{c_0} + a_{c_1} t + ... over F_q[t].
BaseElement element_at_index(const Ring& ring, const BigInt& index);
/// Inverse of element_at_index; defined for canonical residues (nonnegative
/// integers, arbitrary polynomials).
BigInt element_index(const BaseElement& x);

/// Residue of the ideal <a> modulo K, i.e. <gcd(a, K)>.
IdealGen ideal_in_quotient(const IdealGen& a, const IdealGen& K);
/// Whether <bigger> contains <smaller> in R = D/K.
bool ideal_contains(const IdealGen& bigger, const IdealGen& smaller, const IdealGen& K);

IdealGen ideal_gcd(const IdealGen& a, const IdealGen& b);
IdealGen ideal_lcm(const IdealGen& a, const IdealGen& b);

/// A solution x of c*x = d (mod m) in the canonical residue set, picked as
/// the solution of smallest index in residues_mod(m); nullopt when
/// gcd(c, m) does not divide d.
std::optional<BaseElement> solve_linear_congruence(const BaseElement& c, const BaseElement& d,
                                                   const IdealGen& m);

std::string to_string(const GFElement& a, const RingInstance& ring);
std::string to_string(const BaseElement& x);
std::string to_string(const IdealGen& I);

}  // namespace polyfunc
