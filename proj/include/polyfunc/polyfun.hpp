#pragma once

#include <map>

#include "polyfunc/orderings.hpp"
#include "polyfunc/ring.hpp"

namespace polyfunc {

/// r-tuple of nonnegative integers, ordered lexicographically: k < h iff
/// they first differ at a position where k is smaller.
struct MultiIndex {
    std::vector<uint64_t> parts;

    bool operator==(const MultiIndex&) const = default;
    static bool lex_less(const MultiIndex& a, const MultiIndex& b);
    std::string str() const;
};

struct LexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return MultiIndex::lex_less(a, b);
    }
};

/// Sparse multivariate polynomial over the base domain. No zero coefficients
/// are stored; term iteration is in lex order of the exponent tuples.
class MVPoly {
  public:
    MVPoly(Ring ring, uint32_t arity);
    static MVPoly constant(Ring ring, uint32_t arity, BaseElement value);
    static MVPoly variable(Ring ring, uint32_t arity, uint32_t index);
    static MVPoly monomial(Ring ring, uint32_t arity, MultiIndex k, BaseElement coeff);

    const Ring& ring() const { return ring_; }
    uint32_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MultiIndex, BaseElement, LexLess>& terms() const { return terms_; }
    BaseElement coeff(const MultiIndex& k) const;

    void add_term(const MultiIndex& k, const BaseElement& c);

    bool operator==(const MVPoly& other) const;
    friend MVPoly operator+(const MVPoly& a, const MVPoly& b);
    friend MVPoly operator-(const MVPoly& a, const MVPoly& b);
    friend MVPoly operator*(const MVPoly& a, const MVPoly& b);
    MVPoly operator-() const;

    MVPoly pow(uint64_t e) const;
    BaseElement evaluate(const std::vector<BaseElement>& point) const;

  private:
    Ring ring_;
    uint32_t arity_ = 0;
    std::map<MultiIndex, BaseElement, LexLess> terms_;
};

/// The data of one counting/representation problem: source ideals
/// I_1,...,I_r, target ideal J, all nonzero and non-unit, with
/// K = lcm[I_1,...,I_r,J] cached.
class ProblemSpec {
  public:
    ProblemSpec(Ring ring, std::vector<IdealGen> sources, IdealGen target);

    const Ring& ring() const { return ring_; }
    uint32_t arity() const { return (uint32_t)sources_.size(); }
    const std::vector<IdealGen>& sources() const { return sources_; }
    const IdealGen& source(size_t i) const { return sources_[i]; }
    const IdealGen& target() const { return target_; }
    const IdealGen& modulus() const { return K_; }

    /// Sizes of the canonical residue sets, guarded against enumeration blowup.
    std::vector<size_t> grid_dims() const;
    size_t grid_size() const;

    bool operator==(const ProblemSpec& other) const {
        return sources_ == other.sources_ && target_ == other.target_;
    }

  private:
    Ring ring_;
    std::vector<IdealGen> sources_;
    IdealGen target_;
    IdealGen K_;
};

struct CanonicalTerm {
    MultiIndex index;
    BaseElement coeff;    // canonical representative modulo `modulus`
    IdealGen modulus;     // Ann_J(v_{k_1}(D/I_1)...v_{k_r}(D/I_r)) generator
    bool operator==(const CanonicalTerm&) const = default;
};

/// The unique reduced falling-factorial representation of a polynomial
/// function: lex-sorted terms, zero coefficients omitted.
struct CanonicalForm {
    std::vector<CanonicalTerm> terms;
    bool operator==(const CanonicalForm& other) const { return terms == other.terms; }
    std::string key() const;  // deterministic text encoding, usable as a set key
};

/// Exhaustive value grid of a function over the canonical residue sets, in
/// lex order of the index tuples (last variable fastest). Values are
/// canonical residues mod J.
class FunctionTable {
  public:
    FunctionTable(ProblemSpec spec, std::vector<BaseElement> values);

    const ProblemSpec& spec() const { return spec_; }
    const std::vector<BaseElement>& values() const { return values_; }

    bool operator==(const FunctionTable& other) const { return values_ == other.values_; }

  private:
    ProblemSpec spec_;
    std::vector<BaseElement> values_;
};

/// Smallest k >= 1 with J | w_k. Always finite (at most |D/J|).
uint64_t lambda_bound(const IdealGen& J);

/// Degree cutoff min(|D/I|, lambda(J)); falling-factorial terms with any
/// index >= mu represent the zero function.
uint64_t mu_bound(const IdealGen& I, const IdealGen& J);

/// Generator of J / gcd(J, prod_i w_{k_i}): the modulus to which the
/// coefficient at k is unique. The unit ideal forces the coefficient to 0.
IdealGen ann_modulus(const MultiIndex& k, const ProblemSpec& spec);

/// Exact falling-factorial basis expansion of F (variable-by-variable
/// synthetic division by (x_i - a_j)); sum of b_k (x)_k equals F in
/// D[x_1,...,x_r].
std::map<MultiIndex, BaseElement, LexLess> to_falling_basis(const MVPoly& F,
                                                            const ProblemSpec& spec);

/// THE canonical form of the polynomial function represented by F: falling
/// basis, terms with any k_i >= mu dropped, coefficients reduced modulo
/// their annihilator modulus.
CanonicalForm canonicalize(const MVPoly& F, const ProblemSpec& spec);

/// Monomial-basis polynomial with exponents inside the mu-box and the
/// coefficient of x^k reduced mod ann_modulus(k), representing the same
/// function as the canonical form.
MVPoly canonical_monomial(const CanonicalForm& form, const ProblemSpec& spec);

/// Value grid of F over the problem's residue sets, reduced mod J.
FunctionTable evaluate_table(const MVPoly& F, const ProblemSpec& spec);

/// Evaluate a canonical (falling-basis) form at one point of D^r, mod J.
BaseElement evaluate_canonical_at(const CanonicalForm& form, const ProblemSpec& spec,
                                  const std::vector<BaseElement>& point);

/// Whether F and G represent the same function (identical canonical forms).
bool equivalent(const MVPoly& F, const MVPoly& G, const ProblemSpec& spec);

/// Criterion: every function is a polynomial function iff for each i and
/// each prime factor P of J no two canonical residues mod I_i are congruent
/// mod P.
bool all_functions_polynomial(const ProblemSpec& spec);

struct InterpolationWitness {
    enum class Kind { UnsolvableCongruence, GridMismatch };
    Kind kind;
    // UnsolvableCongruence: c * b = d (mod J) has no solution at `index`.
    MultiIndex index;
    BaseElement lhs_coeff;
    BaseElement rhs;
    // GridMismatch: the solved form yields `actual` instead of `expected`.
    std::vector<BaseElement> point;
    BaseElement expected;
    BaseElement actual;
    std::string str(const ProblemSpec& spec) const;
};

struct InterpolationResult {
    std::optional<CanonicalForm> form;
    std::optional<InterpolationWitness> witness;
    std::optional<CanonicalForm> partial;  // solved coefficients on a mismatch
    bool ok() const { return form.has_value(); }
};

/// Triangular solve over the mu-box in lex order followed by a full-grid
/// verification; returns the canonical form of the table or a NotPolynomial
/// witness.
InterpolationResult interpolate(const FunctionTable& table);

/// Number of polynomial functions (product of annihilator-quotient indices
/// over the mu-box).
BigInt count(const ProblemSpec& spec);

struct PrimePowerCount {
    BigInt value;
    /// For r >= 2 the positive-exponent index set is componentwise-closed but
    /// not a lex interval; the componentwise reading is used.
    bool lex_interval_differs;
};

/// Count for the case I_1 = ... = I_r = J from the per-prime digit-valuation
/// exponents alone.
PrimePowerCount count_prime_power(const IdealGen& J, uint32_t r);

/// Closed-form count over Z: prod over the mu-box of m / gcd(m, prod k_i!).
BigInt count_chen(const std::vector<IdealGen>& n_list, const IdealGen& m);

/// Closed-form count over F_q[t]: prod over the mu-box of
/// q^deg(g / gcd(g, prod_i w_{k_i})).
BigInt count_poly_ring(const std::vector<IdealGen>& f_list, const IdealGen& g);

}  // namespace polyfunc
