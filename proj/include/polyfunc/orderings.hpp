#pragma once

#include "polyfunc/ring.hpp"

namespace polyfunc {

/// A P-ordering of a subset X of R = D/K together with its associated
/// P-sequence. Valuations are those of the lifted differences in D, so an
/// exponent is infinite (the zero ideal) exactly when a term repeats, which
/// for distinct residues means k >= |X|.
struct PSequence {
    IdealGen prime;
    std::vector<std::optional<uint64_t>> exponents;  // nullopt marks the zero ideal

    bool operator==(const PSequence& other) const {
        return prime == other.prime && exponents == other.exponents;
    }
};

struct OrderingSequence {
    Ring ring;
    std::vector<BaseElement> terms;  // terms[0] == 0 for the canonical orderings
};

struct GreedyResult {
    OrderingSequence ordering;
    PSequence psequence;
};

/// k-th term of the simultaneous ordering: k over Z, the base-q digit
/// expansion over F_q[t]. A P-ordering of the whole domain for every prime
/// at once.
BaseElement simultaneous_term(const Ring& ring, uint64_t k);
std::vector<BaseElement> simultaneous_prefix(const Ring& ring, uint64_t length);

/// Generalized factorial w_k = prod_{j<k} (a_k - a_j) along the simultaneous
/// ordering; equals k! over Z, w_0 = 1.
BaseElement generalized_factorial(const Ring& ring, uint64_t k);

/// Factorial ideal v_k(D/I): <w_k> for k < |D/I|, the zero ideal otherwise.
IdealGen factorial_ideal(const IdealGen& I, uint64_t k);
/// The first `length` factorial ideals v_0(D/I), v_1(D/I), ...
std::vector<IdealGen> factorial_sequence(const IdealGen& I, uint64_t length);

/// Greedy P-ordering of X (a subset of residues mod K, listed in canonical
/// order) of the given length, starting at 0 when present (or at
/// X[*first_index] when given), ties broken towards the smallest canonical
/// index. The associated P-sequence is choice-independent.
GreedyResult greedy_p_ordering(const std::vector<BaseElement>& X, const IdealGen& P,
                               const IdealGen& K, size_t length,
                               std::optional<size_t> first_index = std::nullopt);

/// Associated P-sequence of a given sequence of elements (valuations of the
/// lifted difference products in D).
PSequence p_sequence_of(const std::vector<BaseElement>& terms, const IdealGen& P);

/// P^e as an ideal of R = D/K (the zero ideal of R when e is infinite).
IdealGen prime_power_in_quotient(const IdealGen& P, std::optional<uint64_t> e, const IdealGen& K);

/// v_k(X) for k = 0..|X| as ideals of R = D/K, computed as the product over
/// the prime factors of K of greedy P-sequences. Independent oracle for
/// factorial_ideal.
std::vector<IdealGen> factorial_ideal_via_greedy(const std::vector<BaseElement>& X,
                                                 const IdealGen& K);

/// Sequence with term j congruent to the j-th greedy P_l-ordering term
/// modulo P_l^{e_l} for every prime factor of K (a simultaneous ordering of
/// X in R glued by CRT). Test oracle for the node-product route below.
std::vector<BaseElement> crt_mixed_ordering(const std::vector<BaseElement>& X, const IdealGen& K);

/// v_k as ideals of R read off a node sequence: <prod_{j<k}(a_k - a_j)> mod K.
std::vector<IdealGen> factorial_ideals_from_nodes(const std::vector<BaseElement>& nodes,
                                                  const IdealGen& K);

}  // namespace polyfunc
