#include "polyfunc/orderings.hpp"

#include <algorithm>

namespace polyfunc {

BaseElement simultaneous_term(const Ring& ring, uint64_t k) {
    return element_at_index(ring, BigInt(k));
}

std::vector<BaseElement> simultaneous_prefix(const Ring& ring, uint64_t length) {
    std::vector<BaseElement> out;
    out.reserve(length);
    for (uint64_t k = 0; k < length; ++k) out.push_back(simultaneous_term(ring, k));
    return out;
}

BaseElement generalized_factorial(const Ring& ring, uint64_t k) {
    BaseElement ak = simultaneous_term(ring, k);
    BaseElement w = BaseElement::one(ring);
    for (uint64_t j = 0; j < k; ++j) w = w * (ak - simultaneous_term(ring, j));
    return w;
}

IdealGen factorial_ideal(const IdealGen& I, uint64_t k) {
    if (I.is_zero() || I.is_unit())
        throw DomainError("factorial ideal requires a nonzero non-unit ideal");
    if (BigInt(k) >= I.norm()) return IdealGen(BaseElement::zero(I.ring()));
    return IdealGen(generalized_factorial(I.ring(), k));
}

std::vector<IdealGen> factorial_sequence(const IdealGen& I, uint64_t length) {
    std::vector<IdealGen> out;
    out.reserve(length);
    for (uint64_t k = 0; k < length; ++k) out.push_back(factorial_ideal(I, k));
    return out;
}

namespace {

std::optional<uint64_t> difference_product_valuation(const std::vector<BaseElement>& terms,
                                                     size_t k, const IdealGen& P) {
    std::optional<uint64_t> total = 0;
    for (size_t j = 0; j < k; ++j) {
        BaseElement diff = terms[k] - terms[j];
        if (diff.is_zero()) return std::nullopt;
        if (total) *total += valuation(diff, P);
    }
    return total;
}

}  // namespace

PSequence p_sequence_of(const std::vector<BaseElement>& terms, const IdealGen& P) {
    PSequence seq;
    seq.prime = P;
    seq.exponents.reserve(terms.size());
    for (size_t k = 0; k < terms.size(); ++k)
        seq.exponents.push_back(difference_product_valuation(terms, k, P));
    return seq;
}

GreedyResult greedy_p_ordering(const std::vector<BaseElement>& X, const IdealGen& P,
                               const IdealGen& K, size_t length,
                               std::optional<size_t> first_index) {
    if (X.empty()) throw DomainError("greedy ordering of an empty set");
    if (length > X.size()) throw DomainError("requested length exceeds |X|");
    if (K.is_zero()) throw DomainError("quotient modulus must be nonzero");
    if (!is_prime_ideal(P)) throw DomainError("P must be a prime ideal");
    if (!divides(P.generator(), K.generator())) throw DomainError("P must divide K");

    size_t start = 0;
    if (first_index) {
        if (*first_index >= X.size()) throw DomainError("first element index out of range");
        start = *first_index;
    } else {
        for (size_t i = 0; i < X.size(); ++i)
            if (X[i].is_zero()) {
                start = i;
                break;
            }
    }

    std::vector<bool> used(X.size(), false);
    std::vector<uint64_t> acc(X.size(), 0);  // sum of valuations against chosen terms
    GreedyResult out;
    out.ordering.ring = X[0].ring();
    out.psequence.prime = P;
    if (length == 0) return out;

    used[start] = true;
    out.ordering.terms.push_back(X[start]);
    out.psequence.exponents.push_back(0);

    for (size_t k = 1; k < length; ++k) {
        const BaseElement& last = out.ordering.terms.back();
        size_t best = X.size();
        for (size_t i = 0; i < X.size(); ++i) {
            if (used[i]) continue;
            BaseElement diff = X[i] - last;
            if (diff.is_zero()) throw DomainError("X contains repeated elements");
            acc[i] += valuation(diff, P);
            if (best == X.size() || acc[i] < acc[best]) best = i;
        }
        used[best] = true;
        out.ordering.terms.push_back(X[best]);
        out.psequence.exponents.push_back(acc[best]);
    }
    return out;
}

IdealGen prime_power_in_quotient(const IdealGen& P, std::optional<uint64_t> e, const IdealGen& K) {
    if (!e) return ideal_in_quotient(IdealGen(BaseElement::zero(P.ring())), K);
    uint64_t cap = valuation(K.generator(), P);  // powers of P stabilize in R beyond this
    uint64_t exp = std::min(*e, cap);
    BaseElement pw = BaseElement::one(P.ring());
    for (uint64_t i = 0; i < exp; ++i) pw = pw * P.generator();
    return ideal_in_quotient(IdealGen(pw), K);
}

std::vector<IdealGen> factorial_ideal_via_greedy(const std::vector<BaseElement>& X,
                                                 const IdealGen& K) {
    if (K.is_zero() || K.is_unit())
        throw DomainError("factorial ideals need a nonzero non-unit modulus");
    auto primes = factorize(K);
    std::vector<PSequence> seqs;
    seqs.reserve(primes.size());
    for (const auto& [P, e] : primes)
        seqs.push_back(greedy_p_ordering(X, P, K, X.size()).psequence);

    std::vector<IdealGen> out;
    out.reserve(X.size() + 1);
    for (size_t k = 0; k <= X.size(); ++k) {
        BaseElement gen = BaseElement::one(K.ring());
        bool zero = k >= X.size();
        for (size_t l = 0; l < primes.size() && !zero; ++l) {
            const auto& exp = seqs[l].exponents[k];
            if (!exp) {
                zero = true;
                break;
            }
            uint64_t cap = primes[l].second;
            uint64_t e = std::min<uint64_t>(*exp, cap);
            for (uint64_t i = 0; i < e; ++i) gen = gen * primes[l].first.generator();
        }
        if (zero)
            out.push_back(ideal_in_quotient(IdealGen(BaseElement::zero(K.ring())), K));
        else
            out.push_back(ideal_in_quotient(IdealGen(gen), K));
    }
    return out;
}

std::vector<BaseElement> crt_mixed_ordering(const std::vector<BaseElement>& X, const IdealGen& K) {
    if (K.is_zero() || K.is_unit())
        throw DomainError("mixed ordering needs a nonzero non-unit modulus");
    auto primes = factorize(K);
    std::vector<std::vector<BaseElement>> per_prime;
    std::vector<IdealGen> prime_powers;
    for (const auto& [P, e] : primes) {
        per_prime.push_back(greedy_p_ordering(X, P, K, X.size()).ordering.terms);
        BaseElement pw = BaseElement::one(K.ring());
        for (uint32_t i = 0; i < e; ++i) pw = pw * P.generator();
        prime_powers.emplace_back(pw);
    }
    std::vector<BaseElement> out;
    out.reserve(X.size());
    for (size_t j = 0; j < X.size(); ++j) {
        std::vector<BaseElement> residues;
        residues.reserve(primes.size());
        for (size_t l = 0; l < primes.size(); ++l)
            residues.push_back(mod(per_prime[l][j], prime_powers[l].generator()));
        out.push_back(crt_combine(residues, prime_powers));
    }
    return out;
}

std::vector<IdealGen> factorial_ideals_from_nodes(const std::vector<BaseElement>& nodes,
                                                  const IdealGen& K) {
    std::vector<IdealGen> out;
    out.reserve(nodes.size() + 1);
    for (size_t k = 0; k < nodes.size(); ++k) {
        BaseElement prod = BaseElement::one(K.ring());
        for (size_t j = 0; j < k; ++j) prod = prod * (nodes[k] - nodes[j]);
        out.push_back(ideal_in_quotient(IdealGen(prod), K));
    }
    out.push_back(ideal_in_quotient(IdealGen(BaseElement::zero(K.ring())), K));
    return out;
}

}  // namespace polyfunc
