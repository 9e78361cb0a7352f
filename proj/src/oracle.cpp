#include "polyfunc/oracle.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace polyfunc {

namespace {

// Index arithmetic of D/J over the canonical residue list: the sweep runs on
// small integers instead of BaseElement values.
struct QuotientTables {
    size_t size = 0;
    std::vector<BaseElement> residues;
    std::vector<uint32_t> add;
    std::vector<uint32_t> mul;

    uint32_t add_at(uint32_t a, uint32_t b) const { return add[a * size + b]; }
    uint32_t mul_at(uint32_t a, uint32_t b) const { return mul[a * size + b]; }
};

QuotientTables build_quotient_tables(const IdealGen& J) {
    BigInt n = J.norm();
    if (n > 512) throw BudgetError("quotient too large for the exhaustive oracle");
    QuotientTables qt;
    qt.size = n.convert_to<size_t>();
    qt.residues = residues_mod(J);
    qt.add.resize(qt.size * qt.size);
    qt.mul.resize(qt.size * qt.size);
    for (size_t a = 0; a < qt.size; ++a)
        for (size_t b = 0; b < qt.size; ++b) {
            qt.add[a * qt.size + b] =
                (uint32_t)element_index(mod(qt.residues[a] + qt.residues[b], J.generator()))
                    .convert_to<uint32_t>();
            qt.mul[a * qt.size + b] =
                (uint32_t)element_index(mod(qt.residues[a] * qt.residues[b], J.generator()))
                    .convert_to<uint32_t>();
        }
    return qt;
}

uint32_t residue_index_mod(const BaseElement& x, const IdealGen& J) {
    return element_index(mod(x, J.generator())).convert_to<uint32_t>();
}

// Multi-indices of the mu-box in lex order.
std::vector<std::vector<uint64_t>> box_indices(const std::vector<uint64_t>& mus) {
    std::vector<std::vector<uint64_t>> out;
    std::vector<uint64_t> k(mus.size(), 0);
    while (true) {
        out.push_back(k);
        size_t i = k.size();
        bool carry = true;
        while (i-- > 0) {
            if (++k[i] < mus[i]) {
                carry = false;
                break;
            }
            k[i] = 0;
        }
        if (carry) break;
    }
    return out;
}

std::vector<uint64_t> spec_mus(const ProblemSpec& spec) {
    std::vector<uint64_t> mus;
    for (const auto& I : spec.sources()) mus.push_back(mu_bound(I, spec.target()));
    return mus;
}

}  // namespace

BigInt sweep_cost(const ProblemSpec& spec) {
    std::vector<uint64_t> mus = spec_mus(spec);
    BigInt box = 1;
    for (uint64_t m : mus) box *= m;
    BigInt candidates = boost::multiprecision::pow(spec.target().norm(), box.convert_to<unsigned>());
    return candidates * spec.grid_size();
}

TableSet::TableSet(ProblemSpec spec, std::vector<std::vector<uint32_t>> tables,
                   std::vector<BaseElement> target_residues)
    : spec_(std::move(spec)), tables_(std::move(tables)),
      target_residues_(std::move(target_residues)) {}

std::vector<uint32_t> TableSet::encode(const FunctionTable& table) const {
    if (!(table.spec() == spec_)) throw DomainError("table belongs to a different spec");
    std::vector<uint32_t> out;
    out.reserve(table.values().size());
    for (const auto& v : table.values()) out.push_back(residue_index_mod(v, spec_.target()));
    return out;
}

bool TableSet::contains(const FunctionTable& table) const {
    return std::binary_search(tables_.begin(), tables_.end(), encode(table));
}

FunctionTable TableSet::table_at(size_t i) const {
    std::vector<BaseElement> values;
    values.reserve(tables_[i].size());
    for (uint32_t idx : tables_[i]) values.push_back(target_residues_[idx]);
    return FunctionTable(spec_, std::move(values));
}

TableSet brute_force_tables(const ProblemSpec& spec, uint64_t budget) {
    BigInt cost = sweep_cost(spec);
    if (cost > budget) throw BudgetError("sweep of " + cost.str() + " evaluations exceeds budget " +
                                         std::to_string(budget));

    QuotientTables qt = build_quotient_tables(spec.target());
    std::vector<uint64_t> mus = spec_mus(spec);
    auto box = box_indices(mus);
    std::vector<size_t> dims = spec.grid_dims();
    size_t grid = spec.grid_size();

    // mono[g * box + b]: value index of x^k_b at grid point g.
    std::vector<std::vector<BaseElement>> residues;
    for (const auto& I : spec.sources()) residues.push_back(residues_mod(I));
    std::vector<uint32_t> mono(grid * box.size());
    {
        std::vector<size_t> idx(dims.size(), 0);
        size_t g = 0;
        do {
            // power tables per variable at this grid point
            std::vector<std::vector<uint32_t>> pw(dims.size());
            for (size_t i = 0; i < dims.size(); ++i) {
                uint32_t xi = residue_index_mod(residues[i][idx[i]], spec.target());
                pw[i].push_back(residue_index_mod(BaseElement::one(spec.ring()), spec.target()));
                for (uint64_t e = 1; e < mus[i]; ++e)
                    pw[i].push_back(qt.mul_at(pw[i].back(), xi));
            }
            for (size_t b = 0; b < box.size(); ++b) {
                uint32_t v = pw[0][box[b][0]];
                for (size_t i = 1; i < dims.size(); ++i) v = qt.mul_at(v, pw[i][box[b][i]]);
                mono[g * box.size() + b] = v;
            }
            ++g;
            size_t i = idx.size();
            bool done = true;
            while (i-- > 0) {
                if (++idx[i] < dims[i]) {
                    done = false;
                    break;
                }
                idx[i] = 0;
            }
            if (done) break;
        } while (true);
    }

    uint32_t bits = 1;
    while ((size_t(1) << bits) < qt.size) ++bits;
    std::vector<std::vector<uint32_t>> tables;
    std::vector<uint32_t> coeff(box.size(), 0);
    const size_t nbox = box.size();
    const uint32_t* monoptr = mono.data();
    const uint32_t* addt = qt.add.data();
    const uint32_t* mult = qt.mul.data();
    const size_t M = qt.size;
    if (grid * bits <= 64) {
        // Grids pack into one word: dedupe on packed keys.
        std::unordered_set<uint64_t> keyset;
        while (true) {
            uint64_t key = 0;
            const uint32_t* row = monoptr;
            for (size_t g = 0; g < grid; ++g) {
                uint32_t acc = 0;
                for (size_t b = 0; b < nbox; ++b)
                    acc = addt[acc * M + mult[coeff[b] * M + row[b]]];
                key = (key << bits) | acc;
                row += nbox;
            }
            keyset.insert(key);
            size_t b = nbox;
            bool done = true;
            while (b-- > 0) {
                if (++coeff[b] < M) {
                    done = false;
                    break;
                }
                coeff[b] = 0;
            }
            if (done) break;
        }
        std::vector<uint64_t> keys(keyset.begin(), keyset.end());
        std::sort(keys.begin(), keys.end());
        uint64_t mask = (bits == 64) ? ~uint64_t(0) : ((uint64_t(1) << bits) - 1);
        for (uint64_t key : keys) {
            std::vector<uint32_t> t(grid);
            for (size_t g = 0; g < grid; ++g)
                t[g] = (uint32_t)((key >> ((grid - 1 - g) * bits)) & mask);
            tables.push_back(std::move(t));
        }
    } else {
        std::set<std::vector<uint32_t>> seen;
        std::vector<uint32_t> table(grid);
        while (true) {
            for (size_t g = 0; g < grid; ++g) {
                uint32_t acc = 0;
                for (size_t b = 0; b < nbox; ++b)
                    acc = addt[acc * M + mult[coeff[b] * M + monoptr[g * nbox + b]]];
                table[g] = acc;
            }
            seen.insert(table);
            size_t b = nbox;
            bool done = true;
            while (b-- > 0) {
                if (++coeff[b] < M) {
                    done = false;
                    break;
                }
                coeff[b] = 0;
            }
            if (done) break;
        }
        tables.assign(seen.begin(), seen.end());
    }
    return TableSet(spec, std::move(tables), residues_mod(spec.target()));
}

BigInt brute_force_count(const ProblemSpec& spec, uint64_t budget) {
    return BigInt(brute_force_tables(spec, budget).size());
}

BigInt brute_force_count_by_canonical(const ProblemSpec& spec, uint64_t budget) {
    BigInt cost = sweep_cost(spec);
    if (cost > budget) throw BudgetError("sweep of " + cost.str() + " evaluations exceeds budget " +
                                         std::to_string(budget));
    std::vector<uint64_t> mus = spec_mus(spec);
    auto box = box_indices(mus);
    std::vector<BaseElement> jres = residues_mod(spec.target());
    std::set<std::string> seen;
    std::vector<uint32_t> coeff(box.size(), 0);
    while (true) {
        MVPoly f(spec.ring(), spec.arity());
        for (size_t b = 0; b < box.size(); ++b)
            if (coeff[b]) f.add_term(MultiIndex{box[b]}, jres[coeff[b]]);
        seen.insert(canonicalize(f, spec).key());
        size_t b = box.size();
        bool done = true;
        while (b-- > 0) {
            if (++coeff[b] < jres.size()) {
                done = false;
                break;
            }
            coeff[b] = 0;
        }
        if (done) break;
    }
    return BigInt(seen.size());
}

bool is_realizable(const FunctionTable& table, uint64_t budget) {
    return brute_force_tables(table.spec(), budget).contains(table);
}

OrderingCheckReport ordering_cross_check(const IdealGen& K, uint64_t budget) {
    if (K.is_zero() || K.is_unit())
        throw DomainError("ordering check requires a nonzero non-unit modulus");
    BigInt n = K.norm();
    auto primes = factorize(K);
    BigInt cost = n * n * n * (BigInt)primes.size();
    if (cost > budget) throw BudgetError("ordering check of " + cost.str() +
                                         " steps exceeds budget " + std::to_string(budget));
    std::vector<BaseElement> X = residues_mod(K);
    OrderingCheckReport report;
    report.modulus = K;
    for (const auto& [P, e] : primes) {
        PSequence reference = p_sequence_of(X, P);  // X is the simultaneous prefix
        bool agree = true;
        for (size_t first = 0; first < X.size(); ++first) {
            GreedyResult g = greedy_p_ordering(X, P, K, X.size(), first);
            if (!(g.psequence == reference)) {
                agree = false;
                break;
            }
        }
        report.entries.push_back({P, X.size(), agree});
        report.all_agree = report.all_agree && agree;
    }
    return report;
}

}  // namespace polyfunc
