#pragma once

#include "polyfunc/polyfun.hpp"

namespace polyfunc {

/// Default evaluation budget for the exhaustive sweeps.
inline constexpr uint64_t kDefaultBudget = uint64_t(1) << 22;

/// The exact set of realizable value grids of a spec, found by sweeping
/// monomial-basis coefficients over the canonical residues mod J with
/// exponents in the mu-box. Tables are stored as index vectors into
/// residues_mod(J), sorted, so the set is independent of sweep order.
class TableSet {
  public:
    TableSet(ProblemSpec spec, std::vector<std::vector<uint32_t>> tables,
             std::vector<BaseElement> target_residues);

    const ProblemSpec& spec() const { return spec_; }
    size_t size() const { return tables_.size(); }
    bool contains(const FunctionTable& table) const;
    FunctionTable table_at(size_t i) const;
    std::vector<uint32_t> encode(const FunctionTable& table) const;

  private:
    ProblemSpec spec_;
    std::vector<std::vector<uint32_t>> tables_;
    std::vector<BaseElement> target_residues_;
};

/// Exhaustive coefficient sweep. Refuses (BudgetError) when candidate count
/// times grid size exceeds the budget; never truncates silently.
TableSet brute_force_tables(const ProblemSpec& spec, uint64_t budget = kDefaultBudget);

BigInt brute_force_count(const ProblemSpec& spec, uint64_t budget = kDefaultBudget);

/// Same sweep deduplicated by canonical form instead of by table.
BigInt brute_force_count_by_canonical(const ProblemSpec& spec, uint64_t budget = kDefaultBudget);

bool is_realizable(const FunctionTable& table, uint64_t budget = kDefaultBudget);

/// Number of evaluations the sweep for this spec would take.
BigInt sweep_cost(const ProblemSpec& spec);

struct OrderingCheckReport {
    struct Entry {
        IdealGen prime;
        size_t first_choices;  // number of greedy starts compared
        bool agree;
    };
    IdealGen modulus;
    std::vector<Entry> entries;
    bool all_agree = true;
};

/// Recomputes the P-sequence of residues_mod(K) greedily from every possible
/// first element and compares against the simultaneous ordering's sequence,
/// for every prime P | K.
OrderingCheckReport ordering_cross_check(const IdealGen& K, uint64_t budget = kDefaultBudget);

}  // namespace polyfunc
