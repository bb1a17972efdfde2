#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitlab/cnf.hpp"

namespace splitlab {

enum class OrderPolicy {
    FixedIndex,     // a_1, a_2, ... in index order
    MaxAppearance,  // most occurrences first
    MinProductRS,   // smallest r*s product first
};

struct ReductionConfig {
    bool drop_tautologies = true;  // drop tautological disjunctions as they emerge
    bool drop_duplicates = true;   // keep the first occurrence of each clause
    bool drop_subsumed = false;    // remove clauses containing another clause
    long long clause_budget = 1'000'000;
    OrderPolicy order = OrderPolicy::FixedIndex;

    // drop_subsumed implies drop_duplicates (an equal clause is the
    // degenerate contained clause).
    ReductionConfig normalized() const {
        ReductionConfig c = *this;
        if (c.drop_subsumed) c.drop_duplicates = true;
        return c;
    }
};

// The clauses of a formula split around one variable: y_block holds the
// clauses that contained the positive literal (literal removed), z_block the
// negative ones, rest the clauses that never mention it. Clauses carrying the
// variable in both polarities hold in both branches of the split and leave
// the formula; they are only counted.
struct Partition {
    std::vector<Clause> y_block;
    std::vector<Clause> z_block;
    std::vector<Clause> rest;
    std::size_t satisfied = 0;  // clauses tautological in the split variable

    std::size_t r() const { return y_block.size(); }
    std::size_t s() const { return z_block.size(); }
    std::size_t m_rest() const { return rest.size(); }
};

Partition partition(const Formula& f, int var);

struct BudgetError : std::runtime_error {
    long long clause_count;

    explicit BudgetError(long long count)
        : std::runtime_error("clause budget exceeded: " + std::to_string(count)),
          clause_count(count) {}
};

struct EliminationDetail {
    Formula result;
    std::size_t r = 0, s = 0, m_rest = 0;
    long long generated = 0;  // cross-product clauses materialized (tautologies already skipped when configured)
    long long kept = 0;       // cross-product clauses surviving duplicate/subsumption removal
};

// One variable-elimination step: cross-product of the y and z blocks plus the
// untouched rest, reduced per the configuration. If either block is empty the
// bracketed disjunction is TRUE and only the rest survives. Throws
// BudgetError when the working set exceeds cfg.clause_budget.
EliminationDetail eliminate_detailed(const Formula& f, int var, const ReductionConfig& cfg);
Formula eliminate(const Formula& f, int var, const ReductionConfig& cfg);

enum class VerdictKind { Sat, Unsat, BudgetExceeded };

struct Verdict {
    VerdictKind kind = VerdictKind::Sat;
    int step = 0;             // BudgetExceeded: elimination step at abort
    long long clauses = 0;    // BudgetExceeded: clause count at abort

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(VerdictKind k);

struct TracePoint {
    int step = 0;             // 1-based elimination count
    int variable = 0;         // eliminated variable
    int vars_active = 0;      // variables still occurring afterwards
    std::size_t clause_count = 0;
    std::size_t r = 0, s = 0;
    long long generated = 0, kept = 0;
    double k_mean = 0, p_mean = 0, x = 0;
    double step_cost = 0;     // m_j^2 * n_j
};

struct DecideResult {
    Verdict verdict;
    std::vector<TracePoint> trace;
};

// Runs eliminations in the configured order until the formula is empty (SAT),
// contains an empty clause (UNSAT), or trips the clause budget. Variables
// absent from the formula are skipped at no cost.
DecideResult decide(const Formula& f, const ReductionConfig& cfg);

// Exhaustive assignment check, the test oracle. Refuses formulas with more
// than 24 active variables.
Verdict brute_force(const Formula& f);

}  // namespace splitlab
