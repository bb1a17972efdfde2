#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace splitlab {

// A literal over a 1-based variable index. Ordering is (variable, polarity)
// with the negative literal first, which is also the canonical order inside
// a clause.
struct Literal {
    int var = 1;
    bool positive = true;

    friend constexpr auto operator<=>(const Literal&, const Literal&) = default;
};

// Builds a literal from a signed DIMACS integer (-3 means "not a_3").
constexpr Literal lit(int dimacs) {
    return dimacs < 0 ? Literal{-dimacs, false} : Literal{dimacs, true};
}

constexpr int to_dimacs(Literal l) { return l.positive ? l.var : -l.var; }

constexpr Literal negated(Literal l) { return {l.var, !l.positive}; }

// A clause as a canonically ordered literal set. Exact duplicate literals are
// merged on construction. A clause may contain both polarities of a variable
// (it is then tautological); the empty clause denotes FALSE.
class Clause {
  public:
    Clause() = default;
    explicit Clause(std::vector<Literal> lits);

    // Convenience constructor from signed DIMACS integers.
    static Clause of(std::initializer_list<int> dimacs_lits);

    const std::vector<Literal>& literals() const { return lits_; }
    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }
    bool contains(Literal l) const;
    bool mentions(int var) const;
    // True iff every literal of this clause occurs in `other`.
    bool subset_of(const Clause& other) const;
    // Copy with every literal of variable `var` removed.
    Clause without(int var) const;

    friend bool operator==(const Clause&, const Clause&) = default;
    friend auto operator<=>(const Clause&, const Clause&) = default;

  private:
    std::vector<Literal> lits_;
};

// True iff some variable occurs in both polarities.
bool is_tautological(const Clause& c);

// Literal-set union; nullopt iff the union is tautological.
std::optional<Clause> disjoin(const Clause& y, const Clause& z);

// Literal-set union kept even when tautological.
Clause disjoin_keep(const Clause& y, const Clause& z);

// A CNF formula: clause sequence plus the declared variable count.
// The empty formula (m=0) means TRUE; a formula containing an empty
// clause means FALSE.
struct Formula {
    std::vector<Clause> clauses;
    int num_vars = 0;

    std::size_t m() const { return clauses.size(); }

    friend bool operator==(const Formula&, const Formula&) = default;
};

struct VarCounts {
    long long pos = 0;
    long long neg = 0;

    long long total() const { return pos + neg; }
    friend bool operator==(const VarCounts&, const VarCounts&) = default;
};

struct FormulaStats {
    std::size_t m = 0;
    int n_active = 0;                      // variables actually occurring
    double k_mean = 0.0;                   // literals per clause
    double p_mean = 0.0;                   // appearances per active variable
    double x = 0.0;                        // filling factor p_mean / m
    long long total_literals = 0;
    long long max_symmetry_imbalance = 0;  // max over vars of |pos - neg|
    bool vacuous = false;                  // m = 0: k_mean, p_mean, x undefined
    std::map<int, VarCounts> appearances;
};

// Counts literals and appearances; total_literals is counted both per clause
// and per variable and the two sums are checked against each other.
FormulaStats compute_stats(const Formula& f);

// Index-keeping cores of the reductions: which clause positions survive.
// Both keep the first occurrence among equals and preserve order.
std::vector<std::size_t> duplicate_survivors(std::span<const Clause> clauses);
std::vector<std::size_t> subsumption_survivors(std::span<const Clause> clauses);

// Keeps the first occurrence of each distinct clause.
Formula remove_duplicates(const Formula& f);

// Removes every clause that contains another clause of the formula as a
// literal subset (duplicates count: the first occurrence is kept). The
// result is an antichain under set inclusion.
Formula remove_subsumed(const Formula& f);

}  // namespace splitlab
