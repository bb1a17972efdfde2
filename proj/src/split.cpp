#include "splitlab/split.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>

namespace splitlab {

Partition partition(const Formula& f, int var) {
    Partition p;
    const Literal pos{var, true};
    const Literal neg{var, false};
    for (const Clause& cl : f.clauses) {
        const bool has_pos = cl.contains(pos);
        const bool has_neg = cl.contains(neg);
        if (has_pos && has_neg) {
            ++p.satisfied;  // true in both branches of the split
        } else if (has_pos) {
            p.y_block.push_back(cl.without(var));
        } else if (has_neg) {
            p.z_block.push_back(cl.without(var));
        } else {
            p.rest.push_back(cl);
        }
    }
    return p;
}

namespace {

// Duplicate filter over an incrementally built clause set.
class SeenSet {
  public:
    // Returns true when the clause was not present before.
    bool insert(const Clause& cl) { return seen_.insert(&cl).second; }

  private:
    struct Less {
        bool operator()(const Clause* a, const Clause* b) const { return *a < *b; }
    };
    std::set<const Clause*, Less> seen_;
};

std::vector<Clause> apply_subsumption(std::vector<Clause> clauses) {
    std::vector<std::size_t> keep = subsumption_survivors(clauses);
    std::vector<Clause> out;
    out.reserve(keep.size());
    for (std::size_t i : keep) out.push_back(std::move(clauses[i]));
    return out;
}

}  // namespace

EliminationDetail eliminate_detailed(const Formula& f, int var, const ReductionConfig& raw) {
    const ReductionConfig cfg = raw.normalized();
    Partition part = partition(f, var);

    EliminationDetail d;
    d.r = part.r();
    d.s = part.s();
    d.m_rest = part.m_rest();

    std::vector<Clause> work = std::move(part.rest);

    // An empty y or z block means one branch of the split is already
    // satisfied and the bracket contributes nothing.
    if (!part.y_block.empty() && !part.z_block.empty()) {
        work.reserve(work.size() + part.y_block.size() * part.z_block.size());
        SeenSet seen;
        if (cfg.drop_duplicates)
            for (const Clause& cl : work) seen.insert(cl);

        for (const Clause& y : part.y_block) {
            for (const Clause& z : part.z_block) {
                if (cfg.drop_tautologies) {
                    std::optional<Clause> merged = disjoin(y, z);
                    if (!merged) continue;
                    ++d.generated;
                    if (cfg.drop_duplicates) {
                        std::size_t at = work.size();
                        work.push_back(std::move(*merged));
                        if (!seen.insert(work[at])) work.pop_back();
                    } else {
                        work.push_back(std::move(*merged));
                    }
                } else {
                    ++d.generated;
                    Clause merged = disjoin_keep(y, z);
                    if (cfg.drop_duplicates) {
                        std::size_t at = work.size();
                        work.push_back(std::move(merged));
                        if (!seen.insert(work[at])) work.pop_back();
                    } else {
                        work.push_back(std::move(merged));
                    }
                }
                // The budget guards the materialized working set, so a
                // runaway cross product aborts mid-flight instead of
                // exhausting memory first.
                if (static_cast<long long>(work.size()) > cfg.clause_budget)
                    throw BudgetError(static_cast<long long>(work.size()));
            }
        }
    }

    if (cfg.drop_subsumed) work = apply_subsumption(std::move(work));
    if (static_cast<long long>(work.size()) > cfg.clause_budget)
        throw BudgetError(static_cast<long long>(work.size()));

    d.kept = static_cast<long long>(work.size()) - static_cast<long long>(d.m_rest);
    if (d.kept < 0) d.kept = 0;  // subsumption may remove rest clauses too

    d.result.num_vars = f.num_vars;
    d.result.clauses = std::move(work);
    return d;
}

Formula eliminate(const Formula& f, int var, const ReductionConfig& cfg) {
    return eliminate_detailed(f, var, cfg).result;
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Sat: return "SAT";
        case VerdictKind::Unsat: return "UNSAT";
        case VerdictKind::BudgetExceeded: return "BUDGET";
    }
    return "?";
}

namespace {

bool has_empty_clause(const Formula& f) {
    return std::any_of(f.clauses.begin(), f.clauses.end(),
                       [](const Clause& c) { return c.empty(); });
}

// Order in which decide() attempts the remaining variables. Recomputed after
// every elimination because the occurrence profile shifts under reductions.
std::vector<int> elimination_order(const Formula& f, OrderPolicy policy) {
    std::map<int, VarCounts> prof;
    for (const Clause& cl : f.clauses)
        for (Literal l : cl.literals())
            (l.positive ? prof[l.var].pos : prof[l.var].neg)++;

    std::vector<int> vars;
    vars.reserve(prof.size());
    for (const auto& [v, _] : prof) vars.push_back(v);

    switch (policy) {
        case OrderPolicy::FixedIndex:
            break;  // map iteration is already ascending
        case OrderPolicy::MaxAppearance:
            std::stable_sort(vars.begin(), vars.end(), [&](int a, int b) {
                return prof[a].total() > prof[b].total();
            });
            break;
        case OrderPolicy::MinProductRS:
            std::stable_sort(vars.begin(), vars.end(), [&](int a, int b) {
                return prof[a].pos * prof[a].neg < prof[b].pos * prof[b].neg;
            });
            break;
    }
    return vars;
}

}  // namespace

DecideResult decide(const Formula& f, const ReductionConfig& raw) {
    const ReductionConfig cfg = raw.normalized();
    DecideResult res;

    Formula cur = f;
    if (cfg.drop_duplicates) cur = remove_duplicates(cur);
    if (cfg.drop_subsumed) cur = remove_subsumed(cur);

    int step = 0;
    while (true) {
        if (cur.clauses.empty()) {
            res.verdict = {VerdictKind::Sat, step, 0};
            return res;
        }
        if (has_empty_clause(cur)) {
            res.verdict = {VerdictKind::Unsat, step, 0};
            return res;
        }

        std::vector<int> order = elimination_order(cur, cfg.order);
        if (order.empty()) {  // only possible via empty clauses, handled above
            res.verdict = {VerdictKind::Sat, step, 0};
            return res;
        }
        const int var = order.front();

        EliminationDetail d;
        try {
            d = eliminate_detailed(cur, var, cfg);
        } catch (const BudgetError& e) {
            res.verdict = {VerdictKind::BudgetExceeded, step + 1, e.clause_count};
            return res;
        }
        cur = std::move(d.result);
        ++step;

        FormulaStats st = compute_stats(cur);
        TracePoint tp;
        tp.step = step;
        tp.variable = var;
        tp.vars_active = st.n_active;
        tp.clause_count = st.m;
        tp.r = d.r;
        tp.s = d.s;
        tp.generated = d.generated;
        tp.kept = d.kept;
        tp.k_mean = st.k_mean;
        tp.p_mean = st.p_mean;
        tp.x = st.x;
        tp.step_cost = static_cast<double>(st.m) * static_cast<double>(st.m) * st.n_active;
        res.trace.push_back(tp);
    }
}

Verdict brute_force(const Formula& f) {
    std::vector<int> vars;
    {
        std::set<int> vs;
        for (const Clause& cl : f.clauses)
            for (Literal l : cl.literals()) vs.insert(l.var);
        vars.assign(vs.begin(), vs.end());
    }
    if (vars.size() > 24)
        throw std::invalid_argument("brute_force: refusing " + std::to_string(vars.size()) +
                                    " active variables (max 24)");
    if (has_empty_clause(f)) return {VerdictKind::Unsat, 0, 0};

    std::map<int, std::size_t> slot;
    for (std::size_t i = 0; i < vars.size(); ++i) slot[vars[i]] = i;

    const std::uint64_t total = std::uint64_t{1} << vars.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool all = true;
        for (const Clause& cl : f.clauses) {
            bool sat = false;
            for (Literal l : cl.literals()) {
                const bool val = (mask >> slot[l.var]) & 1;
                if (val == l.positive) { sat = true; break; }
            }
            if (!sat) { all = false; break; }
        }
        if (all) return {VerdictKind::Sat, 0, 0};
    }
    return {VerdictKind::Unsat, 0, 0};
}

}  // namespace splitlab
