#include "splitlab/cnf.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace splitlab {

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause Clause::of(std::initializer_list<int> dimacs_lits) {
    std::vector<Literal> ls;
    ls.reserve(dimacs_lits.size());
    for (int d : dimacs_lits) ls.push_back(lit(d));
    return Clause(std::move(ls));
}

bool Clause::contains(Literal l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::mentions(int var) const {
    return contains({var, false}) || contains({var, true});
}

bool Clause::subset_of(const Clause& other) const {
    if (size() > other.size()) return false;
    auto it = other.lits_.begin();
    for (Literal l : lits_) {
        it = std::lower_bound(it, other.lits_.end(), l);
        if (it == other.lits_.end() || *it != l) return false;
        ++it;
    }
    return true;
}

Clause Clause::without(int var) const {
    Clause out;
    out.lits_.reserve(lits_.size());
    for (Literal l : lits_)
        if (l.var != var) out.lits_.push_back(l);
    return out;
}

bool is_tautological(const Clause& c) {
    const auto& ls = c.literals();
    for (std::size_t i = 1; i < ls.size(); ++i)
        if (ls[i].var == ls[i - 1].var) return true;  // adjacent after sort
    return false;
}

Clause disjoin_keep(const Clause& y, const Clause& z) {
    std::vector<Literal> merged;
    merged.reserve(y.size() + z.size());
    std::merge(y.literals().begin(), y.literals().end(), z.literals().begin(),
               z.literals().end(), std::back_inserter(merged));
    return Clause(std::move(merged));
}

std::optional<Clause> disjoin(const Clause& y, const Clause& z) {
    Clause u = disjoin_keep(y, z);
    if (is_tautological(u)) return std::nullopt;
    return u;
}

FormulaStats compute_stats(const Formula& f) {
    FormulaStats st;
    st.m = f.m();
    for (const Clause& c : f.clauses) {
        st.total_literals += static_cast<long long>(c.size());
        for (Literal l : c.literals()) {
            auto& vc = st.appearances[l.var];
            (l.positive ? vc.pos : vc.neg) += 1;
        }
    }
    long long by_var = 0;
    for (const auto& [var, vc] : st.appearances) {
        by_var += vc.total();
        st.max_symmetry_imbalance =
            std::max(st.max_symmetry_imbalance, std::llabs(vc.pos - vc.neg));
    }
    assert(by_var == st.total_literals);  // conservation of literals
    st.n_active = static_cast<int>(st.appearances.size());
    if (st.m == 0) {
        st.vacuous = true;
        return st;
    }
    st.k_mean = static_cast<double>(st.total_literals) / static_cast<double>(st.m);
    if (st.n_active > 0)
        st.p_mean = static_cast<double>(st.total_literals) / st.n_active;
    st.x = st.p_mean / static_cast<double>(st.m);
    return st;
}

std::vector<std::size_t> duplicate_survivors(std::span<const Clause> clauses) {
    std::vector<std::size_t> keep;
    std::vector<const Clause*> seen;
    seen.reserve(clauses.size());
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        auto pos = std::lower_bound(seen.begin(), seen.end(), &clauses[i],
                                    [](const Clause* a, const Clause* b) { return *a < *b; });
        if (pos != seen.end() && **pos == clauses[i]) continue;
        seen.insert(pos, &clauses[i]);
        keep.push_back(i);
    }
    return keep;
}

std::vector<std::size_t> subsumption_survivors(std::span<const Clause> clauses) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        bool removed = false;
        for (std::size_t j = 0; j < clauses.size() && !removed; ++j) {
            if (j == i) continue;
            const Clause& a = clauses[j];
            const Clause& b = clauses[i];
            if (a.size() > b.size()) continue;  // early exit on length
            if (!a.subset_of(b)) continue;
            // proper subset always removes b; an equal clause removes the
            // later occurrence only
            removed = (a.size() < b.size()) || (j < i);
        }
        if (!removed) keep.push_back(i);
    }
    return keep;
}

namespace {

Formula select(const Formula& f, const std::vector<std::size_t>& keep) {
    Formula out;
    out.num_vars = f.num_vars;
    out.clauses.reserve(keep.size());
    for (std::size_t i : keep) out.clauses.push_back(f.clauses[i]);
    return out;
}

}  // namespace

Formula remove_duplicates(const Formula& f) {
    return select(f, duplicate_survivors(f.clauses));
}

Formula remove_subsumed(const Formula& f) {
    return select(f, subsumption_survivors(f.clauses));
}

}  // namespace splitlab
