#include "splitlab/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <span>

namespace splitlab {

namespace {

// Unbiased draw from [0, bound) by rejection; avoids the implementation-defined
// std::uniform_int_distribution so that sequences match across platforms.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

template <typename T>
void shuffle(std::vector<T>& xs, std::mt19937_64& rng) {
    for (std::size_t i = xs.size(); i > 1; --i)
        std::swap(xs[i - 1], xs[draw_below(rng, i)]);
}

}  // namespace

std::vector<std::string> validate(const GenSpec& spec) {
    if (spec.num_vars < 1) throw std::invalid_argument("n must be >= 1");
    if (spec.num_clauses < 0) throw std::invalid_argument("m must be >= 0");
    if (spec.clause_len < 2) throw std::invalid_argument("k must be >= 2");
    if (spec.clause_len > spec.num_vars)
        throw std::invalid_argument("k must be <= n (a clause holds k distinct variables)");
    std::vector<std::string> warnings;
    const long long total = 1LL * spec.num_clauses * spec.clause_len;
    if (total < spec.num_vars)
        warnings.push_back("m*k < n: some variables cannot appear in the formula");
    return warnings;
}

Formula generate(const GenSpec& spec) {
    validate(spec);
    const int n = spec.num_vars;
    const int m = spec.num_clauses;
    const int k = spec.clause_len;
    std::mt19937_64 rng(spec.seed);

    Formula out;
    out.num_vars = n;
    if (m == 0) return out;

    // Occurrence targets: floor(mk/n) for everyone, the remainder spread over
    // a shuffled variable order.
    const long long total = 1LL * m * k;
    const long long base = total / n;
    const long long extra = total % n;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    shuffle(order, rng);

    // Slot pool as signed DIMACS literals, polarities balanced per variable.
    std::vector<int> slots;
    slots.reserve(static_cast<std::size_t>(total));
    for (int i = 0; i < n; ++i) {
        const int var = order[i];
        const long long t = base + (i < extra ? 1 : 0);
        long long pos = t / 2, neg = t / 2;
        if (t % 2 != 0) (draw_below(rng, 2) == 0 ? pos : neg) += 1;
        slots.insert(slots.end(), pos, var);
        slots.insert(slots.end(), neg, -var);
    }

    for (int attempt = 0; attempt <= spec.max_retries; ++attempt) {
        shuffle(slots, rng);
        // Deal into clauses of k slots and repair repeated variables by
        // swapping slots with other clauses.
        std::vector<int> deal = slots;
        auto clause_at = [&](int ci) { return std::span<int>(deal).subspan(ci * k, k); };
        bool clean = false;
        for (int pass = 0; pass < 200 && !clean; ++pass) {
            clean = true;
            bool progressed = false;
            for (int ci = 0; ci < m; ++ci) {
                auto cl = clause_at(ci);
                for (int pi = 0; pi < k; ++pi) {
                    bool dup = false;
                    for (int qi = 0; qi < pi; ++qi)
                        if (std::abs(cl[qi]) == std::abs(cl[pi])) dup = true;
                    if (!dup) continue;
                    clean = false;
                    for (int tries = 0; tries < 64; ++tries) {
                        const int cj = static_cast<int>(draw_below(rng, m));
                        if (cj == ci) continue;
                        const int pj = static_cast<int>(draw_below(rng, k));
                        auto other = clause_at(cj);
                        const int va = std::abs(cl[pi]);
                        const int vb = std::abs(other[pj]);
                        if (va == vb) continue;
                        bool va_in_other = false, vb_in_cl = false;
                        for (int s : other)
                            if (std::abs(s) == va) va_in_other = true;
                        for (int qi = 0; qi < k; ++qi)
                            if (qi != pi && std::abs(cl[qi]) == vb) vb_in_cl = true;
                        if (va_in_other || vb_in_cl) continue;
                        std::swap(cl[pi], other[pj]);
                        progressed = true;
                        break;
                    }
                }
            }
            if (!clean && !progressed) break;  // stuck; reshuffle
        }
        if (!clean) continue;
        out.clauses.clear();
        out.clauses.reserve(m);
        for (int ci = 0; ci < m; ++ci) {
            std::vector<Literal> lits;
            lits.reserve(k);
            for (int s : clause_at(ci)) lits.push_back(lit(s));
            out.clauses.push_back(Clause(std::move(lits)));
        }
        return out;
    }
    throw GenError(spec.max_retries,
                   "clause-distinctness repair did not converge after " +
                       std::to_string(spec.max_retries) + " retries");
}

std::map<int, VarCounts> appearance_profile(const Formula& f) {
    std::map<int, VarCounts> counts;
    for (const Clause& c : f.clauses)
        for (Literal l : c.literals()) {
            auto& vc = counts[l.var];
            (l.positive ? vc.pos : vc.neg) += 1;
        }
    return counts;
}

}  // namespace splitlab
