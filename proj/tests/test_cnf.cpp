#include "doctest.h"

#include <algorithm>
#include <random>

#include "splitlab/cnf.hpp"

using namespace splitlab;

TEST_SUITE_BEGIN("cnf");

TEST_CASE("literal ordering: variable ascending, negative before positive") {
    CHECK(lit(-1) < lit(1));
    CHECK(lit(1) < lit(-2));
    CHECK(lit(-2) < lit(2));
    CHECK(to_dimacs(lit(-7)) == -7);
    CHECK(to_dimacs(negated(lit(7))) == -7);
    CHECK(negated(negated(lit(3))) == lit(3));
}

TEST_CASE("clause canonicalization sorts and deduplicates literals") {
    Clause c = Clause::of({3, -1, 3, 2});
    REQUIRE(c.size() == 3);
    CHECK(c.literals()[0] == lit(-1));
    CHECK(c.literals()[1] == lit(2));
    CHECK(c.literals()[2] == lit(3));
    CHECK(c == Clause::of({-1, 2, 3}));
    CHECK(Clause::of({1, -1}) == Clause::of({-1, 1, 1}));
}

TEST_CASE("clause queries") {
    Clause c = Clause::of({-1, 2, 4});
    CHECK(c.contains(lit(-1)));
    CHECK_FALSE(c.contains(lit(1)));
    CHECK(c.mentions(4));
    CHECK_FALSE(c.mentions(3));
    CHECK(c.without(2) == Clause::of({-1, 4}));
    CHECK(c.without(5) == c);
    CHECK(Clause::of({2}).subset_of(c));
    CHECK(Clause::of({-1, 4}).subset_of(c));
    CHECK_FALSE(Clause::of({1}).subset_of(c));
    CHECK_FALSE(c.subset_of(Clause::of({-1, 2})));
    CHECK(Clause{}.subset_of(c));
    CHECK(Clause{}.empty());
}

TEST_CASE("tautology detection") {
    CHECK(is_tautological(Clause::of({1, -1})));
    CHECK(is_tautological(Clause::of({2, 5, -5})));
    CHECK_FALSE(is_tautological(Clause::of({1, 2, 3})));
    CHECK_FALSE(is_tautological(Clause{}));
}

TEST_CASE("disjunction of two clauses") {
    // orthogonal pair drops out
    CHECK(disjoin(Clause::of({1, 2}), Clause::of({-2, 3})) == std::nullopt);
    // plain merge
    auto d = disjoin(Clause::of({1, 2}), Clause::of({2, 3}));
    REQUIRE(d.has_value());
    CHECK(*d == Clause::of({1, 2, 3}));
    // keep-variant leaves the tautology in place
    CHECK(disjoin_keep(Clause::of({1, 2}), Clause::of({-2, 3})) == Clause::of({1, 2, -2, 3}));
    CHECK(is_tautological(disjoin_keep(Clause::of({1}), Clause::of({-1}))));
}

TEST_CASE("stats on a hand-checkable formula") {
    Formula f;
    f.num_vars = 3;
    f.clauses = {Clause::of({1, 2}), Clause::of({-1, 3}), Clause::of({2, 3})};
    FormulaStats st = compute_stats(f);
    CHECK(st.m == 3);
    CHECK(st.n_active == 3);
    CHECK(st.total_literals == 6);
    CHECK(st.k_mean == doctest::Approx(2.0));
    CHECK(st.p_mean == doctest::Approx(2.0));
    CHECK(st.x == doctest::Approx(2.0 / 3.0));
    CHECK_FALSE(st.vacuous);
    CHECK(st.appearances.at(1).pos == 1);
    CHECK(st.appearances.at(1).neg == 1);
    CHECK(st.appearances.at(2).pos == 2);
    CHECK(st.appearances.at(2).neg == 0);
}

TEST_CASE("stats on the empty formula are vacuous, not NaN") {
    Formula f;
    f.num_vars = 5;
    FormulaStats st = compute_stats(f);
    CHECK(st.vacuous);
    CHECK(st.m == 0);
    CHECK(st.n_active == 0);
    CHECK(st.k_mean == 0.0);
    CHECK(st.x == 0.0);
}

TEST_CASE("duplicate removal keeps first occurrences in order") {
    Formula f;
    f.num_vars = 4;
    f.clauses = {Clause::of({1, 2}), Clause::of({3}), Clause::of({2, 1}), Clause::of({3}),
                 Clause::of({4})};
    Formula g = remove_duplicates(f);
    REQUIRE(g.m() == 3);
    CHECK(g.clauses[0] == Clause::of({1, 2}));
    CHECK(g.clauses[1] == Clause::of({3}));
    CHECK(g.clauses[2] == Clause::of({4}));
}

TEST_CASE("subsumption removes containing clauses") {
    Formula f;
    f.num_vars = 4;
    f.clauses = {Clause::of({1, 2, 3}), Clause::of({1, 2}), Clause::of({2}),
                 Clause::of({-1, 4}), Clause::of({-1, 4})};
    Formula g = remove_subsumed(f);
    // {2} kills {1,2} and {1,2,3}; the duplicate {-1,4} collapses to one copy
    REQUIRE(g.m() == 2);
    CHECK(g.clauses[0] == Clause::of({2}));
    CHECK(g.clauses[1] == Clause::of({-1, 4}));
}

TEST_CASE("empty clause subsumes everything") {
    Formula f;
    f.num_vars = 2;
    f.clauses = {Clause::of({1, 2}), Clause{}, Clause::of({-2})};
    Formula g = remove_subsumed(f);
    REQUIRE(g.m() == 1);
    CHECK(g.clauses[0].empty());
}

TEST_CASE("subsumption survivors are antichain + duplicate-free (randomized)") {
    std::mt19937_64 rng(12345);
    for (int round = 0; round < 50; ++round) {
        std::vector<Clause> cs;
        std::uniform_int_distribution<int> len(0, 4), var(1, 5), coin(0, 1);
        const int m = 12;
        for (int i = 0; i < m; ++i) {
            std::vector<Literal> ls;
            const int L = len(rng);
            for (int j = 0; j < L; ++j) ls.push_back({var(rng), coin(rng) == 1});
            cs.emplace_back(std::move(ls));
        }
        std::vector<std::size_t> keep = subsumption_survivors(cs);

        // pairwise: no survivor contains another, no duplicates
        for (std::size_t a : keep)
            for (std::size_t b : keep) {
                if (a == b) continue;
                CHECK_FALSE(cs[a].subset_of(cs[b]));
            }
        // every removed clause has a surviving witness inside it
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (std::find(keep.begin(), keep.end(), i) != keep.end()) continue;
            bool witnessed = false;
            for (std::size_t a : keep)
                if (cs[a].subset_of(cs[i])) { witnessed = true; break; }
            CHECK(witnessed);
        }
    }
}

TEST_SUITE_END();
