#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitlab/cnf.hpp"

namespace splitlab {

// Parameters for the symmetric homogeneous ensemble: every clause holds
// exactly `clause_len` distinct variables, every variable appears
// floor(mk/n) or ceil(mk/n) times, split as evenly as possible between
// polarities.
struct GenSpec {
    int num_vars = 0;
    int num_clauses = 0;
    int clause_len = 3;
    std::uint64_t seed = 0;
    int max_retries = 20;
};

struct GenError : std::runtime_error {
    int retries;

    GenError(int retries_, const std::string& what)
        : std::runtime_error(what), retries(retries_) {}
};

// Throws std::invalid_argument on hard violations (k < 2, k > n, negative
// counts); returns human-readable warnings for soft ones (m*k < n leaves
// variables without a slot).
std::vector<std::string> validate(const GenSpec& spec);

// Deterministic for a fixed spec (including the seed). The randomness source
// is std::mt19937_64 driven through rejection-sampled bounded draws and a
// Fisher-Yates shuffle, so output is identical across platforms.
Formula generate(const GenSpec& spec);

// Exact per-variable (positive, negative) occurrence counts.
std::map<int, VarCounts> appearance_profile(const Formula& f);

}  // namespace splitlab
