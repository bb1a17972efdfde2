#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "splitlab/meanfield.hpp"

namespace splitlab {

// Doubling from m0 = n found no hard classification below the guard.
struct NoTransitionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bracket endpoint failed its post-hoc classification check; the message
// carries the offending m0 values.
struct MonotonicityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CriticalPoint {
    int n = 0;
    double k = 0;
    double m_c = 0;  // midpoint of the final easy/hard bracket
    ModelParams params;
};

struct CriticalLine {
    std::vector<CriticalPoint> points;  // ascending in n
    double k = 0;
};

// One grid point of a scan; failed points carry the failure reason and a
// NaN m_c instead of aborting the whole sweep.
struct ScanEntry {
    int n = 0;
    double k = 0;
    double m_c = 0;
    std::string status;  // "ok" or the failure reason

    bool ok() const { return status == "ok"; }
};

struct PowerLawFit {
    double exponent = 0;   // slope of the (ln n, ln m_c) least-squares line
    double prefactor = 0;  // exp(intercept)
    double residual = 0;   // root-mean-square log-space fit error
    int n_points = 0;
};

// Locates the critical initial clause count separating easy from hard runs
// at fixed (n, k): doubles m0 from n until a hard run appears (guard 1e12,
// else NoTransitionError), bisects to the given resolution, re-classifies
// both bracket endpoints (MonotonicityError on mismatch) and returns the
// midpoint. Exhausted runs count as easy (bounded behavior).
CriticalPoint find_critical_m(int n, double k, const ModelParams& p, double resolution = 1.0);

// Critical line over an ascending n grid at fixed k. Each point is an
// independent pure computation; with jobs > 1 they are evaluated in parallel
// and assembled in input order.
std::vector<ScanEntry> scan_line(double k, const std::vector<int>& n_values,
                                 const ModelParams& p, double resolution = 1.0, int jobs = 1);

// Critical point per k at fixed n.
std::vector<ScanEntry> scan_k(int n, const std::vector<double>& k_values,
                              const ModelParams& p, double resolution = 1.0, int jobs = 1);

// Successful entries assembled into a CriticalLine; throws std::runtime_error
// when every grid point failed.
CriticalLine collect_line(const std::vector<ScanEntry>& entries, double k, const ModelParams& p);

// Least-squares power law m_c ~ prefactor * n^exponent through the line's
// points in log-log space. Requires at least 3 points.
PowerLawFit fit_power_law(const CriticalLine& line);

}  // namespace splitlab
