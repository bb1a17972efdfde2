#include "splitlab/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace splitlab {

namespace {

constexpr double kUpperGuard = 1e12;

// Exhausted trajectories stay bounded, so for bracketing purposes they sit
// on the easy side.
bool is_hard(double m0, int n, double k, const ModelParams& p) {
    return run(m0, n, k, p).classification == Classification::Hard;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

CriticalPoint find_critical_m(int n, double k, const ModelParams& p, double resolution) {
    if (!(k >= 2.0)) throw std::invalid_argument("k must be >= 2");
    if (!(k <= n)) throw std::invalid_argument("k must not exceed n");
    if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be > 0");

    double lo = n;  // one clause per variable: expected easy
    if (is_hard(lo, n, k, p))
        throw MonotonicityError("lower bracket start m0=" + fmt(lo) + " already classifies hard");

    double hi = lo;
    while (!is_hard(hi, n, k, p)) {
        lo = hi;
        hi *= 2.0;
        if (hi > kUpperGuard)
            throw NoTransitionError("no hard classification below m0=" + fmt(kUpperGuard) +
                                    " at n=" + std::to_string(n) + ", k=" + fmt(k));
    }

    while (hi - lo > resolution) {
        const double mid = (lo + hi) / 2.0;
        if (is_hard(mid, n, k, p))
            hi = mid;
        else
            lo = mid;
    }

    // Post-hoc endpoint verification: the bisection assumed classification is
    // monotone in m0; two extra runs make a violation loud instead of silent.
    if (is_hard(lo, n, k, p))
        throw MonotonicityError("bracket endpoint m0=" + fmt(lo) + " classifies hard below m0=" +
                                fmt(hi) + " at n=" + std::to_string(n));
    if (!is_hard(hi, n, k, p))
        throw MonotonicityError("bracket endpoint m0=" + fmt(hi) + " classifies easy above m0=" +
                                fmt(lo) + " at n=" + std::to_string(n));

    CriticalPoint cp;
    cp.n = n;
    cp.k = k;
    cp.m_c = (lo + hi) / 2.0;
    cp.params = p;
    return cp;
}

namespace {

struct GridPoint {
    int n = 0;
    double k = 0;
};

ScanEntry evaluate(const GridPoint& g, const ModelParams& p, double resolution) {
    ScanEntry e;
    e.n = g.n;
    e.k = g.k;
    try {
        e.m_c = find_critical_m(g.n, g.k, p, resolution).m_c;
        e.status = "ok";
    } catch (const std::exception& ex) {
        e.m_c = std::numeric_limits<double>::quiet_NaN();
        e.status = ex.what();
    }
    return e;
}

std::vector<ScanEntry> scan_grid(const std::vector<GridPoint>& grid, const ModelParams& p,
                                 double resolution, int jobs) {
    std::vector<ScanEntry> out(grid.size());
    jobs = std::max(1, jobs);
    if (jobs == 1 || grid.size() <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) out[i] = evaluate(grid[i], p, resolution);
        return out;
    }

    // Points are independent pure computations; each worker claims the next
    // index and writes into its own slot, so the assembled order matches the
    // input regardless of scheduling.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1))
            out[i] = evaluate(grid[i], p, resolution);
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min<std::size_t>(jobs, grid.size());
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    return out;
}

}  // namespace

std::vector<ScanEntry> scan_line(double k, const std::vector<int>& n_values,
                                 const ModelParams& p, double resolution, int jobs) {
    if (n_values.empty()) throw std::invalid_argument("scan_line: empty n grid");
    if (!std::is_sorted(n_values.begin(), n_values.end()))
        throw std::invalid_argument("scan_line: n grid must be ascending");

    std::vector<GridPoint> grid;
    grid.reserve(n_values.size());
    for (int n : n_values) grid.push_back({n, k});
    return scan_grid(grid, p, resolution, jobs);
}

std::vector<ScanEntry> scan_k(int n, const std::vector<double>& k_values,
                              const ModelParams& p, double resolution, int jobs) {
    if (k_values.empty()) throw std::invalid_argument("scan_k: empty k grid");

    std::vector<GridPoint> grid;
    grid.reserve(k_values.size());
    for (double k : k_values) grid.push_back({n, k});
    return scan_grid(grid, p, resolution, jobs);
}

CriticalLine collect_line(const std::vector<ScanEntry>& entries, double k, const ModelParams& p) {
    CriticalLine line;
    line.k = k;
    for (const ScanEntry& e : entries) {
        if (!e.ok()) continue;
        CriticalPoint cp;
        cp.n = e.n;
        cp.k = e.k;
        cp.m_c = e.m_c;
        cp.params = p;
        line.points.push_back(cp);
    }
    if (line.points.empty()) throw std::runtime_error("scan failed at every grid point");
    return line;
}

PowerLawFit fit_power_law(const CriticalLine& line) {
    if (line.points.size() < 3)
        throw std::invalid_argument("fit_power_law: need at least 3 points, got " +
                                    std::to_string(line.points.size()));

    const std::size_t n = line.points.size();
    double sx = 0, sy = 0;
    for (const CriticalPoint& cp : line.points) {
        sx += std::log(static_cast<double>(cp.n));
        sy += std::log(cp.m_c);
    }
    const double mx = sx / n, my = sy / n;

    double sxx = 0, sxy = 0;
    for (const CriticalPoint& cp : line.points) {
        const double dx = std::log(static_cast<double>(cp.n)) - mx;
        const double dy = std::log(cp.m_c) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_power_law: degenerate n grid");

    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.prefactor = std::exp(my - fit.exponent * mx);
    fit.n_points = static_cast<int>(n);

    double ss = 0;
    for (const CriticalPoint& cp : line.points) {
        const double pred = (my - fit.exponent * mx) + fit.exponent * std::log(static_cast<double>(cp.n));
        const double err = std::log(cp.m_c) - pred;
        ss += err * err;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

}  // namespace splitlab
