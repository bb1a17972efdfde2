#include "splitlab/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace splitlab {

AttenuationMode parse_attenuation_mode(const std::string& s) {
    if (s == "k2") return AttenuationMode::FillingExponent;
    if (s == "n2") return AttenuationMode::VariableExponent;
    throw std::invalid_argument("unknown r-mode '" + s + "' (expected k2 or n2)");
}

std::string to_string(AttenuationMode m) {
    return m == AttenuationMode::FillingExponent ? "k2" : "n2";
}

std::vector<std::string> ModelParams::validate() const {
    std::vector<std::string> errs;
    if (!(alpha >= 0.0 && alpha < 1.0))
        errs.push_back("alpha must lie in [0, 1)");
    if (alpha > 0.0 && !(lambda >= 1.0 && lambda <= 1.0 / alpha))
        errs.push_back("lambda must lie in [1, 1/alpha] when alpha > 0");
    if (!(easy_threshold >= 0.0) || !std::isfinite(easy_threshold))
        errs.push_back("easy-threshold must be finite and >= 0");
    if (!(blowup_factor >= 1.0) || !std::isfinite(blowup_factor))
        errs.push_back("blowup-factor must be finite and >= 1");
    return errs;
}

double attenuation(int n, double x, AttenuationMode mode) {
    const double base = 1.0 - x * x / 2.0;
    const double expo = mode == AttenuationMode::FillingExponent ? x * n - 2.0
                                                                 : static_cast<double>(n) - 2.0;
    return std::pow(base, expo);
}

StepBreakdown step_breakdown(const ModelState& s, const ModelParams& par) {
    StepBreakdown bd;
    const double p = s.p();
    const double x = s.x;
    bd.r_value = attenuation(s.n, x, par.r_mode);
    const double quarter = p * p / 4.0;
    bd.m_new = quarter * (1.0 - x * x / 2.0) * bd.r_value;
    bd.p_new = quarter * (2.0 * x - 1.5 * x * x) * bd.r_value;
    bd.m_rem = (1.0 - par.alpha) * bd.m_new;
    bd.p_rem = (1.0 - par.alpha * par.lambda) * bd.p_new;
    const double survivors = s.n - 1;
    bd.k_new = bd.m_new > 0 ? bd.p_new * survivors / bd.m_new : 0.0;
    bd.k_rem = bd.m_rem > 0 ? bd.p_rem * survivors / bd.m_rem : 0.0;
    return bd;
}

ModelState step(const ModelState& s, const ModelParams& par, StepBreakdown& bd) {
    if (s.n < 3) throw std::invalid_argument("step requires n >= 3");
    bd = step_breakdown(s, par);
    const double p = s.p();
    ModelState next;
    next.m = (s.m - p) + bd.m_rem;
    next.n = s.n - 1;
    const double p_next = s.x * (s.m - p) + bd.p_rem;
    next.x = next.m > 0 ? p_next / next.m : 0.0;
    next.x = std::clamp(next.x, 0.0, 1.0);
    return next;
}

ModelState step(const ModelState& s, const ModelParams& par) {
    StepBreakdown bd;
    return step(s, par, bd);
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Easy: return "easy";
        case Classification::Hard: return "hard";
        case Classification::Exhausted: return "exhausted";
    }
    return "?";
}

ModelTrajectory run(double m0, int n0, double k0, const ModelParams& par) {
    if (auto errs = par.validate(); !errs.empty())
        throw std::invalid_argument(errs.front());
    if (!(k0 >= 2.0)) throw std::invalid_argument("k0 must be >= 2");
    if (n0 < 2) throw std::invalid_argument("n0 must be >= 2");
    if (!(k0 <= n0)) throw std::invalid_argument("k0 must not exceed n0 (x0 <= 1)");
    if (!(m0 >= 0.0) || !std::isfinite(m0)) throw std::invalid_argument("m0 must be finite and >= 0");

    ModelTrajectory traj;
    traj.bound_log2 = std::log2(m0) + n0 * std::log2(par.blowup_factor);

    ModelState s{m0, n0, k0 / n0};
    double cum = 0.0;
    for (int j = 0;; ++j) {
        TrajectoryPoint pt;
        pt.j = j;
        pt.n = s.n;
        pt.m = s.m;
        pt.p = s.p();
        pt.x = s.x;
        pt.k = s.k();
        pt.r = attenuation(s.n, s.x, par.r_mode);
        pt.step_cost = s.m * s.m * s.n;
        cum += pt.step_cost;
        pt.cum_cost = cum;
        traj.points.push_back(pt);

        if (par.r_mode == AttenuationMode::FillingExponent && pt.k < 2.0)
            traj.negative_exponent_seen = true;

        const bool overflowed = !std::isfinite(s.m) || !std::isfinite(pt.p);
        if (!overflowed && s.m < par.easy_threshold) {
            traj.classification = Classification::Easy;
            traj.stop_step = j;
            return traj;
        }
        if (overflowed || std::log2(s.m) > traj.bound_log2) {
            traj.classification = Classification::Hard;
            traj.stop_step = j;
            return traj;
        }
        if (j == n0 - 2) {
            traj.classification = Classification::Exhausted;
            traj.stop_step = j;
            return traj;
        }
        s = step(s, par);
    }
}

double running_time(const ModelTrajectory& t) {
    double sum = 0.0;
    for (const TrajectoryPoint& pt : t.points) sum += pt.step_cost;
    return sum;
}

}  // namespace splitlab
