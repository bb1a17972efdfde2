#pragma once

#include <string>
#include <vector>

namespace splitlab {

// Exponent used in the attenuation factor (1 - x^2/2)^e. The self-consistent
// choice is e = k - 2 = x*n - 2 (FillingExponent); e = n - 2 is kept
// selectable because both appear in the source material for this model.
enum class AttenuationMode { FillingExponent, VariableExponent };

AttenuationMode parse_attenuation_mode(const std::string& s);  // "k2" / "n2"
std::string to_string(AttenuationMode m);

struct ModelParams {
    double alpha = 0.0;    // fraction of new clauses removed as redundant
    double lambda = 1.0;   // filling ratio of removed clauses vs new mean
    AttenuationMode r_mode = AttenuationMode::FillingExponent;
    double easy_threshold = 1.0;
    double blowup_factor = 2.0;  // hard bound = m0 * blowup_factor^n0

    // Empty when valid, otherwise one message per violated constraint.
    std::vector<std::string> validate() const;
};

struct ModelState {
    double m = 0;  // clause count
    int n = 2;     // variable count
    double x = 0;  // filling factor p/m = k/n, in [0, 1]

    double p() const { return x * m; }
    double k() const { return x * n; }
};

// (1 - x^2/2)^(x*n - 2) or ^(n - 2). Negative exponents (k < 2) are evaluated
// as written and give r > 1.
double attenuation(int n, double x, AttenuationMode mode);

// Intermediate quantities of one step, split into the raw CNF-isation yield
// and what remains after the phenomenological redundancy removal.
struct StepBreakdown {
    double r_value = 1;
    double m_new = 0, p_new = 0;  // p^2/4 (1 - x^2/2) r  and  p^2/4 (2x - 3x^2/2) r
    double m_rem = 0, p_rem = 0;  // (1-alpha) m_new  and  (1-alpha*lambda) p_new
    double k_new = 0, k_rem = 0;  // fillings over the n-1 surviving variables
};

StepBreakdown step_breakdown(const ModelState& s, const ModelParams& p);

// One elimination step: m' = (m-p) + m_rem, p' = x(m-p) + p_rem, n' = n-1,
// x' = p'/m' (0 when m' = 0). Requires n >= 3. x' is clamped to [0, 1]; the
// bounds hold mathematically and the clamp only erases rounding overshoot.
ModelState step(const ModelState& s, const ModelParams& p);
ModelState step(const ModelState& s, const ModelParams& p, StepBreakdown& bd);

enum class Classification { Easy, Hard, Exhausted };
std::string to_string(Classification c);

struct TrajectoryPoint {
    int j = 0;
    int n = 0;
    double m = 0, p = 0, x = 0, k = 0;
    double r = 1;          // attenuation at this state
    double step_cost = 0;  // m^2 * n
    double cum_cost = 0;
};

struct ModelTrajectory {
    std::vector<TrajectoryPoint> points;  // includes the initial state as j=0
    Classification classification = Classification::Exhausted;
    int stop_step = 0;        // j at which the run terminated
    double bound_log2 = 0;    // log2 of the hard bound m0 * bf^n0
    bool negative_exponent_seen = false;  // k fell below 2 in FillingExponent mode
};

// Iterates step() from (m0, n0, x0 = k0/n0) until m_j < easy_threshold
// (Easy), m_j exceeds the blow-up bound or overflows (Hard), or j = n0-2
// (Exhausted). The bound comparison happens in log2 space so it survives
// n0 large enough that m0 * bf^n0 itself overflows.
ModelTrajectory run(double m0, int n0, double k0, const ModelParams& p);

// Sum of m_j^2 * n_j over all recorded points (j=0 included; for Hard runs
// this is inclusive of the first bound-exceeding step).
double running_time(const ModelTrajectory& t);

}  // namespace splitlab
