// Command-line front end: model runs/scans, SPLIT runs on DIMACS files,
// instance generation, and empirical-vs-model comparison. All outputs are
// CSV files plus a trailing JSON summary on stdout; files are written
// atomically. Exit codes: 0 success/decided, 2 usage/validation/parse,
// 3 budget, 4 I/O.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "splitlab/cnf.hpp"
#include "splitlab/dimacs.hpp"
#include "splitlab/generator.hpp"
#include "splitlab/io.hpp"
#include "splitlab/meanfield.hpp"
#include "splitlab/scanner.hpp"
#include "splitlab/split.hpp"

namespace {

using nlohmann::json;

// Raised around file-system operations so main can map them to exit 4.
struct IoFailure {
    std::string msg;
};

void save(const std::filesystem::path& path, std::string_view content) {
    try {
        splitlab::atomic_write(path, content);
    } catch (const std::exception& e) {
        throw IoFailure{e.what()};
    }
}

std::filesystem::path sibling_json(const std::filesystem::path& out) {
    std::filesystem::path p = out;
    p.replace_extension(".json");
    if (p == out) p += ".json";
    return p;
}

struct ModelFlags {
    double alpha = 0.0;
    double lambda = 1.0;
    std::string r_mode = "k2";
    double easy_threshold = 1.0;
    double blowup_factor = 2.0;

    splitlab::ModelParams params() const {
        splitlab::ModelParams p;
        p.alpha = alpha;
        p.lambda = lambda;
        p.r_mode = splitlab::parse_attenuation_mode(r_mode);
        p.easy_threshold = easy_threshold;
        p.blowup_factor = blowup_factor;
        if (auto errs = p.validate(); !errs.empty()) throw std::invalid_argument(errs.front());
        return p;
    }
};

void add_model_flags(CLI::App* cmd, ModelFlags& f) {
    cmd->add_option("--alpha", f.alpha, "fraction of new clauses removed as redundant");
    cmd->add_option("--lambda", f.lambda, "filling ratio of removed clauses (needs alpha > 0)");
    cmd->add_option("--r-mode", f.r_mode, "attenuation exponent: k2 (x*n-2) or n2 (n-2)")
        ->check(CLI::IsMember({"k2", "n2"}));
    cmd->add_option("--easy-threshold", f.easy_threshold, "m below this classifies easy");
    cmd->add_option("--blowup-factor", f.blowup_factor, "hard bound is m0 * factor^n0");
}

struct ReductionFlags {
    bool no_taut = false;
    bool no_dup = false;
    bool sub = false;
    long long budget = 1'000'000;
    std::string order = "fixed";

    splitlab::ReductionConfig config() const {
        splitlab::ReductionConfig c;
        c.drop_tautologies = !no_taut;
        c.drop_duplicates = !no_dup;
        c.drop_subsumed = sub;
        if (budget <= 0) throw std::invalid_argument("--budget must be positive");
        c.clause_budget = budget;
        if (order == "fixed")
            c.order = splitlab::OrderPolicy::FixedIndex;
        else if (order == "maxapp")
            c.order = splitlab::OrderPolicy::MaxAppearance;
        else
            c.order = splitlab::OrderPolicy::MinProductRS;
        return c;
    }
};

void add_reduction_flags(CLI::App* cmd, ReductionFlags& f) {
    cmd->add_flag("--no-taut", f.no_taut, "keep tautological disjunctions");
    cmd->add_flag("--no-dup", f.no_dup, "keep duplicate clauses");
    cmd->add_flag("--sub", f.sub, "also remove subsumed clauses (implies duplicate removal)");
    cmd->add_option("--budget", f.budget, "abort when the working clause set exceeds this");
    cmd->add_option("--order", f.order, "variable elimination order")
        ->check(CLI::IsMember({"fixed", "maxapp", "minrs"}));
}

json summary_json(const splitlab::ModelTrajectory& t) {
    return json{{"class", splitlab::to_string(t.classification)},
                {"stop_step", t.stop_step},
                {"running_time", splitlab::running_time(t)},
                {"points", t.points.size()},
                {"negative_exponent_seen", t.negative_exponent_seen}};
}

int cmd_model_run(double m0, int n0, double k0, const ModelFlags& mf,
                  const std::string& out) {
    splitlab::ModelTrajectory traj = splitlab::run(m0, n0, k0, mf.params());
    const std::string csv = splitlab::trajectory_csv(traj);
    const json summary = summary_json(traj);
    if (!out.empty()) {
        save(out, csv);
        save(sibling_json(out), summary.dump(2) + "\n");
    } else {
        std::cout << csv;
    }
    std::cout << summary.dump() << "\n";
    return 0;
}

std::vector<int> int_grid(int from, int to, int step) {
    if (step <= 0) throw std::invalid_argument("--n-step must be positive");
    if (to < from) throw std::invalid_argument("--n-to must be >= --n-from");
    std::vector<int> g;
    for (int v = from; v <= to; v += step) g.push_back(v);
    return g;
}

std::vector<double> double_grid(double from, double to, double step) {
    if (step <= 0) throw std::invalid_argument("--k-step must be positive");
    if (to < from) throw std::invalid_argument("--k-to must be >= --k-from");
    std::vector<double> g;
    for (double v = from; v <= to + step * 1e-9; v += step) g.push_back(v);
    return g;
}

int emit_scan(const std::vector<splitlab::ScanEntry>& entries, const splitlab::ModelParams& p,
              double k_for_fit, bool fit, const std::string& out) {
    const std::string csv = splitlab::scan_csv(entries, p);
    if (!out.empty())
        save(out, csv);
    else
        std::cout << csv;

    if (!fit) return 0;
    splitlab::CriticalLine line = splitlab::collect_line(entries, k_for_fit, p);
    splitlab::PowerLawFit f = splitlab::fit_power_law(line);
    const json fj{{"exponent", f.exponent},
                  {"prefactor", f.prefactor},
                  {"residual", f.residual},
                  {"n_points", f.n_points}};
    if (!out.empty()) save(sibling_json(out), fj.dump(2) + "\n");
    std::cout << fj.dump() << "\n";
    return 0;
}

int cmd_split_run(const std::string& file, const ReductionFlags& rf, const std::string& trace_out) {
    std::ifstream in(file);
    if (!in) throw IoFailure{"cannot open " + file};
    splitlab::Formula f = splitlab::parse_dimacs(in);

    splitlab::DecideResult res = splitlab::decide(f, rf.config());
    if (!trace_out.empty()) save(trace_out, splitlab::split_trace_csv(res.trace));

    std::cout << splitlab::to_string(res.verdict.kind) << "\n";
    return res.verdict.kind == splitlab::VerdictKind::BudgetExceeded ? 3 : 0;
}

std::string stats_line(const splitlab::FormulaStats& st) {
    std::ostringstream os;
    os << "m=" << st.m << " n_active=" << st.n_active
       << " k_mean=" << splitlab::format_double(st.k_mean)
       << " p_mean=" << splitlab::format_double(st.p_mean)
       << " x=" << splitlab::format_double(st.x) << " literals=" << st.total_literals
       << " imbalance=" << st.max_symmetry_imbalance;
    return os.str();
}

int cmd_gen(int n, int m, int k, const std::string& seed_str, const std::string& out) {
    splitlab::GenSpec spec;
    spec.num_vars = n;
    spec.num_clauses = m;
    spec.clause_len = k;
    spec.seed = splitlab::parse_seed(seed_str);
    for (const std::string& w : splitlab::validate(spec)) std::cerr << "warning: " << w << "\n";

    splitlab::Formula f = splitlab::generate(spec);
    const std::string dimacs = splitlab::write_dimacs(f);
    const std::string stats = stats_line(splitlab::compute_stats(f));
    if (!out.empty()) {
        save(out, dimacs);
        std::cout << stats << "\n";
    } else {
        std::cout << dimacs;
        std::cerr << stats << "\n";
    }
    return 0;
}

// One compare trial: the empirical SPLIT trajectory of a generated instance
// joined against the model trajectory started from the same (m, n, k).
struct TrialRow {
    int j = 0;
    std::optional<double> emp_n, emp_m, emp_x;
    std::optional<double> model_n, model_m, model_x;
    std::optional<double> rel_gap;
};

struct TrialReport {
    int trial = 0;
    std::string verdict;
    std::string model_class;
    bool budget = false;
    bool agree = false;  // decided <-> easy/exhausted, budget <-> hard
    double max_rel_gap = 0;
    int first_2x_step = -1;
    std::vector<TrialRow> rows;
};

TrialReport run_trial(int trial, const splitlab::GenSpec& spec,
                      const splitlab::ReductionConfig& cfg, const splitlab::ModelParams& par) {
    TrialReport rep;
    rep.trial = trial;

    splitlab::Formula f = splitlab::generate(spec);
    splitlab::DecideResult dec = splitlab::decide(f, cfg);
    splitlab::ModelTrajectory model =
        splitlab::run(spec.num_clauses, spec.num_vars, spec.clause_len, par);

    rep.verdict = splitlab::to_string(dec.verdict.kind);
    rep.model_class = splitlab::to_string(model.classification);
    rep.budget = dec.verdict.kind == splitlab::VerdictKind::BudgetExceeded;
    const bool model_bounded = model.classification != splitlab::Classification::Hard;
    rep.agree = rep.budget ? !model_bounded : model_bounded;

    // Empirical j=0 point comes from the instance itself; the trace starts
    // at the first elimination.
    splitlab::FormulaStats st0 = splitlab::compute_stats(f);
    const std::size_t steps = std::max(dec.trace.size() + 1, model.points.size());
    for (std::size_t j = 0; j < steps; ++j) {
        TrialRow row;
        row.j = static_cast<int>(j);
        if (j == 0) {
            row.emp_n = st0.n_active;
            row.emp_m = static_cast<double>(st0.m);
            row.emp_x = st0.x;
        } else if (j - 1 < dec.trace.size()) {
            const splitlab::TracePoint& tp = dec.trace[j - 1];
            row.emp_n = tp.vars_active;
            row.emp_m = static_cast<double>(tp.clause_count);
            row.emp_x = tp.x;
        }
        if (j < model.points.size()) {
            const splitlab::TrajectoryPoint& mp = model.points[j];
            row.model_n = mp.n;
            row.model_m = mp.m;
            row.model_x = mp.x;
        }
        if (row.emp_m && row.model_m) {
            const double e = *row.emp_m, mo = *row.model_m;
            row.rel_gap = mo > 0 ? std::abs(e - mo) / mo
                                 : (e > 0 ? std::numeric_limits<double>::infinity() : 0.0);
            rep.max_rel_gap = std::max(rep.max_rel_gap, *row.rel_gap);
            const bool diverged = (e >= 2 * mo || mo >= 2 * e) && !(e == 0 && mo == 0);
            if (diverged && rep.first_2x_step < 0) rep.first_2x_step = row.j;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

int cmd_compare(int n, int m, int k, const std::string& seed_str, int trials,
                const ReductionFlags& rf, const ModelFlags& mf, const std::string& out,
                int jobs) {
    if (trials <= 0) throw std::invalid_argument("--trials must be positive");
    const std::uint64_t seed = splitlab::parse_seed(seed_str);
    const splitlab::ReductionConfig cfg = rf.config();
    const splitlab::ModelParams par = mf.params();

    splitlab::GenSpec base;
    base.num_vars = n;
    base.num_clauses = m;
    base.clause_len = k;
    base.seed = seed;
    for (const std::string& w : splitlab::validate(base)) std::cerr << "warning: " << w << "\n";

    std::vector<TrialReport> reports(trials);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
            splitlab::GenSpec spec = base;
            spec.seed = seed + static_cast<std::uint64_t>(t);
            reports[t] = run_trial(t, spec, cfg, par);
        }
    };
    const int n_threads = std::clamp(jobs, 1, trials);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::ostringstream csv;
    csv << "trial,j,emp_n,emp_m,emp_x,model_n,model_m,model_x,rel_gap\n";
    auto cell = [](const std::optional<double>& v) {
        return v ? splitlab::format_double(*v) : std::string{};
    };
    for (const TrialReport& rep : reports)
        for (const TrialRow& row : rep.rows)
            csv << rep.trial << ',' << row.j << ',' << cell(row.emp_n) << ',' << cell(row.emp_m)
                << ',' << cell(row.emp_x) << ',' << cell(row.model_n) << ',' << cell(row.model_m)
                << ',' << cell(row.model_x) << ',' << cell(row.rel_gap) << '\n';

    json per_trial = json::array();
    int decided = 0, budget_trips = 0, agreed = 0;
    double gap_sum = 0;
    for (const TrialReport& rep : reports) {
        per_trial.push_back(json{{"trial", rep.trial},
                                 {"verdict", rep.verdict},
                                 {"model_class", rep.model_class},
                                 {"agree", rep.agree},
                                 {"max_rel_gap", rep.max_rel_gap},
                                 {"first_2x_step", rep.first_2x_step}});
        if (rep.agree) ++agreed;
        if (rep.budget) {
            ++budget_trips;  // flagged, excluded from the divergence aggregates
        } else {
            ++decided;
            gap_sum += rep.max_rel_gap;
        }
    }
    const json metrics{
        {"trials", trials},
        {"decided", decided},
        {"budget_trips", budget_trips},
        {"class_agreement_rate", static_cast<double>(agreed) / trials},
        {"mean_max_rel_gap", decided > 0 ? gap_sum / decided : 0.0},
        {"per_trial", per_trial}};

    if (!out.empty()) {
        save(out, csv.str());
        save(sibling_json(out), metrics.dump(2) + "\n");
    } else {
        std::cout << csv.str();
    }
    std::cout << metrics.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"easy/hard transition laboratory for variable-elimination SAT"};
    app.require_subcommand(1);

    // model run
    CLI::App* model = app.add_subcommand("model", "mean-field recursion of the elimination dynamics");
    model->require_subcommand(1);
    CLI::App* mrun = model->add_subcommand("run", "iterate one trajectory and classify it");
    double m0 = 0, k0 = 0;
    int n0 = 0;
    ModelFlags run_mf;
    std::string run_out;
    mrun->add_option("--m0", m0, "initial clause count")->required();
    mrun->add_option("--n0", n0, "initial variable count")->required();
    mrun->add_option("--k0", k0, "initial mean clause length")->required();
    add_model_flags(mrun, run_mf);
    mrun->add_option("--out", run_out, "write trajectory CSV here (plus sibling .json)");

    // model scan
    CLI::App* mscan = model->add_subcommand("scan", "critical line m_c(n) at fixed k");
    double scan_k_val = 3;
    int n_from = 0, n_to = 0, n_step = 50;
    double scan_resolution = 1.0;
    bool scan_fit = false;
    int scan_jobs = 1;
    ModelFlags scan_mf;
    std::string scan_out;
    mscan->add_option("--k", scan_k_val, "clause length (filling)")->required();
    mscan->add_option("--n-from", n_from, "first n")->required();
    mscan->add_option("--n-to", n_to, "last n (inclusive)")->required();
    mscan->add_option("--n-step", n_step, "n increment");
    mscan->add_option("--resolution", scan_resolution, "bisection bracket width");
    mscan->add_flag("--fit", scan_fit, "fit a power law m_c ~ c*n^gamma");
    mscan->add_option("--jobs", scan_jobs, "parallel grid evaluations");
    add_model_flags(mscan, scan_mf);
    mscan->add_option("--out", scan_out, "write line CSV here (fit lands in sibling .json)");

    // model kscan
    CLI::App* mkscan = model->add_subcommand("kscan", "critical point m_c(k) at fixed n");
    int kscan_n = 0;
    double k_from = 0, k_to = 0, k_step = 1;
    double kscan_resolution = 1.0;
    int kscan_jobs = 1;
    ModelFlags kscan_mf;
    std::string kscan_out;
    mkscan->add_option("--n", kscan_n, "variable count")->required();
    mkscan->add_option("--k-from", k_from, "first k")->required();
    mkscan->add_option("--k-to", k_to, "last k (inclusive)")->required();
    mkscan->add_option("--k-step", k_step, "k increment");
    mkscan->add_option("--resolution", kscan_resolution, "bisection bracket width");
    mkscan->add_option("--jobs", kscan_jobs, "parallel grid evaluations");
    add_model_flags(mkscan, kscan_mf);
    mkscan->add_option("--out", kscan_out, "write line CSV here");

    // split run
    CLI::App* split = app.add_subcommand("split", "variable-elimination runs on DIMACS files");
    split->require_subcommand(1);
    CLI::App* srun = split->add_subcommand("run", "decide a CNF file by repeated elimination");
    std::string split_file, split_trace;
    ReductionFlags split_rf;
    srun->add_option("file", split_file, "input DIMACS CNF")->required();
    add_reduction_flags(srun, split_rf);
    srun->add_option("--trace", split_trace, "write per-elimination trace CSV here");

    // gen
    CLI::App* gen = app.add_subcommand("gen", "homogeneous random k-CNF generator");
    int gen_n = 0, gen_m = 0, gen_k = 3;
    std::string gen_seed = "0", gen_out;
    gen->add_option("--n", gen_n, "variable count")->required();
    gen->add_option("--m", gen_m, "clause count")->required();
    gen->add_option("--k", gen_k, "literals per clause");
    gen->add_option("--seed", gen_seed, "RNG seed (decimal or 0x hex)");
    gen->add_option("--out", gen_out, "write DIMACS here instead of stdout");

    // compare
    CLI::App* cmp = app.add_subcommand("compare", "empirical SPLIT trajectories vs the model");
    int cmp_n = 0, cmp_m = 0, cmp_k = 3, cmp_trials = 10, cmp_jobs = 1;
    std::string cmp_seed = "1", cmp_out;
    ReductionFlags cmp_rf;
    ModelFlags cmp_mf;
    cmp->add_option("--n", cmp_n, "variable count")->required();
    cmp->add_option("--m", cmp_m, "clause count")->required();
    cmp->add_option("--k", cmp_k, "literals per clause");
    cmp->add_option("--seed", cmp_seed, "base seed; trial t uses seed+t");
    cmp->add_option("--trials", cmp_trials, "independent instances");
    cmp->add_option("--jobs", cmp_jobs, "parallel trials");
    add_reduction_flags(cmp, cmp_rf);
    add_model_flags(cmp, cmp_mf);
    cmp->add_option("--out", cmp_out, "write joined CSV here (metrics in sibling .json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (mrun->parsed()) return cmd_model_run(m0, n0, k0, run_mf, run_out);
        if (mscan->parsed())
            return emit_scan(splitlab::scan_line(scan_k_val, int_grid(n_from, n_to, n_step),
                                                 scan_mf.params(), scan_resolution, scan_jobs),
                             scan_mf.params(), scan_k_val, scan_fit, scan_out);
        if (mkscan->parsed())
            return emit_scan(splitlab::scan_k(kscan_n, double_grid(k_from, k_to, k_step),
                                              kscan_mf.params(), kscan_resolution, kscan_jobs),
                             kscan_mf.params(), k_from, /*fit=*/false, kscan_out);
        if (srun->parsed()) return cmd_split_run(split_file, split_rf, split_trace);
        if (gen->parsed()) return cmd_gen(gen_n, gen_m, gen_k, gen_seed, gen_out);
        if (cmp->parsed())
            return cmd_compare(cmp_n, cmp_m, cmp_k, cmp_seed, cmp_trials, cmp_rf, cmp_mf,
                               cmp_out, cmp_jobs);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const splitlab::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const splitlab::GenError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoFailure& f) {
        std::cerr << "error: " << f.msg << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
