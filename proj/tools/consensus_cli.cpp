// Command-line front end: consensus parameter analysis, spectra,
// simulation, sweeps, and the power/latency trade-off for
// r-nearest-neighbor ring and torus networks.
//
// Exit codes: 0 success, 2 invalid input, 3 infeasible / disconnected /
// no convergence.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "consensus/errors.hpp"
#include "consensus/optimal.hpp"
#include "consensus/serialize.hpp"
#include "consensus/sim.hpp"
#include "consensus/spectra.hpp"
#include "consensus/tradeoff.hpp"
#include "consensus/topology.hpp"

namespace {

using namespace consensus;

struct Options {
    std::vector<int> dims;
    int r = 1;
    Norm norm = Norm::PerAxis;
    std::string format = "csv";
    std::string out;

    // simulate
    std::optional<double> h;
    double eps = 1e-6;
    std::uint64_t seed = 0;
    std::int64_t max_iters = 1000000;
    std::optional<double> x0_const;
    std::string trace_path;

    // sweep
    std::string sweep_var;
    int from = 0;
    int to = 0;
    int step = 1;

    // tradeoff
    int r_max = 0;
    double alpha = 0.0;
    std::optional<double> p_max;
    std::optional<double> t_max;
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidSpecError("cannot open output file: " + path);
    f << text;
}

void emit(const Rows& rows, const Options& opt) {
    write_text(opt.out, opt.format == "json" ? to_json_text(rows) : to_csv(rows));
}

std::string norm_name(Norm norm) {
    switch (norm) {
        case Norm::PerAxis: return "peraxis";
        case Norm::L1: return "l1";
        default: return "linf";
    }
}

// Closed-form h and gamma when the parity/norm preconditions allow
// them, plus the user-facing note when they do not.
struct ClosedFields {
    std::optional<double> h;
    std::optional<double> gamma;
    std::string note;
};

ClosedFields closed_fields(const TopologySpec& spec) {
    ClosedFields cf;
    try {
        cf.h = closed_form_h(spec);
        cf.gamma = closed_form_gamma(spec);
    } catch (const UnsupportedParityError&) {
        cf.note = "mixed parity: closed form unavailable";
    } catch (const InvalidSpecError&) {
        cf.note = "closed form requires per-axis neighborhoods";
    }
    return cf;
}

Rows opt_field(const std::optional<double>& v) {
    return v ? Rows(*v) : Rows(nullptr);
}

void run_analyze(const Options& opt) {
    const TopologySpec spec = make_spec(opt.dims, opt.r, opt.norm);
    const SpectralSummary s = extremal_eigenvalues(spec);
    const double h_oracle = 2.0 / (s.lambda2_L + s.lambdaN_L);
    const double gamma_oracle = contraction_factor(h_oracle, s.lambda2_L, s.lambdaN_L);
    const ClosedFields cf = closed_fields(spec);

    Rows rec = Rows::object();
    rec["dims"] = spec.dims;
    rec["r"] = spec.r;
    rec["norm"] = norm_name(spec.norm);
    rec["n"] = s.n;
    rec["lambda2"] = s.lambda2_L;
    rec["lambdaN"] = s.lambdaN_L;
    rec["h_closed"] = opt_field(cf.h);
    rec["gamma_closed"] = opt_field(cf.gamma);
    rec["h_oracle"] = h_oracle;
    rec["gamma_oracle"] = gamma_oracle;
    rec["h_abs_diff"] = cf.h ? Rows(std::abs(*cf.h - h_oracle)) : Rows(nullptr);
    rec["gamma_abs_diff"] = cf.gamma ? Rows(std::abs(*cf.gamma - gamma_oracle)) : Rows(nullptr);
    rec["T"] = convergence_time(gamma_oracle);
    rec["parity_note"] = cf.note.empty() ? Rows(nullptr) : Rows(cf.note);
    emit(rec, opt);
}

void run_spectrum(const Options& opt) {
    const TopologySpec spec = make_spec(opt.dims, opt.r, opt.norm);
    const SpectralSummary s = extremal_eigenvalues(spec);
    Rows rec = Rows::object();
    rec["dims"] = spec.dims;
    rec["r"] = spec.r;
    rec["norm"] = norm_name(spec.norm);
    rec["n"] = s.n;
    rec["lambda2"] = s.lambda2_L;
    rec["lambdaN"] = s.lambdaN_L;
    rec["arg2_index"] = s.arg2_index;
    rec["argmax_index"] = s.argmax_index;
    emit(rec, opt);
}

void run_simulate(const Options& opt) {
    const TopologySpec spec = make_spec(opt.dims, opt.r, opt.norm);
    const SpectralSummary s = extremal_eigenvalues(spec);
    const double h = opt.h ? *opt.h : 2.0 / (s.lambda2_L + s.lambdaN_L);
    const double gamma = contraction_factor(h, s.lambda2_L, s.lambdaN_L);

    SimReport report;
    if (opt.x0_const) {
        report = run_from(spec, init_constant_state(spec, *opt.x0_const), h, opt.eps,
                          opt.max_iters, opt.seed);
    } else {
        report = run(spec, h, opt.seed, opt.eps, opt.max_iters);
    }

    Rows rec = Rows::object();
    rec["dims"] = spec.dims;
    rec["r"] = spec.r;
    rec["norm"] = norm_name(spec.norm);
    rec["n"] = s.n;
    rec["h"] = h;
    rec["eps"] = opt.eps;
    rec["seed"] = report.seed;
    rec["iterations"] = report.iterations;
    rec["initial_error"] = report.error_trace.front();
    rec["final_error"] = report.error_trace.back();
    rec["gamma"] = gamma;
    rec["fitted_contraction"] = report.fitted_contraction;
    rec["contraction_abs_diff"] = std::abs(report.fitted_contraction - gamma);
    rec["T"] = gamma < 1.0 ? Rows(convergence_time(gamma)) : Rows(nullptr);
    rec["avg_residual"] = report.avg_residual;
    emit(rec, opt);

    if (!opt.trace_path.empty()) {
        Rows rows = Rows::array();
        for (std::size_t t = 0; t < report.error_trace.size(); ++t) {
            Rows row = Rows::object();
            row["t"] = t;
            row["error"] = report.error_trace[t];
            rows.push_back(std::move(row));
        }
        write_text(opt.trace_path, to_csv(rows));
    }
}

void run_sweep(const Options& opt) {
    if (opt.from < 1 || opt.to < opt.from || opt.step < 1)
        throw InvalidSpecError("sweep range must satisfy 1 <= from <= to, step >= 1");

    Rows rows = Rows::array();
    for (int v = opt.from; v <= opt.to; v += opt.step) {
        std::vector<int> dims;
        int r = opt.r;
        if (opt.sweep_var == "n") {
            if (!opt.dims.empty() && opt.dims.size() != 1)
                throw InvalidSpecError("a size sweep is one-dimensional; drop --dims");
            dims = {v};
        } else if (opt.sweep_var == "r") {
            if (opt.dims.empty()) throw InvalidSpecError("a radius sweep needs --dims");
            dims = opt.dims;
            r = v;
        } else { // m
            if (static_cast<int>(opt.dims.size()) < opt.to)
                throw InvalidSpecError("a dimension sweep needs --dims with at least --to axes");
            dims.assign(opt.dims.begin(), opt.dims.begin() + v);
        }
        const TopologySpec spec = make_spec(dims, r, opt.norm);
        const SpectralSummary s = extremal_eigenvalues(spec);
        const double h_oracle = 2.0 / (s.lambda2_L + s.lambdaN_L);
        const double gamma = contraction_factor(h_oracle, s.lambda2_L, s.lambdaN_L);
        const ClosedFields cf = closed_fields(spec);

        Rows row = Rows::object();
        row["dims"] = spec.dims;
        row["r"] = spec.r;
        row["h_closed"] = opt_field(cf.h);
        row["h_oracle"] = h_oracle;
        row["gamma"] = gamma;
        row["T"] = convergence_time(gamma);
        rows.push_back(std::move(row));
    }
    emit(rows, opt);
}

void run_tradeoff(const Options& opt) {
    const TopologySpec family = make_spec(opt.dims, 1, opt.norm);
    if (opt.p_max.has_value() == opt.t_max.has_value())
        throw InvalidSpecError("give exactly one of --p-max and --t-max");

    const TradeoffResult res =
        opt.p_max ? min_time_given_power(family, opt.r_max, *opt.p_max, opt.alpha)
                  : min_power_given_time(family, opt.r_max, *opt.t_max, opt.alpha);

    Rows rows = Rows::array();
    for (const FrontierPoint& pt : res.frontier) {
        Rows row = Rows::object();
        row["r"] = pt.r;
        row["T"] = pt.T;
        row["P"] = pt.P;
        row["selected"] = (pt.r == res.r_star);
        rows.push_back(std::move(row));
    }
    emit(rows, opt);
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"optimal consensus parameters for r-nearest-neighbor ring and torus networks"};
    app.require_subcommand(1);
    // long-form help only, so `--h` stays available as the step-size option
    app.set_help_flag("--help", "print this help message and exit");

    const std::map<std::string, Norm> norm_map{
        {"peraxis", Norm::PerAxis}, {"l1", Norm::L1}, {"linf", Norm::LInf}};

    auto add_common = [&](CLI::App* cmd, bool dims_required) {
        auto* d = cmd->add_option("--dims", opt.dims, "axis sizes k1,k2,...")->delimiter(',');
        if (dims_required) d->required();
        cmd->add_option("--r", opt.r, "neighbor radius")->capture_default_str();
        cmd->add_option("--norm", opt.norm, "neighborhood rule")
            ->transform(CLI::CheckedTransformer(norm_map, CLI::ignore_case))
            ->default_str("peraxis");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "closed-form and oracle h, gamma, T");
    add_common(analyze, true);

    CLI::App* spectrum = app.add_subcommand("spectrum", "extreme Laplacian eigenvalues");
    add_common(spectrum, true);

    CLI::App* simulate = app.add_subcommand("simulate", "run the consensus iteration");
    add_common(simulate, true);
    simulate->add_option("--h", opt.h, "step size (default: oracle-optimal)");
    simulate->add_option("--eps", opt.eps, "relative stopping threshold")->capture_default_str();
    simulate->add_option("--seed", opt.seed, "RNG seed for x(0)")->capture_default_str();
    simulate->add_option("--max-iters", opt.max_iters, "iteration budget")->capture_default_str();
    simulate->add_option("--x0-const", opt.x0_const, "start from a constant vector");
    simulate->add_option("--trace", opt.trace_path, "write the error trace CSV to a file");

    CLI::App* sweep = app.add_subcommand("sweep", "table over a swept parameter");
    add_common(sweep, false);
    sweep->add_option("--sweep", opt.sweep_var, "swept variable")
        ->required()
        ->check(CLI::IsMember({"n", "r", "m"}));
    sweep->add_option("--from", opt.from, "first value")->required();
    sweep->add_option("--to", opt.to, "last value")->required();
    sweep->add_option("--step", opt.step, "stride")->capture_default_str();

    CLI::App* tradeoff = app.add_subcommand("tradeoff", "power/latency trade-off over radii");
    add_common(tradeoff, true);
    tradeoff->add_option("--r-max", opt.r_max, "largest radius to scan")->required();
    tradeoff->add_option("--alpha", opt.alpha, "path-loss exponent")->required();
    tradeoff->add_option("--p-max", opt.p_max, "power cap (minimize time)");
    tradeoff->add_option("--t-max", opt.t_max, "time cap (minimize power)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*analyze) run_analyze(opt);
        else if (*spectrum) run_spectrum(opt);
        else if (*simulate) run_simulate(opt);
        else if (*sweep) run_sweep(opt);
        else run_tradeoff(opt);
    } catch (const InvalidSpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OutOfRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedParityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DisconnectedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
