// zetalab: spectral zeta functions of circular graphs from the command line.
//
// Every subcommand renders one table, as CSV (default) or JSON, to stdout or
// atomically to --out. Identical invocations produce byte-identical output
// regardless of --threads.

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "zetalab/zetalab.hpp"

namespace {

using std::complex;
using namespace zetalab;

struct OutputOptions {
    std::string out_path;
    std::string format = "csv";
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.out_path, "write the table to this file");
    cmd->add_option("--format", out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const Table& t, const OutputOptions& out) {
    const std::string text =
        out.format == "json" ? render_json(t) : render_csv(t);
    if (out.out_path.empty())
        std::cout << text;
    else
        atomic_write_file(out.out_path, text);
}

Cell opt_cell(double v, bool present) {
    if (!present) return std::monostate{};
    return v;
}

Table convergence_table(const std::vector<ConvergenceRow>& rows) {
    Table t;
    t.columns = {"n",         "sigma",    "tau",    "raw_re", "raw_im",
                 "scaled_re", "scaled_im", "ref_re", "ref_im", "deviation"};
    for (const auto& r : rows) {
        t.add_row({r.n, r.s.real(), r.s.imag(), r.raw.real(), r.raw.imag(),
                   r.scaled.real(), r.scaled.imag(),
                   opt_cell(r.reference.real(), r.has_reference),
                   opt_cell(r.reference.imag(), r.has_reference),
                   opt_cell(r.deviation, !std::isnan(r.deviation))});
    }
    return t;
}

GridFunction read_grid_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("cannot open grid file " + path);
    GridFunction g;
    std::string line;
    bool header_seen = false;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // "x,value"
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw error("grid file: expected 'x,value' rows");
        g.samples.push_back(std::stod(line.substr(comma + 1)));
    }
    if (g.size() < 2) throw error("grid file: need at least 2 samples");
    return g;
}

int run(int argc, char** argv) {
    CLI::App app{"spectral zeta functions of circular graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // app-wide flags may follow the subcommand
    unsigned threads = 0;
    app.add_option("--threads", threads,
                   "cap worker threads (default: all cores; results do not "
                   "depend on this)");

    // ---- spectrum ----------------------------------------------------
    std::string family = "circular";
    std::int64_t spectrum_n = 9;
    bool squares = false;
    OutputOptions spectrum_out;
    auto* spectrum = app.add_subcommand("spectrum", "positive Dirac spectrum");
    spectrum->add_option("--family", family, "circular | complete | star")
        ->check(CLI::IsMember({"circular", "complete", "star"}));
    spectrum->add_option("--n", spectrum_n, "number of vertices")->required();
    spectrum->add_flag("--squares", squares, "also emit lambda^2");
    add_output_options(spectrum, spectrum_out);

    // ---- zeta eval ----------------------------------------------------
    std::int64_t zeta_n = 0;
    double zeta_sigma = 0.0, zeta_tau = 0.0;
    bool want_deriv = false, forms = false, laplace = false;
    OutputOptions zeta_out;
    auto* zeta_cmd = app.add_subcommand("zeta", "evaluate zeta_n(s)");
    auto* zeta_eval_cmd = zeta_cmd->add_subcommand("eval", "single evaluation");
    zeta_eval_cmd->add_option("--n", zeta_n)->required();
    zeta_eval_cmd->add_option("--sigma", zeta_sigma)->required();
    zeta_eval_cmd->add_option("--tau", zeta_tau);
    zeta_eval_cmd->add_flag("--derivative", want_deriv, "also emit zeta_n'(s)");
    zeta_eval_cmd->add_flag("--forms", forms,
                            "double the value (form-Laplacian multiplicity)");
    zeta_eval_cmd->add_flag("--laplace", laplace,
                            "Laplace zeta: evaluate at 2s");
    add_output_options(zeta_eval_cmd, zeta_out);

    // ---- special ------------------------------------------------------
    double c_sigma = 0.0, c_tau = 0.0;
    OutputOptions c_out;
    auto* special = app.add_subcommand("special", "closed-form special functions");
    auto* c_cmd = special->add_subcommand("c-of-s", "limit density c(s)");
    c_cmd->add_option("--sigma", c_sigma)->required();
    c_cmd->add_option("--tau", c_tau);
    add_output_options(c_cmd, c_out);

    // ---- roots ----------------------------------------------------------
    auto* roots = app.add_subcommand("roots", "zeros of zeta_n");
    std::int64_t find_n = 0;
    std::string window_str, rect_str, seed_str = "1.01,0.74", schedule_str;
    double grid_step = 0.25, root_tol = 1e-12;
    int samples_per_edge = 64;
    OutputOptions find_out, count_out, track_out;

    auto* find_cmd = roots->add_subcommand("find", "grid-seeded Newton scan");
    find_cmd->add_option("--n", find_n)->required();
    find_cmd->add_option("--window", window_str, "sigma0,sigma1,tau0,tau1")
        ->required();
    find_cmd->add_option("--grid-step", grid_step);
    find_cmd->add_option("--tol", root_tol);
    add_output_options(find_cmd, find_out);

    std::int64_t count_n = 0;
    auto* count_cmd =
        roots->add_subcommand("count", "argument-principle rectangle count");
    count_cmd->add_option("--n", count_n)->required();
    count_cmd->add_option("--rect", rect_str, "sigma0,sigma1,tau0,tau1")
        ->required();
    count_cmd->add_option("--samples-per-edge", samples_per_edge);
    add_output_options(count_cmd, count_out);

    auto* track_cmd =
        roots->add_subcommand("track", "continuation along an n schedule");
    track_cmd->add_option("--schedule", schedule_str, "e.g. 5000x2^12")
        ->required();
    track_cmd->add_option("--seed", seed_str, "re,im");
    track_cmd->add_option("--tol", root_tol);
    add_output_options(track_cmd, track_out);

    // ---- identities ---------------------------------------------------
    auto* identities = app.add_subcommand("identities", "exact identities");
    std::int64_t basel_n = 0, trace_n = 0, clt_n = 0;
    int trace_m = 1, clt_iterations = 1;
    std::string clt_input;
    OutputOptions basel_out, trace_out, clt_out;

    auto* basel_cmd = identities->add_subcommand("basel", "zeta_n(2) exactly");
    basel_cmd->add_option("--n", basel_n)->required();
    add_output_options(basel_cmd, basel_out);

    auto* trace_cmd = identities->add_subcommand("trace", "trace moments");
    trace_cmd->add_option("--n", trace_n)->required();
    trace_cmd->add_option("--m", trace_m)->required();
    add_output_options(trace_cmd, trace_out);

    auto* clt_cmd =
        identities->add_subcommand("clt", "central-limit operator T_n");
    clt_cmd->add_option("--input", clt_input, "grid CSV (columns x,value)")
        ->required();
    clt_cmd->add_option("--n", clt_n)->required();
    clt_cmd->add_option("--iterations", clt_iterations);
    add_output_options(clt_cmd, clt_out);

    // ---- quad -----------------------------------------------------------
    auto* quad = app.add_subcommand("quad", "K-derivative quadrature");
    std::string integrand = "csc-pow";
    double quad_s = 0.5, quad_x = 0.3, quad_lo = 0.0, quad_hi = 1.0;
    std::int64_t quad_n = 10000;
    OutputOptions qi_out, qk_out;

    auto* qi_cmd = quad->add_subcommand("integrate", "corrected midpoint rule");
    qi_cmd->add_option("--integrand", integrand,
                       "csc-pow|cot|log-sin|power|recip|exp|log|sin|mobius");
    qi_cmd->add_option("--s", quad_s, "parameter for csc-pow/power");
    qi_cmd->add_option("--n", quad_n, "number of intervals");
    auto* lo_opt = qi_cmd->add_option("--lo", quad_lo);
    auto* hi_opt = qi_cmd->add_option("--hi", quad_hi);
    add_output_options(qi_cmd, qi_out);

    auto* qk_cmd = quad->add_subcommand("kderiv", "K-derivative at a point");
    qk_cmd->add_option("--integrand", integrand);
    qk_cmd->add_option("--s", quad_s);
    qk_cmd->add_option("--x", quad_x)->required();
    add_output_options(qk_cmd, qk_out);

    // ---- limits ---------------------------------------------------------
    auto* limits_cmd = app.add_subcommand("limits", "scaling experiments");
    std::string n_schedule = "1000x2^4", s_str = "2,0", grid_str;
    double crit_tau = 0.0;
    std::int64_t chi_grid_n = 1000;
    OutputOptions lim_out;

    auto* right_cmd = limits_cmd->add_subcommand("right", "Re(s) > 1 regime");
    auto* left_cmd = limits_cmd->add_subcommand("left", "Re(s) <= 0 regime");
    auto* chi_cmd = limits_cmd->add_subcommand("chi", "critical-strip regime");
    auto* crit_cmd =
        limits_cmd->add_subcommand("critical", "Re(s) = 1 growth");
    for (CLI::App* c : {right_cmd, left_cmd, chi_cmd}) {
        c->add_option("--n-schedule", n_schedule, "e.g. 1000x2^6");
        c->add_option("--s", s_str, "re,im");
        add_output_options(c, lim_out);
    }
    chi_cmd->add_option("--grid", grid_str,
                        "sigma0,sigma1,tau0,tau1,step: emit a |chi| grid");
    chi_cmd->add_option("--n", chi_grid_n, "n for the grid mode");
    crit_cmd->add_option("--n-schedule", n_schedule);
    crit_cmd->add_option("--tau", crit_tau);
    add_output_options(crit_cmd, lim_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    thread_override() = threads;

    try {
        if (*spectrum) {
            Table t;
            if (family == "circular") {
                t.columns = squares ? std::vector<std::string>{"lambda",
                                                               "lambda_sq"}
                                    : std::vector<std::string>{"lambda"};
                for (const double v : circular_positive_spectrum(spectrum_n)) {
                    if (squares)
                        t.add_row({v, v * v});
                    else
                        t.add_row({v});
                }
            } else if (family == "star") {
                t.columns = {"lambda", "multiplicity"};
                t.add_row({1.0, spectrum_n - 1});
                t.add_row({std::sqrt(static_cast<double>(spectrum_n)),
                           std::int64_t{1}});
            } else {
                const auto d = ClosedFormZeta::complete(spectrum_n);
                t.columns = {"lambda", "log2_multiplicity"};
                t.add_row({std::sqrt(static_cast<double>(spectrum_n)),
                           d.log_multiplicity});
            }
            emit(t, spectrum_out);
        } else if (*zeta_eval_cmd) {
            complex<double> s{zeta_sigma, zeta_tau};
            if (laplace) s *= 2.0;
            ZetaEvaluation e = zeta_eval(zeta_n, s, want_deriv);
            if (forms) {
                e.value *= 2.0;
                e.derivative *= 2.0;
            }
            Table t;
            t.columns = {"n", "sigma", "tau", "re", "im", "dre", "dim"};
            t.add_row({e.n, zeta_sigma, zeta_tau, e.value.real(),
                       e.value.imag(), opt_cell(e.derivative.real(), want_deriv),
                       opt_cell(e.derivative.imag(), want_deriv)});
            emit(t, zeta_out);
        } else if (*c_cmd) {
            const complex<double> v = c_of_s({c_sigma, c_tau});
            Table t;
            t.columns = {"re", "im"};
            t.add_row({v.real(), v.imag()});
            emit(t, c_out);
        } else if (*find_cmd) {
            const auto w = parse_reals(window_str, 4);
            const ScanResult res = scan_window(
                find_n, {w[0], w[1], w[2], w[3]}, grid_step, root_tol);
            Table t;
            t.comments = {"seeds " + std::to_string(res.seeds),
                          "failed_seeds " + std::to_string(res.failures)};
            t.columns = {"n", "sigma", "tau", "residual", "iterations"};
            for (const auto& r : res.roots)
                t.add_row({r.n, r.location.real(), r.location.imag(),
                           r.residual, std::int64_t{r.iterations}});
            emit(t, find_out);
        } else if (*count_cmd) {
            const auto w = parse_reals(rect_str, 4);
            const int count = contour_count(
                count_n, {w[0], w[1], w[2], w[3]}, samples_per_edge);
            Table t;
            t.columns = {"n", "count"};
            t.add_row({count_n, std::int64_t{count}});
            emit(t, count_out);
        } else if (*track_cmd) {
            const auto sched = parse_schedule(schedule_str);
            const auto seed = parse_reals(seed_str, 2);
            const auto rows = track_roots(sched, {seed[0], seed[1]}, root_tol);
            Table t;
            t.columns = {"n", "sigma", "tau", "residual", "iterations"};
            for (const auto& r : rows)
                t.add_row({r.n, r.location.real(), r.location.imag(),
                           r.residual, std::int64_t{r.iterations}});
            emit(t, track_out);
        } else if (*basel_cmd) {
            const BaselResult b = discrete_basel(basel_n);
            std::cout << b.exact.to_string() << "\n";
            if (!basel_out.out_path.empty()) {
                Table t;
                t.columns = {"n", "exact", "zeta_value"};
                t.add_row({basel_n, b.exact.to_string(), b.zeta_value});
                emit(t, basel_out);
            }
        } else if (*trace_cmd) {
            const TraceMoment tm = trace_moment(trace_n, trace_m);
            Table t;
            t.columns = {"n", "m", "zeta_side", "combinatorial_side"};
            t.add_row({trace_n, std::int64_t{trace_m}, tm.zeta_side,
                       tm.combinatorial_side});
            emit(t, trace_out);
        } else if (*clt_cmd) {
            GridFunction g = read_grid_csv(clt_input);
            for (int i = 0; i < clt_iterations; ++i)
                g = central_limit_operator(g, clt_n);
            Table t;
            t.columns = {"x", "value"};
            const std::int64_t m = g.size();
            for (std::int64_t j = 0; j < m; ++j)
                t.add_row({static_cast<double>(j) / static_cast<double>(m),
                           g.samples[static_cast<std::size_t>(j)]});
            emit(t, clt_out);
        } else if (*qi_cmd) {
            const IntegrandBundle b = make_named_integrand(integrand, quad_s);
            const double lo = lo_opt->count() ? quad_lo : b.lo;
            const double hi = hi_opt->count() ? quad_hi : b.hi;
            const QuadratureReport rep =
                corrected_midpoint_integrate(b, lo, hi, quad_n);
            Table t;
            t.columns = {"integrand", "s", "n", "estimate", "correction_total"};
            t.add_row({integrand, quad_s, rep.n_intervals, rep.estimate,
                       rep.correction_total});
            emit(t, qi_out);
        } else if (*qk_cmd) {
            const IntegrandBundle b = make_named_integrand(integrand, quad_s);
            Table t;
            t.columns = {"integrand", "s", "x", "k"};
            t.add_row({integrand, quad_s, quad_x, k_derivative(b, quad_x)});
            emit(t, qk_out);
        } else if (*right_cmd || *left_cmd || *crit_cmd ||
                   (*chi_cmd && grid_str.empty())) {
            const auto sched = parse_schedule(n_schedule);
            std::vector<ConvergenceRow> rows;
            if (*crit_cmd) {
                for (const std::int64_t n : sched)
                    rows.push_back(critical_line_growth(n, crit_tau));
            } else {
                const auto sv = parse_reals(s_str, 2);
                const complex<double> s{sv[0], sv[1]};
                for (const std::int64_t n : sched)
                    rows.push_back(*right_cmd  ? scaled_zeta_right(n, s)
                                   : *left_cmd ? scaled_zeta_left(n, s)
                                               : chi(n, s));
            }
            emit(convergence_table(rows), lim_out);
        } else if (*chi_cmd) {
            // plotting grid; may extend past the strip, skips c(s) poles
            const auto gr = parse_reals(grid_str, 5);
            Table t;
            t.columns = {"sigma", "tau", "chi_re", "chi_im", "chi_abs"};
            for (double tau = gr[2]; tau <= gr[3] + 1e-12; tau += gr[4])
                for (double sig = gr[0]; sig <= gr[1] + 1e-12; sig += gr[4]) {
                    try {
                        const auto v = chi_extended(chi_grid_n, {sig, tau});
                        t.add_row({sig, tau, v.real(), v.imag(), std::abs(v)});
                    } catch (const pole_error&) {
                        t.add_row({sig, tau, std::monostate{}, std::monostate{},
                                   std::monostate{}});
                    }
                }
            emit(t, lim_out);
        }
        return 0;
    } catch (const zetalab::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
