// Command-line front-end for the thermoptics shared library.
//
// Subcommands: compute, sweep, figure2, optics, verify.
// Exit codes: 0 success, 1 numerical failure, 2 usage/config error.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "thermoptics.h"

namespace {

constexpr const char* kCsvHeader = "model,J,muB,kT,K,C,f_density,m,s,comp_sum,flags";

// Shortest round-trip decimal rendering.
std::string fmt(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct CliError {
    int code;
    std::string message;
};

void check(int status, const std::string& what) {
    if (status == TP_OK) return;
    // argument-level rejections are usage errors, the rest are numerical
    const int code =
        (status == TP_ERR_ARG || status == TP_ERR_INVALID_MAP) ? 2 : 1;
    throw CliError{code, what + ": " + tp_status_string(status)};
}

int env_threads() {
    if (const char* e = std::getenv("THERMOPTICS_THREADS")) {
        const int v = std::atoi(e);
        if (v > 0) return v;
    }
    return 0;  // auto
}

template <class Fn>
void parallel_rows(long n, int threads, Fn fn) {
    int nt = threads > 0 ? threads
                         : static_cast<int>(std::thread::hardware_concurrency());
    if (nt < 1) nt = 1;
    if (nt == 1 || n < 2) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::optional<CliError>> errs(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (long i = t; i < n; i += nt) fn(i);
            } catch (const CliError& e) {
                errs[static_cast<size_t>(t)] = e;
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errs)
        if (e) throw *e;
}

struct Context {
    tp_context* raw;
    Context() : raw(tp_context_new()) {}
    ~Context() { tp_context_free(raw); }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;
};

void ascii_plot(const std::vector<double>& xs, const std::vector<double>& ys,
                const std::string& label) {
    constexpr int W = 72, H = 20;
    if (xs.empty()) return;
    double ymin = ys[0], ymax = ys[0], xmin = xs[0], xmax = xs[0];
    for (size_t i = 0; i < ys.size(); ++i) {
        ymin = std::min(ymin, ys[i]);
        ymax = std::max(ymax, ys[i]);
        xmin = std::min(xmin, xs[i]);
        xmax = std::max(xmax, xs[i]);
    }
    if (ymax == ymin) ymax = ymin + 1.0;
    if (xmax == xmin) xmax = xmin + 1.0;
    std::vector<std::string> grid(H, std::string(W, ' '));
    for (size_t i = 0; i < xs.size(); ++i) {
        const int col = static_cast<int>((xs[i] - xmin) / (xmax - xmin) * (W - 1));
        const int row = static_cast<int>((ys[i] - ymin) / (ymax - ymin) * (H - 1));
        grid[static_cast<size_t>(H - 1 - row)][static_cast<size_t>(col)] = '*';
    }
    std::cout << label << "  [" << fmt(ymin) << ", " << fmt(ymax) << "]\n";
    for (const auto& line : grid) std::cout << "|" << line << "|\n";
    std::cout << "x: [" << fmt(xmin) << ", " << fmt(xmax) << "]\n";
}

// ---- sweep ----------------------------------------------------------------

struct SweepConfig {
    std::string model = "ti";
    std::string axis = "B";
    double min = 0.0, max = 0.0, step = 0.0;
    double J = 0.0, mu = 1.0, B = 0.0;
    std::vector<double> kT = {1.0};
    double abs_tol = 1e-10;
    int max_panels = 4096;
    double diff_step = 0.0;
    int threads = 0;
    std::string output = "sweep.csv";
};

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{2, "cannot open config file: " + path};
    SweepConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CliError{2, "config line " + std::to_string(lineno) +
                                  ": expected key = value"};
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "model") cfg.model = val;
            else if (key == "axis") cfg.axis = val;
            else if (key == "min") cfg.min = std::stod(val);
            else if (key == "max") cfg.max = std::stod(val);
            else if (key == "step") cfg.step = std::stod(val);
            else if (key == "J") cfg.J = std::stod(val);
            else if (key == "mu") cfg.mu = std::stod(val);
            else if (key == "B") cfg.B = std::stod(val);
            else if (key == "kT") cfg.kT = parse_list(val);
            else if (key == "abs_tol") cfg.abs_tol = std::stod(val);
            else if (key == "max_panels") cfg.max_panels = std::stoi(val);
            else if (key == "diff_step") cfg.diff_step = std::stod(val);
            else if (key == "threads") cfg.threads = std::stoi(val);
            else if (key == "output") cfg.output = val;
            else throw CliError{2, "config: unknown key '" + key + "'"};
        } catch (const std::invalid_argument&) {
            throw CliError{2, "config line " + std::to_string(lineno) +
                                  ": bad value for '" + key + "'"};
        }
    }
    return cfg;
}

std::vector<double> make_grid(double min, double max, double step) {
    if (!(step > 0.0) || !(min < max)) throw CliError{2, "grid requires min < max and step > 0"};
    const long n = static_cast<long>(std::floor((max - min) / step + 0.5)) + 1;
    if (n < 1 || n > 1000000) throw CliError{2, "grid size out of range"};
    std::vector<double> g(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) g[static_cast<size_t>(i)] = min + step * i;
    return g;
}

struct Row {
    double J, muB, kT, K, C, f, m, s;
    std::string flags;
};

std::string render_row(const std::string& model, const Row& r) {
    std::string out = model;
    for (double v : {r.J, r.muB, r.kT, r.K, r.C, r.f, r.m, r.s, r.m * r.m + r.s}) {
        if (!std::isfinite(v)) throw CliError{1, "non-finite value in CSV row"};
        out += ',';
        out += fmt(v);
    }
    out += ',';
    out += r.flags;
    return out;
}

Row compute_row(const Context& ctx, const std::string& model, double J, double mu,
                double B, double kT) {
    Row r{};
    r.J = J;
    r.muB = mu * B;
    r.kT = kT;
    r.C = mu * B / kT;
    tp_observables obs{};
    if (model == "free") {
        r.K = 0.0;
        check(tp_free_spin(r.C, &obs), "free-spin evaluation");
    } else if (model == "xy") {
        r.K = J / (2.0 * kT);
        check(tp_xy(ctx.raw, r.K, r.C, &obs), "xy evaluation");
    } else if (model == "ti") {
        r.K = J / kT;
        int flag = 0;
        check(tp_ti(ctx.raw, r.K, r.C, &obs, &flag), "ti evaluation");
        if (flag) r.flags = "gap_singularity";
    } else if (model == "ising") {
        r.K = J / kT;
        double lp, lm;
        check(tp_ising_transfer(r.K, r.C, &lp, &lm, &obs.f_density),
              "transfer matrix");
        // classical chain: m, s from the dominant eigenvalue via differences
        // are not part of the sweep schema; report m = s = 0.
        obs.m = 0.0;
        obs.s = 0.0;
    } else {
        throw CliError{2, "unknown model '" + model + "'"};
    }
    r.f = obs.f_density;
    r.m = obs.m;
    r.s = obs.s;
    return r;
}

int run_sweep(const SweepConfig& cfg, bool plot) {
    if (cfg.model != "free" && cfg.model != "ising" && cfg.model != "xy" &&
        cfg.model != "ti")
        throw CliError{2, "unknown model '" + cfg.model + "'"};
    if (cfg.axis != "B" && cfg.axis != "x")
        throw CliError{2, "axis must be 'B' (raw field) or 'x' (reduced field)"};
    for (double t : cfg.kT)
        if (!(t > 0.0)) throw CliError{2, "kT must be positive"};

    const auto grid = make_grid(cfg.min, cfg.max, cfg.step);
    Context ctx;
    check(tp_context_set_quadrature(ctx.raw, cfg.abs_tol, cfg.max_panels, 0),
          "context setup");
    check(tp_context_set_diff(ctx.raw, cfg.diff_step, 1), "context setup");
    const int threads = cfg.threads > 0 ? cfg.threads : env_threads();

    std::string body = kCsvHeader;
    body += '\n';
    std::vector<double> plot_x, plot_y;
    for (double kT : cfg.kT) {
        std::vector<Row> rows(grid.size());
        parallel_rows(static_cast<long>(grid.size()), threads, [&](long i) {
            const double v = grid[static_cast<size_t>(i)];
            // axis 'x' drives the reduced field directly (mu and kT fold to 1).
            const bool reduced = cfg.axis == "x";
            rows[static_cast<size_t>(i)] =
                compute_row(ctx, cfg.model, cfg.J, reduced ? 1.0 : cfg.mu, v,
                            reduced ? 1.0 : kT);
        });
        for (size_t i = 0; i < rows.size(); ++i) {
            body += render_row(cfg.model, rows[i]);
            body += '\n';
            plot_x.push_back(grid[i]);
            plot_y.push_back(rows[i].s);
        }
        if (cfg.axis == "x") break;  // reduced axis ignores the kT list
    }

    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw CliError{1, "cannot write " + cfg.output};
    out << body;
    out.close();
    if (plot) ascii_plot(plot_x, plot_y, "s vs " + cfg.axis);
    std::cout << "wrote " << cfg.output << "\n";
    return 0;
}

// ---- optics ---------------------------------------------------------------

int run_optics(double d, double sigma, double kappa, double ymin, double ymax,
               double ystep, const std::string& map_model, double kT,
               const std::string& output, bool plot) {
    const bool mapped = !map_model.empty();
    if (mapped && map_model != "free")
        throw CliError{2, "--map supports only 'free'"};
    const auto grid = make_grid(ymin, ymax, ystep);

    std::string body = "y,intensity,V,P,V2P2\n";
    std::vector<double> plot_y;
    for (double v : grid) {
        double yy = v, dd = d, ss = sigma;
        if (mapped)
            check(tp_thermo_slit_map(v, kT, 0, &yy, &dd, &ss), "slit map");
        double I, V, P;
        check(tp_double_slit_intensity(yy, dd, ss, kappa * yy, 1.0, &I),
              "intensity");
        check(tp_visibility_predictability(yy, dd, ss, &V, &P, nullptr, nullptr),
              "visibility");
        for (double q : {v, I, V, P, V * V + P * P}) {
            if (!std::isfinite(q)) throw CliError{1, "non-finite optics value"};
        }
        body += fmt(v);
        body += ',';
        body += fmt(I);
        body += ',';
        body += fmt(V);
        body += ',';
        body += fmt(P);
        body += ',';
        body += fmt(V * V + P * P);
        body += '\n';
        plot_y.push_back(I);
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw CliError{1, "cannot write " + output};
    out << body;
    out.close();
    if (plot) ascii_plot(grid, plot_y, "intensity vs y");
    std::cout << "wrote " << output << "\n";
    return 0;
}

// ---- compute --------------------------------------------------------------

int run_compute(const std::string& model, std::optional<double> x,
                std::optional<double> K, std::optional<double> C,
                std::optional<double> J, std::optional<double> B,
                std::optional<double> kT, double mu, double abs_tol) {
    Context ctx;
    check(tp_context_set_quadrature(ctx.raw, abs_tol, 4096, 0), "context setup");

    double k, c;
    if (J && B && kT) {
        if (!(*kT > 0.0)) throw CliError{2, "--kT must be positive"};
        c = mu * (*B) / (*kT);
        k = model == "xy" ? *J / (2.0 * (*kT)) : *J / (*kT);
    } else if (K || C) {
        k = K.value_or(0.0);
        c = C.value_or(0.0);
    } else if (x) {
        k = 0.0;
        c = *x;
    } else {
        throw CliError{2, "supply --x, (--K, --C), or (--J, --B, --kT)"};
    }

    tp_observables obs{};
    if (model == "free") {
        check(tp_free_spin(x.value_or(c), &obs), "free-spin evaluation");
    } else if (model == "xy") {
        check(tp_xy(ctx.raw, k, c, &obs), "xy evaluation");
    } else if (model == "ti") {
        int flag = 0;
        check(tp_ti(ctx.raw, k, c, &obs, &flag), "ti evaluation");
        double gap;
        check(tp_ti_gap(k, c, &gap), "ti gap");
        std::cout << "gap=" << fmt(gap) << "\n";
        if (flag) std::cout << "flags=gap_singularity\n";
    } else if (model == "ising") {
        double lp, lm, f;
        check(tp_ising_transfer(k, c, &lp, &lm, &f), "transfer matrix");
        std::cout << "lambda_plus=" << fmt(lp) << "\nlambda_minus=" << fmt(lm)
                  << "\nf_density=" << fmt(f) << "\n";
        return 0;
    } else {
        throw CliError{2, "unknown model '" + model + "'"};
    }
    std::cout << "f_density=" << fmt(obs.f_density) << "\nm=" << fmt(obs.m)
              << "\ns=" << fmt(obs.s)
              << "\ncomp_sum=" << fmt(obs.m * obs.m + obs.s) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thermoptics: spin-chain thermodynamics as double-slit interference"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate one parameter point");
    std::string model;
    compute->add_option("model", model, "free | ising | xy | ti")->required();
    std::optional<double> x, K, C, J, B, kT;
    double mu = 1.0, abs_tol = 1e-10;
    compute->add_option("--x", x, "reduced field E/kT (free spins)");
    compute->add_option("--K", K, "reduced coupling");
    compute->add_option("--C", C, "reduced field");
    compute->add_option("--J", J, "coupling energy");
    compute->add_option("--B", B, "magnetic field");
    compute->add_option("--kT", kT, "temperature (energy units)");
    compute->add_option("--mu", mu, "magnetic moment");
    compute->add_option("--abs-tol", abs_tol, "quadrature tolerance");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep to CSV");
    std::string config_path;
    bool plot = false;
    sweep->add_option("--config", config_path, "key = value config file")->required();
    sweep->add_flag("--plot", plot, "ASCII chart of the susceptibility column");

    // figure2 preset
    auto* fig2 = app.add_subcommand(
        "figure2", "transverse-Ising field sweep at J=3 for kT in {0.05, 0.5, 2}");
    std::string fig2_out = "figure2.csv";
    int fig2_threads = 0;
    bool fig2_plot = false;
    fig2->add_option("--output", fig2_out, "output CSV path");
    fig2->add_option("--threads", fig2_threads, "worker threads (0 = auto)");
    fig2->add_flag("--plot", fig2_plot, "ASCII chart");

    // optics
    auto* optics = app.add_subcommand("optics", "double-slit scan to CSV");
    double d = 1.0, sigma = 1.0, kappa = 0.0, ymin = -3.0, ymax = 3.0,
           ystep = 0.01, okT = 1.0;
    std::string map_model, optics_out = "optics.csv";
    bool optics_plot = false;
    optics->add_option("--d", d, "slit separation");
    optics->add_option("--sigma", sigma, "Gaussian slit width");
    optics->add_option("--kappa", kappa, "linear phase coefficient");
    optics->add_option("--ymin", ymin);
    optics->add_option("--ymax", ymax);
    optics->add_option("--ystep", ystep);
    optics->add_option("--map", map_model,
                       "treat the grid as spin energies mapped onto the screen");
    optics->add_option("--kT", okT, "temperature for --map");
    optics->add_option("--output", optics_out, "output CSV path");
    optics->add_flag("--plot", optics_plot, "ASCII chart");

    // verify
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    std::string level = "fast";
    verify->add_option("--level", level, "fast | full")
        ->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        if (*compute)
            return run_compute(model, x, K, C, J, B, kT, mu, abs_tol);
        if (*sweep)
            return run_sweep(load_config(config_path), plot);
        if (*fig2) {
            SweepConfig cfg;
            cfg.model = "ti";
            cfg.axis = "B";
            cfg.min = 0.0;
            cfg.max = 6.0;
            cfg.step = 0.01;
            cfg.J = 3.0;
            cfg.kT = {0.05, 0.5, 2.0};
            cfg.output = fig2_out;
            cfg.threads = fig2_threads;
            return run_sweep(cfg, fig2_plot);
        }
        if (*optics)
            return run_optics(d, sigma, kappa, ymin, ymax, ystep, map_model, okT,
                              optics_out, optics_plot);
        if (*verify)
            return tp_verify(level == "full" ? 1 : 0);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
