// Copyright 2026 The hamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hamsim/bench.hpp"
#include "hamsim/bessel.hpp"
#include "hamsim/chebyshev.hpp"
#include "hamsim/digital.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/grover.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/projector_algebra.hpp"

namespace {

using namespace hamsim;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBreach = 3;
constexpr int kExitIo = 4;

struct Flags {
    std::string method, length, time, dt, order, steps, epsilon, seed, norm, config, output;
};

struct Context {
    ExperimentConfig cfg;
    ConfigMap given; // keys set by the config file or flags
};

Context build_context(const Flags &f) {
    Context ctx;
    if (!f.config.empty()) {
        ctx.given = read_config_file(f.config);
    }
    const std::pair<const char *, const std::string *> flags[] = {
        {"method", &f.method}, {"length", &f.length},   {"time", &f.time},
        {"dt", &f.dt},         {"order", &f.order},     {"steps", &f.steps},
        {"epsilon", &f.epsilon}, {"seed", &f.seed},     {"norm", &f.norm},
        {"output", &f.output},
    };
    for (const auto &[key, value] : flags) {
        if (!value->empty()) {
            ctx.given[key] = *value;
        }
    }
    apply_config(ctx.given, ctx.cfg);
    return ctx;
}

bool given(const Context &ctx, const char *key) { return ctx.given.count(key) != 0; }

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

void write_side_files(const std::string &command, const ConfigMap &resolved,
                      const std::string &output) {
    if (output.empty()) {
        write_manifest(std::cerr, command, resolved);
        return;
    }
    const std::string path = output + ".manifest";
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_manifest(out, command, resolved);
}

void emit(const std::vector<ExperimentRecord> &records, const std::string &output, ScanKind kind) {
    if (output.empty()) {
        write_csv(std::cout, records);
    } else {
        emit_outputs(records, output, kind);
    }
}

int cmd_evolve(const Context &ctx) {
    const auto resolved = resolve(ctx.cfg);
    const auto rec = run_experiment(resolved);
    emit({rec}, ctx.cfg.output, ScanKind::Error);
    write_side_files("evolve", describe(resolved), ctx.cfg.output);
    return kExitOk;
}

int cmd_scan_error(const Context &ctx) {
    ErrorScanGrid grid;
    grid.length = ctx.cfg.length;
    grid.t = ctx.cfg.t;
    grid.seed = ctx.cfg.seed;
    grid.norm = ctx.cfg.norm;
    if (given(ctx, "method")) {
        grid.methods = {ctx.cfg.method};
    }
    if (given(ctx, "dt") && ctx.cfg.dt > 0.0) {
        grid.dts = {ctx.cfg.dt};
    }
    if (ctx.cfg.order != kAuto) {
        grid.max_order = ctx.cfg.order;
    }
    if (ctx.cfg.steps != kAuto) {
        if (ctx.cfg.steps < 1) {
            throw InvalidInput("steps must be positive");
        }
        grid.max_log2_steps = static_cast<int>(std::floor(std::log2(static_cast<double>(ctx.cfg.steps))));
        grid.min_log2_steps = std::min(grid.min_log2_steps, grid.max_log2_steps);
    }
    const auto records = run_error_scan(grid, worker_count());
    emit(records, ctx.cfg.output, ScanKind::Error);
    auto manifest = describe(ctx.cfg);
    manifest["max_order"] = std::to_string(grid.max_order);
    manifest["log2_steps"] =
        std::to_string(grid.min_log2_steps) + ".." + std::to_string(grid.max_log2_steps);
    manifest["records"] = std::to_string(records.size());
    write_side_files("scan-error", manifest, ctx.cfg.output);
    return kExitOk;
}

int cmd_scan_time(const Context &ctx) {
    TimeScanGrid grid;
    grid.length = ctx.cfg.length;
    grid.seed = ctx.cfg.seed;
    grid.norm = ctx.cfg.norm;
    if (given(ctx, "method")) {
        grid.methods = {ctx.cfg.method};
    }
    if (given(ctx, "dt") && ctx.cfg.dt > 0.0) {
        grid.series_dt = ctx.cfg.dt;
        grid.trotter_dts = {ctx.cfg.dt};
    }
    if (ctx.cfg.order != kAuto) {
        grid.reflection_order = grid.projection_order = ctx.cfg.order;
    }
    if (given(ctx, "time")) {
        std::vector<double> times;
        for (const double t : grid.times) {
            if (t <= ctx.cfg.t) {
                times.push_back(t);
            }
        }
        grid.times = times;
    }
    const auto records = run_time_scan(grid, worker_count());
    emit(records, ctx.cfg.output, ScanKind::Time);
    auto manifest = describe(ctx.cfg);
    manifest["records"] = std::to_string(records.size());
    write_side_files("scan-time", manifest, ctx.cfg.output);
    return kExitOk;
}

int cmd_grover(const Context &ctx) {
    const std::size_t n = given(ctx, "length") ? ctx.cfg.length : 64;
    if (n < 2) {
        throw InvalidInput("search size must be at least 2");
    }
    const double tol = 1e-10;
    const auto run = search_run(n);
    std::ostringstream out;
    out << "N = " << n << "\n"
        << "alpha = " << format_double(grover_angle(n)) << "\n"
        << "Q = " << run.steps << "\n"
        << "success_probability = " << format_double(run.success_probability) << "\n"
        << "integral_Q = " << format_double(integral_steps(n)) << "\n"
        << "kind,a,t,residual\n";
    double worst = equivalence_check_integral(n);
    const double big_t = 0.5 * std::numbers::pi * std::sqrt(static_cast<double>(n));
    out << "integral,1," << format_double(big_t) << ',' << format_double(worst) << '\n';
    for (const double a : {-1.0, -0.5, 0.3, 1.0}) {
        const double period = std::numbers::pi / (2.0 * rotation_rate(n, a));
        for (int k = 0; k < 20; ++k) {
            const double t = period * k / 20.0;
            const double r = a == 1.0 ? equivalence_check_fractional(n, t)
                                      : equivalence_check_unequal(n, a, t);
            worst = std::max(worst, r);
            out << (a == 1.0 ? "fractional," : "unequal,") << format_double(a) << ','
                << format_double(t) << ',' << format_double(r) << '\n';
        }
    }
    out << "worst = " << format_double(worst) << '\n';
    if (ctx.cfg.output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(ctx.cfg.output);
        if (!f || !(f << out.str())) {
            throw IoError("cannot write '" + ctx.cfg.output + "'");
        }
    }
    const bool ok = worst < tol && run.success_probability >= 1.0 - 1.0 / static_cast<double>(n);
    return ok ? kExitOk : kExitBreach;
}

int cmd_identities(const Context &ctx) {
    const int instances = ctx.cfg.steps != kAuto ? static_cast<int>(ctx.cfg.steps) : 100;
    const auto rows = run_identity_suite(instances, ctx.cfg.seed);
    bool ok = true;
    std::cout << "identity,instances,max_residual,tolerance,worst_seed,degenerate,status\n";
    for (const auto &r : rows) {
        ok = ok && r.passed();
        std::cout << r.name << ',' << r.instances << ',' << format_double(r.max_residual) << ','
                  << format_double(r.tolerance) << ',' << r.worst_seed << ',' << r.degenerate
                  << ',' << (r.passed() ? "ok" : "BREACH") << '\n';
    }
    return ok ? kExitOk : kExitBreach;
}

int cmd_digital(const Context &ctx) {
    const std::size_t length = given(ctx, "length") ? ctx.cfg.length : 16;
    const double t = given(ctx, "time") ? ctx.cfg.t : 20.0;
    const double eps = given(ctx, "epsilon") ? ctx.cfg.epsilon : 1e-6;
    const auto halves = laplacian_parts(length);
    const PartList parts = {halves.first, halves.second};
    const auto plan = plan_chebyshev(spectral_bounds(parts), t, eps, ChebyshevMode::Stepped,
                                     ctx.cfg.order);
    const auto x = random_initial_state(length, ctx.cfg.seed);
    std::vector<int> bits;
    for (int b = 16; b <= 32; ++b) {
        bits.push_back(b);
    }
    const auto work = static_cast<double>(plan.m) * plan.p;
    const int chosen = static_cast<int>(std::ceil(std::log2(work / eps))) + 6;
    if (chosen <= 52) {
        bits.push_back(chosen);
    }
    const auto rows = roundoff_scan(parts, plan, bits, Rounding::Truncate, x);
    std::cout << "bits,error,exponent_bumps\n";
    for (const auto &r : rows) {
        std::cout << r.bits << ',' << format_double(r.error) << ',' << r.exponent_bumps << '\n';
    }
    const std::vector<RoundoffRow> fit(rows.begin(), rows.begin() + 17);
    const double slope = roundoff_slope(fit);
    std::cout << "m = " << plan.m << "\np = " << plan.p << "\nslope = " << format_double(slope)
              << "\nchosen_bits = " << chosen << '\n';
    bool ok = slope >= -1.3 && slope <= -0.7;
    if (chosen <= 52) {
        ok = ok && rows.back().error < eps / 10.0;
    }
    return ok ? kExitOk : kExitBreach;
}

int cmd_bessel(const Context &ctx) {
    const double t = given(ctx, "time") ? ctx.cfg.t : 10.0;
    const int p = ctx.cfg.order != kAuto ? ctx.cfg.order : 20;
    const auto table = bessel_table(t, p);
    std::cout << "k,J_k\n";
    for (int k = 0; k <= table.order(); ++k) {
        std::cout << k << ',' << format_double(table[k]) << '\n';
    }
    return kExitOk;
}

int cmd_report(const Context &ctx) {
    const auto rows = complexity_report(ctx.cfg.t, ctx.cfg.epsilon, ctx.cfg.length,
                                        ctx.cfg.length);
    if (ctx.cfg.output.empty()) {
        write_complexity_csv(std::cout, rows);
    } else {
        std::ofstream f(ctx.cfg.output);
        if (!f) {
            throw IoError("cannot open '" + ctx.cfg.output + "' for writing");
        }
        write_complexity_csv(f, rows);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hamiltonian evolution benchmarks"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags f;
    app.add_option("--method", f.method, "trotter1|trotter2|proj-series|refl-series|chebyshev|one-shot");
    app.add_option("--length", f.length, "lattice length L (search size N for grover)");
    app.add_option("--time", f.time, "evolution time t");
    app.add_option("--dt", f.dt, "time step");
    app.add_option("--order", f.order, "truncation order p or 'auto'");
    app.add_option("--steps", f.steps, "step count m or 'auto'");
    app.add_option("--epsilon", f.epsilon, "target error");
    app.add_option("--seed", f.seed, "random seed");
    app.add_option("--norm", f.norm, "spectral|frobenius");
    app.add_option("--config", f.config, "key = value config file");
    app.add_option("--output", f.output, "output path");

    struct Sub {
        const char *name;
        const char *help;
        int (*run)(const Context &);
    };
    const Sub subs[] = {
        {"evolve", "run one method against the exact propagator", cmd_evolve},
        {"scan-error", "error against order and step count", cmd_scan_error},
        {"scan-time", "error against evolution time", cmd_scan_time},
        {"grover", "search step counts and equivalence residuals", cmd_grover},
        {"identities", "projector identity suite", cmd_identities},
        {"digital", "fixed-point round-off scan", cmd_digital},
        {"bessel", "Bessel table J_0..J_p at t", cmd_bessel},
        {"report", "predicted cost per method", cmd_report},
    };
    for (const auto &s : subs) {
        app.add_subcommand(s.name, s.help);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }
    try {
        const Context ctx = build_context(f);
        for (const auto &s : subs) {
            if (app.got_subcommand(s.name)) {
                return s.run(ctx);
            }
        }
        return kExitConfig;
    } catch (const IoError &e) {
        std::cerr << "hamsim: " << e.what() << '\n';
        return kExitIo;
    } catch (const InvalidInput &e) {
        std::cerr << "hamsim: invalid configuration: " << e.what() << '\n';
        return kExitConfig;
    } catch (const BudgetExceeded &e) {
        std::cerr << "hamsim: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "hamsim: " << e.what() << '\n';
        return kExitConfig;
    }
}
