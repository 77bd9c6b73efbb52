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

#include "hamsim/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "hamsim/chebyshev.hpp"
#include "hamsim/errors.hpp"
#include "hamsim/grover.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/projector_series.hpp"
#include "hamsim/random.hpp"
#include "hamsim/trotter.hpp"

namespace hamsim {

namespace {

constexpr std::array<Method, 6> kMethods = {Method::Trotter1,   Method::Trotter2,
                                            Method::ProjSeries, Method::ReflSeries,
                                            Method::Chebyshev,  Method::OneShot};

SeriesScheme series_scheme(Method m) {
    return m == Method::ProjSeries ? SeriesScheme::Projection : SeriesScheme::Reflection;
}

PartList laplacian_list(std::size_t length) {
    auto halves = laplacian_parts(length);
    return {std::move(halves.first), std::move(halves.second)};
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string &key, const std::string &text) {
    double v = 0.0;
    const auto *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) {
        throw InvalidInput("bad number for '" + key + "': '" + text + "'");
    }
    return v;
}

template <typename Int> Int parse_int(const std::string &key, const std::string &text) {
    Int v = 0;
    const auto *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) {
        throw InvalidInput("bad integer for '" + key + "': '" + text + "'");
    }
    return v;
}

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

} // namespace

const char *to_string(Method m) {
    switch (m) {
    case Method::Trotter1:
        return "trotter1";
    case Method::Trotter2:
        return "trotter2";
    case Method::ProjSeries:
        return "proj-series";
    case Method::ReflSeries:
        return "refl-series";
    case Method::Chebyshev:
        return "chebyshev";
    case Method::OneShot:
        return "one-shot";
    }
    return "?";
}

Method parse_method(const std::string &name) {
    for (const auto m : kMethods) {
        if (name == to_string(m)) {
            return m;
        }
    }
    throw InvalidInput("unknown method '" + name + "'");
}

bool is_series(Method m) { return m == Method::ProjSeries || m == Method::ReflSeries; }

bool is_trotter(Method m) { return m == Method::Trotter1 || m == Method::Trotter2; }

std::span<const Method> all_methods() { return kMethods; }

StateVector random_initial_state(std::size_t length, std::uint64_t seed) {
    if (length < 2) {
        throw InvalidInput("initial state needs L >= 2");
    }
    return random_state(length, seed);
}

void ExperimentConfig::validate() const {
    if (length < 4 || length % 2 != 0) {
        throw InvalidInput("lattice length must be even and at least 4");
    }
    if (!std::isfinite(t) || t < 0.0) {
        throw InvalidInput("evolution time must be finite and non-negative");
    }
    if (!std::isfinite(dt) || dt < 0.0) {
        throw InvalidInput("time step must be finite and non-negative");
    }
    if (order < kAuto || steps < kAuto) {
        throw InvalidInput("order and steps must be non-negative or auto");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw InvalidInput("epsilon must lie in (0, 1)");
    }
}

ExperimentConfig resolve(const ExperimentConfig &cfg) {
    cfg.validate();
    ExperimentConfig out = cfg;
    if (is_series(cfg.method)) {
        if (out.dt == 0.0) {
            out.dt = std::numbers::pi;
        }
        if (out.order == kAuto) {
            out.order = truncation_order(series_scheme(cfg.method), out.t, out.dt, out.epsilon);
        }
        out.steps = static_cast<long long>(series_steps(out.t, out.dt));
        return out;
    }
    const PartList parts = laplacian_list(cfg.length);
    if (is_trotter(cfg.method)) {
        if (out.steps == kAuto) {
            if (out.dt > 0.0) {
                out.steps = static_cast<long long>(series_steps(out.t, out.dt));
            } else {
                const auto scheme =
                    cfg.method == Method::Trotter1 ? TrotterScheme::First : TrotterScheme::Symmetric;
                const int k = error_exponent(scheme);
                const auto est = commutator_error_norms(parts, cfg.norm);
                out.steps = static_cast<long long>(
                    choose_steps(out.t, out.epsilon, k, k == 2 ? est.e2_norm : est.e3_norm));
            }
        }
        out.steps = std::max<long long>(out.steps, 1);
        out.dt = out.t / static_cast<double>(out.steps);
        out.order = cfg.method == Method::Trotter1 ? 1 : 2;
        return out;
    }
    const auto mode = cfg.method == Method::OneShot ? ChebyshevMode::OneShot : ChebyshevMode::Stepped;
    const auto plan = plan_chebyshev(spectral_bounds(parts), out.t, out.epsilon, mode, out.order);
    out.order = plan.p;
    out.steps = static_cast<long long>(plan.m);
    out.dt = plan.m > 0 ? out.t / static_cast<double>(plan.m) : 0.0;
    return out;
}

StateVector ReferenceCache::exact(std::size_t length, double t, const StateVector &x) {
    std::shared_ptr<const HermitianEigensystem> sys;
    {
        const std::lock_guard<std::mutex> lock(mutex_);
        auto &slot = systems_[length];
        if (!slot) {
            slot = std::make_shared<const HermitianEigensystem>(periodic_laplacian(length));
        }
        sys = slot;
    }
    return sys->evolve(t, x);
}

ExperimentRecord run_experiment(const ExperimentConfig &cfg, ReferenceCache *cache) {
    const ExperimentConfig r = resolve(cfg);
    const StateVector x = random_initial_state(r.length, r.seed);
    ReferenceCache local;
    const StateVector reference = (cache != nullptr ? *cache : local).exact(r.length, r.t, x);

    ExperimentRecord rec;
    rec.method = to_string(r.method);
    rec.length = r.length;
    rec.t = r.t;
    rec.dt = r.dt;
    rec.p = r.order;
    rec.m = static_cast<std::uint64_t>(r.steps);
    rec.seed = r.seed;
    rec.norm = to_string(r.norm);

    const auto start = std::chrono::steady_clock::now();
    StateVector state;
    const auto halves = laplacian_parts(r.length);
    switch (r.method) {
    case Method::Trotter1:
    case Method::Trotter2: {
        const PartList parts = {halves.first, halves.second};
        const auto run = trotter_evolve(parts, r.t, rec.m,
                                        r.method == Method::Trotter1 ? TrotterScheme::First
                                                                     : TrotterScheme::Symmetric,
                                        x);
        state = run.state;
        rec.part_applications = run.part_applications;
        break;
    }
    case Method::ProjSeries: {
        const auto run = evolve_projection_series(halves.first, halves.second, r.t, r.dt, r.order, x);
        state = run.state;
        rec.part_applications = run.part_applications;
        break;
    }
    case Method::ReflSeries: {
        const auto run = evolve_reflection_series(halves.first.reflection(),
                                                  halves.second.reflection(), r.t, r.dt, r.order, x);
        state = run.state;
        rec.part_applications = run.part_applications;
        break;
    }
    case Method::Chebyshev:
    case Method::OneShot: {
        const PartList parts = {halves.first, halves.second};
        const auto mode =
            r.method == Method::OneShot ? ChebyshevMode::OneShot : ChebyshevMode::Stepped;
        const auto plan = plan_chebyshev(spectral_bounds(parts), r.t, r.epsilon, mode, r.order);
        const auto run = run_chebyshev(
            [&parts](const StateVector &v) { return apply_sum(parts, v); }, plan, x);
        state = run.state;
        rec.part_applications = run.h_applications;
        break;
    }
    }
    const auto stop = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    rec.error = state_distance(state, reference);
    return rec;
}

std::vector<ExperimentRecord> run_experiments(std::span<const ExperimentConfig> cfgs,
                                              unsigned threads) {
    std::vector<ExperimentRecord> out(cfgs.size());
    ReferenceCache cache;
    if (threads <= 1 || cfgs.size() <= 1) {
        for (std::size_t i = 0; i < cfgs.size(); ++i) {
            out[i] = run_experiment(cfgs[i], &cache);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr failure;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cfgs.size()) {
                return;
            }
            try {
                out[i] = run_experiment(cfgs[i], &cache);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(cfgs.size()));
    for (unsigned k = 0; k < n; ++k) {
        pool.emplace_back(worker);
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

std::vector<ExperimentConfig> error_scan_configs(const ErrorScanGrid &grid) {
    if (grid.min_order < 0 || grid.max_order < grid.min_order || grid.min_log2_steps < 0 ||
        grid.max_log2_steps < grid.min_log2_steps || grid.max_log2_steps > 40) {
        throw InvalidInput("bad error-scan grid");
    }
    std::vector<ExperimentConfig> out;
    for (const auto method : grid.methods) {
        ExperimentConfig base;
        base.method = method;
        base.length = grid.length;
        base.t = grid.t;
        base.seed = grid.seed;
        base.norm = grid.norm;
        if (is_series(method)) {
            for (const double dt : grid.dts) {
                for (int p = grid.min_order; p <= grid.max_order; ++p) {
                    auto c = base;
                    c.dt = dt;
                    c.order = p;
                    out.push_back(c);
                }
            }
        } else if (is_trotter(method)) {
            for (int k = grid.min_log2_steps; k <= grid.max_log2_steps; ++k) {
                auto c = base;
                c.steps = 1LL << k;
                out.push_back(c);
            }
        } else {
            for (int p = std::max(grid.min_order, 1); p <= grid.max_order; ++p) {
                auto c = base;
                c.order = p;
                out.push_back(c);
            }
        }
    }
    return out;
}

std::vector<ExperimentRecord> run_error_scan(const ErrorScanGrid &grid, unsigned threads) {
    const auto cfgs = error_scan_configs(grid);
    return run_experiments(cfgs, threads);
}

std::vector<ExperimentConfig> time_scan_configs(const TimeScanGrid &grid) {
    std::vector<ExperimentConfig> out;
    for (const auto method : grid.methods) {
        for (const double t : grid.times) {
            ExperimentConfig c;
            c.method = method;
            c.length = grid.length;
            c.t = t;
            c.seed = grid.seed;
            c.norm = grid.norm;
            if (is_series(method)) {
                c.dt = grid.series_dt;
                c.order =
                    method == Method::ReflSeries ? grid.reflection_order : grid.projection_order;
                out.push_back(c);
            } else if (is_trotter(method)) {
                for (const double dt : grid.trotter_dts) {
                    auto d = c;
                    d.dt = dt;
                    out.push_back(d);
                }
            } else {
                out.push_back(c);
            }
        }
    }
    return out;
}

std::vector<ExperimentRecord> run_time_scan(const TimeScanGrid &grid, unsigned threads) {
    const auto cfgs = time_scan_configs(grid);
    return run_experiments(cfgs, threads);
}

int smallest_order_below(std::span<const ExperimentRecord> records, const std::string &method,
                         double dt, double eps) {
    int best = -1;
    for (const auto &r : records) {
        if (r.method == method && std::abs(r.dt - dt) <= 1e-12 * std::max(1.0, dt) &&
            r.error < eps && (best < 0 || r.p < best)) {
            best = r.p;
        }
    }
    return best;
}

std::uint64_t smallest_steps_below(std::span<const ExperimentRecord> records,
                                   const std::string &method, double eps) {
    std::uint64_t best = 0;
    for (const auto &r : records) {
        if (r.method == method && r.error < eps && (best == 0 || r.m < best)) {
            best = r.m;
        }
    }
    return best;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw InvalidInput("slope needs at least two matching points");
    }
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw InvalidInput("log-log slope needs positive data");
        }
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string format_double(double v) {
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return buf.data();
}

void write_csv(std::ostream &out, std::span<const ExperimentRecord> records) {
    out << kCsvHeader << '\n';
    for (const auto &r : records) {
        out << r.method << ',' << r.length << ',' << format_double(r.t) << ','
            << format_double(r.dt) << ',' << r.p << ',' << r.m << ',' << r.seed << ',' << r.norm
            << ',' << format_double(r.error) << ',' << r.part_applications << ','
            << format_double(r.wall_ms) << '\n';
    }
}

std::vector<ExperimentRecord> parse_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != kCsvHeader) {
        throw InvalidInput("CSV header mismatch");
    }
    std::vector<ExperimentRecord> out;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv(line);
        if (f.size() != 11) {
            throw InvalidInput("CSV row has " + std::to_string(f.size()) + " fields");
        }
        ExperimentRecord r;
        r.method = f[0];
        r.length = parse_int<std::size_t>("L", f[1]);
        r.t = parse_real("t", f[2]);
        r.dt = parse_real("dt", f[3]);
        r.p = parse_int<int>("p", f[4]);
        r.m = parse_int<std::uint64_t>("m", f[5]);
        r.seed = parse_int<std::uint64_t>("seed", f[6]);
        r.norm = f[7];
        r.error = parse_real("error", f[8]);
        r.part_applications = parse_int<std::uint64_t>("part_applications", f[9]);
        r.wall_ms = parse_real("wall_ms", f[10]);
        out.push_back(std::move(r));
    }
    return out;
}

void write_plot_script(std::ostream &out, const std::string &csv_path, ScanKind kind) {
    out << "# gnuplot script\n"
        << "set datafile separator ','\n"
        << "csv = '" << csv_path << "'\n"
        << "set key top right\n"
        << "set logscale y\n"
        << "set format y '10^{%L}'\n"
        << "set ylabel 'error'\n";
    if (kind == ScanKind::Error) {
        out << "set terminal pngcairo size 1200,500\n"
            << "set output csv.'.error.png'\n"
            << "set multiplot layout 1,2\n"
            << "set xlabel 'p'\n"
            << "sel(m, d) = (strcol(1) eq m && abs($4 - d) < 1e-9) ? $5 : NaN\n"
            << "plot csv every ::1 using (sel('proj-series', 1)):9 w lp t 'projection, dt=1', \\\n"
            << "     csv every ::1 using (sel('proj-series', pi)):9 w lp t 'projection, dt=pi', \\\n"
            << "     csv every ::1 using (sel('refl-series', 1)):9 w lp t 'reflection, dt=1', \\\n"
            << "     csv every ::1 using (sel('refl-series', pi)):9 w lp t 'reflection, dt=pi'\n"
            << "set xlabel 'log2 m'\n"
            << "plot csv every ::1 using (strcol(1) eq 'trotter1' ? log($6)/log(2) : NaN):9 "
               "w lp t 'first order', \\\n"
            << "     csv every ::1 using (strcol(1) eq 'trotter2' ? log($6)/log(2) : NaN):9 "
               "w lp t 'symmetric'\n"
            << "unset multiplot\n";
    } else {
        out << "set terminal pngcairo size 700,500\n"
            << "set output csv.'.time.png'\n"
            << "set logscale x\n"
            << "set xlabel 't'\n"
            << "selr(m) = strcol(1) eq m ? $3 : NaN\n"
            << "seld(d) = (strcol(1) eq 'trotter1' && abs($4 - d)/d < 0.5) ? $3 : NaN\n"
            << "plot csv every ::1 using (selr('proj-series')):9 w lp t 'projection p=10', \\\n"
            << "     csv every ::1 using (selr('refl-series')):9 w lp t 'reflection p=8', \\\n"
            << "     for [d in '0.0001 0.001 0.01'] csv every ::1 using (seld(d+0)):9 w lp "
               "t 'trotter dt='.d\n";
    }
}

void emit_outputs(std::span<const ExperimentRecord> records, const std::string &path,
                  ScanKind kind) {
    {
        std::ofstream csv(path);
        if (!csv) {
            throw IoError("cannot open '" + path + "' for writing");
        }
        write_csv(csv, records);
        if (!csv) {
            throw IoError("write failed on '" + path + "'");
        }
    }
    const std::string script = path + ".gp";
    std::ofstream gp(script);
    if (!gp) {
        throw IoError("cannot open '" + script + "' for writing");
    }
    write_plot_script(gp, path, kind);
    if (!gp) {
        throw IoError("write failed on '" + script + "'");
    }
}

ConfigMap parse_config(std::istream &in) {
    ConfigMap out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidInput("config line " + std::to_string(number) + ": expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw InvalidInput("config line " + std::to_string(number) + ": empty key");
        }
        out[key] = value;
    }
    return out;
}

ConfigMap read_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config '" + path + "'");
    }
    return parse_config(in);
}

void apply_config(const ConfigMap &values, ExperimentConfig &cfg) {
    for (const auto &[key, value] : values) {
        if (key == "method") {
            cfg.method = parse_method(value);
        } else if (key == "length") {
            cfg.length = parse_int<std::size_t>(key, value);
        } else if (key == "time") {
            cfg.t = parse_real(key, value);
        } else if (key == "dt") {
            cfg.dt = value == "auto" ? 0.0 : parse_real(key, value);
        } else if (key == "order") {
            cfg.order = value == "auto" ? kAuto : parse_int<int>(key, value);
        } else if (key == "steps") {
            cfg.steps = value == "auto" ? kAuto : parse_int<long long>(key, value);
        } else if (key == "epsilon") {
            cfg.epsilon = parse_real(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_int<std::uint64_t>(key, value);
        } else if (key == "norm") {
            cfg.norm = parse_norm(value);
        } else if (key == "output") {
            cfg.output = value;
        } else {
            throw InvalidInput("unknown config key '" + key + "'");
        }
    }
}

ConfigMap describe(const ExperimentConfig &cfg) {
    ConfigMap out;
    out["method"] = to_string(cfg.method);
    out["length"] = std::to_string(cfg.length);
    out["time"] = format_double(cfg.t);
    out["dt"] = cfg.dt == 0.0 ? "auto" : format_double(cfg.dt);
    out["order"] = cfg.order == kAuto ? "auto" : std::to_string(cfg.order);
    out["steps"] = cfg.steps == kAuto ? "auto" : std::to_string(cfg.steps);
    out["epsilon"] = format_double(cfg.epsilon);
    out["seed"] = std::to_string(cfg.seed);
    out["norm"] = to_string(cfg.norm);
    out["output"] = cfg.output;
    return out;
}

void write_manifest(std::ostream &out, const std::string &command, const ConfigMap &values) {
    out << "# hamsim run manifest\n"
        << "command = " << command << '\n';
    for (const auto &[k, v] : values) {
        out << k << " = " << v << '\n';
    }
}

double series_cost_formula(double t, double eps) {
    if (!(t > 0.0) || !(eps > 0.0)) {
        throw InvalidInput("cost formula needs positive t and eps");
    }
    const double r = t / eps;
    if (r <= std::numbers::e) {
        throw InvalidInput("cost formula needs t/eps > e");
    }
    return t * std::log(r) / std::log(std::log(r));
}

std::vector<ComplexityRow> complexity_report(double t, double eps, std::size_t length,
                                             std::size_t search_size) {
    if (!(t > 0.0) || !(eps > 0.0 && eps < 1.0)) {
        throw InvalidInput("report needs t > 0 and eps in (0, 1)");
    }
    std::vector<ComplexityRow> rows;
    const double inf = std::numeric_limits<double>::infinity();
    for (const auto method : {Method::ProjSeries, Method::ReflSeries}) {
        ComplexityRow r{to_string(method), t, eps, 0, 0, 1, inf};
        try {
            r.p = truncation_order(series_scheme(method), t, std::numbers::pi, eps);
            r.m = series_steps(t, std::numbers::pi);
            r.part_applications = 2.0 * static_cast<double>(r.m) * r.p;
        } catch (const BudgetExceeded &) {
        }
        rows.push_back(r);
    }
    const PartList parts = laplacian_list(length);
    const auto est = commutator_error_norms(parts);
    for (const auto method : {Method::Trotter1, Method::Trotter2}) {
        const int k = method == Method::Trotter1 ? 2 : 3;
        ComplexityRow r{to_string(method), t, eps, 0, 0, 1, inf};
        try {
            r.m = choose_steps(t, eps, k, k == 2 ? est.e2_norm : est.e3_norm);
            r.part_applications = static_cast<double>(r.m) * (k == 2 ? 2.0 : 3.0);
        } catch (const BudgetExceeded &) {
        }
        rows.push_back(r);
    }
    const auto window = spectral_bounds(parts);
    for (const auto method : {Method::Chebyshev, Method::OneShot}) {
        ComplexityRow r{to_string(method), t, eps, 0, 0, 1, inf};
        try {
            const auto plan = plan_chebyshev(
                window, t, eps,
                method == Method::OneShot ? ChebyshevMode::OneShot : ChebyshevMode::Stepped);
            r.p = plan.p;
            r.m = plan.m;
            r.part_applications = static_cast<double>(plan.m) * plan.p;
        } catch (const BudgetExceeded &) {
        }
        rows.push_back(r);
    }
    {
        ComplexityRow r{"series-formula", t, eps, 0, 0, 1, inf};
        if (t / eps > std::numbers::e) {
            r.part_applications = series_cost_formula(t, eps);
        }
        rows.push_back(r);
    }
    {
        ComplexityRow r{"grover", t, eps, 0, 0, 1, inf};
        const double n = static_cast<double>(search_size);
        if (search_size >= 3) {
            try {
                r.repetitions = repetition_cost(1.0 / n, eps).repetitions;
            } catch (const BudgetExceeded &) {
                r.repetitions = 0;
            }
            const double period = 0.5 * std::numbers::pi * std::sqrt(n);
            const double whole = std::floor(t / period);
            const double rest = t - whole * period;
            const double q = whole * integral_steps(search_size) +
                             std::abs(grover_decomposition(search_size, 1.0, rest).q);
            r.m = static_cast<std::uint64_t>(std::ceil(q));
            if (r.repetitions > 0) {
                r.part_applications = 2.0 * static_cast<double>(r.m) * r.repetitions;
            }
        }
        rows.push_back(r);
    }
    return rows;
}

void write_complexity_csv(std::ostream &out, std::span<const ComplexityRow> rows) {
    out << "method,t,epsilon,p,m,R,part_applications\n";
    for (const auto &r : rows) {
        out << r.method << ',' << format_double(r.t) << ',' << format_double(r.epsilon) << ','
            << r.p << ',' << r.m << ',' << r.repetitions << ','
            << format_double(r.part_applications) << '\n';
    }
}

} // namespace hamsim
