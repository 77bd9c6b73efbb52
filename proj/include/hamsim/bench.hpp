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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamsim/linalg.hpp"

namespace hamsim {

enum class Method { Trotter1, Trotter2, ProjSeries, ReflSeries, Chebyshev, OneShot };

const char *to_string(Method m);
Method parse_method(const std::string &name);
[[nodiscard]] bool is_series(Method m);
[[nodiscard]] bool is_trotter(Method m);
[[nodiscard]] std::span<const Method> all_methods();

/// 2L generator outputs mapped to [-1,1), paired into amplitudes, normalised.
[[nodiscard]] StateVector random_initial_state(std::size_t length, std::uint64_t seed);

inline constexpr int kAuto = -1;

struct ExperimentConfig {
    Method method = Method::ReflSeries;
    std::size_t length = 128;
    double t = 100.0;
    double dt = 0.0;          // 0 picks the method default
    int order = kAuto;        // truncation order p
    long long steps = kAuto;  // time steps m
    double epsilon = 1e-5;
    std::uint64_t seed = 1;
    NormKind norm = NormKind::Spectral;
    std::string output;

    void validate() const;
};

/**
 * Fills `auto` fields. Series: dt defaults to pi, p from the truncation
 * bound. Trotter: m from dt when given, otherwise from the commutator bound.
 * Chebyshev: p from the plan, m = number of Clenshaw steps.
 */
[[nodiscard]] ExperimentConfig resolve(const ExperimentConfig &cfg);

struct ExperimentRecord {
    std::string method;
    std::size_t length = 0;
    double t = 0.0;
    double dt = 0.0;
    int p = 0;
    std::uint64_t m = 0;
    std::uint64_t seed = 0;
    std::string norm;
    double error = 0.0;
    std::uint64_t part_applications = 0;
    double wall_ms = 0.0;

    bool operator==(const ExperimentRecord &) const = default;
};

/// Exact propagators of the periodic half-Laplacian, one per length.
class ReferenceCache {
  public:
    [[nodiscard]] StateVector exact(std::size_t length, double t, const StateVector &x);

  private:
    std::mutex mutex_;
    std::map<std::size_t, std::shared_ptr<const HermitianEigensystem>> systems_;
};

[[nodiscard]] ExperimentRecord run_experiment(const ExperimentConfig &cfg,
                                              ReferenceCache *cache = nullptr);
/// Records come back in input order whatever the thread count.
[[nodiscard]] std::vector<ExperimentRecord> run_experiments(std::span<const ExperimentConfig> cfgs,
                                                            unsigned threads = 1);

struct ErrorScanGrid {
    std::size_t length = 128;
    double t = 100.0;
    std::uint64_t seed = 1;
    NormKind norm = NormKind::Spectral;
    std::vector<Method> methods = {Method::ProjSeries, Method::ReflSeries, Method::Trotter1};
    std::vector<double> dts = {1.0, 3.141592653589793};
    int min_order = 1;
    int max_order = 24;
    int min_log2_steps = 10;
    int max_log2_steps = 23;
};
[[nodiscard]] std::vector<ExperimentConfig> error_scan_configs(const ErrorScanGrid &grid);
[[nodiscard]] std::vector<ExperimentRecord> run_error_scan(const ErrorScanGrid &grid,
                                                           unsigned threads = 1);

struct TimeScanGrid {
    std::size_t length = 128;
    std::uint64_t seed = 1;
    NormKind norm = NormKind::Spectral;
    std::vector<Method> methods = {Method::ProjSeries, Method::ReflSeries, Method::Trotter1};
    std::vector<double> times = {0.1, 0.2, 0.5, 1, 2, 5, 10, 20, 50, 100};
    double series_dt = 1.0;
    int reflection_order = 8;
    int projection_order = 10;
    std::vector<double> trotter_dts = {1e-4, 1e-3, 1e-2};
};
[[nodiscard]] std::vector<ExperimentConfig> time_scan_configs(const TimeScanGrid &grid);
[[nodiscard]] std::vector<ExperimentRecord> run_time_scan(const TimeScanGrid &grid,
                                                          unsigned threads = 1);

/// Smallest p (series) among records of `method` at `dt` with error < eps; -1 if none.
[[nodiscard]] int smallest_order_below(std::span<const ExperimentRecord> records,
                                       const std::string &method, double dt, double eps);
/// Smallest m among records of `method` with error < eps; 0 if none.
[[nodiscard]] std::uint64_t smallest_steps_below(std::span<const ExperimentRecord> records,
                                                 const std::string &method, double eps);
/// Least-squares slope of log y against log x.
[[nodiscard]] double loglog_slope(std::span<const double> x, std::span<const double> y);

inline constexpr const char *kCsvHeader =
    "method,L,t,dt,p,m,seed,norm,error,part_applications,wall_ms";

[[nodiscard]] std::string format_double(double v);
void write_csv(std::ostream &out, std::span<const ExperimentRecord> records);
[[nodiscard]] std::vector<ExperimentRecord> parse_csv(std::istream &in);

enum class ScanKind { Error, Time };
void write_plot_script(std::ostream &out, const std::string &csv_path, ScanKind kind);
/// Writes `path` (CSV) and `path`.gp; IoError names the failing path.
void emit_outputs(std::span<const ExperimentRecord> records, const std::string &path,
                  ScanKind kind);

using ConfigMap = std::map<std::string, std::string>;
/// Flat `key = value` lines; '#' starts a comment.
[[nodiscard]] ConfigMap parse_config(std::istream &in);
[[nodiscard]] ConfigMap read_config_file(const std::string &path);
/// Known keys: method length time dt order steps epsilon seed norm output.
void apply_config(const ConfigMap &values, ExperimentConfig &cfg);
[[nodiscard]] ConfigMap describe(const ExperimentConfig &cfg);
void write_manifest(std::ostream &out, const std::string &command, const ConfigMap &values);

struct ComplexityRow {
    std::string method;
    double t = 0.0;
    double epsilon = 0.0;
    int p = 0;
    std::uint64_t m = 0;
    int repetitions = 1;
    double part_applications = 0.0;
};
/// t log(t/eps) / log log(t/eps).
[[nodiscard]] double series_cost_formula(double t, double eps);
[[nodiscard]] std::vector<ComplexityRow> complexity_report(double t, double eps,
                                                           std::size_t length,
                                                           std::size_t search_size);
void write_complexity_csv(std::ostream &out, std::span<const ComplexityRow> rows);

} // namespace hamsim
