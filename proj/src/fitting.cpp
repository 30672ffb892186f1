/*
   Copyright 2026, The hmpareto Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hmpareto/fitting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "hmpareto/error.hpp"
#include "hmpareto/optimize.hpp"

namespace hmp {

namespace {

constexpr std::size_t kPowerParams = 4;
using Vec4 = std::array<double, kPowerParams>;

// Dynamic and static regressors of the parallel power model; the model is
// their dot product with (alpha_big, beta_big, alpha_little, beta_little).
Vec4 power_features(const Configuration& c, const PlatformSpec& platform)
{
    const double fb = c.big_freq_hz;
    const double fl = c.little_freq_hz;
    return {c.big_cores * fb * fb * fb, platform.big.core_count * fb, c.little_cores * fl * fl * fl,
            platform.little.core_count * fl};
}

// Solves the 4x4 system in place by Gaussian elimination with partial pivoting.
std::optional<Vec4> solve4(std::array<Vec4, kPowerParams> a, Vec4 rhs)
{
    for (std::size_t col = 0; col < kPowerParams; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < kPowerParams; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (std::abs(a[pivot][col]) < 1e-14) {
            return std::nullopt;
        }
        std::swap(a[col], a[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t r = col + 1; r < kPowerParams; ++r) {
            const double m = a[r][col] / a[col][col];
            for (std::size_t k = col; k < kPowerParams; ++k) a[r][k] -= m * a[col][k];
            rhs[r] -= m * rhs[col];
        }
    }
    Vec4 x{};
    for (std::size_t i = kPowerParams; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t k = i + 1; k < kPowerParams; ++k) s -= a[i][k] * x[k];
        x[i] = s / a[i][i];
    }
    return x;
}

template <typename T, typename Proj>
std::size_t distinct_count(std::span<const T> items, Proj proj)
{
    std::set<double> values;
    for (const auto& item : items) values.insert(static_cast<double>(proj(item)));
    return values.size();
}

} // namespace

void validate(const MeasurementRecord& record)
{
    auto ok = [](const std::optional<double>& v) { return !v || (std::isfinite(*v) && *v > 0.0); };
    if (!record.time_s && !record.power_w) {
        throw ValidationError("measurement has neither time nor power");
    }
    if (!ok(record.time_s) || !ok(record.power_w)) {
        throw ValidationError("measured values must be finite and > 0");
    }
    if (record.repeats < 1) {
        throw ValidationError("repeat count must be >= 1");
    }
}

double rmse(std::span<const double> actual, std::span<const double> estimated)
{
    if (actual.empty() || actual.size() != estimated.size()) {
        throw ValidationError("rmse: inputs must be non-empty and of equal length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double d = actual[i] - estimated[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(actual.size()));
}

double fit_speedup(std::span<const SpeedupPair> pairs)
{
    if (pairs.empty()) {
        throw FitError("speedup fit needs at least one timing pair");
    }
    std::vector<double> ratios;
    ratios.reserve(pairs.size());
    for (const auto& p : pairs) {
        if (!(p.t_little_s > 0.0) || !(p.t_big_s > 0.0) || !std::isfinite(p.t_little_s) || !std::isfinite(p.t_big_s)) {
            throw ValidationError("speedup timings must be finite and > 0");
        }
        ratios.push_back(p.t_little_s / p.t_big_s);
    }
    std::sort(ratios.begin(), ratios.end());
    const std::size_t n = ratios.size();
    return n % 2 == 1 ? ratios[n / 2] : 0.5 * (ratios[n / 2 - 1] + ratios[n / 2]);
}

FitReport<PowerParams> fit_power(std::span<const MeasurementRecord> measurements, const PlatformSpec& platform,
                                 const PowerFitOptions& options)
{
    validate_platform(platform);
    std::vector<MeasurementRecord> records;
    for (const auto& m : measurements) {
        if (m.power_w) records.push_back(m);
    }
    if (records.size() < kPowerParams) {
        throw FitError("power fit needs at least 4 records with power, got " + std::to_string(records.size()));
    }
    const std::span<const MeasurementRecord> view(records);
    if (distinct_count(view, [](const auto& r) { return r.config.big_cores; }) < 2
        || distinct_count(view, [](const auto& r) { return r.config.little_cores; }) < 2
        || distinct_count(view, [](const auto& r) { return r.config.big_freq_hz; }) < 2
        || distinct_count(view, [](const auto& r) { return r.config.little_freq_hz; }) < 2) {
        throw FitError("power fit is under-determined: each of b, L, F_b, F_L needs two or more distinct values");
    }

    const std::size_t n = records.size();
    std::vector<Vec4> features(n);
    std::vector<double> target(n);
    double mean_target = 0.0;
    Vec4 mean_feature{};
    for (std::size_t i = 0; i < n; ++i) {
        features[i] = power_features(records[i].config, platform);
        target[i] = *records[i].power_w;
        mean_target += target[i] / static_cast<double>(n);
        for (std::size_t j = 0; j < kPowerParams; ++j) mean_feature[j] += features[i][j] / static_cast<double>(n);
    }

    // Work in coordinates where every term contributes O(mean power) at z = 1.
    Vec4 scale{};
    for (std::size_t j = 0; j < kPowerParams; ++j) {
        scale[j] = mean_target / mean_feature[j];
        for (auto& row : features) row[j] *= scale[j];
    }

    std::vector<double> predicted(n);
    const Objective objective = [&](std::span<const double> z) {
        for (std::size_t i = 0; i < n; ++i) {
            double p = 0.0;
            for (std::size_t j = 0; j < kPowerParams; ++j) p += features[i][j] * z[j];
            predicted[i] = p;
        }
        return rmse(target, predicted);
    };

    // Start from the unconstrained linear least-squares solution, clamped at 0.
    std::array<Vec4, kPowerParams> normal{};
    Vec4 rhs{};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < kPowerParams; ++r) {
            rhs[r] += features[i][r] * target[i];
            for (std::size_t c = 0; c < kPowerParams; ++c) normal[r][c] += features[i][r] * features[i][c];
        }
    }
    Vec4 z0 = solve4(normal, rhs).value_or(Vec4{0.25, 0.25, 0.25, 0.25});
    for (double& z : z0) z = std::max(z, 0.0);

    const std::array<Vec4, 5> spread{{
        {1.0, 1.0, 1.0, 1.0},
        {2.0, 0.5, 2.0, 0.5},
        {0.5, 2.0, 0.5, 2.0},
        {2.0, 2.0, 0.5, 0.5},
        {0.5, 0.5, 2.0, 2.0},
    }};
    const std::vector<double> lower(kPowerParams, 0.0);
    const OptimizeOptions nm_options{
        .rel_tol = options.rel_tol,
        .abs_floor = 1e-5 * mean_target,
        .x_tol = 1e-9,
        .max_iterations = options.max_iterations,
    };

    OptimizeResult best;
    bool have_best = false;
    int total_iterations = 0;
    const int starts = std::clamp(options.restarts, 1, static_cast<int>(spread.size()));
    for (int s = 0; s < starts; ++s) {
        std::vector<double> x0(kPowerParams);
        std::vector<double> step(kPowerParams);
        for (std::size_t j = 0; j < kPowerParams; ++j) {
            const double base = s == 0 ? z0[j] : std::max(z0[j], 0.1);
            x0[j] = base * spread[s][j];
            step[j] = 0.05 + 0.1 * x0[j];
        }
        OptimizeResult r = nelder_mead(objective, x0, step, lower, nm_options);
        total_iterations += r.iterations;
        if (!have_best || r.value < best.value) {
            best = std::move(r);
            have_best = true;
        }
    }

    PowerParams params = with_platform_cores({}, platform);
    params.alpha_big = best.x[0] * scale[0];
    params.beta_big = best.x[1] * scale[1];
    params.alpha_little = best.x[2] * scale[2];
    params.beta_little = best.x[3] * scale[3];

    return FitReport<PowerParams>{
        .params = params,
        .rmse = best.value,
        .n_points = n,
        .iterations = total_iterations,
        .converged = best.converged,
        .identifiable = true,
    };
}

FitReport<PerfParams> fit_parallel_fraction(std::span<const MeasurementRecord> measurements, double big_speedup,
                                            double little_ref_time_s, double ref_freq_hz)
{
    PerfParams params{
        .parallel_fraction = 0.5,
        .big_speedup = big_speedup,
        .little_ref_time_s = little_ref_time_s,
        .ref_freq_hz = ref_freq_hz,
    };
    validate(params);

    std::vector<Configuration> configs;
    std::vector<double> measured;
    for (const auto& m : measurements) {
        if (m.time_s) {
            configs.push_back(m.config);
            measured.push_back(*m.time_s);
        }
    }
    if (configs.empty()) {
        throw FitError("parallel-fraction fit needs at least one record with a run time");
    }

    std::vector<double> predicted(configs.size());
    auto objective = [&](double f) {
        PerfParams p = params;
        p.parallel_fraction = f;
        for (std::size_t i = 0; i < configs.size(); ++i) predicted[i] = predict_time(p, configs[i]);
        return rmse(measured, predicted);
    };

    // Run time is affine in f; the fit is only informative where the slope is nonzero.
    bool identifiable = false;
    for (const auto& c : configs) {
        PerfParams p = params;
        p.parallel_fraction = 0.0;
        const double serial = predict_time(p, c);
        p.parallel_fraction = 1.0;
        const double parallel = predict_time(p, c);
        if (std::abs(parallel - serial) > 1e-12 * std::abs(serial)) {
            identifiable = true;
            break;
        }
    }

    FitReport<PerfParams> report{.params = params, .n_points = configs.size(), .identifiable = identifiable};
    if (!identifiable) {
        report.rmse = objective(params.parallel_fraction);
        report.converged = true;
        return report;
    }
    const OptimizeResult r = golden_section(objective, 0.0, 1.0, 1e-10);
    report.params.parallel_fraction = r.x.front();
    report.rmse = r.value;
    report.iterations = r.iterations;
    report.converged = r.converged;
    return report;
}

} // namespace hmp
