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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmpareto/models.hpp"
#include "hmpareto/platform.hpp"

namespace hmp {

/// One offline observation of a configuration, already aggregated over repeats.
struct MeasurementRecord {
    Configuration config;
    std::optional<double> time_s;  ///< median run time
    std::optional<double> power_w; ///< mean whole-chip power
    std::string app;
    int repeats = 1;

    bool operator==(const MeasurementRecord&) const = default;
};

/// Throws ValidationError unless at least one positive finite value is present.
void validate(const MeasurementRecord& record);

template <typename Params>
struct FitReport {
    Params params;
    double rmse = 0.0;
    std::size_t n_points = 0;
    int iterations = 0;
    bool converged = false;
    /// False when the data cannot distinguish between parameter values.
    bool identifiable = true;
};

/// One single-core timing of the speedup benchmark at a shared frequency.
struct SpeedupPair {
    double freq_hz = 0.0;
    double t_little_s = 0.0;
    double t_big_s = 0.0;
};

/// Root-mean-square difference. Throws ValidationError on empty or mismatched input.
double rmse(std::span<const double> actual, std::span<const double> estimated);

/// Median of t_little / t_big over all pairs (mean of the middle two for even counts).
double fit_speedup(std::span<const SpeedupPair> pairs);

struct PowerFitOptions {
    double rel_tol = 1e-10;
    int max_iterations = 10'000;
    int restarts = 5;
};

/// Least-squares fit of the four power constants (all >= 0) to measured
/// whole-chip power under a fully parallel load. Cluster totals come from `platform`.
///
/// Needs at least four power records spanning two or more distinct values of
/// each configuration coordinate; throws FitError otherwise.
FitReport<PowerParams> fit_power(std::span<const MeasurementRecord> measurements, const PlatformSpec& platform,
                                 const PowerFitOptions& options = {});

/// Fits the parallel fraction in [0, 1] to measured run times, with the
/// speedup, reference time and reference frequency held fixed.
FitReport<PerfParams> fit_parallel_fraction(std::span<const MeasurementRecord> measurements, double big_speedup,
                                            double little_ref_time_s, double ref_freq_hz);

} // namespace hmp
