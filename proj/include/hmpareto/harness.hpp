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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmpareto/fitting.hpp"
#include "hmpareto/models.hpp"
#include "hmpareto/platform.hpp"

namespace hmp {

/// Known model parameters plus a noise model, standing in for real hardware.
struct SyntheticGroundTruth {
    PerfParams perf;
    PowerParams power;
    double noise_time_sigma = 0.01;  ///< relative, per run
    double noise_power_sigma = 0.15; ///< watts, per run
    std::uint64_t seed = 0;
    std::string app = "synthetic";
};

/// Configurations to measure, each run `repeats` times.
struct Campaign {
    PlatformSpec platform;
    std::vector<Configuration> configurations;
    int repeats = 5;
};

/// One line of a measurement file: a single run of a single configuration.
struct MeasurementRow {
    std::string app;
    Configuration config;
    std::optional<double> time_s;
    std::optional<double> power_w;
    int repeat = 0;

    bool operator==(const MeasurementRow&) const = default;
};

/// Individual noisy runs, `repeats` rows per configuration in campaign order.
/// Each configuration draws from its own stream derived from (seed, position),
/// so the output does not depend on evaluation order.
std::vector<MeasurementRow> simulate_runs(const SyntheticGroundTruth& truth, const Campaign& campaign);

/// simulate_runs aggregated per configuration: median time, mean power.
std::vector<MeasurementRecord> simulate_measurements(const SyntheticGroundTruth& truth, const Campaign& campaign);

/// Groups rows by (app, configuration) in first-seen order. Time is the median
/// of the rows that carry one; power the mean; `repeats` counts all rows.
std::vector<MeasurementRecord> aggregate_runs(std::span<const MeasurementRow> rows);

/// Reads a measurement CSV, checks every row against `platform` and aggregates.
/// Errors are ParseError naming `source` and the line number.
std::vector<MeasurementRecord> ingest_measurements(std::istream& in, const PlatformSpec& platform,
                                                   const std::string& source = "<input>");
std::vector<MeasurementRecord> ingest_measurements(const std::string& path, const PlatformSpec& platform);

struct PowerSample {
    double t_s = 0.0;
    double power_w = 0.0;
};

struct TraceEnergy {
    double energy_j = 0.0;
    double duration_s = 0.0;
    double average_power_w = 0.0;
};

/// Trapezoidal integral of a sampled power trace. Needs two or more samples
/// with strictly increasing timestamps.
TraceEnergy energy_from_power_trace(std::span<const PowerSample> samples);

} // namespace hmp
