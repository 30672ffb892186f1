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

#include <vector>

#include "hmpareto/platform.hpp"

namespace hmp {

/// Application performance parameters.
///
/// The sequential part runs on one big core when any is active, otherwise on
/// one LITTLE core; the parallel part spreads over every active core, a big
/// core counting `big_speedup` LITTLE cores at equal clock.
struct PerfParams {
    double parallel_fraction = 0.5;  ///< share of work that scales with cores, in [0, 1]
    double big_speedup = 1.0;        ///< one big core vs one LITTLE core at equal frequency
    double little_ref_time_s = 1.0;  ///< run time on one LITTLE core at `ref_freq_hz`
    double ref_freq_hz = 1.0;        ///< not necessarily a ladder frequency

    bool operator==(const PerfParams&) const = default;
};

/// Chip power constants. Each cluster draws alpha*F^3 per active core
/// (dynamic) plus beta*F per physical core (static; cores cannot be gated).
struct PowerParams {
    double alpha_big = 0.0;    ///< W/Hz^3
    double beta_big = 0.0;     ///< W/Hz
    double alpha_little = 0.0; ///< W/Hz^3
    double beta_little = 0.0;  ///< W/Hz
    int big_cores_total = 1;
    int little_cores_total = 1;

    bool operator==(const PowerParams&) const = default;
};

/// Modelled outcome of running the application in one configuration.
struct Estimate {
    Configuration config;
    double time_s = 0.0;
    double energy_j = 0.0;
    double power_seq_w = 0.0;
    double power_par_w = 0.0;

    bool operator==(const Estimate&) const = default;
};

/// Run time split into its sequential and parallel phases.
struct TimeBreakdown {
    double sequential_s = 0.0;
    double parallel_s = 0.0;

    double total() const { return sequential_s + parallel_s; }
};

void validate(const PerfParams& p);
void validate(const PowerParams& q);

/// PowerParams with the cluster sizes taken from `platform`.
PowerParams with_platform_cores(PowerParams q, const PlatformSpec& platform);

/// Throws DomainError for a configuration with no active core.
TimeBreakdown time_breakdown(const PerfParams& p, const Configuration& c);

double predict_time(const PerfParams& p, const Configuration& c);

/// Whole-chip power while every active core runs the parallel phase.
double power_parallel(const PowerParams& q, const Configuration& c);

/// Whole-chip power while a single core runs the sequential phase: one big core
/// if any is active, else one LITTLE core; static power of all cores in both cases.
double power_sequential(const PowerParams& q, const Configuration& c);

/// Closed-form energy of one run, branch on whether a big core is active.
double predict_energy(const PerfParams& p, const PowerParams& q, const Configuration& c);

Estimate estimate(const PerfParams& p, const PowerParams& q, const Configuration& c);

/// One Estimate per configuration, in enumerate_configurations order.
/// Throws ValidationError if `q`'s cluster sizes disagree with `platform`.
std::vector<Estimate> predict_all(const PerfParams& p, const PowerParams& q, const PlatformSpec& platform);

} // namespace hmp
