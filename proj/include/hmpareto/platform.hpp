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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hmp {

/// One cluster of identical cores sharing a clock domain.
struct ClusterSpec {
    std::string name;
    int core_count = 0;
    std::vector<double> frequencies_hz; ///< strictly ascending

    bool operator==(const ClusterSpec&) const = default;
};

/// A two-cluster heterogeneous processor (big + LITTLE).
///
/// Defines the configuration space: every combination of active core counts
/// (0..core_count per cluster, not both zero) and one frequency per cluster.
struct PlatformSpec {
    ClusterSpec big;
    ClusterSpec little;

    bool operator==(const PlatformSpec&) const = default;
};

/// One point of the configuration space.
///
/// Both frequencies are always carried, even for a cluster with zero active
/// cores: idle clusters still draw static power proportional to their clock.
struct Configuration {
    int big_cores = 0;
    int little_cores = 0;
    double big_freq_hz = 0.0;
    double little_freq_hz = 0.0;

    auto operator<=>(const Configuration&) const = default;
};

/// Throws ValidationError if a cluster is empty, has no frequencies, or its
/// ladder is not strictly ascending and positive; or if both clusters share a name.
void validate_platform(const PlatformSpec& platform);

/// Index of `hz` in `ladder`, matched within 1e-9 relative tolerance.
std::optional<std::size_t> find_frequency_index(std::span<const double> ladder, double hz);

/// True iff `c` satisfies every configuration invariant against `platform`.
/// Total: never throws, an invalid platform simply yields false.
bool validate_configuration(const PlatformSpec& platform, const Configuration& c) noexcept;

/// Returns `c` with its frequencies replaced by the exact ladder values they match.
/// Throws ValidationError if `c` is not valid on `platform`.
Configuration snap_to_platform(const PlatformSpec& platform, const Configuration& c);

/// Number of configurations: (Cb+1)(CL+1)|Fb||FL| - |Fb||FL|.
std::size_t configuration_count(const PlatformSpec& platform);

/// Every valid configuration, ordered lexicographically by
/// (big cores, LITTLE cores, big frequency index, LITTLE frequency index).
std::vector<Configuration> enumerate_configurations(const PlatformSpec& platform);

/// The ODROID-XU3 (Exynos 5422): 4x Cortex-A15 at 200 MHz..2 GHz (19 levels)
/// and 4x Cortex-A7 at 200 MHz..1.5 GHz (14 levels), 100 MHz steps.
PlatformSpec odroid_xu3();

/// Resolves a `--platform` argument: a preset name (`odroid-xu3`) or a JSON file path.
PlatformSpec load_platform(std::string_view ref);

} // namespace hmp
