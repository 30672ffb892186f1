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

#include "hmpareto/platform.hpp"

#include <cmath>

#include "hmpareto/error.hpp"
#include "hmpareto/json_io.hpp"

namespace hmp {

namespace {

constexpr double kFreqRelTol = 1e-9;

void validate_cluster(const ClusterSpec& cluster, std::string_view role)
{
    const std::string label = cluster.name.empty() ? std::string(role) : cluster.name;
    if (cluster.core_count < 1) {
        throw ValidationError(label + ": core_count must be >= 1");
    }
    if (cluster.frequencies_hz.empty()) {
        throw ValidationError(label + ": frequency ladder is empty");
    }
    double prev = 0.0;
    for (double f : cluster.frequencies_hz) {
        if (!std::isfinite(f) || f <= 0.0) {
            throw ValidationError(label + ": frequencies must be finite and > 0");
        }
        if (f <= prev) {
            throw ValidationError(label + ": frequencies must be strictly ascending");
        }
        prev = f;
    }
}

std::vector<double> ladder_mhz(int from, int to, int step)
{
    std::vector<double> out;
    for (int mhz = from; mhz <= to; mhz += step) {
        out.push_back(mhz * 1e6);
    }
    return out;
}

} // namespace

void validate_platform(const PlatformSpec& platform)
{
    validate_cluster(platform.big, "big");
    validate_cluster(platform.little, "little");
    if (!platform.big.name.empty() && platform.big.name == platform.little.name) {
        throw ValidationError("big and little clusters must be distinct");
    }
}

std::optional<std::size_t> find_frequency_index(std::span<const double> ladder, double hz)
{
    if (!std::isfinite(hz)) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (std::abs(ladder[i] - hz) <= kFreqRelTol * std::abs(ladder[i])) {
            return i;
        }
    }
    return std::nullopt;
}

bool validate_configuration(const PlatformSpec& platform, const Configuration& c) noexcept
{
    try {
        validate_platform(platform);
    } catch (const ValidationError&) {
        return false;
    }
    if (c.big_cores < 0 || c.big_cores > platform.big.core_count) return false;
    if (c.little_cores < 0 || c.little_cores > platform.little.core_count) return false;
    if (c.big_cores + c.little_cores < 1) return false;
    return find_frequency_index(platform.big.frequencies_hz, c.big_freq_hz).has_value()
        && find_frequency_index(platform.little.frequencies_hz, c.little_freq_hz).has_value();
}

Configuration snap_to_platform(const PlatformSpec& platform, const Configuration& c)
{
    if (!validate_configuration(platform, c)) {
        throw ValidationError("configuration is not valid on this platform");
    }
    Configuration out = c;
    out.big_freq_hz = platform.big.frequencies_hz[*find_frequency_index(platform.big.frequencies_hz, c.big_freq_hz)];
    out.little_freq_hz =
        platform.little.frequencies_hz[*find_frequency_index(platform.little.frequencies_hz, c.little_freq_hz)];
    return out;
}

std::size_t configuration_count(const PlatformSpec& platform)
{
    validate_platform(platform);
    const std::size_t freq_pairs = platform.big.frequencies_hz.size() * platform.little.frequencies_hz.size();
    const auto core_pairs = static_cast<std::size_t>(platform.big.core_count + 1)
                          * static_cast<std::size_t>(platform.little.core_count + 1);
    return (core_pairs - 1) * freq_pairs;
}

std::vector<Configuration> enumerate_configurations(const PlatformSpec& platform)
{
    std::vector<Configuration> out;
    out.reserve(configuration_count(platform));
    for (int b = 0; b <= platform.big.core_count; ++b) {
        for (int l = 0; l <= platform.little.core_count; ++l) {
            if (b + l == 0) continue;
            for (double fb : platform.big.frequencies_hz) {
                for (double fl : platform.little.frequencies_hz) {
                    out.push_back({b, l, fb, fl});
                }
            }
        }
    }
    return out;
}

PlatformSpec odroid_xu3()
{
    return PlatformSpec{
        .big = {"cortex-a15", 4, ladder_mhz(200, 2000, 100)},
        .little = {"cortex-a7", 4, ladder_mhz(200, 1500, 100)},
    };
}

PlatformSpec load_platform(std::string_view ref)
{
    if (ref == "odroid-xu3") {
        return odroid_xu3();
    }
    const nlohmann::json doc = read_json_file(std::string(ref));
    return platform_from_json(doc);
}

} // namespace hmp
