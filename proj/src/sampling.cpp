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

#include "hmpareto/sampling.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hmpareto/error.hpp"

namespace hmp {

namespace {

// Upper bound on Halton indices consumed by one call.
constexpr std::uint64_t kMaxDraws = 10'000'000;

bool is_prime(std::uint32_t n)
{
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::size_t scale_to_index(double u, std::size_t n)
{
    const auto i = static_cast<std::size_t>(u * static_cast<double>(n));
    return std::min(i, n - 1);
}

} // namespace

double halton_value(std::uint64_t index, std::uint32_t base)
{
    double result = 0.0;
    double scale = 1.0;
    const double inv_base = 1.0 / base;
    while (index > 0) {
        scale *= inv_base;
        result += scale * static_cast<double>(index % base);
        index /= base;
    }
    return result;
}

void validate_plan(const SamplePlan& plan)
{
    if (plan.count < 1) {
        throw ValidationError("sample count must be >= 1");
    }
    if (plan.start_index < 1) {
        throw ValidationError("Halton start index must be >= 1");
    }
    for (std::size_t i = 0; i < plan.bases.size(); ++i) {
        if (!is_prime(plan.bases[i])) {
            throw ValidationError("Halton base " + std::to_string(plan.bases[i]) + " is not prime");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (plan.bases[i] == plan.bases[j]) {
                throw ValidationError("Halton bases must be pairwise distinct");
            }
        }
    }
}

Configuration discretize(const PlatformSpec& platform, const std::array<double, 4>& point)
{
    const auto& fb = platform.big.frequencies_hz;
    const auto& fl = platform.little.frequencies_hz;
    return Configuration{
        .big_cores = static_cast<int>(scale_to_index(point[0], platform.big.core_count + 1)),
        .little_cores = static_cast<int>(scale_to_index(point[1], platform.little.core_count + 1)),
        .big_freq_hz = fb[scale_to_index(point[2], fb.size())],
        .little_freq_hz = fl[scale_to_index(point[3], fl.size())],
    };
}

std::vector<Configuration> sample_configurations(const PlatformSpec& platform, const SamplePlan& plan)
{
    validate_plan(plan);
    const std::size_t space = configuration_count(platform);
    if (plan.count > space) {
        throw ValidationError("requested " + std::to_string(plan.count) + " samples but the platform has only "
                              + std::to_string(space) + " configurations");
    }

    std::vector<Configuration> out;
    out.reserve(plan.count);
    std::set<Configuration> seen;
    for (std::uint64_t k = 0; out.size() < plan.count; ++k) {
        if (k >= kMaxDraws) {
            throw ValidationError("Halton sequence did not yield enough distinct configurations");
        }
        const std::uint64_t index = plan.start_index + k;
        std::array<double, 4> u{};
        for (std::size_t d = 0; d < u.size(); ++d) {
            u[d] = halton_value(index, plan.bases[d]);
        }
        const Configuration c = discretize(platform, u);
        if (c.big_cores + c.little_cores == 0) continue;
        if (seen.insert(c).second) {
            out.push_back(c);
        }
    }
    return out;
}

} // namespace hmp
