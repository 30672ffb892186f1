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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hmpareto/platform.hpp"

namespace hmp {

/// Radical inverse of `index` in `base`: the base-`base` digits of `index`
/// mirrored about the radix point. halton_value(4, 2) == 0.125.
double halton_value(std::uint64_t index, std::uint32_t base);

/// Parameters of a Halton sampling run.
///
/// Dimensions are fixed as [big cores, LITTLE cores, big frequency index,
/// LITTLE frequency index]; `bases[i]` drives dimension i.
struct SamplePlan {
    std::size_t count = 1;
    std::array<std::uint32_t, 4> bases{2, 3, 5, 7};
    std::uint64_t start_index = 1;
};

void validate_plan(const SamplePlan& plan);

/// Maps one point of [0,1)^4 onto the platform grid. Core counts range over
/// 0..core_count inclusive; the result may be the invalid (0, 0) combination.
Configuration discretize(const PlatformSpec& platform, const std::array<double, 4>& point);

/// `plan.count` distinct, valid configurations drawn from consecutive Halton
/// indices starting at `plan.start_index`. Points that discretize to (0, 0)
/// or to an already-emitted configuration are skipped.
///
/// Throws ValidationError if the plan is invalid or asks for more
/// configurations than the space holds.
std::vector<Configuration> sample_configurations(const PlatformSpec& platform, const SamplePlan& plan);

} // namespace hmp
