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

#include <doctest.h>

#include <set>

#include "hmpareto/error.hpp"
#include "hmpareto/sampling.hpp"
#include "test_support.hpp"

using namespace hmp;

TEST_CASE("radical inverse")
{
    CHECK(halton_value(1, 2) == 0.5);
    CHECK(halton_value(2, 2) == 0.25);
    CHECK(halton_value(3, 2) == 0.75);
    CHECK(halton_value(4, 2) == 0.125);
    CHECK(halton_value(1, 3) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(halton_value(2, 3) == doctest::Approx(2.0 / 3).epsilon(1e-15));
    CHECK(halton_value(3, 3) == doctest::Approx(1.0 / 9).epsilon(1e-15));
    CHECK(halton_value(0, 5) == 0.0);
}

TEST_CASE("plan validation")
{
    const PlatformSpec p = odroid_xu3();
    CHECK_THROWS_AS(sample_configurations(p, {.count = 0}), ValidationError);
    CHECK_THROWS_AS(sample_configurations(p, {.count = 1, .bases = {2, 3, 4, 7}}), ValidationError);
    CHECK_THROWS_AS(sample_configurations(p, {.count = 1, .bases = {2, 3, 3, 7}}), ValidationError);
    CHECK_THROWS_AS(sample_configurations(p, {.count = 1, .start_index = 0}), ValidationError);
    CHECK_THROWS_AS(sample_configurations(p, {.count = 6385}), ValidationError);
}

TEST_CASE("first sample is the discretized first Halton point")
{
    const PlatformSpec p = odroid_xu3();
    const auto s = sample_configurations(p, {.count = 1, .bases = {2, 3, 5, 7}, .start_index = 1});
    REQUIRE(s.size() == 1);
    const std::array<double, 4> u{halton_value(1, 2), halton_value(1, 3), halton_value(1, 5), halton_value(1, 7)};
    CHECK(u[0] == 0.5);
    CHECK(s[0] == discretize(p, u));
    // floor(0.5*5)=2, floor(5/3)=1, floor(0.2*19)=3 -> 500 MHz, floor(14/7)=2 -> 400 MHz
    CHECK(s[0].big_cores == 2);
    CHECK(s[0].little_cores == 1);
    CHECK(s[0].big_freq_hz == 500e6);
}

TEST_CASE("95 distinct valid configurations on the odroid")
{
    const PlatformSpec p = odroid_xu3();
    const auto s = sample_configurations(p, {.count = 95});
    CHECK(s.size() == 95);
    const std::set<Configuration> unique(s.begin(), s.end());
    CHECK(unique.size() == 95);
    for (const auto& c : s) CHECK(validate_configuration(p, c));
    // Idle-cluster configurations are part of the sampled space.
    CHECK(std::any_of(s.begin(), s.end(), [](const Configuration& c) { return c.big_cores == 0; }));
    CHECK(sample_configurations(p, {.count = 95}) == s);
}

TEST_CASE("asking for the full space yields a permutation of the enumeration")
{
    for (const auto& p : {testing::tiny_platform(1, 2, 1, 3), testing::tiny_platform(2, 2, 1, 2),
                          testing::tiny_platform(1, 1, 1, 1)}) {
        const auto all = enumerate_configurations(p);
        const auto s = sample_configurations(p, {.count = all.size()});
        CHECK(std::set<Configuration>(s.begin(), s.end()) == std::set<Configuration>(all.begin(), all.end()));
        CHECK(s.size() == all.size());
    }
}

TEST_CASE("every frequency index appears with enough samples")
{
    const PlatformSpec p = testing::tiny_platform(1, 6, 1, 5);
    const auto s = sample_configurations(p, {.count = 4 * 6});
    std::set<double> big, little;
    for (const auto& c : s) {
        big.insert(c.big_freq_hz);
        little.insert(c.little_freq_hz);
    }
    CHECK(big.size() == 6);
    CHECK(little.size() == 5);
}

TEST_CASE("start index shifts the sequence")
{
    const PlatformSpec p = odroid_xu3();
    const auto a = sample_configurations(p, {.count = 10, .start_index = 1});
    const auto b = sample_configurations(p, {.count = 10, .start_index = 1000});
    CHECK(a != b);
    for (const auto& c : b) CHECK(validate_configuration(p, c));
}
