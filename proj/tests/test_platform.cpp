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
#include "hmpareto/json_io.hpp"
#include "hmpareto/platform.hpp"
#include "test_support.hpp"

using namespace hmp;

TEST_CASE("odroid preset has the documented ladders")
{
    const PlatformSpec p = odroid_xu3();
    CHECK(p.big.core_count == 4);
    CHECK(p.little.core_count == 4);
    REQUIRE(p.big.frequencies_hz.size() == 19);
    REQUIRE(p.little.frequencies_hz.size() == 14);
    CHECK(p.big.frequencies_hz.front() == 200e6);
    CHECK(p.big.frequencies_hz.back() == 2e9);
    CHECK(p.little.frequencies_hz.front() == 200e6);
    CHECK(p.little.frequencies_hz.back() == 1.5e9);
}

TEST_CASE("enumeration size")
{
    CHECK(enumerate_configurations(odroid_xu3()).size() == 6384);
    CHECK(configuration_count(odroid_xu3()) == 6384);

    const auto tiny = enumerate_configurations(testing::tiny_platform(1, 1, 1, 1));
    REQUIRE(tiny.size() == 3);
    CHECK(tiny[0].big_cores == 0);
    CHECK(tiny[0].little_cores == 1);
    CHECK(tiny[1].big_cores == 1);
    CHECK(tiny[1].little_cores == 0);
    CHECK(tiny[2].big_cores == 1);
    CHECK(tiny[2].little_cores == 1);
}

TEST_CASE("invalid platforms are rejected")
{
    PlatformSpec p = testing::tiny_platform(1, 2, 1, 2);
    p.big.core_count = 0;
    CHECK_THROWS_AS(enumerate_configurations(p), ValidationError);

    p = testing::tiny_platform(1, 2, 1, 2);
    p.little.frequencies_hz.clear();
    CHECK_THROWS_AS(validate_platform(p), ValidationError);

    p = testing::tiny_platform(1, 2, 1, 2);
    p.big.frequencies_hz = {2e9, 1e9};
    CHECK_THROWS_AS(validate_platform(p), ValidationError);

    p = testing::tiny_platform(1, 2, 1, 2);
    p.big.frequencies_hz = {0.0, 1e9};
    CHECK_THROWS_AS(validate_platform(p), ValidationError);

    p = testing::tiny_platform(1, 2, 1, 2);
    p.little.name = p.big.name;
    CHECK_THROWS_AS(validate_platform(p), ValidationError);
}

TEST_CASE("validate_configuration")
{
    const PlatformSpec p = odroid_xu3();
    CHECK_FALSE(validate_configuration(p, {0, 0, 2e9, 1.5e9}));
    CHECK(validate_configuration(p, {4, 4, 2e9, 1.5e9}));
    CHECK_FALSE(validate_configuration(p, {1, 1, 2.1e9, 1.5e9}));
    CHECK_FALSE(validate_configuration(p, {1, 1, 2e9, 1.6e9}));
    CHECK_FALSE(validate_configuration(p, {5, 0, 2e9, 1.5e9}));
    CHECK_FALSE(validate_configuration(p, {-1, 2, 2e9, 1.5e9}));
    // A hair off the ladder value still matches it.
    CHECK(validate_configuration(p, {1, 0, 2e9 * (1 + 1e-12), 200e6}));
    CHECK(snap_to_platform(p, {1, 0, 2e9 * (1 + 1e-12), 200e6}).big_freq_hz == 2e9);
}

TEST_CASE("enumeration matches the filtered Cartesian product on random platforms")
{
    testing::Generator gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const PlatformSpec p =
            testing::tiny_platform(gen.integer(1, 4), gen.integer(1, 5), gen.integer(1, 4), gen.integer(1, 5));
        const auto configs = enumerate_configurations(p);

        std::size_t brute = 0;
        for (int b = 0; b <= p.big.core_count; ++b)
            for (int l = 0; l <= p.little.core_count; ++l)
                for (double fb : p.big.frequencies_hz)
                    for (double fl : p.little.frequencies_hz)
                        if (validate_configuration(p, {b, l, fb, fl})) ++brute;
        CHECK(configs.size() == brute);

        const std::size_t nb = p.big.frequencies_hz.size();
        const std::size_t nl = p.little.frequencies_hz.size();
        CHECK(configs.size() == (p.big.core_count + 1) * nb * (p.little.core_count + 1) * nl - nb * nl);

        const std::set<Configuration> unique(configs.begin(), configs.end());
        CHECK(unique.size() == configs.size());
        for (const auto& c : configs) CHECK(validate_configuration(p, c));
        CHECK(std::is_sorted(configs.begin(), configs.end()));
    }
}

TEST_CASE("platform JSON round trip and errors")
{
    const PlatformSpec p = odroid_xu3();
    CHECK(platform_from_json(platform_to_json(p)) == p);

    nlohmann::json doc = platform_to_json(p);
    doc["big"]["core_count"] = 0;
    CHECK_THROWS_AS(platform_from_json(doc), ValidationError);

    doc = platform_to_json(p);
    doc["little"].erase("frequencies_hz");
    CHECK_THROWS_AS(platform_from_json(doc), ParseError);

    CHECK(load_platform("odroid-xu3") == p);
    CHECK_THROWS_AS(load_platform("/nonexistent/platform.json"), ParseError);
}
