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

#include "hmpareto/error.hpp"
#include "hmpareto/models.hpp"
#include "test_support.hpp"

using namespace hmp;
using doctest::Approx;

namespace {

const Configuration kAllCoresTop{4, 4, 2e9, 1.5e9};

} // namespace

TEST_CASE("time on one LITTLE core at the reference clock is the reference time")
{
    for (double f : {0.0, 0.3, 0.9, 1.0}) {
        const PerfParams p = testing::perf_with(f, 42.0, 800e6);
        CHECK(predict_time(p, {0, 1, 2e9, 800e6}) == Approx(42.0).epsilon(1e-15));
    }
}

TEST_CASE("perfect scaling on two LITTLE cores halves the time")
{
    const PerfParams p = testing::perf_with(1.0, 10.0, 600e6);
    CHECK(predict_time(p, {0, 2, 1e9, 600e6}) == Approx(5.0).epsilon(1e-15));
}

TEST_CASE("smallpt-like prediction at the top configuration")
{
    // Exact-rational hand evaluation of both addends: 0.21507643647865 + 3.73932754061201.
    const PerfParams p = testing::perf_with(0.9898);
    const TimeBreakdown t = time_breakdown(p, kAllCoresTop);
    CHECK(t.sequential_s == Approx(0.2150764364786505).epsilon(1e-12));
    CHECK(t.parallel_s == Approx(3.7393275406120137).epsilon(1e-12));
    CHECK(predict_time(p, kAllCoresTop) == Approx(3.954403977090664).epsilon(1e-12));
}

TEST_CASE("big cores without LITTLE cores")
{
    const PerfParams p = testing::perf_with(0.8, 10.0, 1e9);
    // seq = 10 * 0.2 / 1.897 ; par = 10 * 0.8 / (2 * 1.897)
    CHECK(predict_time(p, {2, 0, 1e9, 1e9}) == Approx(10 * 0.2 / 1.897 + 10 * 0.8 / (2 * 1.897)).epsilon(1e-14));
}

TEST_CASE("no active core is a domain error")
{
    const PerfParams p = testing::perf_with(0.5);
    CHECK_THROWS_AS(predict_time(p, {0, 0, 1e9, 1e9}), DomainError);
    CHECK_THROWS_AS(predict_energy(p, testing::odroid_power(), {0, 0, 1e9, 1e9}), DomainError);
}

TEST_CASE("chip power with the fitted odroid constants")
{
    const PowerParams q = testing::odroid_power();
    // 4*2.914e-28*8e27 + 4*9.342e-11*2e9 + 4*5.953e-29*3.375e27 + 4*1.033e-10*1.5e9
    CHECK(power_parallel(q, kAllCoresTop) == Approx(11.495615).epsilon(1e-12));
    // 2.914e-28*8e27 + 4*9.342e-11*2e9 + 4*1.033e-10*1.5e9
    CHECK(power_sequential(q, kAllCoresTop) == Approx(3.69836).epsilon(1e-12));

    const Configuration idle{0, 0, 2e9, 1.5e9};
    CHECK(power_parallel(q, idle) == Approx(4 * 9.342e-11 * 2e9 + 4 * 1.033e-10 * 1.5e9).epsilon(1e-14));
}

TEST_CASE("power structure")
{
    const PowerParams q = testing::odroid_power();
    const Configuration one{1, 3, 1.2e9, 900e6};
    const Configuration two{2, 3, 1.2e9, 900e6};
    CHECK(power_parallel(q, two) - power_parallel(q, one) == Approx(q.alpha_big * 1.2e9 * 1.2e9 * 1.2e9).epsilon(1e-9));

    // The sequential phase charges a single big core regardless of how many are active.
    CHECK(power_sequential(q, one) == power_sequential(q, two));
    CHECK(power_sequential(q, {4, 0, 1.2e9, 900e6}) == power_sequential(q, one));

    // Without big cores the sequential phase looks like one LITTLE core running in parallel.
    const Configuration little_only{0, 3, 1.2e9, 900e6};
    CHECK(power_sequential(q, little_only) == Approx(power_parallel(q, {0, 1, 1.2e9, 900e6})).epsilon(1e-15));
}

TEST_CASE("energy at the extremes of the parallel fraction")
{
    const PowerParams q = testing::odroid_power();
    for (const Configuration& c : {kAllCoresTop, Configuration{0, 3, 1e9, 700e6}, Configuration{2, 0, 1e9, 700e6}}) {
        const PerfParams serial = testing::perf_with(0.0);
        CHECK(predict_energy(serial, q, c)
              == Approx(time_breakdown(serial, c).sequential_s * power_sequential(q, c)).epsilon(1e-12));
        CHECK(time_breakdown(serial, c).parallel_s == 0.0);

        const PerfParams parallel = testing::perf_with(1.0);
        CHECK(predict_energy(parallel, q, c)
              == Approx(time_breakdown(parallel, c).parallel_s * power_parallel(q, c)).epsilon(1e-12));
    }
}

TEST_CASE("smallpt-like energy equals the phase decomposition")
{
    // 0.2150764364786505 s * 3.69836 W + 3.7393275406120137 s * 11.495615 W
    CHECK(predict_energy(testing::perf_with(0.9898), testing::odroid_power(), kAllCoresTop)
          == Approx(43.78129985538776).epsilon(1e-12));
}

TEST_CASE("energy decomposition identity on random inputs")
{
    testing::Generator gen(2024);
    for (int i = 0; i < 2000; ++i) {
        const PerfParams p = gen.perf();
        const PowerParams q = gen.power();
        const Configuration c = gen.configuration();
        const TimeBreakdown t = time_breakdown(p, c);
        const double oracle = t.sequential_s * power_sequential(q, c) + t.parallel_s * power_parallel(q, c);
        CHECK(testing::close_rel(predict_energy(p, q, c), oracle, 1e-9));
    }
}

TEST_CASE("monotonicity of time and power")
{
    testing::Generator gen(7);
    const PlatformSpec platform = odroid_xu3();
    const auto& fb = platform.big.frequencies_hz;
    const auto& fl = platform.little.frequencies_hz;
    for (int trial = 0; trial < 100; ++trial) {
        PerfParams p = gen.perf();
        p.parallel_fraction = gen.uniform(1e-6, 1.0);
        const PowerParams q = gen.power();
        const Configuration c{gen.integer(1, 4), gen.integer(0, 4), fb[gen.integer(0, 17)], fl[gen.integer(0, 12)]};

        Configuration faster_big = c;
        faster_big.big_freq_hz = fb[gen.integer(0, 18)];
        if (faster_big.big_freq_hz >= c.big_freq_hz) {
            CHECK(predict_time(p, faster_big) <= predict_time(p, c));
            CHECK(power_parallel(q, faster_big) >= power_parallel(q, c));
        }
        if (c.big_cores < 4) {
            Configuration more_big = c;
            ++more_big.big_cores;
            CHECK(predict_time(p, more_big) <= predict_time(p, c));
            CHECK(power_parallel(q, more_big) >= power_parallel(q, c));
        }
        if (c.little_cores < 4) {
            Configuration more_little = c;
            ++more_little.little_cores;
            CHECK(predict_time(p, more_little) <= predict_time(p, c));
            CHECK(power_parallel(q, more_little) >= power_parallel(q, c));
        }
    }
}

TEST_CASE("scaling the reference time scales time and energy")
{
    testing::Generator gen(99);
    for (int i = 0; i < 500; ++i) {
        const PerfParams p = gen.perf();
        const PowerParams q = gen.power();
        const Configuration c = gen.configuration();
        const double k = gen.log_uniform(1e-3, 1e3);
        PerfParams scaled = p;
        scaled.little_ref_time_s *= k;
        CHECK(testing::close_rel(predict_time(scaled, c), k * predict_time(p, c), 1e-12));
        CHECK(testing::close_rel(predict_energy(scaled, q, c), k * predict_energy(p, q, c), 1e-12));
    }
}

TEST_CASE("predict_all covers the space in enumeration order")
{
    const PlatformSpec platform = odroid_xu3();
    const auto all = predict_all(testing::perf_with(0.9), testing::odroid_power(), platform);
    REQUIRE(all.size() == 6384);
    const auto configs = enumerate_configurations(platform);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].config == configs[i]);
        CHECK(all[i].time_s > 0.0);
        CHECK(all[i].energy_j > 0.0);
    }

    const PlatformSpec tiny = testing::tiny_platform(1, 1, 1, 1);
    PowerParams q = with_platform_cores(testing::odroid_power(), tiny);
    const PerfParams p = testing::perf_with(0.7);
    const auto small = predict_all(p, q, tiny);
    REQUIRE(small.size() == 3);
    for (const auto& e : small) CHECK(e == estimate(p, q, e.config));
}

TEST_CASE("parameter validation")
{
    const PlatformSpec platform = odroid_xu3();
    PerfParams p = testing::perf_with(1.2);
    CHECK_THROWS_AS(predict_all(p, testing::odroid_power(), platform), ValidationError);
    p = testing::perf_with(0.5);
    p.big_speedup = 0.0;
    CHECK_THROWS_AS(validate(p), ValidationError);

    PowerParams q = testing::odroid_power();
    q.beta_little = -1e-12;
    CHECK_THROWS_AS(validate(q), ValidationError);

    q = testing::odroid_power();
    q.big_cores_total = 2;
    CHECK_THROWS_AS(predict_all(testing::perf_with(0.5), q, platform), ValidationError);
}
