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

#include "hmpareto/models.hpp"

#include <cmath>

#include "hmpareto/error.hpp"

namespace hmp {

namespace {

bool positive(double x) { return std::isfinite(x) && x > 0.0; }
bool non_negative(double x) { return std::isfinite(x) && x >= 0.0; }

void check_configuration(const Configuration& c)
{
    if (c.big_cores < 0 || c.little_cores < 0) {
        throw DomainError("negative core count");
    }
    if (c.big_cores + c.little_cores == 0) {
        throw DomainError("configuration has no active core");
    }
    if (!positive(c.big_freq_hz) || !positive(c.little_freq_hz)) {
        throw DomainError("cluster frequencies must be > 0");
    }
}

double cube(double x) { return x * x * x; }

double static_power(const PowerParams& q, const Configuration& c)
{
    return q.big_cores_total * q.beta_big * c.big_freq_hz + q.little_cores_total * q.beta_little * c.little_freq_hz;
}

} // namespace

void validate(const PerfParams& p)
{
    if (!(p.parallel_fraction >= 0.0 && p.parallel_fraction <= 1.0)) {
        throw ValidationError("parallel fraction must lie in [0, 1]");
    }
    if (!positive(p.big_speedup)) throw ValidationError("big-core speedup must be > 0");
    if (!positive(p.little_ref_time_s)) throw ValidationError("reference time must be > 0");
    if (!positive(p.ref_freq_hz)) throw ValidationError("reference frequency must be > 0");
}

void validate(const PowerParams& q)
{
    if (!non_negative(q.alpha_big) || !non_negative(q.beta_big) || !non_negative(q.alpha_little)
        || !non_negative(q.beta_little)) {
        throw ValidationError("power constants must be finite and >= 0");
    }
    if (q.big_cores_total < 1 || q.little_cores_total < 1) {
        throw ValidationError("cluster core totals must be >= 1");
    }
}

PowerParams with_platform_cores(PowerParams q, const PlatformSpec& platform)
{
    q.big_cores_total = platform.big.core_count;
    q.little_cores_total = platform.little.core_count;
    return q;
}

TimeBreakdown time_breakdown(const PerfParams& p, const Configuration& c)
{
    check_configuration(c);
    const double work = p.little_ref_time_s * p.ref_freq_hz;
    const double f = p.parallel_fraction;
    if (c.big_cores > 0) {
        const double big_rate = p.big_speedup * c.big_freq_hz;
        return {
            .sequential_s = work * (1.0 - f) / big_rate,
            .parallel_s = work * f / (c.big_cores * big_rate + c.little_cores * c.little_freq_hz),
        };
    }
    return {
        .sequential_s = work * (1.0 - f) / c.little_freq_hz,
        .parallel_s = work * f / (c.little_cores * c.little_freq_hz),
    };
}

double predict_time(const PerfParams& p, const Configuration& c) { return time_breakdown(p, c).total(); }

double power_parallel(const PowerParams& q, const Configuration& c)
{
    return c.big_cores * q.alpha_big * cube(c.big_freq_hz) + c.little_cores * q.alpha_little * cube(c.little_freq_hz)
         + static_power(q, c);
}

double power_sequential(const PowerParams& q, const Configuration& c)
{
    const double dynamic =
        c.big_cores > 0 ? q.alpha_big * cube(c.big_freq_hz) : q.alpha_little * cube(c.little_freq_hz);
    return dynamic + static_power(q, c);
}

double predict_energy(const PerfParams& p, const PowerParams& q, const Configuration& c)
{
    check_configuration(c);
    const double f = p.parallel_fraction;
    const double fb = c.big_freq_hz;
    const double fl = c.little_freq_hz;
    const double big_static = q.big_cores_total * q.beta_big * fb;
    const double little_static = q.little_cores_total * q.beta_little * fl;
    const double little_dynamic = c.little_cores * q.alpha_little * cube(fl);

    double per_unit_work = 0.0;
    if (c.big_cores > 0) {
        const double big_rate = p.big_speedup * fb;
        per_unit_work = (1.0 - f) * (little_static + q.alpha_big * cube(fb) + big_static) / big_rate
                      + f * (little_dynamic + little_static + c.big_cores * q.alpha_big * cube(fb) + big_static)
                            / (c.big_cores * big_rate + c.little_cores * fl);
    } else {
        per_unit_work = (1.0 - f) * (big_static + q.alpha_little * cube(fl) + little_static) / fl
                      + f * (little_dynamic + little_static + big_static) / (c.little_cores * fl);
    }
    return p.little_ref_time_s * p.ref_freq_hz * per_unit_work;
}

Estimate estimate(const PerfParams& p, const PowerParams& q, const Configuration& c)
{
    return Estimate{
        .config = c,
        .time_s = predict_time(p, c),
        .energy_j = predict_energy(p, q, c),
        .power_seq_w = power_sequential(q, c),
        .power_par_w = power_parallel(q, c),
    };
}

std::vector<Estimate> predict_all(const PerfParams& p, const PowerParams& q, const PlatformSpec& platform)
{
    validate(p);
    validate(q);
    if (q.big_cores_total != platform.big.core_count || q.little_cores_total != platform.little.core_count) {
        throw ValidationError("power parameters were built for a different cluster size");
    }
    const auto configs = enumerate_configurations(platform);
    std::vector<Estimate> out;
    out.reserve(configs.size());
    for (const auto& c : configs) {
        out.push_back(estimate(p, q, c));
    }
    return out;
}

} // namespace hmp
