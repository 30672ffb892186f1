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

#include "hmpareto/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "hmpareto/csv.hpp"
#include "hmpareto/error.hpp"

namespace hmp {

namespace {

// Floor for simulated values so a large noise draw never yields a non-positive measurement.
constexpr double kMinPower = 1e-6;
constexpr double kMinTimeFraction = 1e-6;

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void validate_campaign(const SyntheticGroundTruth& truth, const Campaign& campaign)
{
    validate(truth.perf);
    validate(truth.power);
    if (!(truth.noise_time_sigma >= 0.0) || !(truth.noise_power_sigma >= 0.0)) {
        throw ValidationError("noise sigmas must be >= 0");
    }
    if (campaign.repeats < 1) {
        throw ValidationError("campaign repeats must be >= 1");
    }
    std::set<Configuration> seen;
    for (const auto& c : campaign.configurations) {
        if (!validate_configuration(campaign.platform, c)) {
            throw ValidationError("campaign configuration is not valid on the platform");
        }
        if (!seen.insert(c).second) {
            throw ValidationError("campaign configurations must be distinct");
        }
    }
}

} // namespace

std::vector<MeasurementRow> simulate_runs(const SyntheticGroundTruth& truth, const Campaign& campaign)
{
    validate_campaign(truth, campaign);
    std::vector<MeasurementRow> rows;
    rows.reserve(campaign.configurations.size() * static_cast<std::size_t>(campaign.repeats));
    for (std::size_t i = 0; i < campaign.configurations.size(); ++i) {
        const Configuration& c = campaign.configurations[i];
        std::seed_seq seq{static_cast<std::uint32_t>(truth.seed), static_cast<std::uint32_t>(truth.seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> unit(0.0, 1.0);

        const double time = predict_time(truth.perf, c);
        const double power = power_parallel(truth.power, c);
        for (int r = 0; r < campaign.repeats; ++r) {
            const double time_noise = truth.noise_time_sigma > 0.0 ? truth.noise_time_sigma * unit(rng) : 0.0;
            const double power_noise = truth.noise_power_sigma > 0.0 ? truth.noise_power_sigma * unit(rng) : 0.0;
            rows.push_back(MeasurementRow{
                .app = truth.app,
                .config = c,
                .time_s = std::max(time * (1.0 + time_noise), time * kMinTimeFraction),
                .power_w = std::max(power + power_noise, kMinPower),
                .repeat = r,
            });
        }
    }
    return rows;
}

std::vector<MeasurementRecord> simulate_measurements(const SyntheticGroundTruth& truth, const Campaign& campaign)
{
    const auto rows = simulate_runs(truth, campaign);
    return aggregate_runs(rows);
}

std::vector<MeasurementRecord> aggregate_runs(std::span<const MeasurementRow> rows)
{
    struct Group {
        std::vector<double> times;
        std::vector<double> powers;
        int count = 0;
    };
    using Key = std::tuple<std::string, Configuration>;
    std::map<Key, std::size_t> index;
    std::vector<Key> keys;
    std::vector<Group> groups;
    for (const auto& row : rows) {
        Key key{row.app, row.config};
        auto [it, inserted] = index.try_emplace(key, groups.size());
        if (inserted) {
            keys.push_back(key);
            groups.emplace_back();
        }
        Group& g = groups[it->second];
        if (row.time_s) g.times.push_back(*row.time_s);
        if (row.power_w) g.powers.push_back(*row.power_w);
        ++g.count;
    }

    std::vector<MeasurementRecord> out;
    out.reserve(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const Group& g = groups[i];
        MeasurementRecord rec;
        rec.config = std::get<1>(keys[i]);
        rec.app = std::get<0>(keys[i]);
        rec.repeats = g.count;
        if (!g.times.empty()) rec.time_s = median(g.times);
        if (!g.powers.empty()) {
            double sum = 0.0;
            for (double p : g.powers) sum += p;
            rec.power_w = sum / static_cast<double>(g.powers.size());
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<MeasurementRecord> ingest_measurements(std::istream& in, const PlatformSpec& platform,
                                                   const std::string& source)
{
    validate_platform(platform);
    auto numbered = read_measurement_rows(in, source);
    if (numbered.empty()) {
        throw ParseError(source + ": no measurement rows");
    }
    std::vector<MeasurementRow> rows;
    rows.reserve(numbered.size());
    for (auto& [line, row] : numbered) {
        if (!validate_configuration(platform, row.config)) {
            throw ParseError(source + ":" + std::to_string(line) + ": configuration is not valid on the platform");
        }
        row.config = snap_to_platform(platform, row.config);
        rows.push_back(std::move(row));
    }
    return aggregate_runs(rows);
}

std::vector<MeasurementRecord> ingest_measurements(const std::string& path, const PlatformSpec& platform)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open measurement file '" + path + "'");
    }
    return ingest_measurements(in, platform, path);
}

TraceEnergy energy_from_power_trace(std::span<const PowerSample> samples)
{
    if (samples.size() < 2) {
        throw ValidationError("power trace needs at least two samples");
    }
    double energy = 0.0;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double dt = samples[i].t_s - samples[i - 1].t_s;
        if (!(dt > 0.0)) {
            throw ValidationError("power trace timestamps must be strictly increasing (sample "
                                  + std::to_string(i) + ")");
        }
        energy += 0.5 * (samples[i].power_w + samples[i - 1].power_w) * dt;
    }
    const double duration = samples.back().t_s - samples.front().t_s;
    return {.energy_j = energy, .duration_s = duration, .average_power_w = energy / duration};
}

} // namespace hmp
