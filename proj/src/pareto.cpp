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

#include "hmpareto/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hmpareto/error.hpp"

namespace hmp {

bool dominates(const Estimate& a, const Estimate& b)
{
    return a.time_s <= b.time_s && a.energy_j <= b.energy_j && (a.time_s < b.time_s || a.energy_j < b.energy_j);
}

std::vector<Estimate> pareto_frontier(std::span<const Estimate> points)
{
    if (points.empty()) {
        throw ValidationError("pareto_frontier: no points");
    }
    for (const auto& p : points) {
        if (!std::isfinite(p.time_s) || !std::isfinite(p.energy_j)) {
            throw ValidationError("pareto_frontier: non-finite time or energy");
        }
    }

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (points[a].time_s != points[b].time_s) return points[a].time_s < points[b].time_s;
        return points[a].energy_j < points[b].energy_j;
    });

    // Everything earlier in the sweep is no slower, so a group of identical
    // (time, energy) points survives iff it beats every earlier energy.
    std::vector<Estimate> frontier;
    double best_energy = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < order.size();) {
        const Estimate& head = points[order[i]];
        std::size_t j = i;
        while (j < order.size() && points[order[j]].time_s == head.time_s
               && points[order[j]].energy_j == head.energy_j) {
            ++j;
        }
        if (head.energy_j < best_energy) {
            for (std::size_t k = i; k < j; ++k) frontier.push_back(points[order[k]]);
            best_energy = head.energy_j;
        }
        i = j;
    }
    return frontier;
}

std::vector<ParetoPoint> annotate_dominance(std::span<const Estimate> points)
{
    std::vector<ParetoPoint> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        const auto count = std::count_if(points.begin(), points.end(), [&](const Estimate& q) { return dominates(q, p); });
        out.push_back({p, static_cast<std::size_t>(count)});
    }
    return out;
}

double mape(std::span<const double> actual, std::span<const double> estimated)
{
    if (actual.empty() || actual.size() != estimated.size()) {
        throw ValidationError("mape: inputs must be non-empty and of equal length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual[i] == 0.0) {
            throw ValidationError("mape: actual value is zero at index " + std::to_string(i));
        }
        sum += std::abs((actual[i] - estimated[i]) / actual[i]);
    }
    return sum / static_cast<double>(actual.size());
}

FrontierVariation frontier_variation(std::span<const Estimate> frontier)
{
    if (frontier.empty()) {
        throw ValidationError("frontier_variation: empty frontier");
    }
    auto spread = [&](auto member) {
        const auto [lo, hi] = std::minmax_element(frontier.begin(), frontier.end(),
                                                  [&](const Estimate& a, const Estimate& b) { return a.*member < b.*member; });
        return ((*hi).*member - (*lo).*member) / (*hi).*member;
    };
    return {.energy = spread(&Estimate::energy_j), .performance = spread(&Estimate::time_s)};
}

ReferenceComparison compare_to_reference(std::span<const Estimate> frontier, const ReferencePoint& reference)
{
    if (frontier.empty()) {
        throw ValidationError("compare_to_reference: empty frontier");
    }
    if (!(reference.time_s > 0.0) || !(reference.energy_j > 0.0)) {
        throw ValidationError("reference time and energy must be > 0");
    }
    ReferenceComparison out;
    out.reference = reference;
    double least_energy = std::numeric_limits<double>::infinity();
    double fastest = std::numeric_limits<double>::infinity();
    for (const auto& e : frontier) {
        least_energy = std::min(least_energy, e.energy_j);
        fastest = std::min(fastest, e.time_s);
        if (e.time_s <= reference.time_s) {
            const double saving = 100.0 * (reference.energy_j - e.energy_j) / reference.energy_j;
            out.energy_saving_pct = std::max(out.energy_saving_pct.value_or(saving), saving);
        }
        if (e.energy_j <= reference.energy_j) {
            const double gain = 100.0 * (reference.time_s - e.time_s) / reference.time_s;
            out.performance_gain_pct = std::max(out.performance_gain_pct.value_or(gain), gain);
        }
    }
    out.least_energy_saving_pct = 100.0 * (reference.energy_j - least_energy) / reference.energy_j;
    out.fastest_gain_pct = 100.0 * (reference.time_s - fastest) / reference.time_s;
    return out;
}

} // namespace hmp
