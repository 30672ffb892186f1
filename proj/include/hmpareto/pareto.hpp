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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmpareto/models.hpp"

namespace hmp {

/// An estimate annotated with how many other estimates dominate it.
struct ParetoPoint {
    Estimate estimate;
    std::size_t dominated_count = 0;
};

/// A dominates B iff A is no slower and uses no more energy, and is strictly
/// better in at least one of the two.
bool dominates(const Estimate& a, const Estimate& b);

/// The non-dominated subset, sorted by ascending time (ties by ascending
/// energy, then input order). Estimates with identical (time, energy) are all
/// kept. Throws ValidationError on empty input or non-finite values.
std::vector<Estimate> pareto_frontier(std::span<const Estimate> points);

/// Dominator counts for every input point, in input order. Quadratic; meant
/// for diagnostics on small sets.
std::vector<ParetoPoint> annotate_dominance(std::span<const Estimate> points);

/// Mean absolute percentage error as a fraction: mean of |(A - E) / A|.
double mape(std::span<const double> actual, std::span<const double> estimated);

struct FrontierVariation {
    double energy = 0.0;      ///< (max - min) / max over frontier energies
    double performance = 0.0; ///< (max - min) / max over frontier times
};

FrontierVariation frontier_variation(std::span<const Estimate> frontier);

/// An externally measured operating point, e.g. a run under an OS governor.
struct ReferencePoint {
    std::string label;
    double time_s = 0.0;
    double energy_j = 0.0;
};

/// Percentages are signed: positive means the frontier does better.
struct ReferenceComparison {
    ReferencePoint reference;
    /// Largest energy saving among frontier points at least as fast as the reference.
    std::optional<double> energy_saving_pct;
    /// Largest run-time reduction among frontier points using no more energy.
    std::optional<double> performance_gain_pct;
    /// Saving of the least-energy frontier point, whatever its speed.
    double least_energy_saving_pct = 0.0;
    /// Time reduction of the fastest frontier point, whatever its energy.
    double fastest_gain_pct = 0.0;
};

ReferenceComparison compare_to_reference(std::span<const Estimate> frontier, const ReferencePoint& reference);

} // namespace hmp
