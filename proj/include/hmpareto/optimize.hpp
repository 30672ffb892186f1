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

#include <functional>
#include <span>
#include <vector>

namespace hmp {

/// Derivative-free minimizers used by the fitting routines.

using Objective = std::function<double(std::span<const double>)>;

struct OptimizeOptions {
    /// Converged once the simplex function spread is below
    /// rel_tol * max(best value, abs_floor) and its vertices agree to x_tol.
    double rel_tol = 1e-10;
    double abs_floor = 0.0;
    double x_tol = 1e-9;
    int max_iterations = 10'000;
};

struct OptimizeResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Nelder-Mead simplex restricted to the box x >= lower. Trial points are
/// projected onto the box before evaluation, so every returned x is feasible.
/// `step` sets the initial simplex edge along each axis.
OptimizeResult nelder_mead(const Objective& fn, std::vector<double> x0, std::span<const double> step,
                           std::span<const double> lower, const OptimizeOptions& options = {});

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
/// Stops when the bracket is narrower than `x_tol`. Both endpoints are also
/// evaluated, so a minimum sitting on a bound is returned exactly.
OptimizeResult golden_section(const std::function<double(double)>& fn, double lo, double hi, double x_tol = 1e-10,
                              int max_iterations = 10'000);

} // namespace hmp
