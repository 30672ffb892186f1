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

#include "hmpareto/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hmpareto/error.hpp"

namespace hmp {

namespace {

using Point = std::vector<double>;

struct Vertex {
    Point x;
    double value;
};

void project(Point& x, std::span<const double> lower)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::max(x[i], lower[i]);
    }
}

// x = a + t * (b - a), projected.
Point along(const Point& a, const Point& b, double t, std::span<const double> lower)
{
    Point x(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        x[i] = a[i] + t * (b[i] - a[i]);
    }
    project(x, lower);
    return x;
}

} // namespace

OptimizeResult nelder_mead(const Objective& fn, std::vector<double> x0, std::span<const double> step,
                           std::span<const double> lower, const OptimizeOptions& options)
{
    const std::size_t n = x0.size();
    if (n == 0 || step.size() != n || lower.size() != n) {
        throw ValidationError("nelder_mead: dimension mismatch");
    }
    project(x0, lower);

    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back({x0, fn(x0)});
    for (std::size_t i = 0; i < n; ++i) {
        Point x = x0;
        x[i] += step[i];
        project(x, lower);
        if (x == x0) {
            x[i] -= step[i];
        }
        simplex.push_back({x, fn(x)});
    }

    auto by_value = [](const Vertex& a, const Vertex& b) { return a.value < b.value; };
    OptimizeResult result;
    for (result.iterations = 0; result.iterations < options.max_iterations; ++result.iterations) {
        std::stable_sort(simplex.begin(), simplex.end(), by_value);
        const Vertex& best = simplex.front();
        const Vertex& worst = simplex.back();

        double x_spread = 0.0;
        for (const auto& v : simplex) {
            for (std::size_t i = 0; i < n; ++i) {
                x_spread = std::max(x_spread, std::abs(v.x[i] - best.x[i]) / (1.0 + std::abs(best.x[i])));
            }
        }
        const double f_scale = std::max(std::abs(best.value), options.abs_floor);
        if (worst.value - best.value <= options.rel_tol * f_scale && x_spread <= options.x_tol) {
            result.converged = true;
            break;
        }

        Point centroid(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                centroid[i] += simplex[k].x[i] / static_cast<double>(n);
            }
        }

        // Reflection, expansion and contraction all lie on the worst->centroid line.
        const Point reflected = along(worst.x, centroid, 2.0, lower);
        const double f_reflected = fn(reflected);
        if (f_reflected < best.value) {
            Point expanded = along(worst.x, centroid, 3.0, lower);
            const double f_expanded = fn(expanded);
            if (f_expanded < f_reflected) {
                simplex.back() = {std::move(expanded), f_expanded};
            } else {
                simplex.back() = {reflected, f_reflected};
            }
            continue;
        }
        if (f_reflected < simplex[n - 1].value) {
            simplex.back() = {reflected, f_reflected};
            continue;
        }
        const bool outside = f_reflected < worst.value;
        Point contracted = along(worst.x, centroid, outside ? 1.5 : 0.5, lower);
        const double f_contracted = fn(contracted);
        if (f_contracted < std::min(f_reflected, worst.value)) {
            simplex.back() = {std::move(contracted), f_contracted};
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t k = 1; k <= n; ++k) {
            simplex[k].x = along(simplex.front().x, simplex[k].x, 0.5, lower);
            simplex[k].value = fn(simplex[k].x);
        }
    }

    const auto best = std::min_element(simplex.begin(), simplex.end(), by_value);
    result.x = best->x;
    result.value = best->value;
    return result;
}

OptimizeResult golden_section(const std::function<double(double)>& fn, double lo, double hi, double x_tol,
                              int max_iterations)
{
    if (!(lo <= hi)) {
        throw ValidationError("golden_section: empty interval");
    }
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = fn(c);
    double fd = fn(d);

    OptimizeResult result;
    for (result.iterations = 0; result.iterations < max_iterations; ++result.iterations) {
        if (b - a <= x_tol) {
            result.converged = true;
            break;
        }
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = fn(d);
        }
    }

    // Candidates in a fixed order; ties keep the earliest.
    const double mid = 0.5 * (a + b);
    const double candidates[] = {mid, c, d, lo, hi};
    result.x = {mid};
    result.value = fn(mid);
    for (double x : candidates) {
        const double v = fn(x);
        if (v < result.value) {
            result.value = v;
            result.x = {x};
        }
    }
    return result;
}

} // namespace hmp
