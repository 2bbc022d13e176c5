#pragma once

#include <functional>
#include <vector>

#include "qprox/point.hpp"
#include "qprox/search_space.hpp"

namespace qprox {

struct InnerSolveOptions {
    double grad_tolerance = 1e-8;
    int max_iterations = 10000;
    int multistarts = 5;  // the anchor plus quasi-random starts
    bool newton_polish = true;
};

struct InnerSolveStats {
    bool converged = false;
    int iterations = 0;
    double grad_norm = 0.0;
    double value = 0.0;
};

/// A smooth(ish) minimization over a feasible set given by a projection.
struct BoxMinimizeProblem {
    std::function<double(const Point&)> value;
    std::function<std::vector<double>(const Point&)> grad;
    std::function<Point(const Point&)> project;
};

/// Projected gradient descent with Armijo backtracking from each start,
/// followed by a damped Newton polish (finite-difference Hessian) that
/// drives smooth problems to near machine precision. Returns the best
/// feasible point found; `converged` reports whether any start met the
/// gradient tolerance. Deterministic: no RNG, starts are taken in order.
Point minimize_multistart(const BoxMinimizeProblem& problem, const std::vector<Point>& starts,
                          const InnerSolveOptions& options, InnerSolveStats* stats = nullptr);

/// Anchor plus (count-1) Halton points spread over the box.
std::vector<Point> default_starts(const SearchSpace& box, const Point& anchor, int count);

}  // namespace qprox
