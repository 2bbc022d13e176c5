#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "qprox/point.hpp"
#include "qprox/search_space.hpp"

namespace qprox {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// An unsatisfied-need function to minimize. `evaluate` may return +inf
/// (the proper extended-real convention; +inf is absorbing in payoff
/// arithmetic) but never NaN. `gradient` is optional; solvers fall back to
/// central finite differences when it is absent.
struct Objective {
    std::function<double(const Point&)> evaluate;
    std::function<std::vector<double>(const Point&)> gradient;  // may be empty

    bool convex = false;
    std::optional<double> lower_bound;
    std::optional<double> kl_exponent;  // theta in [0,1); 0 is the sharp (|x|-like) convention

    double operator()(const Point& p) const { return evaluate(p); }
    bool has_gradient() const { return static_cast<bool>(gradient); }
};

/// Central differences with h = 1e-6 * (1 + |x_i|) per axis.
std::vector<double> fd_gradient(const std::function<double(const Point&)>& f, const Point& x);

/// Analytic gradient when available, finite differences otherwise.
std::vector<double> gradient_or_fd(const Objective& f, const Point& x);

namespace objectives {

/// scale * |x - center|^2. Convex, KL exponent 1/2.
Objective quadratic(Point center, double scale = 1.0);

/// sum_i a_i * (x_i - center_i)^2 with all a_i > 0.
Objective diagonal_quadratic(std::vector<double> a, Point center);

/// c^T x (affine, convex, unbounded below: no lower-bound flag).
Objective linear(std::vector<double> c);

/// scale * sum_i |x_i - center_i|. Convex, KL exponent 0.
Objective absolute(Point center, double scale = 1.0);

/// (1-x)^2 + 100 (y - x^2)^2, 2-D.
Objective rosenbrock2d();

/// sum_i (x_i^4 - x_i^2): the nonconvex double well.
Objective double_well();

Objective constant(double c, std::size_t dim = 1);

/// Nearest-grid-index table lookup; the randomized-instance workhorse.
/// `values[i]` is f at grid point i of `grid`.
Objective table_on_grid(SearchSpace grid, std::vector<double> values);

}  // namespace objectives

struct ObjectiveCheck {
    bool nan_free = true;
    std::optional<Point> nan_witness;
    bool lower_bound_ok = true;
    std::optional<Point> lower_bound_witness;
    bool passed() const { return nan_free && lower_bound_ok; }
};

/// Sampled invariant check: no NaN anywhere, and evaluate >= lower_bound
/// when that flag is present.
ObjectiveCheck check_objective(const Objective& f, const SearchSpace& space, int samples,
                               std::uint64_t seed);

}  // namespace qprox
