#pragma once

#include <functional>
#include <vector>

#include "qprox/point.hpp"

namespace qprox {

/// Asymmetric cost-to-change q(x, y): how much it costs to become able to do
/// y when currently able to do x. Axioms (checkable via axioms.hpp):
/// q(x,x) = 0, q(x,y) = 0 implies y = x, and the triangle inequality.
/// q(x,y) != q(y,x) is expressly allowed.
struct QuasiDistance {
    std::function<double(const Point&, const Point&)> evaluate;

    /// Gradient of y -> q(x, y) where it exists; optional. Presets pick the
    /// zero subgradient at kinks. Used by the analytic inner-solver and
    /// stopping-rule paths.
    std::function<std::vector<double>(const Point&, const Point&)> grad_y;

    double operator()(const Point& x, const Point& y) const { return evaluate(x, y); }
    bool has_grad_y() const { return static_cast<bool>(grad_y); }
};

namespace quasi {

QuasiDistance euclidean();
QuasiDistance scaled_euclidean(double scale);

/// Per-coordinate direction-dependent rates:
///   q(x,y) = sum_i up_i * max(y_i - x_i, 0) + down_i * max(x_i - y_i, 0),
/// all rates > 0. Passes all quasi-distance axioms; asymmetric whenever
/// up_i != down_i somewhere.
QuasiDistance weighted_asymmetric(std::vector<double> up, std::vector<double> down);

/// max(|x - y| - width, 0): moves shorter than `width` cost nothing, so the
/// separation axiom fails. Deliberately broken; test fixture.
QuasiDistance deadband(double width);

}  // namespace quasi

}  // namespace qprox
