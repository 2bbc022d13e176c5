#pragma once

#include <functional>
#include <span>

#include "qprox/objective.hpp"
#include "qprox/point.hpp"

namespace qprox {

/// History-dependent payoff weighting. At step k the runner hands `weight`
/// the realized anchors (x^0, ..., x^k); the result v(E^k) must be > 0. The
/// effective proximal ratio of an experience-weighted run is
/// lambda_k = eta(k) / v(E^k), which makes the weighted problem equivalent
/// to the plain one with that lambda schedule.
struct ExperienceModel {
    std::function<double(std::span<const Point>)> weight;
    std::function<double(int)> eta;

    double weight_at(std::span<const Point> history) const;
    double eta_at(int k) const;
};

namespace experience {

ExperienceModel constant(double v0, double eta = 1.0);

/// v0 * rho^k where k = history length - 1.
ExperienceModel geometric(double v0, double rho, double eta = 1.0);

/// base + gain * (recency-weighted mean of positive past f-improvements);
/// weights decay geometrically with age at rate `recency`. base > 0 keeps
/// the model positive on any history.
ExperienceModel improvement_weighted(Objective f, double base, double gain, double recency,
                                     double eta = 1.0);

}  // namespace experience

}  // namespace qprox
