#pragma once

#include "qprox/objective.hpp"
#include "qprox/quasi_distance.hpp"
#include "qprox/resistance.hpp"

namespace qprox {

/// lambda * Gamma(q(anchor, y)): the resistance half of the payoff.
inline double resistance_term(const QuasiDistance& q, const ResistanceProfile& gamma, double lambda,
                              const Point& anchor, const Point& y) {
    return lambda * gamma(q(anchor, y));
}

/// The per-step objective f(y) + lambda * Gamma(q(anchor, y)). +inf
/// propagates. Worthwhile-set membership compares through this exact
/// floating-point expression (payoff(y) <= f(anchor)), so the argmin
/// identities between the constrained and unconstrained problems hold
/// bit-for-bit, not just in exact arithmetic.
inline double proximal_payoff(const Objective& f, const QuasiDistance& q,
                              const ResistanceProfile& gamma, double lambda, const Point& anchor,
                              const Point& y) {
    const double fy = f(y);
    if (fy == kInf) return kInf;
    return fy + resistance_term(q, gamma, lambda, anchor, y);
}

/// The relaxed acceptance test of the inexact solver:
///   f_before - f_after >= lambda * mu * Gamma(cost) - epsilon.
/// One canonical expression; step-record re-validation must call this same
/// function so accepted steps re-validate exactly.
inline bool inexact_acceptable(double f_before, double f_after, double lambda, double mu,
                               double epsilon, double gamma_cost) {
    if (f_after == kInf) return false;
    const double lhs = f_before - f_after;
    const double rhs = lambda * mu * gamma_cost - epsilon;
    return lhs >= rhs;
}

}  // namespace qprox
