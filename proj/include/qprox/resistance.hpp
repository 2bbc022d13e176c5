#pragma once

#include <functional>

namespace qprox {

/// Resistance-to-change shape: Gamma maps a change cost t >= 0 to the felt
/// resistance, with Gamma(0) = 0 and Gamma strictly increasing. "Weak in the
/// small" means Gamma(t)/t -> 0 as t -> 0+ (quadratic is the canonical weak
/// case, linear the canonical strong one).
struct ResistanceProfile {
    enum class Kind { Quadratic, Linear, Power, Custom };

    std::function<double(double)> gamma;
    std::function<double(double)> derivative;  // optional
    Kind kind = Kind::Custom;

    double operator()(double t) const { return gamma(t); }
    bool has_derivative() const { return static_cast<bool>(derivative); }
};

namespace resistance {

ResistanceProfile quadratic();           // t^2
ResistanceProfile linear();              // t
ResistanceProfile power(double p);       // t^p, p >= 1

/// Wraps a user Gamma; rejects g(0) != 0 immediately.
ResistanceProfile custom(std::function<double(double)> g,
                         std::function<double(double)> dg = {});

}  // namespace resistance

struct ResistanceCheck {
    bool zero_at_zero = false;
    bool increasing = false;
    bool weak_in_the_small = false;
    bool passed() const { return zero_at_zero && increasing; }
};

/// Sampled monotonicity on [0, t_max] plus the numeric weak-in-the-small
/// classification: Gamma(t)/t must drop by at least a decade between
/// t = 1e-3 and t = 1e-6.
ResistanceCheck check_resistance(const ResistanceProfile& r, double t_max = 1.0, int samples = 64);

bool weak_in_the_small(const ResistanceProfile& r);

}  // namespace qprox
