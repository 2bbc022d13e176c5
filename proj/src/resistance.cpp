#include "qprox/resistance.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qprox {

namespace resistance {

ResistanceProfile quadratic() {
    ResistanceProfile r;
    r.gamma = [](double t) { return t * t; };
    r.derivative = [](double t) { return 2.0 * t; };
    r.kind = ResistanceProfile::Kind::Quadratic;
    return r;
}

ResistanceProfile linear() {
    ResistanceProfile r;
    r.gamma = [](double t) { return t; };
    r.derivative = [](double) { return 1.0; };
    r.kind = ResistanceProfile::Kind::Linear;
    return r;
}

ResistanceProfile power(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("power resistance: exponent must be >= 1");
    ResistanceProfile r;
    r.gamma = [p](double t) { return std::pow(t, p); };
    r.derivative = [p](double t) { return t > 0 ? p * std::pow(t, p - 1.0) : (p == 1.0 ? 1.0 : 0.0); };
    r.kind = ResistanceProfile::Kind::Power;
    return r;
}

ResistanceProfile custom(std::function<double(double)> g, std::function<double(double)> dg) {
    if (!g) throw std::invalid_argument("custom resistance: gamma required");
    if (g(0.0) != 0.0) throw std::invalid_argument("custom resistance: gamma(0) must be 0");
    ResistanceProfile r;
    r.gamma = std::move(g);
    r.derivative = std::move(dg);
    r.kind = ResistanceProfile::Kind::Custom;
    return r;
}

}  // namespace resistance

ResistanceCheck check_resistance(const ResistanceProfile& r, double t_max, int samples) {
    ResistanceCheck out;
    out.zero_at_zero = r(0.0) == 0.0;
    out.increasing = true;
    double prev = r(0.0);
    for (int i = 1; i <= samples; ++i) {
        const double t = t_max * static_cast<double>(i) / samples;
        const double v = r(t);
        if (!(v > prev)) {
            out.increasing = false;
            break;
        }
        prev = v;
    }
    out.weak_in_the_small = weak_in_the_small(r);
    return out;
}

bool weak_in_the_small(const ResistanceProfile& r) {
    const double r1 = r(1e-3) / 1e-3;
    const double r2 = r(1e-6) / 1e-6;
    return r2 <= 0.1 * r1;
}

}  // namespace qprox
