#include "qprox/experience.hpp"

#include <cmath>
#include <stdexcept>

namespace qprox {

double ExperienceModel::weight_at(std::span<const Point> history) const {
    const double v = weight(history);
    if (!(v > 0) || !std::isfinite(v)) {
        throw std::invalid_argument("experience: weight must be finite and > 0");
    }
    return v;
}

double ExperienceModel::eta_at(int k) const {
    const double v = eta(k);
    if (!(v > 0) || !std::isfinite(v)) {
        throw std::invalid_argument("experience: eta must be finite and > 0");
    }
    return v;
}

namespace experience {

ExperienceModel constant(double v0, double eta) {
    if (!(v0 > 0)) throw std::invalid_argument("experience: v0 must be > 0");
    ExperienceModel m;
    m.weight = [v0](std::span<const Point>) { return v0; };
    m.eta = [eta](int) { return eta; };
    return m;
}

ExperienceModel geometric(double v0, double rho, double eta) {
    if (!(v0 > 0) || !(rho > 0)) throw std::invalid_argument("experience: v0 and rho must be > 0");
    ExperienceModel m;
    m.weight = [v0, rho](std::span<const Point> history) {
        const int k = history.empty() ? 0 : static_cast<int>(history.size()) - 1;
        return v0 * std::pow(rho, k);
    };
    m.eta = [eta](int) { return eta; };
    return m;
}

ExperienceModel improvement_weighted(Objective f, double base, double gain, double recency,
                                     double eta) {
    if (!(base > 0) || !(gain >= 0) || !(recency > 0) || !(recency <= 1)) {
        throw std::invalid_argument("experience: need base > 0, gain >= 0, recency in (0, 1]");
    }
    ExperienceModel m;
    m.weight = [f, base, gain, recency](std::span<const Point> history) {
        if (history.size() < 2) return base;
        double num = 0.0, den = 0.0, w = 1.0;
        // newest transition first
        for (std::size_t i = history.size() - 1; i > 0; --i) {
            const double improvement = f(history[i - 1]) - f(history[i]);
            num += w * std::max(improvement, 0.0);
            den += w;
            w *= recency;
        }
        return base + gain * (num / den);
    };
    m.eta = [eta](int) { return eta; };
    return m;
}

}  // namespace experience

}  // namespace qprox
