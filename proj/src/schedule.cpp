#include "qprox/schedule.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qprox {

namespace schedules {

std::function<double(int)> constant_fn(double v) {
    return [v](int) { return v; };
}

std::function<double(int)> geometric_fn(double v0, double ratio) {
    return [v0, ratio](int k) { return v0 * std::pow(ratio, k); };
}

}  // namespace schedules

ProximalSchedule ProximalSchedule::constant(double lambda, double mu, double epsilon, int max_steps) {
    ProximalSchedule s;
    s.lambda = schedules::constant_fn(lambda);
    s.mu = schedules::constant_fn(mu);
    s.epsilon = schedules::constant_fn(epsilon);
    s.max_steps = max_steps;
    s.lambda_at(0);
    s.mu_at(0);
    s.epsilon_at(0);
    return s;
}

double ProximalSchedule::lambda_at(int k) const {
    const double v = lambda(k);
    if (!(v > 0) || !std::isfinite(v)) {
        throw std::invalid_argument("schedule: lambda_" + std::to_string(k) + " must be finite and > 0");
    }
    if (v < lambda_floor) {
        throw std::invalid_argument("schedule: lambda_" + std::to_string(k) + " violates the floor");
    }
    return v;
}

double ProximalSchedule::mu_at(int k) const {
    const double v = mu(k);
    if (!(v > 0) || !(v <= 1.0)) {
        throw std::invalid_argument("schedule: mu_" + std::to_string(k) + " must lie in (0, 1]");
    }
    return v;
}

double ProximalSchedule::epsilon_at(int k) const {
    const double v = epsilon(k);
    if (!(v >= 0) || !std::isfinite(v)) {
        throw std::invalid_argument("schedule: epsilon_" + std::to_string(k) + " must be finite and >= 0");
    }
    return v;
}

}  // namespace qprox
