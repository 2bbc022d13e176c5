#pragma once

#include <functional>

namespace qprox {

namespace schedules {

std::function<double(int)> constant_fn(double v);

/// v0 * ratio^k. The summable default for per-step error budgets.
std::function<double(int)> geometric_fn(double v0, double ratio);

}  // namespace schedules

/// Per-step solver parameters: lambda_k > 0, mu_k in (0,1], epsilon_k >= 0,
/// optionally a positive floor lambda_k >= lambda_floor. The *_at accessors
/// validate on every call so a bad user schedule fails at the offending
/// step, not somewhere downstream.
struct ProximalSchedule {
    std::function<double(int)> lambda = schedules::constant_fn(1.0);
    std::function<double(int)> mu = schedules::constant_fn(1.0);
    std::function<double(int)> epsilon = schedules::constant_fn(0.0);
    double lambda_floor = 0.0;
    int max_steps = 1000;

    static ProximalSchedule constant(double lambda, double mu = 1.0, double epsilon = 0.0,
                                     int max_steps = 1000);

    double lambda_at(int k) const;
    double mu_at(int k) const;
    double epsilon_at(int k) const;
};

}  // namespace qprox
