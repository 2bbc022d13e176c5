#include "qprox/inner_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace qprox {

namespace {

double radical_inverse(std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base);
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Projected-gradient residual with unit step: x - P(x - g). Zero iff x is
// first-order stationary for the box-constrained problem.
double residual_norm(const BoxMinimizeProblem& p, const Point& x, const std::vector<double>& g) {
    Point trial = x;
    for (std::size_t i = 0; i < x.dim(); ++i) trial[i] = x[i] - g[i];
    trial = p.project(trial);
    double m = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) m = std::max(m, std::abs(x[i] - trial[i]));
    return m;
}

// Dense symmetric solve via Gaussian elimination with partial pivoting.
// Dimensions here are tiny (action spaces of a few coordinates).
bool solve_linear(std::vector<double> a, std::vector<double> b, std::size_t n,
                  std::vector<double>& out) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col])) pivot = row;
        }
        if (std::abs(a[pivot * n + col]) < 1e-300) return false;
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[pivot * n + k]);
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            const double factor = a[row * n + col] / a[col * n + col];
            for (std::size_t k = col; k < n; ++k) a[row * n + k] -= factor * a[col * n + k];
            b[row] -= factor * b[col];
        }
    }
    out.assign(n, 0.0);
    for (std::size_t row = n; row-- > 0;) {
        double s = b[row];
        for (std::size_t k = row + 1; k < n; ++k) s -= a[row * n + k] * out[k];
        out[row] = s / a[row * n + row];
    }
    for (double v : out) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

// Central-difference Hessian; exact for quadratics up to rounding.
std::vector<double> fd_hessian(const BoxMinimizeProblem& p, const Point& x) {
    const std::size_t n = x.dim();
    std::vector<double> h(n * n, 0.0);
    Point probe = x;
    for (std::size_t i = 0; i < n; ++i) {
        const double step = 1e-4 * (1.0 + std::abs(x[i]));
        probe[i] = x[i] + step;
        const std::vector<double> gp = p.grad(probe);
        probe[i] = x[i] - step;
        const std::vector<double> gm = p.grad(probe);
        probe[i] = x[i];
        for (std::size_t j = 0; j < n; ++j) h[i * n + j] = (gp[j] - gm[j]) / (2.0 * step);
    }
    // symmetrize
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (h[i * n + j] + h[j * n + i]);
            h[i * n + j] = avg;
            h[j * n + i] = avg;
        }
    }
    return h;
}

struct StartResult {
    Point x;
    double value = std::numeric_limits<double>::infinity();
    double grad_norm = std::numeric_limits<double>::infinity();
    bool converged = false;
    int iterations = 0;
};

StartResult descend(const BoxMinimizeProblem& p, Point x, const InnerSolveOptions& opt) {
    StartResult r;
    x = p.project(x);
    double fx = p.value(x);

    double step = 1.0;
    int iter = 0;
    for (; iter < opt.max_iterations; ++iter) {
        const std::vector<double> g = p.grad(x);
        if (inf_norm(g) == 0.0 || residual_norm(p, x, g) <= opt.grad_tolerance) {
            r.converged = true;
            break;
        }
        // Armijo backtracking on the projected step.
        bool moved = false;
        double t = step;
        for (int back = 0; back < 60; ++back) {
            Point trial = x;
            for (std::size_t i = 0; i < x.dim(); ++i) trial[i] = x[i] - t * g[i];
            trial = p.project(trial);
            double decrease = 0.0;
            for (std::size_t i = 0; i < x.dim(); ++i) decrease += g[i] * (x[i] - trial[i]);
            const double ft = p.value(trial);
            if (std::isfinite(ft) && ft <= fx - 1e-4 * decrease && trial != x) {
                x = trial;
                fx = ft;
                step = std::min(t * 2.0, 1e8);
                moved = true;
                break;
            }
            t *= 0.5;
        }
        if (!moved) break;  // step underflow: as converged as backtracking gets
    }
    r.iterations = iter;

    if (opt.newton_polish) {
        // Damped Newton with FD Hessian; bail out on any non-finite or
        // non-improving step. Polishes smooth minima to ~machine epsilon.
        const std::size_t n = x.dim();
        for (int polish = 0; polish < 12; ++polish) {
            const std::vector<double> g = p.grad(x);
            const std::vector<double> h = fd_hessian(p, x);
            std::vector<double> d;
            if (!solve_linear(h, g, n, d)) break;
            double damping = 1.0;
            bool accepted = false;
            for (int halvings = 0; halvings < 30; ++halvings) {
                Point trial = x;
                for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] - damping * d[i];
                trial = p.project(trial);
                const double ft = p.value(trial);
                if (std::isfinite(ft) && ft <= fx && trial != x) {
                    // accept equal-value moves only if the gradient shrank
                    if (ft == fx && inf_norm(p.grad(trial)) >= inf_norm(g)) {
                        damping *= 0.5;
                        continue;
                    }
                    x = trial;
                    fx = ft;
                    accepted = true;
                    break;
                }
                damping *= 0.5;
            }
            if (!accepted) break;
        }
    }

    const std::vector<double> g = p.grad(x);
    r.x = x;
    r.value = fx;
    r.grad_norm = residual_norm(p, x, g);
    r.converged = r.converged || r.grad_norm <= opt.grad_tolerance;
    return r;
}

}  // namespace

Point minimize_multistart(const BoxMinimizeProblem& problem, const std::vector<Point>& starts,
                          const InnerSolveOptions& options, InnerSolveStats* stats) {
    if (starts.empty()) throw std::invalid_argument("minimize_multistart: no starts");
    StartResult best;
    int total_iterations = 0;
    bool any_converged = false;
    for (const Point& s : starts) {
        StartResult r = descend(problem, s, options);
        total_iterations += r.iterations;
        any_converged = any_converged || r.converged;
        if (r.value < best.value || (r.value == best.value && r.x < best.x)) {
            best = r;
        }
    }
    if (stats) {
        stats->converged = any_converged;
        stats->iterations = total_iterations;
        stats->grad_norm = best.grad_norm;
        stats->value = best.value;
    }
    return best.x;
}

std::vector<Point> default_starts(const SearchSpace& box, const Point& anchor, int count) {
    std::vector<Point> starts;
    starts.push_back(box.clamp(anchor));
    for (int i = 1; i < count; ++i) {
        Point p;
        p.coords.resize(box.dim());
        for (std::size_t axis = 0; axis < box.dim(); ++axis) {
            const double t = radical_inverse(static_cast<std::uint64_t>(i), kPrimes[axis % 8]);
            p[axis] = box.lower()[axis] + t * (box.upper()[axis] - box.lower()[axis]);
        }
        starts.push_back(p);
    }
    return starts;
}

}  // namespace qprox
