#include "qprox/objective.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace qprox {

std::vector<double> fd_gradient(const std::function<double(const Point&)>& f, const Point& x) {
    std::vector<double> g(x.dim());
    Point probe = x;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const double h = 1e-6 * (1.0 + std::abs(x[i]));
        probe[i] = x[i] + h;
        const double fp = f(probe);
        probe[i] = x[i] - h;
        const double fm = f(probe);
        probe[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

std::vector<double> gradient_or_fd(const Objective& f, const Point& x) {
    if (f.has_gradient()) return f.gradient(x);
    return fd_gradient(f.evaluate, x);
}

namespace objectives {

Objective quadratic(Point center, double scale) {
    if (!(scale > 0)) throw std::invalid_argument("quadratic: scale must be > 0");
    validate_finite(center, "quadratic center");
    Objective f;
    f.evaluate = [center, scale](const Point& p) { return scale * squared_distance(p, center); };
    f.gradient = [center, scale](const Point& p) {
        std::vector<double> g(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) g[i] = 2.0 * scale * (p[i] - center[i]);
        return g;
    };
    f.convex = true;
    f.lower_bound = 0.0;
    f.kl_exponent = 0.5;
    return f;
}

Objective diagonal_quadratic(std::vector<double> a, Point center) {
    if (a.size() != center.dim()) throw std::invalid_argument("diagonal_quadratic: size mismatch");
    for (double ai : a) {
        if (!(ai > 0)) throw std::invalid_argument("diagonal_quadratic: curvatures must be > 0");
    }
    Objective f;
    f.evaluate = [a, center](const Point& p) {
        double s = 0.0;
        for (std::size_t i = 0; i < p.dim(); ++i) {
            const double d = p[i] - center[i];
            s += a[i] * d * d;
        }
        return s;
    };
    f.gradient = [a, center](const Point& p) {
        std::vector<double> g(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) g[i] = 2.0 * a[i] * (p[i] - center[i]);
        return g;
    };
    f.convex = true;
    f.lower_bound = 0.0;
    f.kl_exponent = 0.5;
    return f;
}

Objective linear(std::vector<double> c) {
    Objective f;
    f.evaluate = [c](const Point& p) {
        double s = 0.0;
        for (std::size_t i = 0; i < p.dim(); ++i) s += c[i] * p[i];
        return s;
    };
    f.gradient = [c](const Point&) { return c; };
    f.convex = true;
    return f;
}

Objective absolute(Point center, double scale) {
    if (!(scale > 0)) throw std::invalid_argument("absolute: scale must be > 0");
    Objective f;
    f.evaluate = [center, scale](const Point& p) {
        double s = 0.0;
        for (std::size_t i = 0; i < p.dim(); ++i) s += std::abs(p[i] - center[i]);
        return scale * s;
    };
    f.gradient = [center, scale](const Point& p) {
        // subgradient selection: 0 at kinks
        std::vector<double> g(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) {
            const double d = p[i] - center[i];
            g[i] = d > 0 ? scale : (d < 0 ? -scale : 0.0);
        }
        return g;
    };
    f.convex = true;
    f.lower_bound = 0.0;
    f.kl_exponent = 0.0;
    return f;
}

Objective rosenbrock2d() {
    Objective f;
    f.evaluate = [](const Point& p) {
        const double x = p[0], y = p[1];
        const double a = 1.0 - x;
        const double b = y - x * x;
        return a * a + 100.0 * b * b;
    };
    f.gradient = [](const Point& p) {
        const double x = p[0], y = p[1];
        return std::vector<double>{-2.0 * (1.0 - x) - 400.0 * x * (y - x * x), 200.0 * (y - x * x)};
    };
    f.lower_bound = 0.0;
    return f;
}

Objective double_well() {
    Objective f;
    f.evaluate = [](const Point& p) {
        double s = 0.0;
        for (std::size_t i = 0; i < p.dim(); ++i) {
            const double x2 = p[i] * p[i];
            s += x2 * x2 - x2;
        }
        return s;
    };
    f.gradient = [](const Point& p) {
        std::vector<double> g(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) g[i] = 4.0 * p[i] * p[i] * p[i] - 2.0 * p[i];
        return g;
    };
    return f;
}

Objective constant(double c, std::size_t) {
    Objective f;
    f.evaluate = [c](const Point&) { return c; };
    f.gradient = [](const Point& p) { return std::vector<double>(p.dim(), 0.0); };
    f.convex = true;
    f.lower_bound = c;
    return f;
}

Objective table_on_grid(SearchSpace grid, std::vector<double> values) {
    if (!grid.is_grid()) throw UnsupportedSpaceError("table_on_grid: needs a finite grid");
    if (values.size() != grid.grid_size()) {
        throw std::invalid_argument("table_on_grid: one value per grid point required");
    }
    Objective f;
    f.evaluate = [grid, values](const Point& p) { return values[grid.nearest_grid_index(p)]; };
    return f;
}

}  // namespace objectives

ObjectiveCheck check_objective(const Objective& f, const SearchSpace& space, int samples,
                               std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("check_objective: samples must be >= 1");
    ObjectiveCheck out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        Point p;
        if (space.is_grid()) {
            p = space.grid_point(static_cast<std::size_t>(rng() % space.grid_size()));
        } else {
            p.coords.resize(space.dim());
            for (std::size_t i = 0; i < space.dim(); ++i) {
                p[i] = space.lower()[i] + unit(rng) * (space.upper()[i] - space.lower()[i]);
            }
        }
        const double v = f(p);
        if (std::isnan(v)) {
            out.nan_free = false;
            if (!out.nan_witness) out.nan_witness = p;
        }
        if (f.lower_bound && v < *f.lower_bound) {
            out.lower_bound_ok = false;
            if (!out.lower_bound_witness) out.lower_bound_witness = p;
        }
    }
    return out;
}

}  // namespace qprox
