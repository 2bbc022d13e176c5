#include "qprox/axioms.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qprox {

namespace {

bool value_ok(double v) { return std::isfinite(v) && v >= 0.0; }

void fail(AxiomCheck& check, std::vector<Point> witness, std::string note) {
    if (!check.passed) return;  // keep the first witness
    check.passed = false;
    check.witness = std::move(witness);
    check.note = std::move(note);
}

void check_identity(const QuasiDistance& q, const Point& x, AxiomCheck& out) {
    const double v = q(x, x);
    if (!std::isfinite(v)) {
        fail(out, {x}, "q(x,x) is non-finite");
    } else if (std::abs(v) > kZeroTolerance) {
        fail(out, {x}, "q(x,x) = " + std::to_string(v) + " != 0");
    }
}

void check_separation(const QuasiDistance& q, const Point& x, const Point& y, AxiomCheck& out) {
    if (x == y) return;
    const double v = q(x, y);
    if (!value_ok(v)) {
        fail(out, {x, y}, "q(x,y) non-finite or negative");
    } else if (v <= kZeroTolerance) {
        fail(out, {x, y}, "q(x,y) = 0 for distinct points");
    }
}

void check_triangle(const QuasiDistance& q, const Point& x, const Point& y, const Point& z,
                    AxiomCheck& out) {
    const double xz = q(x, z);
    const double xy = q(x, y);
    const double yz = q(y, z);
    if (!value_ok(xz) || !value_ok(xy) || !value_ok(yz)) {
        fail(out, {x, y, z}, "non-finite or negative q on the triple");
        return;
    }
    const double rhs = xy + yz;
    // 1e-12-relative guard: sums of rounded terms may trail by an ulp.
    if (xz > rhs + kZeroTolerance * (1.0 + rhs)) {
        fail(out, {x, y, z}, "q(x,z) > q(x,y) + q(y,z)");
    }
}

Point sample_point(const SearchSpace& space, std::mt19937_64& rng) {
    if (space.is_grid()) {
        return space.grid_point(static_cast<std::size_t>(rng() % space.grid_size()));
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Point p;
    p.coords.resize(space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i) {
        p[i] = space.lower()[i] + unit(rng) * (space.upper()[i] - space.lower()[i]);
    }
    return p;
}

}  // namespace

AxiomReport check_quasi_distance_axioms(const QuasiDistance& q, const SearchSpace& space,
                                        int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("axiom check: samples must be >= 1");
    AxiomReport report;
    report.samples = samples;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const Point x = sample_point(space, rng);
        const Point y = sample_point(space, rng);
        const Point z = sample_point(space, rng);
        check_identity(q, x, report.identity);
        check_separation(q, x, y, report.separation);
        check_triangle(q, x, y, z, report.triangle);
    }
    return report;
}

AxiomReport check_quasi_distance_axioms_exhaustive(const QuasiDistance& q,
                                                   const SearchSpace& grid) {
    if (!grid.is_grid()) {
        throw UnsupportedSpaceError("exhaustive axiom check: needs a finite grid");
    }
    const std::size_t n = grid.grid_size();
    if (n > 200) {
        throw std::invalid_argument("exhaustive axiom check: grid too large (" +
                                    std::to_string(n) + " points); use the sampled variant");
    }
    AxiomReport report;
    report.exhaustive = true;

    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(grid.grid_point(i));

    for (const Point& x : pts) check_identity(q, x, report.identity);
    for (const Point& x : pts) {
        for (const Point& y : pts) check_separation(q, x, y, report.separation);
    }
    for (const Point& x : pts) {
        for (const Point& y : pts) {
            for (const Point& z : pts) check_triangle(q, x, y, z, report.triangle);
        }
    }
    return report;
}

ComparabilityReport check_norm_comparability(const QuasiDistance& q, const SearchSpace& space,
                                             double c1, double c2, int samples,
                                             std::uint64_t seed) {
    if (!(c1 > 0) || !(c2 >= c1)) {
        throw std::invalid_argument("comparability: need 0 < c1 <= c2");
    }
    if (samples < 1) throw std::invalid_argument("comparability: samples must be >= 1");
    ComparabilityReport report;
    report.c1 = c1;
    report.c2 = c2;
    report.samples = samples;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const Point x = sample_point(space, rng);
        const Point y = sample_point(space, rng);
        if (x == y) continue;
        const double d = euclidean_distance(x, y);
        const double v = q(x, y);
        const double slack = kZeroTolerance * (1.0 + std::abs(v));
        if (!(c1 * d <= v + slack) || !(v <= c2 * d + slack)) {
            report.passed = false;
            report.witness = {x, y};
            break;
        }
    }
    return report;
}

}  // namespace qprox
