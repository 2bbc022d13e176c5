#include "qprox/worthwhile.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace qprox {

namespace {

// Halton radical inverse; bases 2,3,5,... give low-discrepancy box coverage
// without any RNG state.
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

Point halton_point(const SearchSpace& space, std::uint64_t index) {
    Point p;
    p.coords.resize(space.dim());
    for (std::size_t axis = 0; axis < space.dim(); ++axis) {
        const double t = radical_inverse(index + 1, kPrimes[axis % 8]);
        p[axis] = space.lower()[axis] + t * (space.upper()[axis] - space.lower()[axis]);
    }
    return p;
}

}  // namespace

WorthwhileSpec::WorthwhileSpec(Objective f_, QuasiDistance q_, ResistanceProfile gamma_,
                               double lambda_)
    : f(std::move(f_)), q(std::move(q_)), gamma(std::move(gamma_)), lambda(lambda_) {
    if (!(lambda > 0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("WorthwhileSpec: lambda must be finite and > 0");
    }
}

bool is_worthwhile(const WorthwhileSpec& spec, const Point& anchor, const Point& y) {
    const double fy = spec.f(y);
    const double fx = spec.f(anchor);
    if (fy == kInf) {
        return fx == kInf && resistance_term(spec.q, spec.gamma, spec.lambda, anchor, y) == 0.0;
    }
    if (fx == kInf) return true;
    return fy + resistance_term(spec.q, spec.gamma, spec.lambda, anchor, y) <= fx;
}

std::vector<std::size_t> enumerate_worthwhile_indices(const WorthwhileSpec& spec,
                                                      const Point& anchor,
                                                      const SearchSpace& grid) {
    if (!grid.is_grid()) {
        throw UnsupportedSpaceError(
            "enumerate_worthwhile: continuous space; use detect_trap_sampled or a finite grid");
    }
    std::vector<std::size_t> out;
    const std::size_t n = grid.grid_size();
    for (std::size_t i = 0; i < n; ++i) {
        if (is_worthwhile(spec, anchor, grid.grid_point(i))) out.push_back(i);
    }
    return out;
}

std::vector<Point> enumerate_worthwhile(const WorthwhileSpec& spec, const Point& anchor,
                                        const SearchSpace& grid) {
    std::vector<Point> out;
    for (std::size_t i : enumerate_worthwhile_indices(spec, anchor, grid)) {
        out.push_back(grid.grid_point(i));
    }
    return out;
}

TrapReport detect_trap(const WorthwhileSpec& spec, const Point& candidate,
                       const SearchSpace& grid) {
    if (!grid.is_grid()) {
        throw UnsupportedSpaceError("detect_trap: continuous space; use detect_trap_sampled");
    }
    TrapReport report;
    report.point = candidate;
    report.lambda = spec.lambda;
    report.is_trap = true;
    const std::size_t n = grid.grid_size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point y = grid.grid_point(i);
        if (y == candidate) continue;
        ++report.candidates_checked;
        if (is_worthwhile(spec, candidate, y)) {
            report.is_trap = false;
            report.counterexample = y;
            break;
        }
    }
    return report;
}

TrapReport detect_trap_sampled(const WorthwhileSpec& spec, const Point& candidate,
                               const SearchSpace& space, int budget, std::uint64_t seed) {
    if (budget < 1) throw std::invalid_argument("detect_trap_sampled: budget must be >= 1");
    TrapReport report;
    report.point = candidate;
    report.lambda = spec.lambda;
    report.is_trap = true;
    report.probabilistic = true;

    const int global = budget / 2;
    const int local = budget - global;

    auto test = [&](const Point& y) {
        if (y == candidate) return false;
        ++report.candidates_checked;
        if (is_worthwhile(spec, candidate, y)) {
            report.is_trap = false;
            report.counterexample = y;
            return true;
        }
        return false;
    };

    // Halton sweep of the whole box, seed-offset so distinct seeds see
    // distinct subsequences.
    for (int i = 0; i < global; ++i) {
        if (test(halton_point(space, seed % 9973 + static_cast<std::uint64_t>(i)))) return report;
    }

    // Shrinking rings around the candidate: random directions, radii
    // diameter * 2^-j.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double diam = space.diameter();
    int j = 1;
    for (int i = 0; i < local; ++i) {
        std::vector<double> dir(space.dim());
        double norm = 0.0;
        for (auto& d : dir) {
            d = gauss(rng);
            norm += d * d;
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double radius = diam * std::pow(0.5, j);
        Point y = candidate;
        for (std::size_t axis = 0; axis < space.dim(); ++axis) {
            y[axis] += radius * dir[axis] / norm;
        }
        y = space.clamp(y);
        if (test(y)) return report;
        j = (j % 24) + 1;
    }
    return report;
}

TrapMonotonicityError::TrapMonotonicityError(TrapReport lo, TrapReport hi)
    : std::logic_error("trap at lambda = " + std::to_string(lo.lambda) +
                       " but not at higher lambda = " + std::to_string(hi.lambda) +
                       "; membership evaluation is inconsistent"),
      lower(std::move(lo)),
      higher(std::move(hi)) {}

std::vector<TrapReport> trap_stability_sweep(const WorthwhileSpec& spec, const Point& candidate,
                                             const SearchSpace& space,
                                             const std::vector<double>& lambdas) {
    for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) {
        if (!(lambdas[i] < lambdas[i + 1])) {
            throw std::invalid_argument("trap_stability_sweep: lambdas must be strictly ascending");
        }
    }
    std::vector<TrapReport> reports;
    reports.reserve(lambdas.size());
    for (double lambda : lambdas) {
        WorthwhileSpec at{spec.f, spec.q, spec.gamma, lambda};
        reports.push_back(space.is_grid() ? detect_trap(at, candidate, space)
                                          : detect_trap_sampled(at, candidate, space, 4096, 1));
        const std::size_t n = reports.size();
        if (n >= 2 && reports[n - 2].is_trap && !reports[n - 1].is_trap) {
            throw TrapMonotonicityError(reports[n - 2], reports[n - 1]);
        }
    }
    return reports;
}

}  // namespace qprox
