#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qprox/payoff.hpp"
#include "qprox/search_space.hpp"

namespace qprox {

/// Everything needed to ask "is moving from x to y worthwhile at ratio
/// lambda": the need f, the change cost q, the resistance shape Gamma.
struct WorthwhileSpec {
    Objective f;
    QuasiDistance q;
    ResistanceProfile gamma;
    double lambda = 1.0;

    WorthwhileSpec(Objective f_, QuasiDistance q_, ResistanceProfile gamma_, double lambda_);
};

/// y is in W_lambda(anchor) iff the advantage f(anchor) - f(y) covers
/// lambda * Gamma(q(anchor, y)). Evaluated in payoff form,
///   f(y) + lambda * Gamma(q(anchor, y)) <= f(anchor),
/// so membership orders identically to proximal_payoff in floating point.
///
/// Infinity conventions (ties count as worthwhile, comparisons are exact):
///   f(y) = +inf: member iff f(anchor) = +inf and the resistance term is 0
///                (this keeps anchor in W(anchor) unconditionally);
///   f(anchor) = +inf, f(y) finite: member.
bool is_worthwhile(const WorthwhileSpec& spec, const Point& anchor, const Point& y);

/// All grid points in W_lambda(anchor), in grid (= lexicographic) order.
/// Continuous spaces are refused; use detect_trap_sampled for sampling.
std::vector<Point> enumerate_worthwhile(const WorthwhileSpec& spec, const Point& anchor,
                                        const SearchSpace& grid);
std::vector<std::size_t> enumerate_worthwhile_indices(const WorthwhileSpec& spec,
                                                      const Point& anchor,
                                                      const SearchSpace& grid);

struct TrapReport {
    Point point;
    double lambda = 0.0;
    bool is_trap = false;
    std::optional<Point> counterexample;  // some y != point in W_lambda(point)
    std::size_t candidates_checked = 0;
    bool probabilistic = false;  // sampled rather than exhaustive evidence
};

/// Exhaustive trap test on a finite grid: candidate is a trap iff no other
/// grid point is a worthwhile destination.
TrapReport detect_trap(const WorthwhileSpec& spec, const Point& candidate,
                       const SearchSpace& grid);

/// Sampled trap probe for continuous spaces: low-discrepancy coverage of
/// the box plus shrinking rings around the candidate. A found counterexample
/// is conclusive; "no counterexample" is only probabilistic.
TrapReport detect_trap_sampled(const WorthwhileSpec& spec, const Point& candidate,
                               const SearchSpace& space, int budget, std::uint64_t seed);

/// A trap that un-traps at a higher lambda contradicts the set inclusion
/// W_lambda' (x) subset of W_lambda(x) for lambda' > lambda, so it can only
/// be an evaluation bug. Carries both offending reports.
struct TrapMonotonicityError : std::logic_error {
    TrapReport lower, higher;
    TrapMonotonicityError(TrapReport lo, TrapReport hi);
};

/// detect_trap at each lambda (ascending, strictly). Verifies the
/// once-a-trap-always-a-trap monotonicity and throws TrapMonotonicityError
/// on violation. spec.lambda is superseded entry by entry.
std::vector<TrapReport> trap_stability_sweep(const WorthwhileSpec& spec, const Point& candidate,
                                             const SearchSpace& space,
                                             const std::vector<double>& lambdas);

}  // namespace qprox
