#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qprox/quasi_distance.hpp"
#include "qprox/search_space.hpp"

namespace qprox {

/// |q| at or below this counts as zero in the separation/identity checks.
/// Exact zero is unattainable for computed costs.
inline constexpr double kZeroTolerance = 1e-12;

struct AxiomCheck {
    bool passed = true;
    std::vector<Point> witness;  // the offending x / (x,y) / (x,y,z)
    std::string note;
};

struct AxiomReport {
    AxiomCheck identity;    // q(x,x) = 0
    AxiomCheck separation;  // q(x,y) = 0 => y = x
    AxiomCheck triangle;    // q(x,z) <= q(x,y) + q(y,z)
    bool exhaustive = false;
    int samples = 0;
    std::uint64_t seed = 0;

    bool all_passed() const { return identity.passed && separation.passed && triangle.passed; }
};

/// Sampled axiom check, deterministic in (space, samples, seed). Non-finite
/// or negative q values fail the axiom under test with the offending pair
/// as witness; they never throw.
AxiomReport check_quasi_distance_axioms(const QuasiDistance& q, const SearchSpace& space,
                                        int samples, std::uint64_t seed);

/// Every ordered pair and triple of a finite grid. Proof-by-exhaustion for
/// small grids; refuses grids whose triple count would be unreasonable.
AxiomReport check_quasi_distance_axioms_exhaustive(const QuasiDistance& q, const SearchSpace& grid);

struct ComparabilityReport {
    bool passed = true;
    std::vector<Point> witness;
    double c1 = 0.0, c2 = 0.0;
    int samples = 0;
};

/// Sampled two-sided comparability with the Euclidean norm:
///   c1 * |x - y| <= q(x, y) <= c2 * |x - y|.
/// The constants are caller-supplied; this is an optional regularity probe,
/// not an axiom.
ComparabilityReport check_norm_comparability(const QuasiDistance& q, const SearchSpace& space,
                                             double c1, double c2, int samples, std::uint64_t seed);

}  // namespace qprox
