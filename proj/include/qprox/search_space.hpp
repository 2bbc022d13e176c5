#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qprox/point.hpp"

namespace qprox {

/// Thrown when an operation needs a finite grid but was handed a continuous
/// box (or vice versa).
struct UnsupportedSpaceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Where candidate actions live: a continuous axis-aligned box, or a finite
/// grid laid over one.
///
/// Grid enumeration is row-major with axis 0 most significant and axis
/// values ascending, so index order coincides with lexicographic coordinate
/// order. That ordering is the tie-break rule for every argmin in this
/// library.
class SearchSpace {
public:
    enum class Kind { ContinuousBox, FiniteGrid };

    static constexpr std::size_t kDefaultEnumerationCap = 1000000;

    static SearchSpace box(std::vector<double> lower, std::vector<double> upper);

    /// `resolution[i]` is the number of points along axis i (>= 1). A
    /// resolution-1 axis contributes the single value `lower[i]`.
    static SearchSpace grid(std::vector<double> lower, std::vector<double> upper,
                            std::vector<std::size_t> resolution,
                            std::size_t enumeration_cap = kDefaultEnumerationCap);

    Kind kind() const { return kind_; }
    bool is_grid() const { return kind_ == Kind::FiniteGrid; }
    std::size_t dim() const { return lower_.size(); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    const std::vector<std::size_t>& resolution() const { return resolution_; }

    /// Total number of grid points. Grid spaces only.
    std::size_t grid_size() const;

    double axis_value(std::size_t axis, std::size_t i) const;
    Point grid_point(std::size_t index) const;
    std::size_t nearest_grid_index(const Point& p) const;

    /// Closed-box membership (grids share their bounding box).
    bool contains(const Point& p) const;
    Point clamp(const Point& p) const;

    /// Euclidean diameter of the bounding box.
    double diameter() const;

private:
    SearchSpace() = default;

    Kind kind_ = Kind::ContinuousBox;
    std::vector<double> lower_;
    std::vector<double> upper_;
    std::vector<std::size_t> resolution_;  // empty for boxes
};

}  // namespace qprox
