#include "qprox/search_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qprox {

namespace {

void validate_bounds(const std::vector<double>& lower, const std::vector<double>& upper) {
    if (lower.empty() || lower.size() != upper.size()) {
        throw std::invalid_argument("search space: bounds must be non-empty and of equal dimension");
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!std::isfinite(lower[i]) || !std::isfinite(upper[i])) {
            throw std::invalid_argument("search space: non-finite bound on axis " + std::to_string(i));
        }
        if (!(lower[i] < upper[i])) {
            throw std::invalid_argument("search space: lower must be < upper on axis " + std::to_string(i));
        }
    }
}

}  // namespace

SearchSpace SearchSpace::box(std::vector<double> lower, std::vector<double> upper) {
    validate_bounds(lower, upper);
    SearchSpace s;
    s.kind_ = Kind::ContinuousBox;
    s.lower_ = std::move(lower);
    s.upper_ = std::move(upper);
    return s;
}

SearchSpace SearchSpace::grid(std::vector<double> lower, std::vector<double> upper,
                              std::vector<std::size_t> resolution, std::size_t enumeration_cap) {
    validate_bounds(lower, upper);
    if (resolution.size() != lower.size()) {
        throw std::invalid_argument("search space: resolution dimension mismatch");
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < resolution.size(); ++i) {
        if (resolution[i] == 0) {
            throw std::invalid_argument("search space: resolution must be >= 1 on axis " + std::to_string(i));
        }
        if (total > enumeration_cap / resolution[i]) {
            throw std::invalid_argument("search space: grid exceeds enumeration cap of " +
                                        std::to_string(enumeration_cap) + " points");
        }
        total *= resolution[i];
    }
    SearchSpace s;
    s.kind_ = Kind::FiniteGrid;
    s.lower_ = std::move(lower);
    s.upper_ = std::move(upper);
    s.resolution_ = std::move(resolution);
    return s;
}

std::size_t SearchSpace::grid_size() const {
    if (!is_grid()) throw UnsupportedSpaceError("grid_size: continuous box has no grid");
    std::size_t total = 1;
    for (std::size_t r : resolution_) total *= r;
    return total;
}

double SearchSpace::axis_value(std::size_t axis, std::size_t i) const {
    if (!is_grid()) throw UnsupportedSpaceError("axis_value: continuous box has no grid");
    const std::size_t r = resolution_[axis];
    if (r == 1) return lower_[axis];
    const double step = (upper_[axis] - lower_[axis]) / static_cast<double>(r - 1);
    return lower_[axis] + static_cast<double>(i) * step;
}

Point SearchSpace::grid_point(std::size_t index) const {
    const std::size_t n = grid_size();
    if (index >= n) throw std::out_of_range("grid_point: index out of range");
    Point p;
    p.coords.resize(dim());
    // Row-major decode, axis 0 most significant.
    std::size_t rest = index;
    for (std::size_t axis = dim(); axis-- > 0;) {
        const std::size_t r = resolution_[axis];
        p.coords[axis] = axis_value(axis, rest % r);
        rest /= r;
    }
    return p;
}

std::size_t SearchSpace::nearest_grid_index(const Point& p) const {
    if (!is_grid()) throw UnsupportedSpaceError("nearest_grid_index: continuous box has no grid");
    if (p.dim() != dim()) throw std::invalid_argument("nearest_grid_index: dimension mismatch");
    std::size_t index = 0;
    for (std::size_t axis = 0; axis < dim(); ++axis) {
        const std::size_t r = resolution_[axis];
        std::size_t i = 0;
        if (r > 1) {
            const double step = (upper_[axis] - lower_[axis]) / static_cast<double>(r - 1);
            const double t = std::round((p[axis] - lower_[axis]) / step);
            i = static_cast<std::size_t>(std::clamp(t, 0.0, static_cast<double>(r - 1)));
        }
        index = index * r + i;
    }
    return index;
}

bool SearchSpace::contains(const Point& p) const {
    if (p.dim() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (p[i] < lower_[i] || p[i] > upper_[i]) return false;
    }
    return true;
}

Point SearchSpace::clamp(const Point& p) const {
    Point out = p;
    for (std::size_t i = 0; i < dim(); ++i) {
        out[i] = std::clamp(out[i], lower_[i], upper_[i]);
    }
    return out;
}

double SearchSpace::diameter() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        const double d = upper_[i] - lower_[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace qprox
