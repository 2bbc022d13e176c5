#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qprox {

/// An action: a point in R^n. Coordinates are unitless and must stay finite;
/// entry points that accept user data should call validate_finite().
///
/// Comparison is lexicographic, which doubles as the deterministic tie-break
/// order used throughout the solvers.
struct Point {
    std::vector<double> coords;

    Point() = default;
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}
    Point(std::initializer_list<double> c) : coords(c) {}

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }

    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;
};

inline bool is_finite(const Point& p) {
    for (double v : p.coords) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

inline void validate_finite(const Point& p, const char* what = "point") {
    if (p.dim() == 0) throw std::invalid_argument(std::string(what) + ": dimension must be >= 1");
    if (!is_finite(p)) throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
}

inline double squared_distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double euclidean_distance(const Point& a, const Point& b) {
    return std::sqrt(squared_distance(a, b));
}

inline double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline std::string to_string(const Point& p) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) os << ", ";
        os << p[i];
    }
    os << ')';
    return os.str();
}

}  // namespace qprox
