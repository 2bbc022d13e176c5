#include "qprox/quasi_distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qprox::quasi {

QuasiDistance euclidean() { return scaled_euclidean(1.0); }

QuasiDistance scaled_euclidean(double scale) {
    if (!(scale > 0)) throw std::invalid_argument("scaled_euclidean: scale must be > 0");
    QuasiDistance q;
    q.evaluate = [scale](const Point& x, const Point& y) { return scale * euclidean_distance(x, y); };
    q.grad_y = [scale](const Point& x, const Point& y) {
        const double d = euclidean_distance(x, y);
        std::vector<double> g(y.dim(), 0.0);
        if (d > 0) {
            for (std::size_t i = 0; i < y.dim(); ++i) g[i] = scale * (y[i] - x[i]) / d;
        }
        return g;
    };
    return q;
}

QuasiDistance weighted_asymmetric(std::vector<double> up, std::vector<double> down) {
    if (up.empty() || up.size() != down.size()) {
        throw std::invalid_argument("weighted_asymmetric: rate vectors must be non-empty and equal-sized");
    }
    for (std::size_t i = 0; i < up.size(); ++i) {
        if (!(up[i] > 0) || !(down[i] > 0)) {
            throw std::invalid_argument("weighted_asymmetric: rates must be > 0");
        }
    }
    QuasiDistance q;
    q.evaluate = [up, down](const Point& x, const Point& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.dim(); ++i) {
            const double d = y[i] - x[i];
            s += d > 0 ? up[i] * d : down[i] * (-d);
        }
        return s;
    };
    q.grad_y = [up, down](const Point& x, const Point& y) {
        std::vector<double> g(y.dim(), 0.0);
        for (std::size_t i = 0; i < y.dim(); ++i) {
            const double d = y[i] - x[i];
            g[i] = d > 0 ? up[i] : (d < 0 ? -down[i] : 0.0);
        }
        return g;
    };
    return q;
}

QuasiDistance deadband(double width) {
    if (!(width >= 0)) throw std::invalid_argument("deadband: width must be >= 0");
    QuasiDistance q;
    q.evaluate = [width](const Point& x, const Point& y) {
        return std::max(euclidean_distance(x, y) - width, 0.0);
    };
    return q;
}

}  // namespace qprox::quasi
