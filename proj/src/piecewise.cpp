#include "hsx/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hsx {

double PiecewiseLinear::slope(std::size_t cell) const {
    return (v[cell + 1] - v[cell]) / (x[cell + 1] - x[cell]);
}

double PiecewiseLinear::operator()(double xq) const {
    if (x.empty()) return left;
    if (xq <= x.front()) return left;
    if (xq >= x.back()) return right;
    auto it = std::upper_bound(x.begin(), x.end(), xq);
    std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    double w = (xq - x[i]) / (x[i + 1] - x[i]);
    return v[i] + w * (v[i + 1] - v[i]);
}

PiecewiseLinear make_pl(std::vector<double> x, std::vector<double> v) {
    if (x.size() != v.size())
        throw std::invalid_argument("make_pl: knot position/value size mismatch");
    for (double a : x)
        if (!std::isfinite(a)) throw std::invalid_argument("make_pl: non-finite knot position");
    for (double a : v)
        if (!std::isfinite(a)) throw std::invalid_argument("make_pl: non-finite knot value");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1]))
            throw std::invalid_argument("make_pl: knot positions not strictly increasing");
    PiecewiseLinear f;
    f.x = std::move(x);
    f.v = std::move(v);
    if (!f.v.empty()) {
        f.left = f.v.front();
        f.right = f.v.back();
    }
    return f;
}

PiecewiseLinear make_const_pl(double c) {
    if (!std::isfinite(c)) throw std::invalid_argument("make_const_pl: non-finite value");
    PiecewiseLinear f;
    f.left = f.right = c;
    return f;
}

double pl_eval(const PiecewiseLinear& f, double xq) { return f(xq); }

std::vector<double> merge_grids(const std::vector<double>& a,
                                const std::vector<double>& b,
                                double tol) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    std::vector<double> dedup;
    for (double p : out)
        if (dedup.empty() || p - dedup.back() > tol) dedup.push_back(p);
    return dedup;
}

PLNorms pl_norms(const PiecewiseLinear& f, const PiecewiseLinear& g) {
    for (double a : {f.left, f.right, g.left, g.right})
        if (!std::isfinite(a)) throw std::invalid_argument("pl_norms: non-finite value");

    std::vector<double> grid = merge_grids(f.x, g.x);
    PLNorms n;
    double dl = f.left - g.left;
    double dr = f.right - g.right;
    n.sup = std::max(std::abs(dl), std::abs(dr));
    std::vector<double> d(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        d[i] = f(grid[i]) - g(grid[i]);
        n.sup = std::max(n.sup, std::abs(d[i]));
    }
    if (dl != 0.0 || dr != 0.0) {
        n.l1 = n.l2 = std::numeric_limits<double>::infinity();
        return n;
    }
    double l2sq = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double w = grid[i + 1] - grid[i];
        double a = d[i], b = d[i + 1];
        // integral of |a + (b-a)s/w| over [0,w]
        if (a * b >= 0.0) {
            n.l1 += 0.5 * w * (std::abs(a) + std::abs(b));
        } else {
            double s = a / (a - b) * w;  // zero crossing
            n.l1 += 0.5 * (s * std::abs(a) + (w - s) * std::abs(b));
        }
        l2sq += w * (a * a + a * b + b * b) / 3.0;
    }
    n.l2 = std::sqrt(l2sq);
    return n;
}

double pl_max_abs_slope(const PiecewiseLinear& f) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.cells(); ++i) m = std::max(m, std::abs(f.slope(i)));
    return m;
}

double pl_min_value(const PiecewiseLinear& f) {
    double m = std::min(f.left, f.right);
    for (double a : f.v) m = std::min(m, a);
    return m;
}

double pl_max_value(const PiecewiseLinear& f) {
    double m = std::max(f.left, f.right);
    for (double a : f.v) m = std::max(m, a);
    return m;
}

PiecewiseLinear pl_invert(const PiecewiseLinear& f) {
    if (f.x.size() < 2) throw std::invalid_argument("pl_invert: need at least two knots");
    for (std::size_t i = 0; i < f.cells(); ++i)
        if (!(f.v[i + 1] > f.v[i]))
            throw std::invalid_argument("pl_invert: function not strictly increasing");
    return make_pl(f.v, f.x);
}

}  // namespace hsx
