#pragma once

#include <cstddef>
#include <vector>

namespace hsx {

// Continuous piecewise-linear function of one real variable with constant
// extension outside the knot span.  `left`/`right` always equal the first/last
// knot value; they are kept explicit so a knot-free constant function is
// representable and so the JSON encoding round-trips.
struct PiecewiseLinear {
    std::vector<double> x;  // knot positions, strictly increasing
    std::vector<double> v;  // values at the knots
    double left = 0.0;      // value on (-inf, x.front())
    double right = 0.0;     // value on (x.back(), +inf)

    std::size_t cells() const { return x.size() < 2 ? 0 : x.size() - 1; }
    double slope(std::size_t cell) const;
    double operator()(double xq) const;
};

// Builds a validated piecewise-linear function; throws std::invalid_argument
// on non-finite data or non-increasing knots.
PiecewiseLinear make_pl(std::vector<double> x, std::vector<double> v);
PiecewiseLinear make_const_pl(double c);

double pl_eval(const PiecewiseLinear& f, double xq);

struct PLNorms {
    double sup = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;
};

// Exact norms of f - g: sup over the merged knot set (and tails), L1/L2 by
// per-cell closed-form integration.  If f - g does not vanish at +-infinity
// the L1/L2 components are reported as +infinity.
PLNorms pl_norms(const PiecewiseLinear& f, const PiecewiseLinear& g);

double pl_max_abs_slope(const PiecewiseLinear& f);
double pl_min_value(const PiecewiseLinear& f);
double pl_max_value(const PiecewiseLinear& f);

// Sorted union of two sorted grids; points closer than tol are identified.
std::vector<double> merge_grids(const std::vector<double>& a,
                                const std::vector<double>& b,
                                double tol = 1e-12);

// Inverse of a strictly increasing piecewise-linear function (knot swap).
PiecewiseLinear pl_invert(const PiecewiseLinear& f);

}  // namespace hsx
