#pragma once

#include <utility>
#include <vector>

#include "hsx/piecewise.hpp"

namespace hsx {

// Finite positive Radon measure represented by the CDF of its absolutely
// continuous part plus an explicit atom list.  F(x) = measure((-inf, x)).
struct CumulativeMeasure {
    PiecewiseLinear cdf;  // AC-part CDF: nondecreasing, left = 0
    std::vector<std::pair<double, double>> atoms;  // (position, weight > 0), sorted
    double total = 0.0;   // AC mass + atom mass
};

// Validates monotonicity, positivity of atom weights and the mass bookkeeping.
CumulativeMeasure make_measure(PiecewiseLinear cdf,
                               std::vector<std::pair<double, double>> atoms);
CumulativeMeasure zero_measure();

double measure_total(const CumulativeMeasure& m);

// m((-inf, x)): atoms exactly at x excluded.
double measure_F(const CumulativeMeasure& m, double x);
// m((-inf, x]): atoms exactly at x included.
double measure_F_closed(const CumulativeMeasure& m, double x);
// Mass of the open interval (a, b); atoms strictly inside count.
double measure_open_interval(const CumulativeMeasure& m, double a, double b);
// Atom weight at position p (0 if none within tol).
double measure_atom_at(const CumulativeMeasure& m, double p, double tol = 1e-12);

// Pushforward under a nondecreasing map given by node values y on the grid xi.
// cell_density[i] is the density of the source measure on cell [xi_i, xi_{i+1}].
// Cells where y is flat (width <= 1e-12) become atoms; adjacent flat cells at
// the same position merge into one atom.
CumulativeMeasure pushforward(const std::vector<double>& xi,
                              const std::vector<double>& cell_density,
                              const std::vector<double>& y_nodes);

bool measures_equal(const CumulativeMeasure& a, const CumulativeMeasure& b,
                    double tol = 1e-12);
// True when a <= b as measures (per merged cell and per atom).
bool measure_leq(const CumulativeMeasure& a, const CumulativeMeasure& b,
                 double tol = 1e-10);

}  // namespace hsx
