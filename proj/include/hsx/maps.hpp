#pragma once

#include "hsx/lagrangian.hpp"
#include "hsx/measure.hpp"

namespace hsx {

// Piecewise-constant density, zero outside the break span.
struct StepDensity {
    std::vector<double> x;    // breakpoints (K+1), strictly increasing; empty = zero
    std::vector<double> val;  // K cell values
    double operator()(double q) const;
};
StepDensity zero_density();

// Eulerian tuple (u, rho, nu, mu).  rho is kept as its recoverable
// piecewise-constant density; nu and mu are positive measures.
struct EulerianState {
    PiecewiseLinear u;
    StepDensity rho;
    CumulativeMeasure nu, mu;
};
EulerianState zero_eulerian();

// Membership check for the Eulerian data set (conditions on mu <= nu, the AC
// density identity mu_ac = (u_x^2 + rho^2) dx, and the alpha-class clauses).
CheckReport check_D_alpha(const EulerianState& E, const AlphaFunction& a);
// nu = mu (admissible initial data).
bool check_D0(const EulerianState& E, double tol = 1e-12);

// Eulerian -> Lagrangian: y is the closed-form sup-inverse of x -> F_nu(x)+x
// (flats exactly at nu-atoms), H = xi - y, U = u(y), r = rho(y) y_xi,
// V_xi = (dmu/dnu)(y) H_xi.  Lands in the normalized set y + H = id.
// When `a` is non-null the input is validated against check_D_alpha first.
LagrangianState L_map(const EulerianState& E, const AlphaFunction* a = nullptr);

// Lagrangian -> Eulerian: u(x) = U(xi) for x = y(xi); rho, nu, mu by
// pushforward of r dxi, H_xi dxi, V_xi dxi.  Rejects states where U is
// multivalued on flats of y beyond tolerance.
EulerianState M_map(const LagrangianState& X);

// Increasing reparametrization of the xi-line; extends with slope 1 outside
// its knots (so f - id is compactly supported).
struct Relabeling {
    PiecewiseLinear f;     // core knots of f
    PiecewiseLinear finv;  // core knots of the inverse
    double operator()(double q) const;
    double inv(double q) const;
};
Relabeling make_relabeling(PiecewiseLinear core);
Relabeling identity_relabeling();
Relabeling shift_relabeling(double delta);
Relabeling inverse(const Relabeling& f);
// (f o g)(x) = f(g(x))
Relabeling compose(const Relabeling& f, const Relabeling& g);

// X . f = (y o f, U o f, H o f, (r o f) f_xi, V o f) on the pullback grid.
LagrangianState group_action(const LagrangianState& X, const Relabeling& f);

// y + H of X as a relabeling (slopes bounded below by c_lower > 0).
Relabeling normalizer(const LagrangianState& X);
// Pi X = X . (y+H)^{-1}; afterwards H := id - y exactly.
LagrangianState pi_normalize(const LagrangianState& X);

}  // namespace hsx
