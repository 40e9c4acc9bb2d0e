#pragma once

// Closed-form reference solutions used by the test suite.  Everything in this
// library is a direct transcription of hand-derived formulas; it must stay
// independent of the solver code so the two can disagree.

namespace golden {

struct Point {
    double y = 0.0, U = 0.0, H = 0.0, V = 0.0;
};

// ---------------------------------------------------------------------------
// Hat profile u0 = max(0, 1 - |x|), rho0 = 0, nu0 = mu0 = u0x^2 dx, with
// alpha(x) = x^2 / (x^2 + 1).  Wave breaking at (x, t) = (2, 2) where
// alpha(2) = 4/5 of the concentrated energy is removed.
// ---------------------------------------------------------------------------

Point a1_state(double xi, double t);
double a1_u(double x, double t);
// Density of the singular-continuous remainder of nu (beyond u_x^2) at x, t.
double a1_nu_extra(double x, double t);
// Total mass of mu as a function of time: 2 before breaking, 2 - 4/5 after.
double a1_mu_total(double t);

inline constexpr double a1_alpha_at_break = 4.0 / 5.0;
inline constexpr double a1_break_x = 2.0;
inline constexpr double a1_break_t = 2.0;
// Atom weights at the breaking instant itself (t = 2 exactly).
inline constexpr double a1_nu_atom = 1.0;
inline constexpr double a1_mu_atom = 1.0 / 5.0;

// ---------------------------------------------------------------------------
// Antisymmetric profile with a density jump: u0 piecewise linear through
// (-1, 1), (0, 0), (1, 0) with left value 1 and right value 0, rho0 = 1 on
// (0, 1], nu0 = mu0 with unit density on (-1, 1).  Valid for 0 <= t < 2.
// ---------------------------------------------------------------------------

double intro_u(double x, double t);
double intro_rho(double x, double t);
inline constexpr double intro_energy = 2.0;

// ---------------------------------------------------------------------------
// Pair of nearby initial data (eps-perturbation) evolving under a constant
// alpha; X breaks at t = 2, Xbar never breaks.  All eight metric terms have
// closed forms.
// ---------------------------------------------------------------------------

Point a2_X(double xi, double t, double eps, double alpha);
Point a2_Xbar(double xi, double t, double eps, double alpha);

struct A2Norms {
    double sup_y = 0.0, sup_U = 0.0;
    double l2_yxi = 0.0, l2_Uxi = 0.0, l2_Hxi = 0.0, l2_Vxi = 0.0, l2_r = 0.0;
    double l1_Hxi = 0.0;
    double l2_UH = 0.0;  // ||U H_xi - Ubar Hbar_xi||_2 (unweighted)
    double l2_g = 0.0, l2_g2 = 0.0, l2_g3 = 0.0;
    double dtilde = 0.0;  // alpha is constant, so the UH term carries weight 0
};
A2Norms a2_norms(double eps, double alpha, double t);

// ---------------------------------------------------------------------------
// Two-breaking-times profile with alpha(x) = clamp(x/4, 0, 3/4): breaking on
// (-1, 1) at t = 2 (collapse position 1/4) and on (1, 7/2) at t = 4.  The
// fixed-point iteration starting from the constant-in-time first iterate
// stabilizes after four distinct iterates.
// ---------------------------------------------------------------------------

Point a3_X0(double xi);
double a3_alpha(double x);
// Iterate n of the fixed-point scheme (n = 2 valid for t < 4 only, where it
// does not depend on the dissipation weights; n = 3 for all t; n >= 4 is the
// solution itself).
Point a3_iterate(int n, double xi, double t);
// Weight applied at the two breaking batches when forming iterate n + 1 from
// iterate n (cell 0: (-1, 1) at t = 2; cell 1: (1, 7/2) at t = 4).  Constant
// across each cell for n >= 2.
double a3_weight(int n, int cell);
Point a3_solution(double xi, double t);

// ---------------------------------------------------------------------------
// Degenerate dissipation profile: alpha(1/4) = 1, alpha(1/2) = 1/2 (so alpha
// attains 1 and the value-one set matters).  The flow S_4 applied to the same
// initial state as above produces a state on which the Eulerian round trip
// L o M differs from the relabeling normalization Pi.
// ---------------------------------------------------------------------------

double a4_alpha(double x);
Point a4_S4(double xi);  // S_4(X0)
Point a4_pi(double xi);  // Pi o S_4(X0)
Point a4_LM(double xi);  // L o M o S_4(X0)
inline constexpr double a4_sup_V_diff = 1.0 / 6.0;
inline constexpr double a4_sup_V_diff_at = 1.5;

}  // namespace golden
