#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hsx/alpha.hpp"

namespace hsx {

// Lagrangian tuple X = (y, U, H, r, V) on a fixed xi-grid.  y, U, H, V are
// node-sampled piecewise-linear profiles; r is a piecewise-constant density
// weight stored per cell.  Outside the grid: y - id, U constant; H, V
// constant (0 on the left); r = 0.
struct LagrangianState {
    std::vector<double> xi;  // N+1 nodes, strictly increasing
    std::vector<double> y, U, H, V;  // node values (N+1)
    std::vector<double> r;           // per-cell values (N)
    double h_inf = 0.0;  // lim H at +infinity (= H.back())
    double v_inf = 0.0;  // lim V at +infinity (= V.back())
    double c_lower = 0.0;  // min over cells of y_xi + H_xi

    std::size_t cells() const { return r.size(); }
    double dxi(std::size_t i) const { return xi[i + 1] - xi[i]; }
    double y_xi(std::size_t i) const { return (y[i + 1] - y[i]) / dxi(i); }
    double U_xi(std::size_t i) const { return (U[i + 1] - U[i]) / dxi(i); }
    double H_xi(std::size_t i) const { return (H[i + 1] - H[i]) / dxi(i); }
    double V_xi(std::size_t i) const { return (V[i + 1] - V[i]) / dxi(i); }

    double eval_y(double q) const;  // slope-1 tails
    double eval_U(double q) const;
    double eval_H(double q) const;
    double eval_V(double q) const;
    double r_at(double q) const;    // per-cell lookup, 0 outside
};

// Builds a state, computing h_inf, v_inf, c_lower; validates grid shape,
// finiteness and c_lower > 1e-14.
LagrangianState make_state(std::vector<double> xi, std::vector<double> y,
                           std::vector<double> U, std::vector<double> H,
                           std::vector<double> V, std::vector<double> r);
// y = id, U = H = V = r = 0 on n cells over [a, b].
LagrangianState identity_state(double a, double b, std::size_t n);

struct CheckReport {
    bool pass = true;
    std::vector<std::string> violations;  // e.g. "(iv) cell 3"
    std::string first;                    // first violating condition/cell
};

// Membership check for the admissible Lagrangian set: conditions (i)-(vi)
// cell by cell; never throws for well-formed grids.
CheckReport check_F_alpha(const LagrangianState& X, const AlphaFunction& a);
// V = H at every node (exact equality of the stored arrays).
bool check_F_i(const LagrangianState& X);
// y + H = id at every node, within tol.
bool check_F0(const LagrangianState& X, double tol = 1e-12);

struct EventBatch {
    double time = 0.0;
    std::vector<std::size_t> cells;
};

struct BreakingSchedule {
    std::vector<double> tau;             // per cell; +infinity = never breaks
    std::vector<double> break_position;  // per cell; NaN until evolution fills it
    std::vector<double> cell_width;
    std::vector<EventBatch> batches;     // finite-tau cells grouped within 1e-12
};

// Breaking time per cell from the initial data: 0 where y_xi = 0,
// -2 U_xi / H_xi where r = 0 and U_xi < 0, +infinity otherwise.
BreakingSchedule compute_tau(const LagrangianState& X0);

enum class Omega { c, d };
// Label d iff U_xi < 0 and r = 0 on the cell; c otherwise.
std::vector<Omega> classify_omega(const LagrangianState& X);

// Lebesgue measure of {xi : tau(xi) <= t}.
double broken_measure(const BreakingSchedule& sched, double t);

}  // namespace hsx
