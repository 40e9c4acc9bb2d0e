#pragma once

#include <optional>

#include "hsx/maps.hpp"

namespace hsx {

struct EventRecord {
    double time = 0.0;
    std::vector<std::size_t> cells;
    std::vector<double> positions;  // y at each breaking cell
    std::vector<double> alphas;     // dissipation weight applied per cell
    double energy_removed = 0.0;    // sum alpha * H_{0,xi} * dxi over the batch
};

struct EventLog {
    std::vector<EventRecord> events;
    // piecewise-constant-in-t record of v_inf; first entry is (0, h_inf)
    std::vector<std::pair<double, double>> v_inf_traj;
};

// Exact trajectory: between event batches every node is closed-form (U affine,
// y quadratic in t), so the solution can be reconstructed at any time from the
// stored post-event checkpoints.
struct Trajectory {
    LagrangianState x0;           // data at t = 0, before any drop
    BreakingSchedule sched;
    EventLog log;
    double horizon = 0.0;
    // post-event snapshots, sorted by time; always contains one at t = 0
    std::vector<std::pair<double, LagrangianState>> checkpoints;

    LagrangianState at(double t) const;
};

// Event-driven solution operator.  forced_weights, when given, prescribes the
// per-cell dissipation weight used at the cell's breaking time instead of
// evaluating alpha at the breaking position (used by the fixed-point mode).
// start_time lets the integration resume mid-trajectory from X0 given at
// start_time (breaking times are absolute).
Trajectory evolve_trajectory(const LagrangianState& X0, const AlphaFunction& a,
                             double t,
                             const std::vector<double>* forced_weights = nullptr,
                             double start_time = 0.0,
                             const BreakingSchedule* sched = nullptr);

std::pair<LagrangianState, EventLog> evolve_event_driven(const LagrangianState& X0,
                                                         const AlphaFunction& a,
                                                         double t);

struct PicardConfig {
    double tol = 1e-12;
    int max_iter = 50;
    // optional forced contraction-window length; by default the whole horizon
    // is attempted at once and split only if the iteration fails to converge
    double max_window = 0.0;  // <= 0 means unlimited
};

struct PicardIterate {
    int n = 0;                   // total iterates formed (X_1 = X_0 included)
    int distinct = 0;            // iterates distinct beyond tol
    bool converged = false;
    std::vector<double> sup_deltas;              // sup |y_n - y_{n-1}|, n >= 2
    std::vector<std::vector<double>> beta_history;  // weights derived from X_n
};

std::pair<LagrangianState, PicardIterate> evolve_picard(const LagrangianState& X0,
                                                        const AlphaFunction& a,
                                                        double t,
                                                        const PicardConfig& cfg = {});

// T_t = M o S_t o L on admissible Eulerian data (nu = mu).
EulerianState evolve_eulerian(const EulerianState& E0, const AlphaFunction& a,
                              double t);

// Closed solution formula for constant alpha, rho_0 = 0, nu_0 = mu_0 = u_{0,x}^2 dx
// absolutely continuous and y_0 = id.
double dafermos_formula(const PiecewiseLinear& u0, double alpha_const, double x,
                        double t);

// Smooth compactly supported test function phi(x,t) = bump((x-cx)/rx) *
// bump((t-ct)/rt) with bump(s) = exp(1 - 1/(1-s^2)) on |s| < 1.
struct BumpTestFunction {
    double cx = 0.0, rx = 1.0, ct = 0.0, rt = 1.0;
    double phi(double x, double t) const;
    double phi_x(double x, double t) const;
    double phi_t(double x, double t) const;
};

struct WeakResidual {
    double r_u = 0.0;
    double r_rho = 0.0;
    double r_mu = 0.0;
};

// Space-time residuals of the weak formulation against phi, including the
// initial-data boundary terms; nt/nx control the composite quadrature.
// u_scale is a diagnostic knob that multiplies u inside the integrands.
WeakResidual weak_residual(const Trajectory& traj, const BumpTestFunction& phi,
                           int nt = 200, int nx = 200, double u_scale = 1.0);

}  // namespace hsx
