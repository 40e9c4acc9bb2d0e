#pragma once

#include "hsx/evolution.hpp"

namespace hsx {

// Auxiliary per-cell profiles encoding the impending energy drop.
struct StabilityProfile {
    std::vector<double> g, g2, g3;
};

struct MetricContext {
    double M = 1.0;          // shared energy bound, h_inf <= M for both states
    double alpha_lip = 0.0;  // Lipschitz constant of alpha
};

// On dissipating cells (U_xi < 0, r = 0): g = y_xi + H_xi - alpha(y) H_xi,
// g2 = alpha_lip * H_inf * U_xi, g3 = alpha_lip * U * U_xi (U at the cell
// midpoint); elsewhere g = y_xi + V_xi, g2 = g3 = 0.
StabilityProfile compute_g(const LagrangianState& X, const AlphaFunction& a);

// Resamples X onto a refinement of its grid; exact for piecewise-linear data.
LagrangianState resample(const LagrangianState& X, const std::vector<double>& grid);

struct DtildeTerms {
    double sup_y = 0.0, sup_U = 0.0;
    double l2_UH = 0.0;   // ||U H_xi - Ubar Hbar_xi||_2 (unweighted)
    double l1_Hxi = 0.0;
    double l2_yxi = 0.0, l2_Uxi = 0.0, l2_Hxi = 0.0, l2_r = 0.0;  // Z components
    double l2_Z = 0.0;    // sum of the four component L2 norms
    double l2_Vxi = 0.0;  // informational; enters the distance only through g
    double l2_g = 0.0, l2_g2 = 0.0, l2_g3 = 0.0;
    double total = 0.0;   // includes the alpha_lip weight on l2_UH
};

DtildeTerms dtilde_terms(const LagrangianState& X, const LagrangianState& Xbar,
                         const AlphaFunction& a, const MetricContext& ctx);
double dtilde(const LagrangianState& X, const LagrangianState& Xbar,
              const AlphaFunction& a, const MetricContext& ctx);

// Candidate relabelings covering the constructions the convergence arguments
// use: identity, the (y+H)-normalizers of both states and their mixes, and a
// small family of shifts.
std::vector<Relabeling> default_candidates(const LagrangianState& X,
                                           const LagrangianState& Xbar);

// min over candidates f, g of dtilde(X.f, Xbar) + dtilde(X, Xbar.g);
// a documented UPPER bound on the relabeling-invariant distance.
double J_upper(const LagrangianState& X, const LagrangianState& Xbar,
               const AlphaFunction& a, const MetricContext& ctx,
               const std::vector<Relabeling>& candidates);

// Single-link chain value J_upper(Pi S_t X0, Pi S_t Xbar0) with the default
// candidate set; an upper bound on the chained metric.
double dM_upper(double t, const LagrangianState& X0, const LagrangianState& Xbar0,
                const AlphaFunction& a, const MetricContext& ctx);

struct LipConstants {
    double Ctilde = 0.0, Cbar = 0.0, C = 0.0, Chat = 0.0;
};
// Printed polynomial constants of the Lipschitz bounds: C = Ctilde e^{t Cbar},
// Chat = e^{t/2} C.
LipConstants lipschitz_constants(const MetricContext& ctx, double t);

struct LipReportEntry {
    double t = 0.0, dtilde = 0.0, bound = 0.0, ratio = 0.0;
};
struct LipReport {
    std::vector<LipReportEntry> entries;
    double d0 = 0.0;
    double max_ratio = 0.0;
    bool pass = true;
};
// Evolves both states and checks dtilde(X(t), Xbar(t)) <= C(t) dtilde(X0, Xbar0).
// Hypotheses: X0 admissible with V = H and h_inf <= M; Xbar0 additionally
// normalized (y + H = id).
LipReport lipschitz_verify(const LagrangianState& X0, const LagrangianState& Xbar0,
                           const AlphaFunction& a, const MetricContext& ctx,
                           const std::vector<double>& times);

// Induced Eulerian distance: dM_upper(t, L(E0), L(Ebar0)).
double d_euler(double t, const EulerianState& E0, const EulerianState& Ebar0,
               const AlphaFunction& a, const MetricContext& ctx);

}  // namespace hsx
