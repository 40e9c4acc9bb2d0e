#include "hsx/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hsx {

StabilityProfile compute_g(const LagrangianState& X, const AlphaFunction& a) {
    std::vector<Omega> lab = classify_omega(X);
    StabilityProfile p;
    std::size_t n = X.cells();
    p.g.resize(n);
    p.g2.resize(n);
    p.g3.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double yx = X.y_xi(i), Hx = X.H_xi(i), Vx = X.V_xi(i), Ux = X.U_xi(i);
        double ymid = 0.5 * (X.y[i] + X.y[i + 1]);
        double Umid = 0.5 * (X.U[i] + X.U[i + 1]);
        if (lab[i] == Omega::d) {
            p.g[i] = yx + Hx - a(ymid) * Hx;
            p.g2[i] = a.lipschitz * X.h_inf * Ux;
            p.g3[i] = a.lipschitz * Umid * Ux;
        } else {
            p.g[i] = yx + Vx;
            p.g2[i] = 0.0;
            p.g3[i] = 0.0;
        }
    }
    return p;
}

LagrangianState resample(const LagrangianState& X, const std::vector<double>& grid) {
    std::size_t n = grid.size();
    std::vector<double> y(n), U(n), H(n), V(n), r(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = X.eval_y(grid[i]);
        U[i] = X.eval_U(grid[i]);
        H[i] = X.eval_H(grid[i]);
        V[i] = X.eval_V(grid[i]);
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
        r[i] = X.r_at(0.5 * (grid[i] + grid[i + 1]));
    return make_state(grid, std::move(y), std::move(U), std::move(H), std::move(V),
                      std::move(r));
}

namespace {

double l2_cellwise(const std::vector<double>& da, const std::vector<double>& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < da.size(); ++i) s += da[i] * da[i] * w[i];
    return std::sqrt(s);
}

}  // namespace

DtildeTerms dtilde_terms(const LagrangianState& Xin, const LagrangianState& Xbin,
                         const AlphaFunction& a, const MetricContext& ctx) {
    std::vector<double> grid = merge_grids(Xin.xi, Xbin.xi);
    LagrangianState X = resample(Xin, grid);
    LagrangianState B = resample(Xbin, grid);
    std::size_t nc = X.cells();
    std::vector<double> w(nc);
    for (std::size_t i = 0; i < nc; ++i) w[i] = X.dxi(i);

    DtildeTerms T;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        T.sup_y = std::max(T.sup_y, std::abs(X.y[i] - B.y[i]));
        T.sup_U = std::max(T.sup_U, std::abs(X.U[i] - B.U[i]));
    }
    // || U H_xi - Ubar Hbar_xi ||_2 : linear per cell, integrate exactly
    double uh = 0.0;
    for (std::size_t i = 0; i < nc; ++i) {
        double hx = X.H_xi(i), hbx = B.H_xi(i);
        double d0 = X.U[i] * hx - B.U[i] * hbx;
        double d1 = X.U[i + 1] * hx - B.U[i + 1] * hbx;
        uh += w[i] * (d0 * d0 + d0 * d1 + d1 * d1) / 3.0;
    }
    T.l2_UH = std::sqrt(uh);

    std::vector<double> dyx(nc), dUx(nc), dHx(nc), dVx(nc), dr(nc);
    for (std::size_t i = 0; i < nc; ++i) {
        dyx[i] = X.y_xi(i) - B.y_xi(i);
        dUx[i] = X.U_xi(i) - B.U_xi(i);
        dHx[i] = X.H_xi(i) - B.H_xi(i);
        dVx[i] = X.V_xi(i) - B.V_xi(i);
        dr[i] = X.r[i] - B.r[i];
        T.l1_Hxi += std::abs(dHx[i]) * w[i];
    }
    T.l2_yxi = l2_cellwise(dyx, w);
    T.l2_Uxi = l2_cellwise(dUx, w);
    T.l2_Hxi = l2_cellwise(dHx, w);
    T.l2_r = l2_cellwise(dr, w);
    T.l2_Vxi = l2_cellwise(dVx, w);
    T.l2_Z = T.l2_yxi + T.l2_Uxi + T.l2_Hxi + T.l2_r;

    StabilityProfile gX = compute_g(X, a), gB = compute_g(B, a);
    std::vector<double> dg(nc), dg2(nc), dg3(nc);
    for (std::size_t i = 0; i < nc; ++i) {
        dg[i] = gX.g[i] - gB.g[i];
        dg2[i] = gX.g2[i] - gB.g2[i];
        dg3[i] = gX.g3[i] - gB.g3[i];
    }
    T.l2_g = l2_cellwise(dg, w);
    T.l2_g2 = l2_cellwise(dg2, w);
    T.l2_g3 = l2_cellwise(dg3, w);

    T.total = T.sup_y + T.sup_U + ctx.alpha_lip * T.l2_UH + T.l1_Hxi + T.l2_Z +
              T.l2_g + T.l2_g2 + T.l2_g3;
    return T;
}

double dtilde(const LagrangianState& X, const LagrangianState& Xbar,
              const AlphaFunction& a, const MetricContext& ctx) {
    return dtilde_terms(X, Xbar, a, ctx).total;
}

std::vector<Relabeling> default_candidates(const LagrangianState& X,
                                           const LagrangianState& Xbar) {
    std::vector<Relabeling> c;
    c.push_back(identity_relabeling());
    Relabeling nX = normalizer(X), nB = normalizer(Xbar);
    c.push_back(inverse(nX));
    c.push_back(inverse(nB));
    c.push_back(compose(inverse(nX), nB));
    c.push_back(compose(inverse(nB), nX));
    for (double d : {0.1, -0.1, 0.01, -0.01}) c.push_back(shift_relabeling(d));
    return c;
}

double J_upper(const LagrangianState& X, const LagrangianState& Xbar,
               const AlphaFunction& a, const MetricContext& ctx,
               const std::vector<Relabeling>& candidates) {
    if (candidates.empty())
        throw std::invalid_argument("J_upper: candidate set must not be empty");
    double best_f = std::numeric_limits<double>::infinity();
    double best_g = std::numeric_limits<double>::infinity();
    for (const Relabeling& f : candidates) {
        best_f = std::min(best_f, dtilde(group_action(X, f), Xbar, a, ctx));
        best_g = std::min(best_g, dtilde(X, group_action(Xbar, f), a, ctx));
    }
    return best_f + best_g;
}

double dM_upper(double t, const LagrangianState& X0, const LagrangianState& Xbar0,
                const AlphaFunction& a, const MetricContext& ctx) {
    if (!check_F_i(X0) || !check_F_i(Xbar0))
        throw std::invalid_argument("dM_upper: inputs must satisfy V = H");
    if (!check_F0(X0) || !check_F0(Xbar0))
        throw std::invalid_argument("dM_upper: inputs must satisfy y + H = id");
    LagrangianState Xt = pi_normalize(evolve_event_driven(X0, a, t).first);
    LagrangianState Bt = pi_normalize(evolve_event_driven(Xbar0, a, t).first);
    return J_upper(Xt, Bt, a, ctx, default_candidates(Xt, Bt));
}

LipConstants lipschitz_constants(const MetricContext& ctx, double t) {
    if (!(ctx.M > 0.0) || t < 0.0)
        throw std::invalid_argument("lipschitz_constants: need M > 0 and t >= 0");
    double sM = std::sqrt(ctx.M), M = ctx.M, k = ctx.alpha_lip;
    double t2 = t * t, t3 = t * t * t;
    LipConstants c;
    c.Ctilde = 3.0 + 1.5 * t + 0.5 * t2 + (3.0 / 16.0) * t3 +
               sM * (1.0 + 0.25 * t + 0.25 * t2 + (1.0 / 16.0) * t3) +
               k * sM * (5.0 + 2.0 * t + t2 + (3.0 / 8.0) * t3) +
               k * M * (3.0 + 1.25 * t + 0.5 * t2 + 0.125 * t3);
    c.Cbar = 2.0 + k * sM + sM * (0.5 + 0.125 * t + (1.0 / 16.0) * t2) +
             k * M * (1.0 + 0.25 * t + 0.125 * t2);
    c.C = c.Ctilde * std::exp(t * c.Cbar);
    c.Chat = std::exp(0.5 * t) * c.C;
    return c;
}

LipReport lipschitz_verify(const LagrangianState& X0, const LagrangianState& Xbar0,
                           const AlphaFunction& a, const MetricContext& ctx,
                           const std::vector<double>& times) {
    if (!check_F_i(X0) || !check_F_i(Xbar0))
        throw std::invalid_argument("lipschitz_verify: inputs must satisfy V = H");
    if (!check_F0(Xbar0))
        throw std::invalid_argument("lipschitz_verify: Xbar0 must satisfy y + H = id");
    if (X0.h_inf > ctx.M + 1e-12 || Xbar0.h_inf > ctx.M + 1e-12)
        throw std::invalid_argument("lipschitz_verify: energy exceeds the bound M");
    LipReport rep;
    rep.d0 = dtilde(X0, Xbar0, a, ctx);
    for (double t : times) {
        LagrangianState Xt = evolve_event_driven(X0, a, t).first;
        LagrangianState Bt = evolve_event_driven(Xbar0, a, t).first;
        LipReportEntry e;
        e.t = t;
        e.dtilde = dtilde(Xt, Bt, a, ctx);
        e.bound = lipschitz_constants(ctx, t).C * rep.d0;
        e.ratio = e.bound > 0.0 ? e.dtilde / e.bound : (e.dtilde > 0.0 ? 1e30 : 0.0);
        rep.max_ratio = std::max(rep.max_ratio, e.ratio);
        if (e.ratio > 1.0 + 1e-9) rep.pass = false;
        rep.entries.push_back(e);
    }
    return rep;
}

double d_euler(double t, const EulerianState& E0, const EulerianState& Ebar0,
               const AlphaFunction& a, const MetricContext& ctx) {
    const AlphaFunction* ap = a.cls == AlphaClass::invalid ? nullptr : &a;
    return dM_upper(t, L_map(E0, ap), L_map(Ebar0, ap), a, ctx);
}

}  // namespace hsx
