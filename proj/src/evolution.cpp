#include "hsx/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hsx {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void advance_nodes(std::vector<double>& y, std::vector<double>& U,
                   const std::vector<double>& V, double v_inf, double dt) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        double c = 0.5 * V[i] - 0.25 * v_inf;
        y[i] += U[i] * dt + 0.5 * c * dt * dt;
        U[i] += c * dt;
    }
}
}  // namespace

LagrangianState Trajectory::at(double t) const {
    if (t < checkpoints.front().first - 1e-12)
        throw std::invalid_argument("Trajectory::at: time before start");
    if (t > horizon + 1e-12)
        throw std::invalid_argument("Trajectory::at: time beyond horizon");
    if (t <= checkpoints.front().first) return x0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < checkpoints.size(); ++i)
        if (checkpoints[i].first <= t) k = i;
    const LagrangianState& cp = checkpoints[k].second;
    double dt = t - checkpoints[k].first;
    std::vector<double> y = cp.y, U = cp.U;
    advance_nodes(y, U, cp.V, cp.v_inf, dt);
    return make_state(cp.xi, std::move(y), std::move(U), cp.H, cp.V, cp.r);
}

Trajectory evolve_trajectory(const LagrangianState& X0, const AlphaFunction& a,
                             double t, const std::vector<double>* forced_weights,
                             double start_time, const BreakingSchedule* sched_in) {
    if (t < start_time)
        throw std::invalid_argument("evolve_trajectory: negative evolution time");
    Trajectory traj;
    traj.x0 = X0;
    traj.sched = sched_in ? *sched_in : compute_tau(X0);
    traj.horizon = t;
    traj.log.v_inf_traj.emplace_back(start_time, X0.v_inf);

    std::vector<double> y = X0.y, U = X0.U, V = X0.V;
    std::vector<double> Vxi(X0.cells());
    for (std::size_t i = 0; i < X0.cells(); ++i) Vxi[i] = X0.V_xi(i);
    double v_inf = X0.v_inf;
    double t_cur = start_time;

    traj.checkpoints.emplace_back(start_time, X0);

    for (const EventBatch& b : traj.sched.batches) {
        bool take = (b.time > start_time && b.time <= t) ||
                    (b.time == start_time && start_time == 0.0 && t > 0.0);
        if (!take) continue;
        if (b.time > t_cur) {
            advance_nodes(y, U, V, v_inf, b.time - t_cur);
            t_cur = b.time;
        }
        EventRecord ev;
        ev.time = b.time;
        std::size_t first_cell = b.cells.front();
        for (std::size_t c : b.cells) {
            if (std::abs(y[c + 1] - y[c]) > 1e-10 * (1.0 + std::abs(y[c])))
                throw std::runtime_error(
                    "evolve_trajectory: breaking cell not flat at its breaking time");
            y[c + 1] = y[c];
            U[c + 1] = U[c];
            double pos = y[c];
            double w = forced_weights ? (*forced_weights)[c] : a(pos);
            double h0 = X0.H_xi(c);
            traj.sched.break_position[c] = pos;
            Vxi[c] = (1.0 - w) * h0;
            ev.cells.push_back(c);
            ev.positions.push_back(pos);
            ev.alphas.push_back(w);
            ev.energy_removed += w * h0 * X0.dxi(c);
        }
        for (std::size_t i = first_cell; i < X0.cells(); ++i)
            V[i + 1] = V[i] + Vxi[i] * X0.dxi(i);
        v_inf = V.back();
        traj.log.events.push_back(std::move(ev));
        traj.log.v_inf_traj.emplace_back(t_cur, v_inf);
        traj.checkpoints.emplace_back(
            t_cur, make_state(X0.xi, y, U, X0.H, V, X0.r));
    }
    return traj;
}

std::pair<LagrangianState, EventLog> evolve_event_driven(const LagrangianState& X0,
                                                         const AlphaFunction& a,
                                                         double t) {
    if (!check_F_i(X0))
        throw std::invalid_argument("evolve_event_driven: initial data must satisfy V = H");
    Trajectory traj = evolve_trajectory(X0, a, t);
    return {traj.at(t), traj.log};
}

namespace {

// One contraction window [t0, t1] of the fixed-point construction.  Returns
// the state at t1, or nullopt if the iteration fails to settle.
std::optional<LagrangianState> picard_window(const LagrangianState& Xs,
                                             const AlphaFunction& a,
                                             const BreakingSchedule& sched,
                                             double t0, double t1,
                                             const PicardConfig& cfg,
                                             PicardIterate& rec) {
    std::size_t n_cells = Xs.cells();
    // sample times for iterate comparison: window ends, batch times inside,
    // and interval midpoints
    std::vector<double> samples{t0, t1};
    for (const EventBatch& b : sched.batches)
        if (b.time > t0 && b.time < t1) samples.push_back(b.time);
    std::sort(samples.begin(), samples.end());
    {
        std::vector<double> mids;
        for (std::size_t i = 0; i + 1 < samples.size(); ++i)
            mids.push_back(0.5 * (samples[i] + samples[i + 1]));
        samples.insert(samples.end(), mids.begin(), mids.end());
        std::sort(samples.begin(), samples.end());
    }

    std::optional<Trajectory> prev;  // nullopt encodes the constant iterate X_1
    for (int it = 2; it <= cfg.max_iter; ++it) {
        std::vector<double> w(n_cells, 0.0);
        for (std::size_t i = 0; i < n_cells; ++i) {
            if (!std::isfinite(sched.tau[i])) continue;
            double s = std::clamp(sched.tau[i], t0, t1);
            double mid = 0.5 * (Xs.xi[i] + Xs.xi[i + 1]);
            double ypos = prev ? prev->at(s).eval_y(mid) : Xs.eval_y(mid);
            w[i] = a(ypos);
        }
        rec.beta_history.push_back(w);
        Trajectory cur = evolve_trajectory(Xs, a, t1, &w, t0, &sched);
        rec.n += 1;
        double delta = 0.0;
        for (double s : samples) {
            LagrangianState A = cur.at(s);
            LagrangianState B = prev ? prev->at(s) : Xs;
            for (std::size_t i = 0; i < A.y.size(); ++i) {
                delta = std::max(delta, std::abs(A.y[i] - B.y[i]));
                delta = std::max(delta, std::abs(A.U[i] - B.U[i]));
                delta = std::max(delta, std::abs(A.V[i] - B.V[i]));
            }
        }
        rec.sup_deltas.push_back(delta);
        if (delta < cfg.tol) {
            rec.converged = true;
            return cur.at(t1);
        }
        prev = std::move(cur);
    }
    return std::nullopt;
}

LagrangianState picard_solve(const LagrangianState& Xs, const AlphaFunction& a,
                             const BreakingSchedule& sched, double t0, double t1,
                             const PicardConfig& cfg, PicardIterate& rec,
                             int depth) {
    if (depth > 24)
        throw std::runtime_error("evolve_picard: window bisection did not terminate");
    auto res = picard_window(Xs, a, sched, t0, t1, cfg, rec);
    if (res) return *res;
    if (t1 - t0 < 1e-6)
        throw std::runtime_error(
            "evolve_picard: no convergence within max_iter; last sup_delta = " +
            std::to_string(rec.sup_deltas.empty() ? -1.0 : rec.sup_deltas.back()));
    double mid = 0.5 * (t0 + t1);
    LagrangianState Xm = picard_solve(Xs, a, sched, t0, mid, cfg, rec, depth + 1);
    return picard_solve(Xm, a, sched, mid, t1, cfg, rec, depth + 1);
}

}  // namespace

std::pair<LagrangianState, PicardIterate> evolve_picard(const LagrangianState& X0,
                                                        const AlphaFunction& a,
                                                        double t,
                                                        const PicardConfig& cfg) {
    if (t < 0.0) throw std::invalid_argument("evolve_picard: negative time");
    if (!check_F_i(X0))
        throw std::invalid_argument("evolve_picard: initial data must satisfy V = H");
    BreakingSchedule sched = compute_tau(X0);
    PicardIterate rec;
    rec.n = 1;  // X_1 = X_0
    if (t == 0.0) {
        rec.converged = true;
        rec.distinct = 1;
        return {X0, rec};
    }
    LagrangianState out = X0;
    if (cfg.max_window > 0.0 && t > cfg.max_window) {
        int k = static_cast<int>(std::ceil(t / cfg.max_window));
        double step = t / k;
        for (int j = 0; j < k; ++j)
            out = picard_solve(out, a, sched, j * step, (j + 1) * step, cfg, rec, 0);
    } else {
        out = picard_solve(out, a, sched, 0.0, t, cfg, rec, 0);
    }
    int distinct = 1;
    for (double d : rec.sup_deltas)
        if (d >= cfg.tol) ++distinct;
    rec.distinct = distinct;
    return {out, rec};
}

EulerianState evolve_eulerian(const EulerianState& E0, const AlphaFunction& a,
                              double t) {
    if (!check_D0(E0))
        throw std::invalid_argument("evolve_eulerian: admissible data requires nu = mu");
    const AlphaFunction* ap = a.cls == AlphaClass::invalid ? nullptr : &a;
    LagrangianState X0 = L_map(E0, ap);
    auto [Xt, log] = evolve_event_driven(X0, a, t);
    (void)log;
    return M_map(Xt);
}

double dafermos_formula(const PiecewiseLinear& u0, double alpha_const, double x,
                        double t) {
    if (alpha_const < 0.0 || alpha_const > 1.0)
        throw std::invalid_argument("dafermos_formula: alpha must lie in [0,1]");
    if (t < 0.0) throw std::invalid_argument("dafermos_formula: negative time");
    std::size_t K = u0.cells();
    if (K == 0) return u0.left;
    const std::vector<double>& z = u0.x;
    std::vector<double> slope(K), mass(K), tau(K);
    double a_tot = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        slope[k] = u0.slope(k);
        mass[k] = slope[k] * slope[k] * (z[k + 1] - z[k]);
        tau[k] = slope[k] < -1e-13 ? -2.0 / slope[k] : kInf;
        a_tot += mass[k];
    }
    auto pos = [](double s) { return s > 0.0 ? s : 0.0; };
    // mass of cell k to the left of xi (linear ramp in xi)
    auto mleft = [&](std::size_t k, double xi) {
        double w = std::clamp((xi - z[k]) / (z[k + 1] - z[k]), 0.0, 1.0);
        return mass[k] * w;
    };
    auto A = [&](double xi) {
        double s = 0.0;
        for (std::size_t k = 0; k < K; ++k) s += mleft(k, xi);
        return s;
    };
    // single and double time integrals of int 1_{tau<=s} u0x^2 over (-inf, xi)
    auto Dint = [&](double xi, double T) {
        double s = 0.0;
        for (std::size_t k = 0; k < K; ++k)
            if (std::isfinite(tau[k])) s += mleft(k, xi) * pos(T - tau[k]);
        return s;
    };
    auto Ddbl = [&](double xi, double T) {
        double s = 0.0;
        for (std::size_t k = 0; k < K; ++k)
            if (std::isfinite(tau[k])) {
                double p = pos(T - tau[k]);
                s += mleft(k, xi) * 0.5 * p * p;
            }
        return s;
    };
    double dint_tot = Dint(z.back(), t), ddbl_tot = Ddbl(z.back(), t);
    auto X_of = [&](double xi) {
        double Q = A(xi) * 0.5 * t * t - alpha_const * Ddbl(xi, t) -
                   0.5 * (a_tot * 0.5 * t * t - alpha_const * ddbl_tot);
        return xi + u0(xi) * t + 0.5 * Q;
    };
    auto u_of = [&](double xi) {
        double P = A(xi) * t - alpha_const * Dint(xi, t) -
                   0.5 * (a_tot * t - alpha_const * dint_tot);
        return u0(xi) + 0.5 * P;
    };
    // invert the monotone piecewise-linear map xi -> X(xi, t)
    std::vector<double> Xk(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) Xk[k] = X_of(z[k]);
    double xi;
    if (x <= Xk.front()) {
        xi = z.front() - (Xk.front() - x);
    } else if (x >= Xk.back()) {
        xi = z.back() + (x - Xk.back());
    } else {
        std::size_t k = 0;
        while (k + 1 < Xk.size() && Xk[k + 1] < x) ++k;
        double den = Xk[k + 1] - Xk[k];
        double w = den > 1e-14 ? (x - Xk[k]) / den : 0.0;
        xi = z[k] + w * (z[k + 1] - z[k]);
    }
    return u_of(xi);
}

namespace {
double bump1(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}
double bump1_d(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    double q = 1.0 - s * s;
    return bump1(s) * (-2.0 * s / (q * q));
}
}  // namespace

double BumpTestFunction::phi(double x, double t) const {
    return bump1((x - cx) / rx) * bump1((t - ct) / rt);
}
double BumpTestFunction::phi_x(double x, double t) const {
    return bump1_d((x - cx) / rx) / rx * bump1((t - ct) / rt);
}
double BumpTestFunction::phi_t(double x, double t) const {
    return bump1((x - cx) / rx) * bump1_d((t - ct) / rt) / rt;
}

namespace {
const double kGLx[5] = {-0.906179845938663992797626878299,
                        -0.538469310105683091036314420700, 0.0,
                        0.538469310105683091036314420700,
                        0.906179845938663992797626878299};
const double kGLw[5] = {0.236926885056189087514264040720,
                        0.478628670499366468041291514836,
                        0.568888888888888888888888888889,
                        0.478628670499366468041291514836,
                        0.236926885056189087514264040720};

struct SpaceIntegrals {
    double iu = 0.0, irho = 0.0, imu = 0.0;
};

SpaceIntegrals space_integrals(const EulerianState& E, const BumpTestFunction& phi,
                               double t, int nx, double u_scale) {
    double xa = phi.cx - phi.rx, xb = phi.cx + phi.rx;
    std::vector<double> breaks{xa, xb};
    for (int i = 1; i < nx; ++i) breaks.push_back(xa + (xb - xa) * double(i) / nx);
    auto add_in = [&](double p) {
        if (p > xa && p < xb) breaks.push_back(p);
    };
    for (double p : E.u.x) add_in(p);
    for (double p : E.rho.x) add_in(p);
    for (double p : E.mu.cdf.x) add_in(p);
    for (auto& [p, w] : E.mu.atoms) { (void)w; add_in(p); }
    std::sort(breaks.begin(), breaks.end());
    double mu_tot = E.mu.total;
    SpaceIntegrals out;
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        double a = breaks[j], b = breaks[j + 1];
        double h = b - a;
        if (h <= 1e-14) continue;
        double dens = (E.mu.cdf(b) - E.mu.cdf(a)) / h;  // AC density, constant per cell
        for (int q = 0; q < 5; ++q) {
            double x = 0.5 * (a + b) + 0.5 * h * kGLx[q];
            double w = 0.5 * h * kGLw[q];
            double u = u_scale * E.u(x);
            double pt = phi.phi_t(x, t), px = phi.phi_x(x, t), pv = phi.phi(x, t);
            double asym = 2.0 * measure_F(E.mu, x) - mu_tot;
            out.iu += w * (u * pt + 0.5 * u * u * px + 0.25 * asym * pv);
            double rho = E.rho(x);
            out.irho += w * rho * (pt + u * px);
            out.imu += w * dens * (pt + u * px);
        }
    }
    for (auto& [p, wgt] : E.mu.atoms) {
        if (p <= xa || p >= xb) continue;
        double u = u_scale * E.u(p);
        out.imu += wgt * (phi.phi_t(p, t) + u * phi.phi_x(p, t));
    }
    return out;
}
}  // namespace

WeakResidual weak_residual(const Trajectory& traj, const BumpTestFunction& phi,
                           int nt, int nx, double u_scale) {
    double t_end = phi.ct + phi.rt;
    if (t_end > traj.horizon + 1e-12)
        throw std::invalid_argument(
            "weak_residual: test function not compactly supported in the sampled window");
    t_end = std::min(t_end, traj.horizon);
    std::vector<double> tb{0.0, t_end};
    for (int i = 1; i < nt; ++i) tb.push_back(t_end * double(i) / nt);
    for (const auto& ev : traj.log.events)
        if (ev.time > 0.0 && ev.time < t_end) tb.push_back(ev.time);
    std::sort(tb.begin(), tb.end());

    WeakResidual r;
    for (std::size_t j = 0; j + 1 < tb.size(); ++j) {
        double a = tb[j], b = tb[j + 1];
        double h = b - a;
        if (h <= 1e-14) continue;
        for (int q = 0; q < 5; ++q) {
            double t = 0.5 * (a + b) + 0.5 * h * kGLx[q];
            double w = 0.5 * h * kGLw[q];
            EulerianState E = M_map(traj.at(t));
            SpaceIntegrals si = space_integrals(E, phi, t, nx, u_scale);
            r.r_u += w * si.iu;
            r.r_rho += w * si.irho;
            r.r_mu += w * si.imu;
        }
    }
    // initial-data boundary terms
    EulerianState E0 = M_map(traj.x0);
    double xa = phi.cx - phi.rx, xb = phi.cx + phi.rx;
    std::vector<double> breaks{xa, xb};
    for (int i = 1; i < nx; ++i) breaks.push_back(xa + (xb - xa) * double(i) / nx);
    for (double p : E0.u.x)
        if (p > xa && p < xb) breaks.push_back(p);
    for (double p : E0.rho.x)
        if (p > xa && p < xb) breaks.push_back(p);
    for (double p : E0.mu.cdf.x)
        if (p > xa && p < xb) breaks.push_back(p);
    std::sort(breaks.begin(), breaks.end());
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        double a = breaks[j], b = breaks[j + 1];
        double h = b - a;
        if (h <= 1e-14) continue;
        double dens = (E0.mu.cdf(b) - E0.mu.cdf(a)) / h;
        for (int q = 0; q < 5; ++q) {
            double x = 0.5 * (a + b) + 0.5 * h * kGLx[q];
            double w = 0.5 * h * kGLw[q];
            double pv = phi.phi(x, 0.0);
            r.r_u += w * u_scale * E0.u(x) * pv;
            r.r_rho += w * E0.rho(x) * pv;
            r.r_mu += w * dens * pv;
        }
    }
    for (auto& [p, wgt] : E0.mu.atoms)
        if (p > xa && p < xb) r.r_mu += wgt * phi.phi(p, 0.0);
    return r;
}

}  // namespace hsx
