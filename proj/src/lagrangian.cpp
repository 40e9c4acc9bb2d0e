#include "hsx/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hsx {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNegSlopeTol = 1e-13;  // below this, U_xi counts as negative
constexpr double kZeroRTol = 1e-14;

double eval_nodes(const std::vector<double>& xi, const std::vector<double>& v,
                  double q, double tail_slope) {
    if (q <= xi.front()) return v.front() + tail_slope * (q - xi.front());
    if (q >= xi.back()) return v.back() + tail_slope * (q - xi.back());
    auto it = std::upper_bound(xi.begin(), xi.end(), q);
    std::size_t i = static_cast<std::size_t>(it - xi.begin()) - 1;
    double w = (q - xi[i]) / (xi[i + 1] - xi[i]);
    return v[i] + w * (v[i + 1] - v[i]);
}
}  // namespace

double LagrangianState::eval_y(double q) const { return eval_nodes(xi, y, q, 1.0); }
double LagrangianState::eval_U(double q) const { return eval_nodes(xi, U, q, 0.0); }
double LagrangianState::eval_H(double q) const { return eval_nodes(xi, H, q, 0.0); }
double LagrangianState::eval_V(double q) const { return eval_nodes(xi, V, q, 0.0); }

double LagrangianState::r_at(double q) const {
    if (q < xi.front() || q > xi.back()) return 0.0;
    auto it = std::upper_bound(xi.begin(), xi.end(), q);
    std::size_t i = it == xi.end() ? cells() - 1
                                   : static_cast<std::size_t>(it - xi.begin()) - 1;
    if (i >= cells()) i = cells() - 1;
    return r[i];
}

LagrangianState make_state(std::vector<double> xi, std::vector<double> y,
                           std::vector<double> U, std::vector<double> H,
                           std::vector<double> V, std::vector<double> r) {
    std::size_t n = xi.size();
    if (n < 2 || y.size() != n || U.size() != n || H.size() != n || V.size() != n ||
        r.size() != n - 1)
        throw std::invalid_argument("make_state: array size mismatch");
    for (std::size_t i = 1; i < n; ++i)
        if (!(xi[i] > xi[i - 1]))
            throw std::invalid_argument("make_state: xi not strictly increasing");
    auto finite = [](const std::vector<double>& a) {
        for (double x : a)
            if (!std::isfinite(x)) return false;
        return true;
    };
    if (!finite(xi) || !finite(y) || !finite(U) || !finite(H) || !finite(V) || !finite(r))
        throw std::invalid_argument("make_state: non-finite entries");
    LagrangianState X;
    X.xi = std::move(xi);
    X.y = std::move(y);
    X.U = std::move(U);
    X.H = std::move(H);
    X.V = std::move(V);
    X.r = std::move(r);
    X.h_inf = X.H.back();
    X.v_inf = X.V.back();
    double c = kInf;
    for (std::size_t i = 0; i < X.cells(); ++i) c = std::min(c, X.y_xi(i) + X.H_xi(i));
    X.c_lower = c;
    if (!(X.c_lower > 1e-14))
        throw std::invalid_argument("make_state: y_xi + H_xi not uniformly positive");
    return X;
}

LagrangianState identity_state(double a, double b, std::size_t n) {
    if (!(b > a) || n == 0) throw std::invalid_argument("identity_state: bad range");
    std::vector<double> xi(n + 1), zero(n + 1, 0.0), rc(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) xi[i] = a + (b - a) * double(i) / double(n);
    return make_state(xi, xi, zero, zero, zero, rc);
}

CheckReport check_F_alpha(const LagrangianState& X, const AlphaFunction& a) {
    CheckReport rep;
    auto fail = [&](const std::string& label) {
        rep.pass = false;
        rep.violations.push_back(label);
        if (rep.first.empty()) rep.first = label;
    };
    const double tol = 1e-12;
    const double alg_tol = 1e-10;
    for (std::size_t i = 0; i < X.cells(); ++i) {
        double yx = X.y_xi(i), Ux = X.U_xi(i), Hx = X.H_xi(i), Vx = X.V_xi(i);
        double rc = X.r[i];
        std::string cell = " cell " + std::to_string(i);
        if (yx < -tol || Hx < -tol) fail("(ii)" + cell);
        double scale = std::max(1.0, std::abs(yx * Vx));
        if (std::abs(yx * Vx - Ux * Ux - rc * rc) > alg_tol * scale) fail("(iii)" + cell);
        if (Vx < -tol || Vx > Hx + alg_tol) fail("(iv)" + cell);
        if (a.cls == AlphaClass::strictly_below_one) {
            if (Hx > tol && !(Vx > 0.0)) fail("(v)" + cell);
            if ((Ux < -kNegSlopeTol || std::abs(rc) > kZeroRTol) &&
                std::abs(Vx - Hx) > alg_tol * std::max(1.0, Hx))
                fail("(v)" + cell);
        } else if (a.cls == AlphaClass::identically_one) {
            if (yx <= tol && Vx > alg_tol) fail("(vi)" + cell);
            if (yx > tol && std::abs(Vx - Hx) > alg_tol * std::max(1.0, Hx))
                fail("(vi)" + cell);
        }
    }
    if (!(X.c_lower > 1e-14)) fail("(ii) c_lower");
    if (X.H.front() < -tol || std::abs(X.V.front()) > tol) fail("(i) left asymptote");
    return rep;
}

bool check_F_i(const LagrangianState& X) {
    return X.V == X.H;
}

bool check_F0(const LagrangianState& X, double tol) {
    for (std::size_t i = 0; i < X.xi.size(); ++i)
        if (std::abs(X.y[i] + X.H[i] - X.xi[i]) > tol) return false;
    return true;
}

BreakingSchedule compute_tau(const LagrangianState& X) {
    BreakingSchedule s;
    std::size_t n = X.cells();
    s.tau.resize(n);
    s.break_position.assign(n, std::numeric_limits<double>::quiet_NaN());
    s.cell_width.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.cell_width[i] = X.dxi(i);
        double yx = X.y_xi(i), Ux = X.U_xi(i), Hx = X.H_xi(i);
        if (yx <= 1e-13) {
            s.tau[i] = 0.0;
        } else if (std::abs(X.r[i]) <= kZeroRTol && Ux < -kNegSlopeTol) {
            if (Hx <= 1e-13)
                throw std::runtime_error(
                    "compute_tau: corrupted state (U_xi < 0, r = 0 but H_xi = 0)");
            double t1 = -2.0 * Ux / Hx;
            double t2 = -2.0 * yx / Ux;
            if (std::abs(t1 - t2) > 1e-10 * (1.0 + std::abs(t1)))
                throw std::runtime_error(
                    "compute_tau: breaking-time formulas disagree; data not admissible");
            s.tau[i] = t1;
        } else {
            s.tau[i] = kInf;
        }
    }
    // batch finite taus, grouped within 1e-12
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
        if (std::isfinite(s.tau[i])) idx.push_back(i);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return s.tau[a] < s.tau[b]; });
    for (std::size_t k = 0; k < idx.size(); ++k) {
        double t = s.tau[idx[k]];
        if (s.batches.empty() || t - s.batches.back().time > 1e-12) {
            s.batches.push_back({t, {idx[k]}});
        } else {
            s.batches.back().cells.push_back(idx[k]);
        }
    }
    for (auto& b : s.batches) std::sort(b.cells.begin(), b.cells.end());
    return s;
}

std::vector<Omega> classify_omega(const LagrangianState& X) {
    std::vector<Omega> out(X.cells());
    for (std::size_t i = 0; i < X.cells(); ++i)
        out[i] = (X.U_xi(i) < -kNegSlopeTol && std::abs(X.r[i]) <= kZeroRTol)
                     ? Omega::d
                     : Omega::c;
    return out;
}

double broken_measure(const BreakingSchedule& sched, double t) {
    double m = 0.0;
    for (std::size_t i = 0; i < sched.tau.size(); ++i)
        if (sched.tau[i] <= t) m += sched.cell_width[i];
    return m;
}

}  // namespace hsx
