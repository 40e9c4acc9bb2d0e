#include "hsx/maps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsx {

namespace {
constexpr double kFlatTol = 1e-12;
}

double StepDensity::operator()(double q) const {
    if (x.size() < 2) return 0.0;
    if (q < x.front() || q > x.back()) return 0.0;
    auto it = std::upper_bound(x.begin(), x.end(), q);
    std::size_t i = it == x.end() ? val.size() - 1
                                  : static_cast<std::size_t>(it - x.begin()) - 1;
    if (i >= val.size()) i = val.size() - 1;
    return val[i];
}

StepDensity zero_density() { return {}; }

EulerianState zero_eulerian() {
    return {make_const_pl(0.0), zero_density(), zero_measure(), zero_measure()};
}

namespace {

std::vector<double> eulerian_breaks(const EulerianState& E) {
    std::vector<double> b;
    auto add = [&](const std::vector<double>& v) { b.insert(b.end(), v.begin(), v.end()); };
    add(E.u.x);
    add(E.rho.x);
    add(E.nu.cdf.x);
    add(E.mu.cdf.x);
    for (auto& [p, w] : E.nu.atoms) { (void)w; b.push_back(p); }
    for (auto& [p, w] : E.mu.atoms) { (void)w; b.push_back(p); }
    std::sort(b.begin(), b.end());
    std::vector<double> out;
    for (double p : b)
        if (out.empty() || p - out.back() > kFlatTol) out.push_back(p);
    return out;
}

}  // namespace

CheckReport check_D_alpha(const EulerianState& E, const AlphaFunction& a) {
    CheckReport rep;
    auto fail = [&](const std::string& label) {
        rep.pass = false;
        rep.violations.push_back(label);
        if (rep.first.empty()) rep.first = label;
    };
    std::vector<double> breaks = eulerian_breaks(E);
    const double tol = 1e-10;
    // (iii) mu <= nu
    if (!measure_leq(E.mu, E.nu)) fail("(iii) mu <= nu");
    // per-cell checks on the merged grid
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        double xa = breaks[j], xb = breaks[j + 1];
        double w = xb - xa;
        double mid = 0.5 * (xa + xb);
        double ux = (E.u(xb) - E.u(xa)) / w;
        double rho = E.rho(mid);
        double mu_ac = (E.mu.cdf(xb) - E.mu.cdf(xa)) / w;
        double nu_ac = (E.nu.cdf(xb) - E.nu.cdf(xa)) / w;
        std::string cell = " x-cell " + std::to_string(j);
        if (std::abs(mu_ac - (ux * ux + rho * rho)) > tol * std::max(1.0, mu_ac))
            fail("(iv)" + cell);
        if (a.cls == AlphaClass::strictly_below_one) {
            if (nu_ac > tol && !(mu_ac > 0.0)) fail("(v)" + cell);
            if ((ux < -1e-10 || std::abs(rho) > 1e-10) && nu_ac > tol &&
                std::abs(mu_ac - nu_ac) > tol * std::max(1.0, nu_ac))
                fail("(v)" + cell);
        } else if (a.cls == AlphaClass::identically_one) {
            if (std::abs(mu_ac - nu_ac) > tol * std::max(1.0, nu_ac)) fail("(vi)" + cell);
        }
    }
    if (a.cls == AlphaClass::strictly_below_one) {
        for (auto& [p, w] : E.nu.atoms)
            if (w > 0.0 && !(measure_atom_at(E.mu, p) > 0.0))
                fail("(v) atom");
    } else if (a.cls == AlphaClass::identically_one) {
        if (!E.mu.atoms.empty()) fail("(vi) atom");
    }
    return rep;
}

bool check_D0(const EulerianState& E, double tol) {
    return measures_equal(E.nu, E.mu, tol);
}

LagrangianState L_map(const EulerianState& E, const AlphaFunction* a) {
    if (a != nullptr) {
        CheckReport rep = check_D_alpha(E, *a);
        if (!rep.pass)
            throw std::invalid_argument("L_map: input not admissible, first violation " +
                                        rep.first);
    }
    std::vector<double> breaks = eulerian_breaks(E);
    if (breaks.empty()) return identity_state(0.0, 1.0, 1);

    std::vector<double> xi, y;
    for (double xb : breaks) {
        double F = measure_F(E.nu, xb);
        xi.push_back(F + xb);
        y.push_back(xb);
        double w = measure_atom_at(E.nu, xb);
        if (w > 0.0) {
            xi.push_back(F + w + xb);
            y.push_back(xb);
        }
    }
    std::size_t n = xi.size();
    if (n < 2) return identity_state(0.0, 1.0, 1);
    std::vector<double> U(n), H(n), V(n);
    for (std::size_t i = 0; i < n; ++i) {
        U[i] = E.u(y[i]);
        H[i] = xi[i] - y[i];
    }
    std::vector<double> r(n - 1, 0.0);
    V[0] = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double dxi = xi[i + 1] - xi[i];
        double dy = y[i + 1] - y[i];
        double ratio;
        if (dy <= kFlatTol) {
            double wn = measure_atom_at(E.nu, y[i]);
            double wm = measure_atom_at(E.mu, y[i]);
            ratio = wn > 0.0 ? wm / wn : 0.0;
            r[i] = 0.0;
        } else {
            double mn = measure_open_interval(E.nu, y[i], y[i + 1]);
            double mm = measure_open_interval(E.mu, y[i], y[i + 1]);
            ratio = mn > 0.0 ? mm / mn : 0.0;
            r[i] = E.rho(0.5 * (y[i] + y[i + 1])) * (dy / dxi);
        }
        V[i + 1] = V[i] + ratio * (H[i + 1] - H[i]);
    }
    return make_state(std::move(xi), std::move(y), std::move(U), std::move(H),
                      std::move(V), std::move(r));
}

EulerianState M_map(const LagrangianState& X) {
    std::size_t n = X.cells();
    std::vector<bool> flat(n);
    for (std::size_t i = 0; i < n; ++i) {
        flat[i] = (X.y[i + 1] - X.y[i] <= kFlatTol);
        if (flat[i]) {
            if (std::abs(X.U[i + 1] - X.U[i]) > 1e-10)
                throw std::invalid_argument("M_map: U multivalued on a flat of y");
            if (std::abs(X.r[i]) > 1e-10)
                throw std::invalid_argument("M_map: nonzero r on a flat of y");
        }
    }
    std::vector<double> ux{X.y[0]}, uv{X.U[0]};
    std::vector<double> rx, rv;
    for (std::size_t i = 0; i < n; ++i) {
        if (flat[i]) continue;
        if (X.y[i + 1] - ux.back() > kFlatTol) {
            ux.push_back(X.y[i + 1]);
            uv.push_back(X.U[i + 1]);
        }
        double dy = X.y[i + 1] - X.y[i];
        double dxi = X.dxi(i);
        if (rx.empty()) rx.push_back(X.y[i]);
        rx.push_back(X.y[i + 1]);
        rv.push_back(X.r[i] * dxi / dy);
    }
    EulerianState E;
    E.u = ux.size() >= 2 ? make_pl(ux, uv) : make_const_pl(uv.front());
    StepDensity rho;
    rho.x = std::move(rx);
    rho.val = std::move(rv);
    E.rho = std::move(rho);
    std::vector<double> hdens(n), vdens(n);
    for (std::size_t i = 0; i < n; ++i) {
        hdens[i] = X.H_xi(i);
        vdens[i] = X.V_xi(i);
    }
    E.nu = pushforward(X.xi, hdens, X.y);
    E.mu = pushforward(X.xi, vdens, X.y);
    return E;
}

double Relabeling::operator()(double q) const {
    if (q <= f.x.front()) return f.v.front() + (q - f.x.front());
    if (q >= f.x.back()) return f.v.back() + (q - f.x.back());
    return f(q);
}

double Relabeling::inv(double q) const {
    if (q <= finv.x.front()) return finv.v.front() + (q - finv.x.front());
    if (q >= finv.x.back()) return finv.v.back() + (q - finv.x.back());
    return finv(q);
}

Relabeling make_relabeling(PiecewiseLinear core) {
    if (core.x.empty())
        throw std::invalid_argument("make_relabeling: need at least one knot");
    for (std::size_t i = 0; i < core.cells(); ++i)
        if (!(core.slope(i) > 1e-8))
            throw std::invalid_argument("make_relabeling: slopes must be positive");
    Relabeling rel;
    rel.finv = make_pl(core.v, core.x);
    rel.f = std::move(core);
    return rel;
}

Relabeling identity_relabeling() { return make_relabeling(make_pl({0.0}, {0.0})); }

Relabeling shift_relabeling(double delta) {
    return make_relabeling(make_pl({0.0}, {delta}));
}

Relabeling inverse(const Relabeling& f) {
    Relabeling g;
    g.f = f.finv;
    g.finv = f.f;
    return g;
}

Relabeling compose(const Relabeling& f, const Relabeling& g) {
    std::vector<double> knots = g.f.x;
    for (double xk : f.f.x) knots.push_back(g.inv(xk));
    std::sort(knots.begin(), knots.end());
    std::vector<double> kx, kv;
    for (double k : knots) {
        if (!kx.empty() && k - kx.back() <= 1e-12) continue;
        kx.push_back(k);
        kv.push_back(f(g(k)));
    }
    return make_relabeling(make_pl(kx, kv));
}

LagrangianState group_action(const LagrangianState& X, const Relabeling& rel) {
    std::vector<double> pull(X.xi.size());
    for (std::size_t i = 0; i < X.xi.size(); ++i) pull[i] = rel.inv(X.xi[i]);
    std::sort(pull.begin(), pull.end());
    std::vector<double> zeta = merge_grids(pull, rel.f.x);
    std::size_t n = zeta.size();
    std::vector<double> y(n), U(n), H(n), V(n);
    for (std::size_t i = 0; i < n; ++i) {
        double w = rel(zeta[i]);
        y[i] = X.eval_y(w);
        U[i] = X.eval_U(w);
        H[i] = X.eval_H(w);
        V[i] = X.eval_V(w);
    }
    std::vector<double> r(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double mid = 0.5 * (zeta[i] + zeta[i + 1]);
        double fslope = (rel(zeta[i + 1]) - rel(zeta[i])) / (zeta[i + 1] - zeta[i]);
        r[i] = X.r_at(rel(mid)) * fslope;
    }
    return make_state(std::move(zeta), std::move(y), std::move(U), std::move(H),
                      std::move(V), std::move(r));
}

Relabeling normalizer(const LagrangianState& X) {
    std::vector<double> v(X.xi.size());
    for (std::size_t i = 0; i < X.xi.size(); ++i) v[i] = X.y[i] + X.H[i];
    return make_relabeling(make_pl(X.xi, v));
}

LagrangianState pi_normalize(const LagrangianState& X) {
    LagrangianState P = group_action(X, inverse(normalizer(X)));
    for (std::size_t i = 0; i < P.xi.size(); ++i) P.H[i] = P.xi[i] - P.y[i];
    return make_state(P.xi, P.y, P.U, P.H, P.V, P.r);
}

}  // namespace hsx
