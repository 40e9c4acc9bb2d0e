#include "hsx/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsx {

namespace {
constexpr double kFlatTol = 1e-12;
constexpr double kAtomMergeTol = 1e-12;
}  // namespace

CumulativeMeasure make_measure(PiecewiseLinear cdf,
                               std::vector<std::pair<double, double>> atoms) {
    if (cdf.left != 0.0)
        throw std::invalid_argument("make_measure: CDF must vanish at -infinity");
    for (std::size_t i = 0; i < cdf.cells(); ++i)
        if (cdf.v[i + 1] < cdf.v[i] - 1e-14)
            throw std::invalid_argument("make_measure: CDF not nondecreasing");
    for (std::size_t i = 1; i < atoms.size(); ++i)
        if (!(atoms[i].first > atoms[i - 1].first))
            throw std::invalid_argument("make_measure: atom positions not increasing");
    double am = 0.0;
    for (auto& [p, w] : atoms) {
        if (!std::isfinite(p) || !(w > 0.0))
            throw std::invalid_argument("make_measure: atom weights must be strictly positive");
        am += w;
    }
    CumulativeMeasure m;
    m.cdf = std::move(cdf);
    m.atoms = std::move(atoms);
    m.total = m.cdf.right + am;
    return m;
}

CumulativeMeasure zero_measure() { return make_measure(make_const_pl(0.0), {}); }

double measure_total(const CumulativeMeasure& m) { return m.total; }

double measure_F(const CumulativeMeasure& m, double x) {
    double s = m.cdf(x);
    for (auto& [p, w] : m.atoms) {
        if (p < x) s += w;
        else break;
    }
    return s;
}

double measure_F_closed(const CumulativeMeasure& m, double x) {
    double s = m.cdf(x);
    for (auto& [p, w] : m.atoms) {
        if (p <= x) s += w;
        else break;
    }
    return s;
}

double measure_open_interval(const CumulativeMeasure& m, double a, double b) {
    if (!(b > a)) return 0.0;
    double s = m.cdf(b) - m.cdf(a);
    for (auto& [p, w] : m.atoms)
        if (p > a && p < b) s += w;
    return s;
}

double measure_atom_at(const CumulativeMeasure& m, double p, double tol) {
    for (auto& [q, w] : m.atoms)
        if (std::abs(q - p) <= tol) return w;
    return 0.0;
}

CumulativeMeasure pushforward(const std::vector<double>& xi,
                              const std::vector<double>& cell_density,
                              const std::vector<double>& y_nodes) {
    if (xi.size() != y_nodes.size() || xi.size() != cell_density.size() + 1)
        throw std::invalid_argument("pushforward: array size mismatch");
    for (std::size_t i = 0; i + 1 < y_nodes.size(); ++i)
        if (y_nodes[i + 1] < y_nodes[i] - kFlatTol)
            throw std::invalid_argument("pushforward: map not nondecreasing");
    for (double w : cell_density)
        if (w < -1e-12) throw std::invalid_argument("pushforward: negative density");

    std::vector<double> kx, kv;
    std::vector<std::pair<double, double>> atoms;
    if (!y_nodes.empty()) {
        kx.push_back(y_nodes.front());
        kv.push_back(0.0);
    }
    double cum = 0.0;
    for (std::size_t i = 0; i < cell_density.size(); ++i) {
        double mass = cell_density[i] * (xi[i + 1] - xi[i]);
        double dy = y_nodes[i + 1] - y_nodes[i];
        if (dy <= kFlatTol) {
            if (mass > 0.0) {
                double pos = y_nodes[i];
                if (!atoms.empty() && pos - atoms.back().first <= kAtomMergeTol)
                    atoms.back().second += mass;
                else
                    atoms.emplace_back(pos, mass);
            }
        } else {
            cum += mass;
            if (y_nodes[i + 1] - kx.back() <= kFlatTol)
                kv.back() = cum;  // degenerate-width AC cell; fold into last knot
            else {
                kx.push_back(y_nodes[i + 1]);
                kv.push_back(cum);
            }
        }
    }
    PiecewiseLinear cdf = kx.size() >= 2 ? make_pl(kx, kv) : make_const_pl(0.0);
    if (kx.size() < 2) cdf.left = cdf.right = cum;
    cdf.left = 0.0;
    if (!cdf.v.empty()) cdf.left = cdf.v.front();
    return make_measure(std::move(cdf), std::move(atoms));
}

bool measures_equal(const CumulativeMeasure& a, const CumulativeMeasure& b,
                    double tol) {
    if (std::abs(a.total - b.total) > tol) return false;
    std::vector<double> grid = merge_grids(a.cdf.x, b.cdf.x);
    for (double x : grid)
        if (std::abs(a.cdf(x) - b.cdf(x)) > tol) return false;
    if (a.atoms.size() != b.atoms.size()) return false;
    for (std::size_t i = 0; i < a.atoms.size(); ++i) {
        if (std::abs(a.atoms[i].first - b.atoms[i].first) > tol) return false;
        if (std::abs(a.atoms[i].second - b.atoms[i].second) > tol) return false;
    }
    return true;
}

bool measure_leq(const CumulativeMeasure& a, const CumulativeMeasure& b,
                 double tol) {
    std::vector<double> grid = merge_grids(a.cdf.x, b.cdf.x);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double ma = a.cdf(grid[i + 1]) - a.cdf(grid[i]);
        double mb = b.cdf(grid[i + 1]) - b.cdf(grid[i]);
        if (ma > mb + tol) return false;
    }
    for (auto& [p, w] : a.atoms)
        if (w > measure_atom_at(b, p) + tol) return false;
    return true;
}

}  // namespace hsx
