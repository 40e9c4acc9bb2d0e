#include "hsx/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace hsx {

using nlohmann::json;

namespace {

std::string f17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[noreturn]] void bad(const std::string& ptr, const std::string& what) {
    throw InputError(ptr + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& ptr) {
    auto it = j.find(key);
    if (it == j.end()) bad(ptr + "/" + key, "missing field");
    return *it;
}

std::vector<double> num_array(const json& j, const std::string& ptr) {
    if (!j.is_array()) bad(ptr, "expected an array of numbers");
    std::vector<double> v;
    for (const auto& e : j) {
        if (!e.is_number()) bad(ptr, "expected an array of numbers");
        v.push_back(e.get<double>());
    }
    return v;
}

PiecewiseLinear parse_pl(const json& j, const std::string& ptr) {
    if (!j.is_object()) bad(ptr, "expected an object");
    const json& knots = need(j, "knots", ptr);
    if (!knots.is_array()) bad(ptr + "/knots", "expected an array of [x, v] pairs");
    std::vector<double> x, v;
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const auto& p = knots[i];
        if (!p.is_array() || p.size() != 2)
            bad(ptr + "/knots/" + std::to_string(i), "expected an [x, v] pair");
        x.push_back(p[0].get<double>());
        v.push_back(p[1].get<double>());
    }
    try {
        if (x.empty()) {
            double c = j.value("left", j.value("right", 0.0));
            return make_const_pl(c);
        }
        return make_pl(std::move(x), std::move(v));
    } catch (const std::invalid_argument& e) {
        bad(ptr, e.what());
    }
}

json dump_pl(const PiecewiseLinear& f) {
    json knots = json::array();
    for (std::size_t i = 0; i < f.x.size(); ++i)
        knots.push_back(json::array({f.x[i], f.v[i]}));
    return {{"knots", knots}, {"left", f.left}, {"right", f.right}};
}

CumulativeMeasure parse_measure(const json& j, const std::string& ptr) {
    if (!j.is_object()) bad(ptr, "expected an object");
    PiecewiseLinear cdf = parse_pl(need(j, "cdf", ptr), ptr + "/cdf");
    std::vector<std::pair<double, double>> atoms;
    if (j.contains("atoms")) {
        const json& ja = j["atoms"];
        if (!ja.is_array()) bad(ptr + "/atoms", "expected an array of [x, w] pairs");
        for (std::size_t i = 0; i < ja.size(); ++i) {
            const auto& p = ja[i];
            if (!p.is_array() || p.size() != 2)
                bad(ptr + "/atoms/" + std::to_string(i), "expected an [x, w] pair");
            atoms.emplace_back(p[0].get<double>(), p[1].get<double>());
        }
    }
    try {
        return make_measure(std::move(cdf), std::move(atoms));
    } catch (const std::invalid_argument& e) {
        bad(ptr, e.what());
    }
}

json dump_measure(const CumulativeMeasure& m) {
    json atoms = json::array();
    for (const auto& [p, w] : m.atoms) atoms.push_back(json::array({p, w}));
    return {{"cdf", dump_pl(m.cdf)}, {"atoms", atoms}};
}

json dump_lagrangian(const LagrangianState& X) {
    return {{"xi", X.xi}, {"y", X.y},         {"U", X.U},
            {"H", X.H},   {"r", X.r},         {"V", X.V},
            {"h_inf", X.h_inf}, {"v_inf", X.v_inf}};
}

json dump_eulerian(const EulerianState& E) {
    return {{"u", dump_pl(E.u)},
            {"rho_density", {{"x", E.rho.x}, {"val", E.rho.val}}},
            {"nu", dump_measure(E.nu)},
            {"mu", dump_measure(E.mu)}};
}

EulerianState parse_eulerian(const json& j, const std::string& ptr) {
    EulerianState E;
    E.u = parse_pl(need(j, "u", ptr), ptr + "/u");
    if (j.contains("rho_density")) {
        const json& jr = j["rho_density"];
        StepDensity rho;
        rho.x = num_array(need(jr, "x", ptr + "/rho_density"), ptr + "/rho_density/x");
        rho.val =
            num_array(need(jr, "val", ptr + "/rho_density"), ptr + "/rho_density/val");
        if (!rho.x.empty() && rho.x.size() != rho.val.size() + 1)
            bad(ptr + "/rho_density", "need one more breakpoint than cell value");
        E.rho = std::move(rho);
    }
    E.nu = parse_measure(need(j, "nu", ptr), ptr + "/nu");
    E.mu = parse_measure(need(j, "mu", ptr), ptr + "/mu");
    return E;
}

LagrangianState parse_lagrangian(const json& j, const std::string& ptr) {
    auto arr = [&](const char* k) { return num_array(need(j, k, ptr), ptr + "/" + k); };
    try {
        return make_state(arr("xi"), arr("y"), arr("U"), arr("H"), arr("V"), arr("r"));
    } catch (const std::invalid_argument& e) {
        bad(ptr, e.what());
    }
}

AlphaFunction parse_alpha(const json& j, const std::string& ptr) {
    if (!j.is_object()) bad(ptr, "expected an object");
    try {
        if (j.contains("constant")) return alpha_constant(j["constant"].get<double>());
        if (j.contains("profile"))
            return make_alpha(parse_pl(j["profile"], ptr + "/profile"));
        if (j.contains("smooth")) {
            std::string name = j["smooth"].get<std::string>();
            std::vector<double> grid =
                num_array(need(j, "grid", ptr), ptr + "/grid");
            if (name == "x2_over_1px2")
                return alpha_sample(
                    [](double x) { return x * x / (x * x + 1.0); }, grid);
            bad(ptr + "/smooth", "unknown smooth coefficient '" + name + "'");
        }
    } catch (const std::invalid_argument& e) {
        bad(ptr, e.what());
    }
    bad(ptr, "need one of: constant, profile, smooth");
}

bool wants(const Scenario& s, const char* what) {
    return std::find(s.outputs.begin(), s.outputs.end(), what) != s.outputs.end();
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) bad("", "scenario must be a JSON object");
    Scenario s;
    s.name = need(j, "name", "").get<std::string>();
    const json& init = need(j, "initial", "");
    if (init.contains("eulerian"))
        s.eulerian0 = parse_eulerian(init["eulerian"], "/initial/eulerian");
    else if (init.contains("lagrangian"))
        s.lagrangian0 = parse_lagrangian(init["lagrangian"], "/initial/lagrangian");
    else
        bad("/initial", "need 'eulerian' or 'lagrangian'");
    s.alpha = parse_alpha(need(j, "alpha", ""), "/alpha");
    s.times = num_array(need(j, "times", ""), "/times");
    for (std::size_t i = 0; i < s.times.size(); ++i) {
        if (s.times[i] < 0.0) bad("/times/" + std::to_string(i), "must be nonnegative");
        if (i > 0 && s.times[i] < s.times[i - 1])
            bad("/times/" + std::to_string(i), "must be sorted");
    }
    std::string mode = j.value("mode", std::string("event"));
    if (mode == "event")
        s.mode = RunMode::event;
    else if (mode == "picard")
        s.mode = RunMode::picard;
    else if (mode == "both")
        s.mode = RunMode::both;
    else
        bad("/mode", "must be one of event, picard, both");
    if (j.contains("outputs"))
        for (const auto& o : j["outputs"]) s.outputs.push_back(o.get<std::string>());
    else
        s.outputs = {"states", "eventlog"};
    for (const auto& o : s.outputs)
        if (o != "states" && o != "eventlog" && o != "metrics" && o != "residuals" &&
            o != "roundtrip")
            bad("/outputs", "unknown artifact '" + o + "'");
    if (j.contains("picard")) {
        const json& jp = j["picard"];
        s.picard.tol = jp.value("tol", s.picard.tol);
        s.picard.max_iter = jp.value("max_iter", s.picard.max_iter);
        s.picard.max_window = jp.value("max_window", s.picard.max_window);
    } else if (s.mode != RunMode::event) {
        bad("/picard", "mode '" + mode + "' requires an iteration config");
    }
    s.tol = j.value("tol", s.tol);
    s.allow_invalid_alpha = j.value("allow_invalid_alpha", false);
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

RunResult run_scenario(const Scenario& s) {
    RunResult res;
    res.scenario = s;
    bool valid_alpha = s.alpha.cls != AlphaClass::invalid;
    if (!valid_alpha && !s.allow_invalid_alpha)
        throw InputError(
            "alpha attains 1 without being identically 1; "
            "set allow_invalid_alpha to run anyway");
    if (s.eulerian0) {
        if (!check_D0(*s.eulerian0))
            throw InvariantError("initial Eulerian data must satisfy nu = mu");
        try {
            res.X0 = L_map(*s.eulerian0, valid_alpha ? &s.alpha : nullptr);
        } catch (const std::invalid_argument& e) {
            throw InvariantError(e.what());
        }
    } else if (s.lagrangian0) {
        res.X0 = *s.lagrangian0;
        if (valid_alpha) {
            CheckReport rep = check_F_alpha(res.X0, s.alpha);
            if (!rep.pass)
                throw InvariantError("initial Lagrangian data inadmissible: " +
                                     rep.first);
        }
    } else {
        throw InputError("/initial: missing");
    }

    double tmax = s.times.empty() ? 0.0 : s.times.back();
    try {
        res.traj = evolve_trajectory(res.X0, s.alpha, tmax);
        for (double t : s.times) {
            LagrangianState Xt = res.traj.at(t);
            res.eulerian.push_back(M_map(Xt));
            res.lagrangian.push_back(std::move(Xt));
        }
        if (s.mode != RunMode::event) {
            auto [Xp, rec] = evolve_picard(res.X0, s.alpha, tmax, s.picard);
            (void)Xp;
            res.picard = std::move(rec);
            for (std::size_t k = 0; k < s.times.size(); ++k) {
                auto [Xpt, r2] = evolve_picard(res.X0, s.alpha, s.times[k], s.picard);
                (void)r2;
                const LagrangianState& Xe = res.lagrangian[k];
                double d = 0.0;
                for (std::size_t i = 0; i < Xe.xi.size(); ++i) {
                    d = std::max(d, std::abs(Xpt.y[i] - Xe.y[i]));
                    d = std::max(d, std::abs(Xpt.U[i] - Xe.U[i]));
                    d = std::max(d, std::abs(Xpt.H[i] - Xe.H[i]));
                    d = std::max(d, std::abs(Xpt.V[i] - Xe.V[i]));
                }
                res.picard_vs_event.push_back(d);
            }
        }
        if (wants(s, "residuals") && tmax > 0.0) {
            double ylo = res.X0.y.front(), yhi = res.X0.y.back();
            double umax = 0.0;
            for (double u : res.X0.U) umax = std::max(umax, std::abs(u));
            double rx = 0.5 * (yhi - ylo) + 1.0 + tmax * (umax + res.X0.h_inf);
            BumpTestFunction phi{0.5 * (ylo + yhi), rx, 0.5 * tmax, 0.5 * tmax};
            res.residuals.push_back(weak_residual(res.traj, phi, 60, 60));
        }
        if (wants(s, "roundtrip") && !res.lagrangian.empty()) {
            const LagrangianState& Xt = res.lagrangian.back();
            LagrangianState P = pi_normalize(Xt);
            LagrangianState Lm = L_map(M_map(Xt));
            std::vector<double> grid = merge_grids(P.xi, Lm.xi);
            RoundTripDiagnostic d;
            d.computed = true;
            for (double q : grid) {
                d.sup_y = std::max(d.sup_y, std::abs(P.eval_y(q) - Lm.eval_y(q)));
                d.sup_U = std::max(d.sup_U, std::abs(P.eval_U(q) - Lm.eval_U(q)));
                d.sup_H = std::max(d.sup_H, std::abs(P.eval_H(q) - Lm.eval_H(q)));
                d.sup_V = std::max(d.sup_V, std::abs(P.eval_V(q) - Lm.eval_V(q)));
            }
            res.roundtrip = d;
        }
    } catch (const std::invalid_argument& e) {
        throw InvariantError(e.what());
    } catch (const std::runtime_error& e) {
        throw InvariantError(e.what());
    }

    if (valid_alpha && !res.eulerian.empty()) {
        EulerianState E0 = M_map(res.X0);
        double nu0 = measure_total(E0.nu);
        double prev_mu = measure_total(E0.mu);
        for (std::size_t k = 0; k < res.eulerian.size(); ++k) {
            double nu = measure_total(res.eulerian[k].nu);
            double mu = measure_total(res.eulerian[k].mu);
            if (std::abs(nu - nu0) > 1e-8)
                throw InvariantError("total energy of nu drifted at t = " +
                                     f17(s.times[k]));
            if (mu > prev_mu + 1e-8)
                throw InvariantError("total energy of mu increased at t = " +
                                     f17(s.times[k]));
            prev_mu = mu;
        }
    }
    return res;
}

namespace {

std::vector<double> eulerian_sample_points(const EulerianState& E) {
    std::vector<double> xs = E.u.x;
    xs.insert(xs.end(), E.rho.x.begin(), E.rho.x.end());
    xs.insert(xs.end(), E.nu.cdf.x.begin(), E.nu.cdf.x.end());
    xs.insert(xs.end(), E.mu.cdf.x.begin(), E.mu.cdf.x.end());
    for (const auto& [p, w] : E.nu.atoms) {
        (void)w;
        xs.push_back(p);
    }
    if (xs.empty()) xs.push_back(0.0);
    std::sort(xs.begin(), xs.end());
    std::vector<double> out{xs.front() - 1.0};
    for (double p : xs)
        if (p - out.back() > 1e-12) out.push_back(p);
    out.push_back(out.back() + 1.0);
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write artifact: " + path);
    out << text;
}

}  // namespace

void write_artifacts(const RunResult& res, const std::string& outdir) {
    const Scenario& s = res.scenario;
    std::filesystem::create_directories(outdir);
    auto path = [&](const std::string& suffix) {
        return outdir + "/" + s.name + "_" + suffix;
    };

    if (wants(s, "states")) {
        std::ostringstream lag;
        lag << "t,xi,y,U,H,V,r\n";
        for (std::size_t k = 0; k < s.times.size(); ++k) {
            const LagrangianState& X = res.lagrangian[k];
            for (std::size_t i = 0; i < X.xi.size(); ++i) {
                double r = i < X.cells() ? X.r[i] : 0.0;
                lag << f17(s.times[k]) << ',' << f17(X.xi[i]) << ',' << f17(X.y[i])
                    << ',' << f17(X.U[i]) << ',' << f17(X.H[i]) << ',' << f17(X.V[i])
                    << ',' << f17(r) << '\n';
            }
        }
        write_text(path("lagrangian.csv"), lag.str());

        std::ostringstream eul;
        eul << "t,x,u,rho,F_mu,F_nu\n";
        for (std::size_t k = 0; k < s.times.size(); ++k) {
            const EulerianState& E = res.eulerian[k];
            for (double x : eulerian_sample_points(E))
                eul << f17(s.times[k]) << ',' << f17(x) << ',' << f17(E.u(x)) << ','
                    << f17(E.rho(x)) << ',' << f17(measure_F_closed(E.mu, x)) << ','
                    << f17(measure_F_closed(E.nu, x)) << '\n';
        }
        write_text(path("eulerian.csv"), eul.str());

        json states = json::array();
        for (std::size_t k = 0; k < s.times.size(); ++k)
            states.push_back({{"t", s.times[k]},
                              {"lagrangian", dump_lagrangian(res.lagrangian[k])},
                              {"eulerian", dump_eulerian(res.eulerian[k])}});
        write_text(path("states.json"), states.dump(2) + "\n");
    }

    if (wants(s, "eventlog")) {
        json events = json::array();
        for (const EventRecord& ev : res.traj.log.events)
            events.push_back({{"time", ev.time},
                              {"cells", ev.cells},
                              {"positions", ev.positions},
                              {"alphas", ev.alphas},
                              {"energy_removed", ev.energy_removed}});
        json vtraj = json::array();
        for (const auto& [t, v] : res.traj.log.v_inf_traj)
            vtraj.push_back(json::array({t, v}));
        json log = {{"events", events}, {"v_inf", vtraj}};
        write_text(path("events.json"), log.dump(2) + "\n");
    }

    if (wants(s, "metrics")) {
        json m = json::object();
        if (res.picard) {
            m["picard"] = {{"n", res.picard->n},
                           {"distinct", res.picard->distinct},
                           {"converged", res.picard->converged},
                           {"sup_deltas", res.picard->sup_deltas},
                           {"beta_history", res.picard->beta_history}};
            m["picard_vs_event"] = res.picard_vs_event;
        }
        write_text(path("metrics.json"), m.dump(2) + "\n");
    }

    if (wants(s, "residuals")) {
        json r = json::array();
        for (const WeakResidual& w : res.residuals)
            r.push_back({{"r_u", w.r_u}, {"r_rho", w.r_rho}, {"r_mu", w.r_mu}});
        write_text(path("residuals.json"), r.dump(2) + "\n");
    }

    if (wants(s, "roundtrip") && res.roundtrip.computed) {
        json d = {{"sup_y", res.roundtrip.sup_y},
                  {"sup_U", res.roundtrip.sup_U},
                  {"sup_H", res.roundtrip.sup_H},
                  {"sup_V", res.roundtrip.sup_V}};
        write_text(path("roundtrip.json"), d.dump(2) + "\n");
    }
}

void export_plot_data(const RunResult& res, const std::string& kind,
                      const std::string& path) {
    std::ostringstream out;
    const Scenario& s = res.scenario;
    if (kind == "profile") {
        out << "t,x,u,rho\n";
        for (std::size_t k = 0; k < s.times.size(); ++k) {
            const EulerianState& E = res.eulerian[k];
            for (double x : eulerian_sample_points(E))
                out << f17(s.times[k]) << ',' << f17(x) << ',' << f17(E.u(x)) << ','
                    << f17(E.rho(x)) << '\n';
        }
    } else if (kind == "cdf") {
        out << "t,x,F_nu,F_mu\n";
        for (std::size_t k = 0; k < s.times.size(); ++k) {
            const EulerianState& E = res.eulerian[k];
            for (double x : eulerian_sample_points(E))
                out << f17(s.times[k]) << ',' << f17(x) << ','
                    << f17(measure_F_closed(E.nu, x)) << ','
                    << f17(measure_F_closed(E.mu, x)) << '\n';
        }
    } else if (kind == "characteristics") {
        out << "xi,t,y\n";
        double T = res.traj.horizon;
        std::vector<double> ts{0.0};
        for (int i = 1; i <= 32; ++i) ts.push_back(T * double(i) / 32.0);
        for (const EventRecord& ev : res.traj.log.events)
            if (ev.time > 0.0 && ev.time < T) ts.push_back(ev.time);
        std::sort(ts.begin(), ts.end());
        if (T <= 0.0) ts = {};
        for (double t : ts) {
            LagrangianState Xt = res.traj.at(t);
            for (std::size_t i = 0; i < Xt.xi.size(); ++i)
                out << f17(Xt.xi[i]) << ',' << f17(t) << ',' << f17(Xt.y[i]) << '\n';
        }
    } else if (kind == "metric_growth") {
        out << "t,dtilde,bound\n";
        for (const LipReportEntry& e : res.metric_growth)
            out << f17(e.t) << ',' << f17(e.dtilde) << ',' << f17(e.bound) << '\n';
    } else {
        throw InputError("export_plot_data: unknown kind '" + kind + "'");
    }
    write_text(path, out.str());
}

namespace {

Scenario base_scenario(std::string name) {
    Scenario s;
    s.name = std::move(name);
    s.outputs = {"states", "eventlog"};
    return s;
}

}  // namespace

Scenario builtin_example(const std::string& name) {
    if (name == "a1") {
        Scenario s = base_scenario("a1");
        EulerianState E;
        E.u = make_pl({-1.0, -0.5, 0.0, 0.5, 1.0}, {0.0, 0.5, 1.0, 0.5, 0.0});
        E.nu = make_measure(make_pl({-1.0, -0.5, 0.0, 0.5, 1.0},
                                    {0.0, 0.5, 1.0, 1.5, 2.0}),
                            {});
        E.mu = E.nu;
        s.eulerian0 = std::move(E);
        std::vector<double> grid;
        for (int i = -8; i <= 12; ++i) grid.push_back(0.5 * i);
        s.alpha = alpha_sample([](double x) { return x * x / (x * x + 1.0); }, grid);
        s.times = {0.0, 1.0, 2.0, 4.0};
        return s;
    }
    if (name == "a2") {
        Scenario s = base_scenario("a2");
        double eps = 0.1;
        s.lagrangian0 = make_state({-1.0, 1.0, 1.0 + 2.0 * eps}, {-1.0, 0.0, eps},
                                   {0.0, 1.0, 1.0 - eps}, {0.0, 1.0, 1.0 + eps},
                                   {0.0, 1.0, 1.0 + eps}, {0.0, 0.0});
        s.alpha = alpha_constant(0.5);
        s.times = {1.0, 2.0, 3.0};
        return s;
    }
    if (name == "a3" || name == "a4") {
        Scenario s = base_scenario(name);
        s.lagrangian0 = make_state({-1.0, 1.0, 3.5}, {-1.0, 0.0, 2.0},
                                   {1.0, 0.0, -1.0}, {0.0, 1.0, 1.5},
                                   {0.0, 1.0, 1.5}, {0.0, 0.0});
        if (name == "a3") {
            s.alpha = make_alpha(make_pl({0.0, 3.0}, {0.0, 0.75}));
            s.times = {1.0, 2.0, 3.0, 4.0, 5.0};
            s.mode = RunMode::both;
            s.outputs = {"states", "eventlog", "metrics"};
        } else {
            s.alpha = make_alpha(make_pl({0.0, 0.25, 0.5}, {0.0, 1.0, 0.5}));
            s.times = {4.0};
            s.allow_invalid_alpha = true;
            s.outputs = {"states", "eventlog", "roundtrip"};
        }
        return s;
    }
    if (name == "intro") {
        Scenario s = base_scenario("intro");
        EulerianState E;
        E.u = make_pl({-1.0, 0.0, 1.0}, {1.0, 0.0, 0.0});
        StepDensity rho;
        rho.x = {0.0, 1.0};
        rho.val = {1.0};
        E.rho = std::move(rho);
        E.nu = make_measure(make_pl({-1.0, 1.0}, {0.0, 2.0}), {});
        E.mu = E.nu;
        s.eulerian0 = std::move(E);
        s.alpha = alpha_constant(0.5);
        s.times = {0.5, 1.0, 1.9};
        s.outputs = {"states", "eventlog", "residuals"};
        return s;
    }
    if (name == "zero") {
        Scenario s = base_scenario("zero");
        s.eulerian0 = zero_eulerian();
        s.alpha = alpha_constant(0.0);
        s.times = {0.0, 1.0};
        return s;
    }
    throw InputError("unknown example '" + name +
                     "' (expected a1, a2, a3, a4, intro, zero)");
}

int cli_run(const std::string& scenario_file, const std::string& outdir,
            std::optional<RunMode> mode_override, std::optional<double> tol_override,
            bool allow_invalid_alpha) {
    try {
        Scenario s = load_scenario(scenario_file);
        if (mode_override) s.mode = *mode_override;
        if (tol_override) s.tol = *tol_override;
        s.allow_invalid_alpha = s.allow_invalid_alpha || allow_invalid_alpha;
        RunResult res = run_scenario(s);
        write_artifacts(res, outdir);
        if (res.roundtrip.computed)
            std::cout << "roundtrip |Pi - L o M| sup: y " << f17(res.roundtrip.sup_y)
                      << ", U " << f17(res.roundtrip.sup_U) << ", H "
                      << f17(res.roundtrip.sup_H) << ", V " << f17(res.roundtrip.sup_V)
                      << "\n";
        return 0;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

std::string resolve_outdir(const std::string& flag_value) {
    const char* env = std::getenv("HSX2_OUT");
    if (env && *env) return env;
    if (!flag_value.empty()) return flag_value;
    return ".";
}

}  // namespace hsx
