#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "golden.hpp"
#include "hsx/stability.hpp"

using hsx::LagrangianState;
using hsx::MetricContext;

namespace {

// The perturbed pair: X breaks at t = 2, Xbar never does.
LagrangianState a2_X0() {
    return hsx::make_state({-1.0, 1.0, 1.2}, {-1.0, 0.0, 0.1}, {0.0, 1.0, 0.9},
                           {0.0, 1.0, 1.1}, {0.0, 1.0, 1.1}, {0.0, 0.0});
}

LagrangianState a2_Xbar0() {
    return hsx::make_state({-1.0, 1.2}, {-1.0, 0.1}, {-0.2, 0.9}, {0.0, 1.1},
                           {0.0, 1.1}, {0.0});
}

// Random normalized admissible data (y + H = id, V = H) for property runs.
LagrangianState random_normalized(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> ds(0.1, 0.9), dw(0.3, 1.0);
    std::uniform_real_distribution<double> dtheta(0.2, 1.0);
    std::bernoulli_distribution neg(0.5), pure(0.6);
    std::vector<double> xi(n + 1), y(n + 1), U(n + 1), H(n + 1), r(n);
    xi[0] = -1.0;
    y[0] = -1.0;
    U[0] = 0.2;
    H[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        double w = dw(rng), s = ds(rng), h = 1.0 - s;
        double theta = pure(rng) ? 1.0 : dtheta(rng);
        double uxi = std::sqrt(s * h * theta) * (neg(rng) ? -1.0 : 1.0);
        r[i] = (theta == 1.0) ? 0.0 : std::sqrt(s * h * (1.0 - theta));
        xi[i + 1] = xi[i] + w;
        y[i + 1] = y[i] + s * w;
        U[i + 1] = U[i] + uxi * w;
        H[i + 1] = H[i] + h * w;
    }
    return hsx::make_state(xi, y, U, H, H, r);
}

}  // namespace

TEST_CASE("compute_g without dissipating cells is the slope sum") {
    std::mt19937 rng(11);
    LagrangianState X = random_normalized(rng, 6);
    // Force all slopes nonnegative so no cell dissipates.
    std::vector<double> U = X.U;
    for (std::size_t i = 1; i < U.size(); ++i)
        U[i] = U[i - 1] + std::abs(U[i] - U[i - 1]);
    std::vector<double> r(X.cells(), 0.0), V = X.H;
    // Rebuild V from the algebraic identity so the state stays admissible.
    std::vector<double> y = X.y;
    LagrangianState P = hsx::make_state(X.xi, y, U, X.H, V, r);
    hsx::AlphaFunction a = hsx::alpha_constant(0.4);
    hsx::StabilityProfile g = hsx::compute_g(P, a);
    for (std::size_t i = 0; i < P.cells(); ++i) {
        CHECK(g.g[i] == doctest::Approx(P.y_xi(i) + P.V_xi(i)).epsilon(1e-14));
        CHECK(g.g2[i] == 0.0);
        CHECK(g.g3[i] == 0.0);
    }
}

TEST_CASE("g-difference of the perturbed pair has its printed norm") {
    const double eps = 0.1, al = 0.5;
    hsx::AlphaFunction a = hsx::alpha_constant(al);
    MetricContext ctx{2.0, 0.0};
    for (double t : {0.5, 1.0, 1.5}) {
        LagrangianState Xt = hsx::evolve_event_driven(a2_X0(), a, t).first;
        LagrangianState Bt = hsx::evolve_event_driven(a2_Xbar0(), a, t).first;
        hsx::DtildeTerms T = hsx::dtilde_terms(Xt, Bt, a, ctx);
        CHECK(T.l2_g ==
              doctest::Approx(std::sqrt(2.0 * eps) * (t + al / 2.0)).epsilon(1e-12));
        CHECK(T.l2_g2 == 0.0);  // constant coefficient: zero Lipschitz constant
        CHECK(T.l2_g3 == 0.0);
    }
}

TEST_CASE("g is continuous across an event while V_xi jumps") {
    hsx::AlphaFunction a = hsx::alpha_constant(0.5);
    LagrangianState before = hsx::evolve_event_driven(a2_X0(), a, 2.0 - 1e-9).first;
    LagrangianState after = hsx::evolve_event_driven(a2_X0(), a, 2.0 + 1e-9).first;
    hsx::StabilityProfile gb = hsx::compute_g(before, a);
    hsx::StabilityProfile ga = hsx::compute_g(after, a);
    for (std::size_t i = 0; i < gb.g.size(); ++i) {
        CHECK(gb.g[i] == doctest::Approx(ga.g[i]).epsilon(1e-8));
    }
    // The raw energy-density slope is not continuous: it drops by alpha H_xi.
    CHECK(std::abs(before.V_xi(1) - after.V_xi(1)) > 0.2);
}

TEST_CASE("dtilde basics") {
    hsx::AlphaFunction a = hsx::alpha_constant(0.5);
    MetricContext ctx{2.0, 0.0};
    LagrangianState X = a2_X0();
    CHECK(hsx::dtilde(X, X, a, ctx) == 0.0);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        LagrangianState A = random_normalized(rng, 5);
        LagrangianState B = random_normalized(rng, 7);
        double ab = hsx::dtilde(A, B, a, ctx);
        double ba = hsx::dtilde(B, A, a, ctx);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
        CHECK(ab >= 0.0);
    }
}

TEST_CASE("dtilde of the perturbed pair at t = 1 hits the frozen value") {
    hsx::AlphaFunction a = hsx::alpha_constant(0.5);
    MetricContext ctx{2.0, 0.0};
    LagrangianState Xt = hsx::evolve_event_driven(a2_X0(), a, 1.0).first;
    LagrangianState Bt = hsx::evolve_event_driven(a2_Xbar0(), a, 1.0).first;
    // 0.4 + sqrt(0.2) * 3.25, frozen before the solver was written.
    CHECK(hsx::dtilde(Xt, Bt, a, ctx) ==
          doctest::Approx(1.8534441853748633).epsilon(1e-12));
    CHECK(hsx::dtilde(Xt, Bt, a, ctx) ==
          doctest::Approx(golden::a2_norms(0.1, 0.5, 1.0).dtilde).epsilon(1e-12));
}

TEST_CASE("exact-equality laws for the time-constant components") {
    hsx::AlphaFunction a = hsx::alpha_constant(0.5);
    MetricContext ctx{2.0, 0.0};
    hsx::DtildeTerms T0 = hsx::dtilde_terms(a2_X0(), a2_Xbar0(), a, ctx);
    for (double t : {1.0, 2.5, 4.0}) {
        LagrangianState Xt = hsx::evolve_event_driven(a2_X0(), a, t).first;
        LagrangianState Bt = hsx::evolve_event_driven(a2_Xbar0(), a, t).first;
        hsx::DtildeTerms T = hsx::dtilde_terms(Xt, Bt, a, ctx);
        CHECK(T.l2_Hxi == doctest::Approx(T0.l2_Hxi).epsilon(1e-12));
        CHECK(T.l1_Hxi == doctest::Approx(T0.l1_Hxi).epsilon(1e-12));
        CHECK(T.l2_r == doctest::Approx(T0.l2_r).epsilon(1e-12));
    }
}

TEST_CASE("J_upper") {
    hsx::AlphaFunction a = hsx::alpha_constant(0.3);
    MetricContext ctx{2.0, 0.0};
    LagrangianState X = a2_X0();
    LagrangianState B = a2_Xbar0();
    std::vector<hsx::Relabeling> cand = hsx::default_candidates(X, B);
    CHECK(hsx::J_upper(X, X, a, ctx, hsx::default_candidates(X, X)) <= 1e-14);
    CHECK(hsx::J_upper(X, B, a, ctx, cand) <= 2.0 * hsx::dtilde(X, B, a, ctx) + 1e-14);

    // A relabeled copy is recovered exactly once f and its inverse are offered.
    hsx::Relabeling f =
        hsx::make_relabeling(hsx::make_pl({-2.0, 0.0, 2.0}, {-2.0, 0.3, 2.0}));
    LagrangianState Xf = hsx::group_action(X, f);
    std::vector<hsx::Relabeling> cand2 = {hsx::identity_relabeling(), f,
                                          hsx::inverse(f)};
    CHECK(hsx::J_upper(X, Xf, a, ctx, cand2) <= 1e-10);
}

TEST_CASE("dM_upper") {
    hsx::AlphaFunction a = hsx::alpha_constant(0.5);
    MetricContext ctx{1.2, 0.0};
    LagrangianState X = a2_X0(), B = a2_Xbar0();
    CHECK(hsx::dM_upper(1.0, X, X, a, ctx) <= 1e-12);
    CHECK(hsx::dM_upper(0.0, X, B, a, ctx) ==
          doctest::Approx(hsx::J_upper(X, B, a, ctx, hsx::default_candidates(X, B)))
              .epsilon(1e-12));

    // Lower-bound sanity: the sup distances at time t are at most twice the
    // (over-estimated) relabeling-invariant distance.
    for (double t : {0.5, 1.0, 3.0}) {
        LagrangianState Xt = hsx::pi_normalize(hsx::evolve_event_driven(X, a, t).first);
        LagrangianState Bt = hsx::pi_normalize(hsx::evolve_event_driven(B, a, t).first);
        double sup = 0.0;
        for (double q : hsx::merge_grids(Xt.xi, Bt.xi)) {
            sup = std::max(sup, std::abs(Xt.eval_y(q) - Bt.eval_y(q)) +
                                    std::abs(Xt.eval_U(q) - Bt.eval_U(q)) +
                                    std::abs(Xt.eval_H(q) - Bt.eval_H(q)));
        }
        CHECK(sup <= 2.0 * hsx::dM_upper(t, X, B, a, ctx) + 1e-10);
    }
}

TEST_CASE("lipschitz_constants") {
    hsx::LipConstants c0 = hsx::lipschitz_constants({1.0, 0.0}, 0.0);
    CHECK(c0.Ctilde == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(c0.Cbar == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(c0.C == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(c0.Chat == doctest::Approx(4.0).epsilon(1e-15));

    hsx::LipConstants cz = hsx::lipschitz_constants({3.7, 0.6}, 0.0);
    CHECK(cz.C == doctest::Approx(cz.Ctilde).epsilon(1e-15));
    CHECK(cz.Chat == doctest::Approx(cz.Ctilde).epsilon(1e-15));

    // Frozen hand evaluation for M = 4, Lipschitz constant 1/4, t = 2.
    hsx::LipConstants c2 = hsx::lipschitz_constants({4.0, 0.25}, 2.0);
    CHECK(c2.Ctilde == doctest::Approx(32.0).epsilon(1e-13));
    CHECK(c2.Cbar == doctest::Approx(6.5).epsilon(1e-13));
    CHECK(c2.C == doctest::Approx(32.0 * std::exp(13.0)).epsilon(1e-12));
    CHECK(c2.Chat == doctest::Approx(std::exp(1.0) * 32.0 * std::exp(13.0)).epsilon(1e-12));
}

TEST_CASE("lipschitz_verify on the perturbed pair and random data") {
    hsx::AlphaFunction a = hsx::alpha_constant(0.5);
    MetricContext ctx{1.1, 0.0};
    hsx::LipReport rep = hsx::lipschitz_verify(a2_X0(), a2_Xbar0(), a, ctx,
                                               {0.5, 1.0, 1.9, 2.1, 3.0});
    CHECK(rep.pass);
    CHECK(rep.max_ratio <= 1.0);

    hsx::LipReport same = hsx::lipschitz_verify(a2_X0(), a2_X0(), a, ctx, {1.0, 2.5});
    for (const hsx::LipReportEntry& e : same.entries) CHECK(e.dtilde == 0.0);

    std::mt19937 rng(314159);
    hsx::AlphaFunction av = hsx::make_alpha(hsx::make_pl({-2.0, 4.0}, {0.1, 0.7}));
    for (int trial = 0; trial < 5; ++trial) {
        LagrangianState X0 = random_normalized(rng, 8);
        LagrangianState B0 = random_normalized(rng, 8);
        double M = std::max(X0.h_inf, B0.h_inf);
        hsx::LipReport r = hsx::lipschitz_verify(X0, B0, av, {M, av.lipschitz},
                                                 {0.5, 1.5, 3.0, 5.0});
        CHECK(r.pass);
    }
}

TEST_CASE("normalizing after the flow does not inflate the distance bound") {
    hsx::AlphaFunction a = hsx::alpha_constant(0.5);
    MetricContext ctx{1.2, 0.0};
    LagrangianState X = a2_X0(), B = a2_Xbar0();
    for (double t : {1.0, 3.0}) {
        LagrangianState Xt = hsx::evolve_event_driven(X, a, t).first;
        LagrangianState Bt = hsx::evolve_event_driven(B, a, t).first;
        LagrangianState Px = hsx::pi_normalize(Xt), Pb = hsx::pi_normalize(Bt);
        double pre = hsx::J_upper(Xt, Bt, a, ctx, hsx::default_candidates(Xt, Bt));
        double post = hsx::J_upper(Px, Pb, a, ctx, hsx::default_candidates(Px, Pb));
        CHECK(post <= std::exp(0.5 * t) * pre + 1e-10);
    }
}

TEST_CASE("d_euler") {
    hsx::AlphaFunction a = hsx::alpha_constant(0.5);
    MetricContext ctx{1.2, 0.0};
    hsx::EulerianState E = hsx::M_map(a2_X0());
    hsx::EulerianState Eb = hsx::M_map(a2_Xbar0());
    CHECK(hsx::d_euler(1.0, E, E, a, ctx) <= 1e-12);
    CHECK(hsx::d_euler(0.0, E, Eb, a, ctx) ==
          doctest::Approx(hsx::dM_upper(0.0, hsx::L_map(E), hsx::L_map(Eb), a, ctx))
              .epsilon(1e-12));
    // Growth stays within the Eulerian Lipschitz envelope (both sides are
    // computable upper bounds; recorded as a consistency check).
    double d0 = hsx::d_euler(0.0, E, Eb, a, ctx);
    for (double t : {1.0, 3.0}) {
        double dt = hsx::d_euler(t, E, Eb, a, ctx);
        CHECK(dt <= hsx::lipschitz_constants(ctx, t).Chat * d0 + 1e-10);
    }
}
