#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "golden.hpp"
#include "hsx/evolution.hpp"
#include "hsx/lagrangian.hpp"

using hsx::LagrangianState;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Hat-profile initial data in Lagrangian form: y = (xi-1)/2 on [-1,3].
LagrangianState a1_X0() {
    return hsx::make_state({-1.0, 1.0, 3.0}, {-1.0, 0.0, 1.0}, {0.0, 1.0, 0.0},
                           {0.0, 1.0, 2.0}, {0.0, 1.0, 2.0}, {0.0, 0.0});
}

// Two-breaking-times initial data (tau = 2 on (-1,1), tau = 4 on (1,7/2)).
LagrangianState a3_X0() {
    return hsx::make_state({-1.0, 1.0, 3.5}, {-1.0, 0.0, 2.0}, {1.0, 0.0, -1.0},
                           {0.0, 1.0, 1.5}, {0.0, 1.0, 1.5}, {0.0, 0.0});
}

// State sampled from the reference solution of the hat example at time t.
LagrangianState a1_at(double t) {
    std::vector<double> xi = {-1.0, 1.0, 3.0}, y, U, H, V;
    for (double q : xi) {
        golden::Point p = golden::a1_state(q, t);
        y.push_back(p.y);
        U.push_back(p.U);
        H.push_back(p.H);
        V.push_back(p.V);
    }
    return hsx::make_state(xi, y, U, H, V, {0.0, 0.0});
}

hsx::AlphaFunction a1_alpha() {
    std::vector<double> grid;
    for (double x = -4.0; x <= 6.0 + 1e-9; x += 0.5) grid.push_back(x);
    return hsx::alpha_sample([](double x) { return x * x / (x * x + 1.0); }, grid);
}

}  // namespace

TEST_CASE("check_F_alpha accepts admissible data and flags violations") {
    hsx::AlphaFunction a = a1_alpha();
    CHECK(hsx::check_F_alpha(a1_X0(), a).pass);
    CHECK(hsx::check_F_alpha(hsx::identity_state(0.0, 1.0, 4), a).pass);

    // V_xi = 2 H_xi on one cell violates the energy-density bound (iv)
    // while the algebraic identity y_xi V_xi = U_xi^2 still holds.
    LagrangianState bad = hsx::make_state({0.0, 1.0}, {0.0, 0.5}, {0.0, 1.0},
                                          {0.0, 1.0}, {0.0, 2.0}, {0.0});
    hsx::CheckReport rep = hsx::check_F_alpha(bad, a);
    CHECK_FALSE(rep.pass);
    CHECK(rep.first.find("(iv)") != std::string::npos);
}

TEST_CASE("check_F_i detects the energy drop after breaking") {
    CHECK(hsx::check_F_i(a1_X0()));
    CHECK_FALSE(hsx::check_F_i(a1_at(4.0)));
    CHECK(hsx::check_F_i(hsx::identity_state(-1.0, 1.0, 2)));
}

TEST_CASE("compute_tau reproduces the printed breaking times") {
    hsx::BreakingSchedule s = hsx::compute_tau(a3_X0());
    REQUIRE(s.tau.size() == 2);
    CHECK(s.tau[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s.tau[1] == doctest::Approx(4.0).epsilon(1e-14));
    REQUIRE(s.batches.size() == 2);
    CHECK(s.batches[0].time == doctest::Approx(2.0));
    CHECK(s.batches[1].time == doctest::Approx(4.0));

    // The two closed forms -2 U_xi / H_xi and -2 y_xi / U_xi agree.
    LagrangianState X = a3_X0();
    for (std::size_t i = 0; i < X.cells(); ++i) {
        if (!std::isfinite(s.tau[i])) continue;
        CHECK(s.tau[i] == doctest::Approx(-2.0 * X.U_xi(i) / X.H_xi(i)).epsilon(1e-10));
        CHECK(s.tau[i] == doctest::Approx(-2.0 * X.y_xi(i) / X.U_xi(i)).epsilon(1e-10));
    }
}

TEST_CASE("compute_tau: non-breaking and instantly-broken cells") {
    LagrangianState rising = hsx::make_state({0.0, 1.0}, {0.0, 0.6}, {0.0, 0.3},
                                             {0.0, 0.5}, {0.0, 0.5}, {0.4});
    CHECK(hsx::compute_tau(rising).tau[0] == kInf);

    LagrangianState flat = hsx::make_state({0.0, 1.0}, {0.0, 0.0}, {0.0, 0.0},
                                           {0.0, 1.0}, {0.0, 0.0}, {0.0});
    hsx::BreakingSchedule s = hsx::compute_tau(flat);
    CHECK(s.tau[0] == 0.0);
    REQUIRE(s.batches.size() == 1);
    CHECK(s.batches[0].time == 0.0);
}

TEST_CASE("compute_tau rejects a corrupted negative-slope cell") {
    // U_xi < 0 with r = 0 and H_xi = 0 cannot satisfy the algebraic identity.
    LagrangianState bad = hsx::make_state({0.0, 1.0}, {0.0, 1.0}, {1.0, 0.0},
                                          {0.0, 0.0}, {0.0, 0.0}, {0.0});
    CHECK_THROWS_AS(hsx::compute_tau(bad), std::runtime_error);
}

TEST_CASE("classify_omega") {
    std::vector<hsx::Omega> lab = hsx::classify_omega(a1_X0());
    REQUIRE(lab.size() == 2);
    CHECK(lab[0] == hsx::Omega::c);  // U_xi = 1/2 > 0
    CHECK(lab[1] == hsx::Omega::d);  // U_xi = -1/2, r = 0

    LagrangianState withr = hsx::make_state({0.0, 1.0}, {0.0, 0.5}, {1.0, 0.0},
                                            {0.0, 1.0}, {0.0, 1.0}, {0.5});
    CHECK(hsx::classify_omega(withr)[0] == hsx::Omega::c);

    LagrangianState flatU = hsx::make_state({0.0, 1.0}, {0.0, 1.0}, {1.0, 1.0},
                                            {0.0, 1.0}, {0.0, 0.0}, {0.0});
    CHECK(hsx::classify_omega(flatU)[0] == hsx::Omega::c);
}

TEST_CASE("broken_measure") {
    hsx::BreakingSchedule s1 = hsx::compute_tau(a1_X0());
    CHECK(hsx::broken_measure(s1, 1.0) == 0.0);
    CHECK(hsx::broken_measure(s1, 2.0) == doctest::Approx(2.0).epsilon(1e-15));

    hsx::BreakingSchedule s3 = hsx::compute_tau(a3_X0());
    CHECK(hsx::broken_measure(s3, 4.0) == doctest::Approx(4.5).epsilon(1e-15));

    // Upper bound by the breaking-set estimate.
    LagrangianState X = a3_X0();
    for (double t : {1.0, 2.0, 4.0, 6.0}) {
        double bound = (1.0 + 0.25 * t * t) * X.h_inf / X.c_lower;
        CHECK(hsx::broken_measure(s3, t) <= bound + 1e-12);
    }
}

TEST_CASE("slope-sum bounds along the flow") {
    // e^{-t/2} <= y_xi + H_xi <= 1 + t + t^2/4 for normalized admissible data.
    hsx::AlphaFunction a = a1_alpha();
    LagrangianState X0 = a1_X0();
    for (double t : {0.5, 1.0, 2.0, 3.0, 5.0}) {
        LagrangianState Xt = hsx::evolve_event_driven(X0, a, t).first;
        for (std::size_t i = 0; i < Xt.cells(); ++i) {
            double s = Xt.y_xi(i) + Xt.H_xi(i);
            CHECK(s >= std::exp(-0.5 * t) - 1e-10);
            CHECK(s <= 1.0 + t + 0.25 * t * t + 1e-10);
        }
    }
}
