#include <catch2/catch_amalgamated.hpp>

#include "lorosc/observables.hpp"
#include "lorosc/oracle.hpp"
#include "support/checks.hpp"

using namespace lorosc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ModelParams res(double gamma, double Gamma, double Ts = 1, double Tb = 1) {
    return ModelParams::resonant(1.0, gamma, Gamma, Ts, Tb);
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * double(i) / double(n - 1);
    return v;
}

}  // namespace

TEST_CASE("aen at t = 0 is the initial thermal occupation") {
    auto p = res(1.0, 1.0, 10.0, 1.0);
    auto q = QuadratureConfig::defaults_for(p);
    CHECK_THAT(aen_at(p, 0.0, q), WithinRel(bose_occupation(1.0 / p.Ts, p.omega0), 1e-10));
}

TEST_CASE("aen markovian proxy thermalizes to the bath occupation") {
    // gamma = 100 Gamma, weak coupling; at t = 20/Gamma the system term is gone
    auto p = ModelParams::resonant(1.0, 0.3, 0.003, 2.0, 1.0);
    auto q = QuadratureConfig::defaults_for(p);
    const double N = aen_at(p, 20.0 / p.Gamma, q);
    CHECK_THAT(N, WithinRel(bose_occupation(1.0 / p.Tb, p.omega0), 0.02));
}

TEST_CASE("aen matches the discrete-bath oracle on the shared full-line model") {
    // unclipped bath and full-line quadrature describe the same system
    auto p = res(1.0, 1.0, 10.0, 1.0);
    auto modes = discretize_bath(p, 4000, 40.0, false);
    const double dw = modes[1].omega_j - modes[0].omega_j;

    QuadratureConfig q;
    q.domain = SpectralDomain::FullLine;
    q.omega_min = 1e-6;
    q.omega_max = std::max(std::abs(modes.front().omega_j - dw / 2),
                           modes.back().omega_j + dw / 2);
    q.rel_tol = 1e-9;

    auto grid = linspace(0, 20, 11);
    auto st = evolve_discrete_bath(p, modes, grid);
    auto tr = aen_from_discrete(st, p, modes, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CAPTURE(grid[i]);
        CHECK_THAT(aen_at(p, grid[i], q), WithinAbs(tr.aen[i], 1e-3));
    }
}

TEST_CASE("steady state ignores the system temperature bitwise") {
    auto q = QuadratureConfig::defaults_for(res(1.0, 1.0));
    double first = 0;
    for (double Ts : {1.0, 5.0, 10.0}) {
        const double v = steady_state_aen(res(1.0, 1.0, Ts, 1.0), q);
        if (Ts == 1.0) first = v;
        CHECK(v == first);
    }
}

TEST_CASE("steady state equals the long-time aen") {
    auto p = res(1.0, 1.0, 5.0, 1.0);
    auto q = QuadratureConfig::defaults_for(p);
    const double s = steady_state_aen(p, q);
    CHECK_THAT(aen_at(p, 200.0, q), WithinAbs(s, 1e-3));
}

TEST_CASE("steady state markovian proxy (weak coupling)") {
    // ratio gamma/Gamma = 1000 with Gamma << omega0
    auto p = ModelParams::resonant(1.0, 1.0, 1e-3, 1.0, 1.0);
    auto q = QuadratureConfig::defaults_for(p);
    CHECK_THAT(steady_state_aen(p, q), WithinRel(bose_occupation(1.0, 1.0), 0.01));
}

TEST_CASE("steady state is monotone in the bath temperature") {
    auto q = QuadratureConfig::defaults_for(res(1.0, 1.0));
    double prev = -1;
    for (double Tb : {0.5, 1.0, 2.0, 4.0}) {
        const double v = steady_state_aen(res(1.0, 1.0, 1.0, Tb), q);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("markovian limit closed form") {
    auto p = res(1.0, 1.0, 5.0, 1.0);
    CHECK_THAT(markovian_limit_aen(p), WithinRel(0.5819767068693265, 1e-14));
    // independent of gamma, Gamma, Ts
    CHECK(markovian_limit_aen(res(7.0, 0.2, 3.0, 1.0)) == markovian_limit_aen(p));
    auto cold = res(1.0, 1.0, 1.0, 1e-2);
    CHECK(markovian_limit_aen(cold) < 1e-40);
}

TEST_CASE("gamma to zero law") {
    CHECK(gamma_zero_limit_aen(ModelParams::make(1, 1, 0, 1, 1, 1)) == 0.0);
    auto p = res(0.01, 1.0);
    CHECK_THAT(gamma_zero_limit_aen(p), WithinRel(0.023279068274773055, 1e-12));
    CHECK_THAT(gamma_zero_limit_aen(res(0.02, 1.0)) / gamma_zero_limit_aen(p),
               WithinRel(2.0, 1e-14));
}

TEST_CASE("unitarity of the continuum expansion") {
    for (double h : {1.0, 1.2}) {
        auto p = ModelParams::from_h(h, 1.0, 1.0, 1.0, 1, 1);
        for (double t : {0.5, 2.0, 8.0}) {
            CAPTURE(h, t);
            CHECK_THAT(unitarity_sum(p, t), WithinAbs(1.0, 1e-5));
        }
    }
}

TEST_CASE("relaxation time definition") {
    Trajectory tr;
    tr.params = res(1.0, 1.0);

    SECTION("constant trajectory returns the first sample") {
        tr.times = linspace(0, 10, 11);
        tr.aen.assign(11, 0.7);
        auto t = relaxation_time(tr, 0.7, 0.02);
        REQUIRE(t);
        CHECK(*t == 0.0);
    }

    SECTION("exponential approach crosses at ln(1/band) over the rate") {
        // N = s (1 + e^{-t}): threshold band*s is crossed at t = ln(1/band)
        const double s = 0.7;
        tr.times = linspace(0, 10, 100001);
        tr.aen.clear();
        for (double t : tr.times) tr.aen.push_back(s * (1 + std::exp(-t)));
        auto t = relaxation_time(tr, s, 0.02);
        REQUIRE(t);
        CHECK_THAT(*t, WithinAbs(std::log(50.0), 1e-3));
    }

    SECTION("decay toward zero uses the floor scale") {
        tr.times = linspace(0, 30, 300001);
        tr.aen.clear();
        for (double t : tr.times) tr.aen.push_back(std::exp(-t));
        auto t = relaxation_time(tr, 0.0, 0.02);
        REQUIRE(t);
        CHECK_THAT(*t, WithinAbs(std::log(1.0 / (0.02 * 1e-6)), 1e-3));
    }

    SECTION("tail outside the band returns nothing") {
        tr.times = linspace(0, 10, 11);
        tr.aen.assign(11, 2.0);
        CHECK_FALSE(relaxation_time(tr, 0.7, 0.02).has_value());
    }
}

TEST_CASE("trajectory invariants are enforced") {
    Trajectory tr;
    tr.params = res(1.0, 1.0);
    tr.times = {0.0, 1.0, 0.5};
    tr.aen = {1.0, 1.0, 1.0};
    CHECK_THROWS_AS(tr.require_valid(), InvalidParameter);
    tr.times = {0.0, 0.5, 1.0};
    tr.aen = {1.0, -1.0, 1.0};
    CHECK_THROWS_AS(tr.require_valid(), InvalidParameter);
}

TEST_CASE("quadrature non-convergence carries the achieved estimate") {
    auto p = res(1.0, 1.0);
    QuadratureConfig q = QuadratureConfig::defaults_for(p);
    q.rel_tol = 1e-15;
    q.abs_tol = 1e-18;
    q.max_intervals = 4;
    CHECK_THROWS_AS(steady_state_aen(p, q), QuadratureError);
}
