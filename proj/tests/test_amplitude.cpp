#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "lorosc/amplitude.hpp"
#include "support/checks.hpp"

using namespace lorosc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
ModelParams res(double gamma, double Gamma) {
    return ModelParams::resonant(1.0, gamma, Gamma, 1.0, 1.0);
}
}  // namespace

TEST_CASE("initial conditions across regimes") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uh(0.5, 2.0), ul(-2, 2);
    for (int i = 0; i < 100; ++i) {
        const double h = (i % 3 == 0) ? 1.0 : uh(rng);
        auto p = ModelParams::from_h(h, 1.0, std::pow(10.0, ul(rng)),
                                     std::pow(10.0, ul(rng)), 1, 1);
        auto a = solve_amplitude(p);
        CHECK_THAT(std::abs(a.value(0) - cplx{1, 0}), WithinAbs(0.0, 1e-12));
        CHECK_THAT(std::abs(a.derivative(0) - (-I * p.omega0)), WithinAbs(0.0, 1e-10));
    }
}

TEST_CASE("amplitude routing by regime") {
    CHECK_THAT(std::abs(amplitude_resonant(res(1.0, 1.0), 0.0) - cplx{1, 0}),
               WithinAbs(0.0, 1e-15));
    CHECK_THROWS_AS(amplitude_resonant(ModelParams::from_h(1.2, 1, 1, 1, 1, 1), 1.0),
                    InvalidParameter);
    CHECK_THROWS_AS(amplitude_offresonant(res(1.0, 1.0), 1.0), InvalidParameter);
    CHECK_THAT(std::abs(amplitude_offresonant(ModelParams::from_h(0.7, 1, 1, 1, 1, 1), 0.0) -
                        cplx{1, 0}),
               WithinAbs(0.0, 1e-15));
}

TEST_CASE("critical closed form at gamma = 2 Gamma") {
    auto p = res(2.0, 1.0);
    CHECK_THAT(std::abs(amplitude_resonant(p, 1.0)), WithinRel(2.0 * std::exp(-1.0), 1e-12));
    // (gamma t / 2 + 1) e^{-(gamma/2 + i omega0) t} on a grid
    for (double t : {0.0, 0.5, 2.0, 7.0}) {
        const cplx want = (1.0 + t) * std::exp(cplx{-1.0, -1.0} * t);
        CHECK_THAT(std::abs(amplitude_resonant(p, t) - want), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("markovian limit of the amplitude") {
    auto p = res(100.0, 1.0);
    const double a2 = std::norm(amplitude_resonant(p, 1.0));
    CHECK_THAT(a2, WithinRel(std::exp(-1.0), 0.02));
    auto p2 = res(100.0, 1.0);
    CHECK_THAT(std::norm(solve_amplitude(p2).value(3.0)), WithinRel(std::exp(-3.0), 0.04));
}

TEST_CASE("markovian-branch constants match the printed closed form") {
    auto p = res(5.0, 1.0);  // gamma > 2 Gamma
    auto a = solve_amplitude(p);
    REQUIRE(a.regime.branch == RegimeBranch::ResonantMarkovian);
    const double s = std::sqrt(p.gamma * (p.gamma - 2 * p.Gamma));  // sqrt(-Delta2)
    const cplx c1_want = (p.gamma + s) / (2 * s);
    const cplx r1_want{(-p.gamma + s) / 2, -p.omega0};
    const cplx r2_want{-(p.gamma + s) / 2, -p.omega0};
    const bool direct = std::abs(a.sol.r1 - r1_want) < 1e-10;
    const cplx c1 = direct ? a.sol.c1 : a.sol.c2;
    const cplx r1 = direct ? a.sol.r1 : a.sol.r2;
    const cplx r2 = direct ? a.sol.r2 : a.sol.r1;
    CHECK_THAT(std::abs(r1 - r1_want), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(r2 - r2_want), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(c1 - c1_want), WithinAbs(0.0, 1e-12));
}

TEST_CASE("amplitude is contractive and decays") {
    for (double g : {0.02, 0.5, 2.0, 20.0}) {
        auto sol = solve_amplitude(res(g, 1.0));
        double peak = 0;
        for (int i = 0; i <= 400; ++i) peak = std::max(peak, std::abs(sol.value(i * 0.1)));
        CHECK(peak <= 1.0 + 1e-9);
        const double late = std::abs(sol.value(80.0 / std::min(g, 1.0)));
        CHECK(late < 1e-6);
    }
}

TEST_CASE("h -> 1 branch continuity") {
    auto pres = res(1.0, 1.0);
    auto sol0 = solve_amplitude(pres);
    for (double dh : {1e-4, 1e-6}) {
        auto sol1 = solve_amplitude(ModelParams::from_h(1 + dh, 1.0, 1.0, 1.0, 1, 1));
        double worst = 0;
        for (int i = 0; i <= 200; ++i)
            worst = std::max(worst, std::abs(sol1.value(i * 0.1) - sol0.value(i * 0.1)));
        // deviation is linear in |h-1|
        CHECK(worst < 20.0 * dh);
    }
}

TEST_CASE("finite-difference residual against the coefficient map", "[property]") {
    std::mt19937 rng(515151);
    std::uniform_real_distribution<double> uh(0.5, 2.0), ul(-2, 2);
    for (int i = 0; i < 100; ++i) {
        const double h = (i % 4 == 0) ? 1.0 : uh(rng);
        auto p = ModelParams::from_h(h, 1.0, std::pow(10.0, ul(rng)),
                                     std::pow(10.0, ul(rng)), 1, 1);
        auto co = ode_coefficients(p);
        auto sol = solve_amplitude(p);
        const double t_hi = std::min(10.0 / std::min(p.gamma, p.Gamma), 1e3);
        const double r = checks::ode_residual_homogeneous(
            [&](double t) { return sol.value(t); }, co.p1(), co.p2(), 0.01, t_hi);
        CAPTURE(p.gamma, p.Gamma, h);
        CHECK(r < 1e-5);
    }
}

TEST_CASE("amplitude satisfies the memory-kernel equation") {
    for (double g : {0.5, 2.0}) {
        auto p = res(g, 1.0);
        auto sol = solve_amplitude(p);
        const double r = checks::volterra_residual(
            [&](double t) { return sol.value(t); },
            [&](double tau) { return correlation_kernel(p, tau); }, p.omega0, 8.0);
        CHECK(r < 1e-4);  // limited by the trapezoid/difference oracle itself
    }
}

TEST_CASE("bath kernel basics") {
    auto p = res(1.0, 1.0);
    for (double w : {0.2, 0.9, 1.0, 1.7}) {
        CHECK_THAT(bath_kernel_f(p, w, 0.0), WithinAbs(0.0, 1e-18));
        CHECK(bath_kernel_f(p, w, 2.3) >= 0.0);
    }

    // t -> infinity limit at the resonance point: |C3|^2 = 4
    CHECK_THAT(bath_kernel_f_infinity(p, 1.0), WithinRel(4.0, 1e-12));

    // printed steady form ((w'-w0)^2 + gamma^2) / ((Gamma gamma/2 - (w0-w')^2)^2
    //                                              + gamma^2 (w'-w0)^2)
    for (double w : {0.3, 0.8, 1.2, 2.4}) {
        const double x = w - p.omega0;
        const double want = (x * x + p.gamma * p.gamma) /
                            (std::pow(p.Gamma * p.gamma / 2 - x * x, 2) +
                             p.gamma * p.gamma * x * x);
        CHECK_THAT(bath_kernel_f_infinity(p, w), WithinRel(want, 1e-11));
    }

    // large-t evaluation reaches the limit
    CHECK_THAT(bath_kernel_f(p, 1.3, 60.0), WithinRel(bath_kernel_f_infinity(p, 1.3), 1e-8));
}

TEST_CASE("bath response constants: B(0) = 0 and printed C3") {
    for (double h : {1.0, 1.3}) {
        auto p = ModelParams::from_h(h, 1.0, 0.7, 1.1, 1, 1);
        for (double w : {0.4, 1.0, 1.9}) {
            auto br = solve_bath_response(p, w);
            CHECK_THAT(std::abs(br.value(0.0)), WithinAbs(0.0, 1e-12));
            // C3 = -(w' - Omega + i gamma) / Phi(-i w')
            const auto co = ode_coefficients(p);
            GeneralODEProblem pr;
            pr.p1 = co.p1();
            pr.p2 = co.p2();
            const cplx want = -cplx{w - p.Omega, p.gamma} / pr.phi(-I * w);
            CHECK_THAT(std::abs(br.sol.particular.amplitude - want), WithinAbs(0.0, 1e-12));
        }
    }
}

TEST_CASE("bath response solves the forced equation", "[property]") {
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> uw(0.05, 3.0), uh(0.5, 2.0), ul(-1, 1);
    for (int i = 0; i < 60; ++i) {
        auto p = ModelParams::from_h(i % 5 == 0 ? 1.0 : uh(rng), 1.0,
                                     std::pow(10.0, ul(rng)), std::pow(10.0, ul(rng)), 1, 1);
        const double w = uw(rng);
        auto br = solve_bath_response(p, w);
        auto co = ode_coefficients(p);
        const cplx famp = bath_forcing_amplitude(p, w);
        const double r = checks::ode_residual(
            [&](double t) { return br.value(t); }, co.p1(), co.p2(),
            [&](double t) { return famp * std::exp(-I * w * t); }, 0.05, 8.0);
        CAPTURE(p.gamma, p.Gamma, p.h(), w);
        CHECK(r < 1e-5);
    }
}
