#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "lorosc/complex_ode.hpp"
#include "support/checks.hpp"

using namespace lorosc;
using Catch::Matchers::WithinAbs;

namespace {

GeneralODEProblem abcd(double a, double b, double c, double d) {
    GeneralODEProblem pr;
    pr.p1 = {a, b};
    pr.p2 = {c, d};
    return pr;
}

double homo_residual(const GeneralODEProblem& pr, double t_hi) {
    auto sol = solve_homogeneous(pr.p1, pr.p2, pr.initial_value, pr.initial_derivative);
    return checks::ode_residual_homogeneous([&](double t) { return sol.value(t); }, pr.p1,
                                            pr.p2, 0.05, t_hi);
}

}  // namespace

TEST_CASE("undamped oscillator limit gives cos") {
    GeneralODEProblem pr;
    pr.p1 = {0, 0};
    pr.p2 = {4.0, 0};  // omega = 2
    pr.initial_value = {1, 0};
    pr.initial_derivative = {0, 0};
    for (double t : {0.0, 0.3, 1.0, 2.5}) {
        const cplx v = general_homogeneous(pr, t);
        CHECK_THAT(std::abs(v - std::cos(2.0 * t)), WithinAbs(0.0, 1e-13));
    }
}

TEST_CASE("taxonomy sub-cases satisfy the equation and initial data") {
    struct Row {
        double a, b, c, d;
        OdeCase want;
    };
    // engineered parameter sets, one per sub-case
    const Row rows[] = {
        {1.0, 2.0, 0.75, 0.3, OdeCase::Case1Delta1Pos},     // ab-2d = 1.4 > 0
        {1.0, 2.0, 0.75, 1.7, OdeCase::Case1Delta1Neg},     // ab-2d = -1.4 < 0
        {1.0, 2.0, -0.75, 1.0, OdeCase::Case2Delta2Zero},   // d=ab/2, 4c+b^2-a^2=0
        {1.0, 2.0, 0.5, 1.0, OdeCase::Case2Delta2Pos},      // d=ab/2, delta2=5
        {1.0, 2.0, -2.0, 1.0, OdeCase::Case2Delta2Neg},     // d=ab/2, delta2=-5
        {2.0, 1.0, 0.75, 1.0, OdeCase::Case3Delta3Zero},    // c=(a^2-b^2)/4, ab=2d
        {2.0, 1.0, 0.75, 0.6, OdeCase::Case3Delta3Pos},     // delta3=0.8
        {2.0, 1.0, 0.75, 1.4, OdeCase::Case3Delta3Neg},     // delta3=-0.8
    };
    for (const auto& r : rows) {
        CAPTURE(r.a, r.b, r.c, r.d);
        CHECK(classify_ode_case(r.a, r.b, r.c, r.d) == r.want);
        auto pr = abcd(r.a, r.b, r.c, r.d);
        pr.initial_value = {0.8, -0.1};
        pr.initial_derivative = {0.2, 0.5};
        auto sol = solve_homogeneous(pr.p1, pr.p2, pr.initial_value, pr.initial_derivative);
        CHECK_THAT(std::abs(sol.value(0) - pr.initial_value), WithinAbs(0.0, 1e-13));
        CHECK_THAT(std::abs(sol.derivative(0) - pr.initial_derivative), WithinAbs(0.0, 1e-12));
        CHECK(homo_residual(pr, 6.0) < 1e-6);
    }
}

TEST_CASE("exact delta2 = 0 input selects the degenerate form") {
    auto sol = solve_homogeneous(cplx{1, 2}, cplx{-0.75, 1.0}, cplx{1, 0}, cplx{0, -1});
    CHECK(sol.degenerate);
    CHECK(sol.case_id == OdeCase::Case2Delta2Zero);
}

TEST_CASE("case guards take priority case2 then case3") {
    // b=0, d=0 satisfies d = ab/2 trivially -> case 2 even though b=0
    CHECK(classify_ode_case(0.0, 0.0, 1.0, 0.0) == OdeCase::Case2Delta2Pos);
    // both structures hold: a=2, b=2, d=2 (=ab/2), c=0 (=(a^2-b^2)/4)
    CHECK(classify_ode_case(2.0, 2.0, 0.0, 2.0) == OdeCase::Case2Delta2Zero);
}

TEST_CASE("random coefficients: residual and initial data", "[property]") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        auto pr = abcd(u(rng), u(rng), u(rng), u(rng));
        pr.initial_value = {u(rng), u(rng)};
        pr.initial_derivative = {u(rng), u(rng)};
        CAPTURE(pr.p1, pr.p2, pr.initial_value, pr.initial_derivative);
        auto sol = solve_homogeneous(pr.p1, pr.p2, pr.initial_value, pr.initial_derivative);
        CHECK_THAT(std::abs(sol.value(0) - pr.initial_value), WithinAbs(0.0, 1e-12));
        CHECK(homo_residual(pr, 3.0) < 1e-5);
    }
}

TEST_CASE("particular solution branches") {
    auto pr = abcd(1.0, 2.0, 0.3, 0.7);
    pr.forcing_exponent = {0.0, -1.3};

    SECTION("zero forcing gives the zero function") {
        pr.forcing_amplitude = {0, 0};
        CHECK(particular_solution(pr, 1.7) == cplx{0, 0});
    }

    SECTION("generic forcing: residual against the forced equation") {
        pr.forcing_amplitude = {0.4, -0.9};
        auto ps = solve_particular(pr);
        CHECK(ps.mode == ParticularSolution::Mode::Plain);
        auto res = checks::ode_residual(
            [&](double t) { return ps.value(t); }, pr.p1, pr.p2,
            [&](double t) { return pr.forcing_amplitude * std::exp(pr.forcing_exponent * t); },
            0.1, 4.0);
        CHECK(res < 1e-8);
    }

    SECTION("resonant forcing Phi(lambda) = 0 gives t e^{lambda t}") {
        auto sol = solve_homogeneous(pr.p1, pr.p2, cplx{1, 0}, cplx{0, 0});
        GeneralODEProblem pres = pr;
        pres.forcing_exponent = sol.r1;  // exact characteristic root
        pres.forcing_amplitude = {1.0, 0.5};
        auto ps = solve_particular(pres);
        CHECK(ps.mode == ParticularSolution::Mode::ResonantT);
        auto res = checks::ode_residual(
            [&](double t) { return ps.value(t); }, pres.p1, pres.p2,
            [&](double t) {
                return pres.forcing_amplitude * std::exp(pres.forcing_exponent * t);
            },
            0.1, 4.0);
        CHECK(res < 1e-7);
    }

    SECTION("double resonance is rejected") {
        GeneralODEProblem dres;
        const cplx lam{-0.5, 1.0};
        dres.p1 = -2.0 * lam;
        dres.p2 = lam * lam;
        dres.forcing_exponent = lam;
        dres.forcing_amplitude = {1, 0};
        CHECK_THROWS_AS(solve_particular(dres), DoubleResonanceError);
    }
}

TEST_CASE("forced solution honors the initial conditions") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 50; ++i) {
        auto pr = abcd(u(rng), u(rng), u(rng), u(rng));
        pr.forcing_amplitude = {u(rng), u(rng)};
        pr.forcing_exponent = {0.0, u(rng)};
        pr.initial_value = {u(rng), u(rng)};
        pr.initial_derivative = {u(rng), u(rng)};
        auto fs = solve_forced(pr);
        CHECK_THAT(std::abs(fs.value(0) - pr.initial_value), WithinAbs(0.0, 1e-12));
        CHECK_THAT(std::abs(fs.derivative(0) - pr.initial_derivative), WithinAbs(0.0, 1e-12));
        auto res = checks::ode_residual(
            [&](double t) { return fs.value(t); }, pr.p1, pr.p2,
            [&](double t) { return pr.forcing_amplitude * std::exp(pr.forcing_exponent * t); },
            0.1, 4.0);
        CHECK(res < 1e-6);
    }
}
