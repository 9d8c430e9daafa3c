#pragma once

// Closed-form solver for the second-order linear ODE with complex coefficients
//
//   X''(t) + p1 X'(t) + p2 X(t) = f * e^{lambda t},   p1 = a + ib, p2 = c + id,
//
// organized as a case taxonomy on the coefficient structure:
//   case 2:  d = ab/2            -> discriminant Delta2 = 4c + b^2 - a^2
//   case 3:  c = (a^2 - b^2)/4   -> discriminant Delta3 = ab - 2d
//   case 1:  otherwise           -> discriminant Delta1 = ab - 2d (sign selects root pair)
// Guard priority is case 2, then case 3, then case 1. The degenerate
// discriminant-zero branches use the (C1 t + C2) e^{rt} form. Inhomogeneous
// forcing is handled by the standard particular solutions f/Phi(lambda) e^{lt}
// and, when Phi(lambda) = 0, f/Phi'(lambda) t e^{lt}.

#include <cmath>
#include <utility>

#include "lorosc/model.hpp"
#include "lorosc/types.hpp"

namespace lorosc {

struct GeneralODEProblem {
    cplx p1{0, 0};
    cplx p2{0, 0};
    cplx forcing_amplitude{0, 0};
    cplx forcing_exponent{0, 0};
    cplx initial_value{1, 0};
    cplx initial_derivative{0, 0};

    cplx phi(cplx r) const { return r * r + p1 * r + p2; }
    cplx phi_prime(cplx r) const { return 2.0 * r + p1; }
};

namespace detail {

inline double guard_scale(double x, double y) {
    return std::max({std::abs(x), std::abs(y), 1e-300});
}

}  // namespace detail

/// Pick the taxonomy case for coefficients (a,b,c,d). Inputs within
/// tol * scale of a structural boundary take the degenerate route.
inline OdeCase classify_ode_case(double a, double b, double c, double d, double tol = 1e-9) {
    const double ab2 = a * b / 2;
    if (std::abs(d - ab2) <= tol * detail::guard_scale(d, ab2)) {
        const double d2 = 4 * c + b * b - a * a;
        const double s2 = std::max({4 * std::abs(c), b * b + a * a, 1e-300});
        if (std::abs(d2) <= tol * s2) return OdeCase::Case2Delta2Zero;
        return d2 > 0 ? OdeCase::Case2Delta2Pos : OdeCase::Case2Delta2Neg;
    }
    const double cq = (a * a - b * b) / 4;
    if (std::abs(c - cq) <= tol * detail::guard_scale(c, (a * a + b * b) / 4)) {
        const double d3 = a * b - 2 * d;
        const double s3 = detail::guard_scale(a * b, 2 * d);
        if (std::abs(d3) <= tol * s3) return OdeCase::Case3Delta3Zero;
        return d3 > 0 ? OdeCase::Case3Delta3Pos : OdeCase::Case3Delta3Neg;
    }
    const double d1 = a * b - 2 * d;
    return d1 > 0 ? OdeCase::Case1Delta1Pos : OdeCase::Case1Delta1Neg;
}

/// Characteristic roots for a taxonomy case.
inline std::pair<cplx, cplx> characteristic_roots(double a, double b, double c, double d,
                                                  OdeCase oc) {
    switch (oc) {
        case OdeCase::Case2Delta2Zero:
        case OdeCase::Case3Delta3Zero: {
            const cplx r{-a / 2, -b / 2};
            return {r, r};
        }
        case OdeCase::Case2Delta2Pos: {
            const double s = std::sqrt(4 * c + b * b - a * a);
            return {cplx{-a / 2, (-b + s) / 2}, cplx{-a / 2, (-b - s) / 2}};
        }
        case OdeCase::Case2Delta2Neg: {
            const double s = std::sqrt(-(4 * c + b * b - a * a));
            return {cplx{(-a + s) / 2, -b / 2}, cplx{(-a - s) / 2, -b / 2}};
        }
        case OdeCase::Case3Delta3Pos: {
            const double s = std::sqrt(a * b - 2 * d);
            return {cplx{(-a + s) / 2, (-b + s) / 2}, cplx{(-a - s) / 2, (-b - s) / 2}};
        }
        case OdeCase::Case3Delta3Neg: {
            const double s = std::sqrt(2 * d - a * b);
            return {cplx{(-a + s) / 2, (-b - s) / 2}, cplx{(-a - s) / 2, (-b + s) / 2}};
        }
        case OdeCase::Case1Delta1Pos:
        case OdeCase::Case1Delta1Neg: {
            const cplx p1{a, b}, p2{c, d};
            const cplx sq = std::sqrt(p1 * p1 - 4.0 * p2);
            return {(-p1 + sq) / 2.0, (-p1 - sq) / 2.0};
        }
    }
    return {{}, {}};
}

/// Homogeneous solution X = C1 e^{r1 t} + C2 e^{r2 t}, or (C1 t + C2) e^{r1 t}
/// in the degenerate case, with constants fixed by X(0), X'(0).
struct HomogeneousSolution {
    OdeCase case_id{};
    bool degenerate = false;
    cplx r1{}, r2{};
    cplx c1{}, c2{};

    cplx value(double t) const {
        if (degenerate) return (c1 * t + c2) * std::exp(r1 * t);
        return c1 * std::exp(r1 * t) + c2 * std::exp(r2 * t);
    }
    cplx derivative(double t) const {
        if (degenerate) return (c1 + r1 * (c1 * t + c2)) * std::exp(r1 * t);
        return c1 * r1 * std::exp(r1 * t) + c2 * r2 * std::exp(r2 * t);
    }
    /// Slowest decay rate (most positive real part over the root pair).
    double slowest_rate() const { return std::max(r1.real(), r2.real()); }
};

inline HomogeneousSolution solve_homogeneous(cplx p1, cplx p2, cplx x0, cplx xdot0,
                                             double tol = 1e-9) {
    HomogeneousSolution s;
    s.case_id = classify_ode_case(p1.real(), p1.imag(), p2.real(), p2.imag(), tol);
    auto [r1, r2] = characteristic_roots(p1.real(), p1.imag(), p2.real(), p2.imag(), s.case_id);
    s.r1 = r1;
    s.r2 = r2;
    s.degenerate = (s.case_id == OdeCase::Case2Delta2Zero || s.case_id == OdeCase::Case3Delta3Zero);
    if (s.degenerate) {
        s.c2 = x0;
        s.c1 = xdot0 - s.r1 * x0;
    } else {
        s.c1 = (xdot0 - r2 * x0) / (r1 - r2);
        s.c2 = x0 - s.c1;
    }
    return s;
}

/// Particular solution of the exponentially forced equation.
struct ParticularSolution {
    enum class Mode { Zero, Plain, ResonantT } mode = Mode::Zero;
    cplx amplitude{};
    cplx lambda{};

    cplx value(double t) const {
        switch (mode) {
            case Mode::Zero: return {};
            case Mode::Plain: return amplitude * std::exp(lambda * t);
            case Mode::ResonantT: return amplitude * t * std::exp(lambda * t);
        }
        return {};
    }
    cplx derivative(double t) const {
        switch (mode) {
            case Mode::Zero: return {};
            case Mode::Plain: return amplitude * lambda * std::exp(lambda * t);
            case Mode::ResonantT: return amplitude * (1.0 + lambda * t) * std::exp(lambda * t);
        }
        return {};
    }
};

inline ParticularSolution solve_particular(const GeneralODEProblem& pr, double tol = 1e-10) {
    ParticularSolution ps;
    ps.lambda = pr.forcing_exponent;
    if (pr.forcing_amplitude == cplx{}) return ps;
    const cplx lam = pr.forcing_exponent;
    const double scale = std::max({std::norm(lam) == 0 ? 0.0 : std::abs(lam * lam),
                                   std::abs(pr.p1 * lam), std::abs(pr.p2), 1e-300});
    const cplx Phi = pr.phi(lam);
    if (std::abs(Phi) > tol * scale) {
        ps.mode = ParticularSolution::Mode::Plain;
        ps.amplitude = pr.forcing_amplitude / Phi;
        return ps;
    }
    const cplx Phid = pr.phi_prime(lam);
    const double dscale = std::max({2 * std::abs(lam), std::abs(pr.p1), 1e-300});
    if (std::abs(Phid) > tol * dscale) {
        ps.mode = ParticularSolution::Mode::ResonantT;
        ps.amplitude = pr.forcing_amplitude / Phid;
        return ps;
    }
    throw DoubleResonanceError("Phi(lambda) = 0 and Phi'(lambda) = 0: unsupported double resonance");
}

/// Full solution of the forced problem with its initial conditions.
struct ForcedSolution {
    HomogeneousSolution homogeneous;
    ParticularSolution particular;

    cplx value(double t) const { return homogeneous.value(t) + particular.value(t); }
    cplx derivative(double t) const {
        return homogeneous.derivative(t) + particular.derivative(t);
    }
};

inline ForcedSolution solve_forced(const GeneralODEProblem& pr, double tol = 1e-9) {
    ForcedSolution fs;
    fs.particular = solve_particular(pr);
    fs.homogeneous = solve_homogeneous(pr.p1, pr.p2,
                                       pr.initial_value - fs.particular.value(0.0),
                                       pr.initial_derivative - fs.particular.derivative(0.0), tol);
    return fs;
}

/// Homogeneous solution value at t for the problem's initial data.
inline cplx general_homogeneous(const GeneralODEProblem& pr, double t) {
    return solve_homogeneous(pr.p1, pr.p2, pr.initial_value, pr.initial_derivative).value(t);
}

/// Particular solution value at t (independent of the initial data).
inline cplx particular_solution(const GeneralODEProblem& pr, double t) {
    return solve_particular(pr).value(t);
}

}  // namespace lorosc
