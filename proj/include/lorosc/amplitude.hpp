#pragma once

// Closed-form amplitudes of the expansion a(t) = A(t) a(0) + sum_j B_j(t) b_j(0).
//
// A(t) solves  A'' + p1 A' + p2 A = 0 with A(0) = 1, A'(0) = -i omega0.
// The scaled bath response beta(w', t) = B_j(t)/g_j solves the same equation
// with forcing -(w' - Omega + i gamma) e^{-i w' t}, beta(0) = 0, beta'(0) = -i,
// and the bath kernel of the continuum AEN integral is f(w', t) = |beta(w', t)|^2.

#include <cmath>

#include "lorosc/complex_ode.hpp"
#include "lorosc/model.hpp"

namespace lorosc {

struct AmplitudeSolution {
    RegimeClass regime;
    ODECoefficients coefficients;
    HomogeneousSolution sol;

    cplx value(double t) const { return sol.value(t); }
    cplx derivative(double t) const { return sol.derivative(t); }
};

/// Build the amplitude evaluator for any parameter regime.
inline AmplitudeSolution solve_amplitude(const ModelParams& p, double tol = 1e-9) {
    AmplitudeSolution a;
    a.regime = classify_regime(p, tol);
    a.coefficients = ode_coefficients(p);
    a.sol = solve_homogeneous(a.coefficients.p1(), a.coefficients.p2(), cplx{1, 0},
                              -I * p.omega0, tol);
    return a;
}

inline bool is_resonant(RegimeBranch b) {
    return b == RegimeBranch::ResonantMarkovian || b == RegimeBranch::ResonantCritical ||
           b == RegimeBranch::ResonantNonMarkovian;
}

/// A(t) on resonance (h = 1 within tolerance). Off-resonant input is an error.
inline cplx amplitude_resonant(const ModelParams& p, double t, double tol = 1e-9) {
    if (t < 0) throw InvalidParameter("t", "must be non-negative");
    auto a = solve_amplitude(p, tol);
    if (!is_resonant(a.regime.branch))
        throw InvalidParameter("params", "off-resonant parameters; use amplitude_offresonant");
    return a.value(t);
}

/// A(t) off resonance (h != 1). Degenerate coefficient structure
/// (c = (a^2-b^2)/4) routes through the general case-3 solver.
inline cplx amplitude_offresonant(const ModelParams& p, double t, double tol = 1e-9) {
    if (t < 0) throw InvalidParameter("t", "must be non-negative");
    auto a = solve_amplitude(p, tol);
    if (is_resonant(a.regime.branch))
        throw InvalidParameter("params", "resonant parameters; use amplitude_resonant");
    return a.value(t);
}

/// Forcing amplitude of the scaled bath-response equation (coupling divided out).
inline cplx bath_forcing_amplitude(const ModelParams& p, double omega_prime) {
    return -cplx{omega_prime - p.Omega, p.gamma};
}

struct BathResponse {
    ForcedSolution sol;
    double omega_prime = 0;

    cplx value(double t) const { return sol.value(t); }
    /// f(w', t) = |beta(w', t)|^2 (real and non-negative by construction).
    double f(double t) const { return std::norm(sol.value(t)); }
    /// Long-time limit |C3|^2; the homogeneous transients carry e^{-a t/2}.
    double f_infinity() const { return std::norm(sol.particular.amplitude); }
};

inline BathResponse solve_bath_response(const ModelParams& p, double omega_prime,
                                        double tol = 1e-9) {
    const auto co = ode_coefficients(p);
    GeneralODEProblem pr;
    pr.p1 = co.p1();
    pr.p2 = co.p2();
    pr.forcing_amplitude = bath_forcing_amplitude(p, omega_prime);
    pr.forcing_exponent = -I * omega_prime;
    pr.initial_value = {0, 0};
    pr.initial_derivative = -I;
    return {solve_forced(pr, tol), omega_prime};
}

inline double bath_kernel_f(const ModelParams& p, double omega_prime, double t,
                            double tol = 1e-9) {
    if (t < 0) throw InvalidParameter("t", "must be non-negative");
    return solve_bath_response(p, omega_prime, tol).f(t);
}

/// t -> infinity limit of f(w', .) for gamma > 0.
inline double bath_kernel_f_infinity(const ModelParams& p, double omega_prime,
                                     double tol = 1e-9) {
    if (p.gamma <= 0) throw DeltaBathError("gamma = 0 has no relaxed bath kernel");
    return solve_bath_response(p, omega_prime, tol).f_infinity();
}

}  // namespace lorosc
