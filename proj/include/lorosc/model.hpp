#pragma once

// Physical model: a single harmonic oscillator (frequency omega0) coupled
// bilinearly to a bosonic bath with Lorentzian spectral density
//   J(w) = (Gamma*gamma^2 / 2pi) / ((w - Omega)^2 + gamma^2).
// gamma^-1 is the bath memory time, Omega the bath central frequency and
// Gamma the global dissipation rate. The associated memory kernel is the
// single complex exponential G(tau) = (Gamma*gamma/2) e^{-(gamma + i Omega) tau}.

#include <cmath>
#include <vector>

#include "lorosc/types.hpp"

namespace lorosc {

struct ModelParams {
    double omega0 = 1.0;  ///< system frequency (hbar = 1)
    double Omega = 1.0;   ///< bath central frequency
    double gamma = 1.0;   ///< spectral width, inverse memory time
    double Gamma = 1.0;   ///< global dissipation rate
    double Ts = 1.0;      ///< system temperature (k_B = 1)
    double Tb = 1.0;      ///< bath temperature (k_B = 1)

    /// Dimensionless detuning ratio, omega0 = h * Omega.
    double h() const { return omega0 / Omega; }

    std::vector<std::string> validate() const {
        std::vector<std::string> out;
        if (!(omega0 > 0)) out.push_back("omega0 must be positive");
        if (!(Omega > 0)) out.push_back("Omega must be positive");
        if (!(gamma >= 0)) out.push_back("gamma must be non-negative");
        if (!(Gamma > 0)) out.push_back("Gamma must be positive");
        if (!(Ts > 0)) out.push_back("Ts must be positive");
        if (!(Tb > 0)) out.push_back("Tb must be positive");
        return out;
    }

    void require_valid() const {
        auto diag = validate();
        if (!diag.empty()) throw InvalidParameter("ModelParams", diag.front());
    }

    static ModelParams make(double omega0, double Omega, double gamma, double Gamma,
                            double Ts, double Tb) {
        ModelParams p{omega0, Omega, gamma, Gamma, Ts, Tb};
        p.require_valid();
        return p;
    }

    /// Resonant parameter set (omega0 == Omega).
    static ModelParams resonant(double omega0, double gamma, double Gamma,
                                double Ts, double Tb) {
        return make(omega0, omega0, gamma, Gamma, Ts, Tb);
    }

    /// Off-resonant set specified through h: omega0 = h * Omega.
    static ModelParams from_h(double h, double Omega, double gamma, double Gamma,
                              double Ts, double Tb) {
        if (!(h > 0)) throw InvalidParameter("h", "must be positive");
        return make(h * Omega, Omega, gamma, Gamma, Ts, Tb);
    }
};

/// Coefficients of the second-order equation  X'' + (a+ib) X' + (c+id) X = f(t):
/// a = gamma, b = omega0 + Omega, c = Gamma*gamma/2 - omega0*Omega, d = gamma*omega0.
struct ODECoefficients {
    double a = 0, b = 0, c = 0, d = 0;

    double delta1() const { return a * b - 2 * d; }
    double delta2() const { return 4 * c + b * b - a * a; }
    double delta3() const { return a * b - 2 * d; }

    cplx p1() const { return {a, b}; }
    cplx p2() const { return {c, d}; }
};

inline ODECoefficients ode_coefficients(const ModelParams& p) {
    p.require_valid();
    return {p.gamma, p.omega0 + p.Omega, p.Gamma * p.gamma / 2 - p.omega0 * p.Omega,
            p.gamma * p.omega0};
}

enum class RegimeBranch {
    ResonantMarkovian,     ///< h = 1, gamma > 2 Gamma
    ResonantCritical,      ///< h = 1, gamma = 2 Gamma (degenerate root)
    ResonantNonMarkovian,  ///< h = 1, gamma < 2 Gamma
    OffResonantDelta1Neg,  ///< h > 1
    OffResonantDelta1Pos,  ///< h < 1
    AppendixGeneral,       ///< special coefficient structure outside the named branches
};

/// Sub-case of the general second-order solver (see complex_ode.hpp).
enum class OdeCase {
    Case1Delta1Pos,
    Case1Delta1Neg,
    Case2Delta2Zero,
    Case2Delta2Pos,
    Case2Delta2Neg,
    Case3Delta3Zero,
    Case3Delta3Pos,
    Case3Delta3Neg,
};

struct RegimeClass {
    RegimeBranch branch;
    OdeCase ode_case;
    double discriminant;  ///< value whose sign decided the branch
};

inline const char* to_string(RegimeBranch b) {
    switch (b) {
        case RegimeBranch::ResonantMarkovian: return "resonant-markovian";
        case RegimeBranch::ResonantCritical: return "resonant-critical";
        case RegimeBranch::ResonantNonMarkovian: return "resonant-non-markovian";
        case RegimeBranch::OffResonantDelta1Neg: return "off-resonant-delta1-neg";
        case RegimeBranch::OffResonantDelta1Pos: return "off-resonant-delta1-pos";
        case RegimeBranch::AppendixGeneral: return "appendix-general";
    }
    return "?";
}

/// Classify the closed-form branch. Boundaries within |x| <= tol * scale(x)
/// route to the degenerate (numerically stable) branch.
inline RegimeClass classify_regime(const ModelParams& p, double tol = 1e-9) {
    if (!(tol > 0)) throw InvalidParameter("tol", "must be positive");
    p.require_valid();
    const auto co = ode_coefficients(p);
    const double h = p.h();

    if (std::abs(h - 1.0) <= tol) {
        const double disc = p.gamma - 2 * p.Gamma;
        const double scale = std::max(p.gamma, 2 * p.Gamma);
        if (std::abs(disc) <= tol * scale)
            return {RegimeBranch::ResonantCritical, OdeCase::Case2Delta2Zero, disc};
        if (disc > 0)
            return {RegimeBranch::ResonantMarkovian, OdeCase::Case2Delta2Neg, disc};
        return {RegimeBranch::ResonantNonMarkovian, OdeCase::Case2Delta2Pos, disc};
    }

    // Off resonance d != ab/2 automatically; check the c = (a^2 - b^2)/4 structure.
    const double cguard = co.c - (co.a * co.a - co.b * co.b) / 4;
    const double cscale = std::max({std::abs(co.c), (co.a * co.a + co.b * co.b) / 4, 1e-300});
    if (std::abs(cguard) <= tol * cscale) {
        const double d3 = co.delta3();
        if (d3 > 0) return {RegimeBranch::AppendixGeneral, OdeCase::Case3Delta3Pos, d3};
        return {RegimeBranch::AppendixGeneral, OdeCase::Case3Delta3Neg, d3};
    }

    const double d1 = co.delta1();  // = (1-h) gamma Omega
    if (d1 < 0) return {RegimeBranch::OffResonantDelta1Neg, OdeCase::Case1Delta1Neg, d1};
    return {RegimeBranch::OffResonantDelta1Pos, OdeCase::Case1Delta1Pos, d1};
}

/// Lorentzian spectral density J(w). Defined for all real w.
inline double spectral_density(const ModelParams& p, double omega) {
    if (p.gamma == 0)
        throw DeltaBathError("gamma = 0: delta-function bath; use a discrete single-mode path");
    const double dw = omega - p.Omega;
    return (p.Gamma * p.gamma * p.gamma / (2 * PI)) / (dw * dw + p.gamma * p.gamma);
}

/// Bath correlation kernel G(tau) = (Gamma gamma / 2) e^{-(gamma + i Omega) tau}, tau >= 0.
inline cplx correlation_kernel(const ModelParams& p, double tau) {
    if (tau < 0) throw InvalidParameter("tau", "must be non-negative");
    return 0.5 * p.Gamma * p.gamma * std::exp(-(p.gamma + I * p.Omega) * tau);
}

/// Thermal occupation 1/(e^{beta w} - 1). For w < 0 this is the analytic
/// continuation -(1 + nbar(|w|)) used by the full-line continuum.
inline double bose_occupation(double beta, double omega) {
    const double x = beta * omega;
    if (!(beta > 0) || x == 0 || std::isnan(x))
        throw InvalidParameter("beta*omega", "must be non-zero with beta > 0");
    if (std::abs(x) < 1e-12) throw NearPoleError(x);
    return 1.0 / std::expm1(x);
}

struct BathMode {
    double omega_j;  ///< mode frequency
    double g_j;      ///< coupling strength, real non-negative (phases unobservable)
};

/// Uniform midpoint discretization of the bath over [Omega - K gamma, Omega + K gamma].
/// With clip_negative (default) the window is intersected with (0, inf) so every
/// mode admits a thermal state. The unclipped variant keeps the full Lorentzian
/// support and is the faithful discrete companion of the continuum closed forms;
/// when the window spans zero the grid is aligned so that no mode sits at w = 0.
inline std::vector<BathMode> discretize_bath(const ModelParams& p, std::size_t n_modes,
                                             double window_halfwidth,
                                             bool clip_negative = true) {
    p.require_valid();
    if (p.gamma == 0) throw DeltaBathError("gamma = 0: discretization window is empty");
    if (n_modes < 2) throw InvalidParameter("n_modes", "need at least 2 modes");
    if (!(window_halfwidth > 0)) throw InvalidParameter("window_halfwidth", "must be positive");

    double lo = p.Omega - window_halfwidth * p.gamma;
    double hi = p.Omega + window_halfwidth * p.gamma;
    if (clip_negative) lo = std::max(lo, 0.0);
    if (!(hi > lo)) throw InvalidParameter("window", "empty after clipping");

    double dw = (hi - lo) / static_cast<double>(n_modes);
    if (!clip_negative && lo < 0.0 && hi > 0.0) {
        // put w = 0 on a cell boundary so paired modes straddle it symmetrically
        lo = dw * std::floor(lo / dw);
        hi = lo + dw * static_cast<double>(n_modes);
    }

    std::vector<BathMode> modes;
    modes.reserve(n_modes);
    for (std::size_t j = 0; j < n_modes; ++j) {
        const double w = lo + (static_cast<double>(j) + 0.5) * dw;
        modes.push_back({w, std::sqrt(spectral_density(p, w) * dw)});
    }
    return modes;
}

inline constexpr std::size_t kDefaultBathModes = 2000;
inline constexpr double kDefaultBathHalfwidth = 20.0;

}  // namespace lorosc
