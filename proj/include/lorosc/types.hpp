#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lorosc {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};
inline constexpr double PI = 3.14159265358979323846;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument / violated precondition; carries the offending field name.
struct InvalidParameter : Error {
    std::string field;
    InvalidParameter(std::string f, const std::string& msg)
        : Error(f + ": " + msg), field(std::move(f)) {}
};

/// gamma == 0: the Lorentzian degenerates to a delta function. Continuum
/// formulas do not apply; use a discrete single-mode bath instead.
struct DeltaBathError : Error {
    using Error::Error;
};

/// Bose occupation evaluated too close to the omega -> 0 pole.
struct NearPoleError : Error {
    double beta_omega;
    NearPoleError(double bw)
        : Error("bose occupation near pole: beta*omega = " + std::to_string(bw)),
          beta_omega(bw) {}
};

/// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureError : Error {
    double achieved_error;
    QuadratureError(const std::string& msg, double err)
        : Error(msg + " (achieved error estimate " + std::to_string(err) + ")"),
          achieved_error(err) {}
};

/// ODE integration could not continue (step-size underflow).
struct IntegrationError : Error {
    double last_time;
    IntegrationError(const std::string& msg, double t)
        : Error(msg + " at t = " + std::to_string(t)), last_time(t) {}
};

/// Doubly resonant forcing: Phi(lambda) = 0 and Phi'(lambda) = 0.
struct DoubleResonanceError : Error {
    using Error::Error;
};

}  // namespace lorosc
