#pragma once

// Average excitation number observables. The continuum AEN is
//   N(t) = |A(t)|^2 nbar(beta_s, omega0) + int dw' J(w') f(w', t) nbar(beta_b, w').
//
// The frequency integral is taken over positive frequencies by default,
// [omega_min, omega_max] with a small infrared cutoff: the Bose factor has a
// 1/w' pole at zero and the Lorentzian tail keeps finite weight there, so the
// positive-domain value depends (logarithmically) on omega_min. The full-line
// domain instead pairs w' with -w' using nbar(-w) = -(1 + nbar(w)); that is
// the reading under which the discrete-bath model with unclipped Lorentzian
// support reproduces the closed forms exactly, and it is used for the
// unitarity sum rule |A|^2 + int J f = 1.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "lorosc/amplitude.hpp"
#include "lorosc/model.hpp"
#include "lorosc/quadrature.hpp"

namespace lorosc {

enum class SpectralDomain { Positive, FullLine };

struct QuadratureConfig {
    double omega_min = 0;  ///< infrared cutoff (> 0)
    double omega_max = 0;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    std::size_t max_intervals = 4000;
    SpectralDomain domain = SpectralDomain::Positive;

    static QuadratureConfig defaults_for(const ModelParams& p) {
        QuadratureConfig q;
        q.omega_min = 1e-6 * p.omega0;
        q.omega_max = std::max(p.Omega + 50 * std::max(p.gamma, p.Gamma),
                               p.omega0 + 50 * p.Gamma);
        return q;
    }

    void require_valid() const {
        if (!(omega_min > 0) || !(omega_max > omega_min))
            throw InvalidParameter("QuadratureConfig", "need 0 < omega_min < omega_max");
        if (!(rel_tol > 0) || !(abs_tol > 0))
            throw InvalidParameter("QuadratureConfig", "tolerances must be positive");
    }
};

enum class Provenance { Analytic, LocalOdeOracle, DiscreteBathOracle };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Analytic: return "analytic";
        case Provenance::LocalOdeOracle: return "local-ode-oracle";
        case Provenance::DiscreteBathOracle: return "discrete-bath-oracle";
    }
    return "?";
}

struct Trajectory {
    std::vector<double> times;
    std::vector<double> aen;
    ModelParams params;
    Provenance provenance = Provenance::Analytic;

    void require_valid() const {
        if (times.size() != aen.size())
            throw InvalidParameter("Trajectory", "times/aen length mismatch");
        for (std::size_t i = 1; i < times.size(); ++i)
            if (!(times[i] > times[i - 1]))
                throw InvalidParameter("Trajectory", "times must be strictly increasing");
        for (double v : aen)
            if (v < -1e-9) throw InvalidParameter("Trajectory", "negative AEN sample");
    }
};

namespace detail_obs {

/// Split points for the AEN integrand: the spectral peak, the system line and
/// the two minima of the |C3|^2 denominator, plus decades near the IR cutoff.
inline std::vector<double> feature_splits(const ModelParams& p, double lo, double hi) {
    std::vector<double> s;
    auto add = [&](double x) {
        if (x > lo && x < hi) s.push_back(x);
    };
    add(p.omega0);
    add(p.Omega);
    const double r = std::sqrt(p.Gamma * p.gamma / 2);
    add(p.omega0 - r);
    add(p.omega0 + r);
    for (double k : {0.5, 2.0, 8.0}) {
        add(p.Omega - k * p.gamma);
        add(p.Omega + k * p.gamma);
        add(p.omega0 - k * p.Gamma);
        add(p.omega0 + k * p.Gamma);
    }
    if (lo > 0)
        for (double x = lo * 10; x < std::min(hi, 0.5 * p.omega0); x *= 10) add(x);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace detail_obs

/// Weighted bath integral  int J(w) k(w, .) nbar(beta_b, w) dw  on the
/// configured domain, for an arbitrary kernel k (f(-, t) or its limit).
template <class Kernel>
double bath_thermal_integral(const ModelParams& p, const QuadratureConfig& q, Kernel&& kernel) {
    q.require_valid();
    const double beta_b = 1.0 / p.Tb;
    if (q.domain == SpectralDomain::Positive) {
        auto integrand = [&](double w) {
            return spectral_density(p, w) * kernel(w) / std::expm1(beta_b * w);
        };
        auto r = quad::integrate(integrand, q.omega_min, q.omega_max, q.rel_tol, q.abs_tol,
                                 q.max_intervals, detail_obs::feature_splits(p, q.omega_min, q.omega_max));
        if (!r.converged)
            throw QuadratureError("bath integral did not converge", r.error_estimate);
        return r.value;
    }
    // FullLine: pair w with -w; nbar(-w) = -(1 + nbar(w)).
    auto integrand = [&](double w) {
        const double nb = 1.0 / std::expm1(beta_b * w);
        const double wp = spectral_density(p, w) * kernel(w);
        const double wm = spectral_density(p, -w) * kernel(-w);
        return wp * nb - wm * (1.0 + nb);
    };
    std::vector<double> splits;
    for (double x : detail_obs::feature_splits(p, -q.omega_max, q.omega_max)) {
        const double ax = std::abs(x);
        if (ax > q.omega_min && ax < q.omega_max) splits.push_back(ax);
    }
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    auto r = quad::integrate(integrand, q.omega_min, q.omega_max, q.rel_tol, q.abs_tol,
                             q.max_intervals, splits);
    if (!r.converged)
        throw QuadratureError("bath integral did not converge", r.error_estimate);
    return r.value;
}

/// N(t) by adaptive quadrature.
inline double aen_at(const ModelParams& p, double t, const QuadratureConfig& q) {
    if (t < 0) throw InvalidParameter("t", "must be non-negative");
    p.require_valid();
    const auto A = solve_amplitude(p);
    const double sys = std::norm(A.value(t)) * bose_occupation(1.0 / p.Ts, p.omega0);
    const double bath = bath_thermal_integral(
        p, q, [&](double w) { return solve_bath_response(p, w).f(t); });
    return sys + bath;
}

/// t -> infinity AEN: only the |C3|^2 term of f survives. Independent of Ts.
inline double steady_state_aen(const ModelParams& p, const QuadratureConfig& q) {
    p.require_valid();
    if (!(p.gamma > 0)) throw DeltaBathError("steady state requires gamma > 0");
    return bath_thermal_integral(
        p, q, [&](double w) { return solve_bath_response(p, w).f_infinity(); });
}

/// Markovian-limit closed form: thermal equilibrium with the bath.
inline double markovian_limit_aen(const ModelParams& p) {
    return bose_occupation(1.0 / p.Tb, p.omega0);
}

/// gamma -> 0 narrow-bath law (4 gamma / Gamma) nbar(beta_b, omega0); 0 at gamma = 0.
inline double gamma_zero_limit_aen(const ModelParams& p) {
    if (p.gamma == 0) return 0.0;
    return (4.0 * p.gamma / p.Gamma) * bose_occupation(1.0 / p.Tb, p.omega0);
}

/// Unitarity sum |A(t)|^2 + int J f dw' over the full line (no thermal factor);
/// equals 1 exactly for the Lorentzian model.
inline double unitarity_sum(const ModelParams& p, double t, double rel_tol = 1e-8) {
    const auto A = solve_amplitude(p);
    const double span = 50 * std::max({p.gamma, p.Gamma, std::abs(p.omega0 - p.Omega) + 1.0});
    const double lo = p.Omega - span, hi = p.Omega + span;
    auto integrand = [&](double w) {
        return spectral_density(p, w) * solve_bath_response(p, w).f(t);
    };
    std::vector<double> splits = detail_obs::feature_splits(p, lo, hi);
    splits.push_back(0.0);
    auto r = quad::integrate(integrand, lo, hi, rel_tol, 1e-12, 6000, splits);
    if (!r.converged) throw QuadratureError("unitarity integral did not converge", r.error_estimate);
    return std::norm(A.value(t)) + r.value;
}

/// Earliest sample time t* such that every sample at s >= t* satisfies
/// |N(s) - steady| <= band * max(steady, eps_floor). Returns nullopt when the
/// trajectory tail has not settled into the band.
inline std::optional<double> relaxation_time(const Trajectory& traj, double steady_value,
                                             double band, double eps_floor = 1e-6) {
    if (!(band > 0) || !(band < 1)) throw InvalidParameter("band", "must lie in (0, 1)");
    traj.require_valid();
    if (traj.times.empty()) return std::nullopt;
    const double thr = band * std::max(steady_value, eps_floor);
    std::size_t i = traj.times.size();
    while (i > 0 && std::abs(traj.aen[i - 1] - steady_value) <= thr) --i;
    if (i == traj.times.size()) return std::nullopt;  // last sample outside the band
    return traj.times[i];
}

}  // namespace lorosc
