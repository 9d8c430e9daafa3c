#pragma once

// Adaptive embedded Dormand-Prince 5(4) integrator for complex state vectors.
// Steps are clamped so that every output-grid time and every restart time
// (pulse edge) is hit exactly; step control never straddles a discontinuity.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "lorosc/types.hpp"

namespace lorosc {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = 0;                  ///< 0 = unlimited
    double initial_step = 0;              ///< 0 = auto
    std::vector<double> restart_at = {};  ///< hard restarts (pulse edges)

    void require_valid() const {
        if (!(rel_tol > 0) || !(abs_tol > 0))
            throw InvalidParameter("IntegratorConfig", "tolerances must be positive");
    }
};

namespace detail_rk {
// Dormand-Prince 5(4) tableau
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace detail_rk

/// Integrate y' = rhs(t, y) over an increasing grid starting at t_grid.front(),
/// invoking observer(index, t, y) at every grid time (including the first).
/// rhs signature: void(double t, const std::vector<cplx>& y, std::vector<cplx>& dydt).
template <class Rhs, class Observer>
void integrate_on_grid(Rhs&& rhs, std::vector<cplx> y, std::span<const double> t_grid,
                       const IntegratorConfig& cfg, Observer&& observer) {
    using namespace detail_rk;
    cfg.require_valid();
    if (t_grid.empty()) return;
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw InvalidParameter("t_grid", "must be strictly increasing");

    const std::size_t n = y.size();
    std::vector<cplx> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);

    // stop set: grid times plus restart times within range
    std::vector<double> stops(t_grid.begin(), t_grid.end());
    for (double r : cfg.restart_at)
        if (r > t_grid.front() && r < t_grid.back()) stops.push_back(r);
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

    double t = t_grid.front();
    std::size_t gi = 0;
    if (t_grid[0] == t) observer(std::size_t{0}, t, y);
    gi = 1;

    auto is_restart = [&](double x) {
        for (double r : cfg.restart_at)
            if (x == r) return true;
        return false;
    };

    rhs(t, y, k1);
    double h = cfg.initial_step;
    if (h <= 0) {
        double ynorm = 0, fnorm = 0;
        for (std::size_t i = 0; i < n; ++i) {
            ynorm = std::max(ynorm, std::abs(y[i]));
            fnorm = std::max(fnorm, std::abs(k1[i]));
        }
        h = (fnorm > 0) ? 0.01 * std::max(ynorm, 1.0) / fnorm : 1e-3;
    }
    if (cfg.max_step > 0) h = std::min(h, cfg.max_step);

    for (double stop : stops) {
        if (stop <= t) continue;
        while (t < stop) {
            double hstep = std::min(h, stop - t);
            if (cfg.max_step > 0) hstep = std::min(hstep, cfg.max_step);
            if (!(hstep > std::abs(t) * 1e-15 + 1e-300))
                throw IntegrationError("step size underflow", t);

            for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + hstep * (a21 * k1[i]);
            rhs(t + c2 * hstep, ytmp, k2);
            for (std::size_t i = 0; i < n; ++i)
                ytmp[i] = y[i] + hstep * (a31 * k1[i] + a32 * k2[i]);
            rhs(t + c3 * hstep, ytmp, k3);
            for (std::size_t i = 0; i < n; ++i)
                ytmp[i] = y[i] + hstep * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
            rhs(t + c4 * hstep, ytmp, k4);
            for (std::size_t i = 0; i < n; ++i)
                ytmp[i] = y[i] + hstep * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
            rhs(t + c5 * hstep, ytmp, k5);
            for (std::size_t i = 0; i < n; ++i)
                ytmp[i] =
                    y[i] + hstep * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                    a65 * k5[i]);
            rhs(t + hstep, ytmp, k6);
            for (std::size_t i = 0; i < n; ++i)
                ynew[i] = y[i] + hstep * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                          b6 * k6[i]);
            rhs(t + hstep, ynew, k7);

            double errsq = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const cplx ev = hstep * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                         e6 * k6[i] + e7 * k7[i]);
                const double sc =
                    cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
                const double r = std::abs(ev) / sc;
                errsq += r * r;
            }
            const double err = std::sqrt(errsq / static_cast<double>(n));

            const bool clamped = hstep < h;
            if (err <= 1.0) {
                t += hstep;
                std::swap(y, ynew);
                std::swap(k1, k7);  // FSAL
                while (gi < t_grid.size() && t_grid[gi] <= t + std::abs(t) * 1e-15) {
                    observer(gi, t_grid[gi], y);
                    ++gi;
                }
            }
            const double fac =
                (err > 0) ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
            if (!(clamped && err <= 1.0)) h = hstep * fac;  // keep h across clamped hits
        }
        if (is_restart(stop)) rhs(t, y, k1);  // re-prime FSAL across discontinuity
    }
}

}  // namespace lorosc
