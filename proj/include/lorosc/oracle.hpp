#pragma once

// Independent numerical integrators validating every closed form.
//
// (i) Local-ODE reduction: the exponential kernel makes the memory integral
//     z(t) = int_0^t G(t-s) X(s) ds obey z' = -(gamma + i Omega) z + (Gamma
//     gamma / 2) X exactly, so the Volterra equation becomes a local 2x2
//     system. Valid for time-dependent control frequency C(t).
// (ii) Discrete bath: the full linear system a' = -i C(t) a - i sum g_j b_j,
//      b_j' = -i w_j b_j - i g_j a for sampled modes.
// Both integrate with the adaptive Dormand-Prince pair, restarting at pulse
// edges so step control never straddles a discontinuity of C(t).

#include <cmath>
#include <vector>

#include "lorosc/control.hpp"
#include "lorosc/model.hpp"
#include "lorosc/observables.hpp"
#include "lorosc/rk.hpp"

namespace lorosc {

struct LocalODEState {
    cplx A{1, 0};
    cplx z{0, 0};
};

struct DiscreteBathState {
    cplx A{1, 0};
    std::vector<cplx> B;

    double norm_sum() const {
        double s = std::norm(A);
        for (const auto& b : B) s += std::norm(b);
        return s;
    }
};

namespace detail_oracle {

template <class RhsFor, class Observer>
void integrate_segmented(RhsFor&& rhs_for, const PulseSchedule& sched, double omega0,
                         std::vector<cplx> y, const std::vector<double>& t_grid,
                         IntegratorConfig cfg, Observer&& observer) {
    if (t_grid.empty()) return;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<double> cuts{t_grid.front()};
    for (double e : sched.edges(t_grid.back()))
        if (e > t_grid.front() && e < t_grid.back()) cuts.push_back(e);
    cuts.push_back(t_grid.back());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    observer(std::size_t{0}, t_grid.front(), y);
    std::size_t gi = 1;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double a = cuts[s], b = cuts[s + 1];
        const double C = control_frequency(sched, omega0, 0.5 * (a + b));
        std::vector<double> sub{a};
        std::vector<std::size_t> idx{kNone};
        while (gi < t_grid.size() && t_grid[gi] <= b) {
            sub.push_back(t_grid[gi]);
            idx.push_back(gi);
            ++gi;
        }
        if (sub.back() < b) {
            sub.push_back(b);
            idx.push_back(kNone);
        }
        if (sub.size() < 2) continue;
        auto rhs = rhs_for(C);
        integrate_on_grid(rhs, y, sub, cfg,
                          [&](std::size_t k, double t, const std::vector<cplx>& yy) {
                              if (idx[k] != kNone) observer(idx[k], t, yy);
                              if (k + 1 == sub.size()) y = yy;  // carry across the edge
                          });
    }
}

}  // namespace detail_oracle

/// A(t) samples from the exact local reduction of the memory kernel.
inline std::vector<cplx> evolve_local_ode(const ModelParams& p, const PulseSchedule& sched,
                                          const std::vector<double>& t_grid,
                                          const IntegratorConfig& cfg = {}) {
    p.require_valid();
    if (t_grid.empty() || t_grid.front() != 0.0)
        throw InvalidParameter("t_grid", "must start at 0");
    std::vector<cplx> out(t_grid.size());
    const double g = p.gamma, Om = p.Omega, hG = 0.5 * p.Gamma * p.gamma;
    auto rhs_for = [&](double C) {
        return [=](double, const std::vector<cplx>& y, std::vector<cplx>& dy) {
            dy[0] = -I * C * y[0] - y[1];
            dy[1] = -(g + I * Om) * y[1] + hG * y[0];
        };
    };
    detail_oracle::integrate_segmented(rhs_for, sched, p.omega0, {cplx{1, 0}, cplx{0, 0}},
                                       t_grid, cfg,
                                       [&](std::size_t i, double, const std::vector<cplx>& y) {
                                           out[i] = y[0];
                                       });
    return out;
}

inline std::vector<cplx> evolve_local_ode(const ModelParams& p,
                                          const std::vector<double>& t_grid,
                                          const IntegratorConfig& cfg = {}) {
    return evolve_local_ode(p, PulseSchedule::none(), t_grid, cfg);
}

/// Scaled bath response beta(w', t) = B_j(t)/g_j from the same local reduction.
inline std::vector<cplx> evolve_local_bath_response(const ModelParams& p,
                                                    const PulseSchedule& sched,
                                                    double omega_prime,
                                                    const std::vector<double>& t_grid,
                                                    const IntegratorConfig& cfg = {}) {
    p.require_valid();
    std::vector<cplx> out(t_grid.size());
    const double g = p.gamma, Om = p.Omega, hG = 0.5 * p.Gamma * p.gamma;
    auto rhs_for = [&](double C) {
        return [=](double t, const std::vector<cplx>& y, std::vector<cplx>& dy) {
            dy[0] = -I * C * y[0] - y[1] - I * std::exp(-I * omega_prime * t);
            dy[1] = -(g + I * Om) * y[1] + hG * y[0];
        };
    };
    detail_oracle::integrate_segmented(rhs_for, sched, p.omega0, {cplx{0, 0}, cplx{0, 0}},
                                       t_grid, cfg,
                                       [&](std::size_t i, double, const std::vector<cplx>& y) {
                                           out[i] = y[0];
                                       });
    return out;
}

/// Full discrete-bath evolution; returns one state per grid time.
inline std::vector<DiscreteBathState> evolve_discrete_bath(const ModelParams& p,
                                                           const std::vector<BathMode>& modes,
                                                           const PulseSchedule& sched,
                                                           const std::vector<double>& t_grid,
                                                           const IntegratorConfig& cfg = {}) {
    p.require_valid();
    if (modes.size() < 2) throw InvalidParameter("modes", "need at least 2 modes");
    if (t_grid.empty() || t_grid.front() != 0.0)
        throw InvalidParameter("t_grid", "must start at 0");
    const std::size_t n = modes.size();
    std::vector<DiscreteBathState> out(t_grid.size());

    auto rhs_for = [&](double C) {
        return [&modes, C, n](double, const std::vector<cplx>& y, std::vector<cplx>& dy) {
            cplx acc{0, 0};
            for (std::size_t j = 0; j < n; ++j) acc += modes[j].g_j * y[j + 1];
            dy[0] = -I * (C * y[0] + acc);
            for (std::size_t j = 0; j < n; ++j)
                dy[j + 1] = -I * (modes[j].omega_j * y[j + 1] + modes[j].g_j * y[0]);
        };
    };
    std::vector<cplx> y0(n + 1, cplx{0, 0});
    y0[0] = {1, 0};
    detail_oracle::integrate_segmented(rhs_for, sched, p.omega0, std::move(y0), t_grid, cfg,
                                       [&](std::size_t i, double, const std::vector<cplx>& y) {
                                           out[i].A = y[0];
                                           out[i].B.assign(y.begin() + 1, y.end());
                                       });
    return out;
}

inline std::vector<DiscreteBathState> evolve_discrete_bath(const ModelParams& p,
                                                           const std::vector<BathMode>& modes,
                                                           const std::vector<double>& t_grid,
                                                           const IntegratorConfig& cfg = {}) {
    return evolve_discrete_bath(p, modes, PulseSchedule::none(), t_grid, cfg);
}

/// AEN from discrete-bath samples: N = |A|^2 nbar_s + sum_j |B_j|^2 nbar_b(w_j).
inline Trajectory aen_from_discrete(const std::vector<DiscreteBathState>& states,
                                    const ModelParams& p, const std::vector<BathMode>& modes,
                                    const std::vector<double>& t_grid) {
    if (states.size() != t_grid.size())
        throw InvalidParameter("states", "states/grid length mismatch");
    Trajectory tr;
    tr.times = t_grid;
    tr.params = p;
    tr.provenance = Provenance::DiscreteBathOracle;
    const double nb_s = bose_occupation(1.0 / p.Ts, p.omega0);
    std::vector<double> nb(modes.size());
    for (std::size_t j = 0; j < modes.size(); ++j)
        nb[j] = 1.0 / std::expm1(modes[j].omega_j / p.Tb);
    tr.aen.reserve(states.size());
    for (const auto& st : states) {
        if (st.B.size() != modes.size())
            throw InvalidParameter("states", "state/mode count mismatch");
        double s = std::norm(st.A) * nb_s, comp = 0;
        for (std::size_t j = 0; j < modes.size(); ++j) {
            const double y = std::norm(st.B[j]) * nb[j] - comp;
            const double t = s + y;
            comp = (t - s) - y;
            s = t;
        }
        tr.aen.push_back(s);
    }
    return tr;
}

}  // namespace lorosc
