#pragma once

// Piecewise-constant frequency control. A rectangular LEO train sets
// C(t) = omega1 on (n t_c, n t_c + t_p] and omega0 elsewhere; a kick pulse
// sets C(t) = omega_k on (t0, t0 + dt]. Between edges the dynamics is the
// constant-frequency model with omega0 -> C, so trajectories chain the
// closed forms segment by segment: the value and the memory variable
// z = int_0^t G(t-s) X(s) ds are continuous across an edge while the
// derivative jumps by -i (C_new - C_old) X.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "lorosc/amplitude.hpp"
#include "lorosc/complex_ode.hpp"
#include "lorosc/model.hpp"

namespace lorosc {

struct PulseSchedule {
    enum class Kind { None, LeoTrain, Kick } kind = Kind::None;
    double omega1 = 0;  ///< LEO pulse frequency
    double t_c = 0;     ///< LEO period
    double t_p = 0;     ///< LEO pulse width, t_p <= t_c
    double omega_k = 0; ///< kick frequency
    double t0 = 0;      ///< kick start
    double dt = 0;      ///< kick duration

    static PulseSchedule none() { return {}; }
    static PulseSchedule leo_train(double omega1, double t_c, double t_p) {
        PulseSchedule s;
        s.kind = Kind::LeoTrain;
        s.omega1 = omega1;
        s.t_c = t_c;
        s.t_p = t_p;
        return s;
    }
    static PulseSchedule kick(double omega_k, double t0, double dt) {
        PulseSchedule s;
        s.kind = Kind::Kick;
        s.omega_k = omega_k;
        s.t0 = t0;
        s.dt = dt;
        return s;
    }

    std::vector<std::string> validate(double omega0) const {
        std::vector<std::string> out;
        if (kind == Kind::LeoTrain) {
            if (!(t_c > 0)) out.push_back("t_c must be positive");
            if (!(t_p > 0)) out.push_back("t_p must be positive");
            if (t_p > t_c) out.push_back("t_p must not exceed t_c");
            if (!(omega1 > omega0)) out.push_back("omega1 must exceed omega0");
        } else if (kind == Kind::Kick) {
            if (!(dt > 0)) out.push_back("kick duration must be positive");
            if (t0 < 0) out.push_back("kick start must be non-negative");
            if (!(omega_k > 0)) out.push_back("omega_k must be positive");
        }
        return out;
    }

    /// Edge times (pulse switch points) in (0, t_max).
    std::vector<double> edges(double t_max) const {
        std::vector<double> e;
        if (kind == Kind::LeoTrain) {
            for (std::size_t n = 0;; ++n) {
                const double on = static_cast<double>(n) * t_c;
                const double off = on + t_p;
                if (on >= t_max) break;
                if (on > 0) e.push_back(on);
                if (off < t_max && t_p < t_c) e.push_back(off);
            }
        } else if (kind == Kind::Kick) {
            if (t0 > 0 && t0 < t_max) e.push_back(t0);
            if (t0 + dt < t_max) e.push_back(t0 + dt);
        }
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        return e;
    }
};

/// C(t) with the half-open convention: a pulse holds on (start, start + width].
inline double control_frequency(const PulseSchedule& s, double omega0, double t) {
    if (t < 0) throw InvalidParameter("t", "must be non-negative");
    switch (s.kind) {
        case PulseSchedule::Kind::None: return omega0;
        case PulseSchedule::Kind::LeoTrain: {
            if (t <= 0) return omega0;
            double n = std::floor(t / s.t_c);
            double r = t - n * s.t_c;
            if (r == 0) {  // t is an exact period boundary: belongs to the previous period
                n -= 1;
                r = s.t_c;
            }
            return (r <= s.t_p) ? s.omega1 : omega0;
        }
        case PulseSchedule::Kind::Kick:
            return (t > s.t0 && t <= s.t0 + s.dt) ? s.omega_k : omega0;
    }
    return omega0;
}

namespace detail_control {

struct Segment {
    double begin, end;
    double C;  ///< control frequency on (begin, end]
};

inline std::vector<Segment> segments(const PulseSchedule& s, double omega0, double t_max) {
    std::vector<double> cuts = s.edges(t_max);
    cuts.insert(cuts.begin(), 0.0);
    cuts.push_back(t_max);
    std::vector<Segment> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] > cuts[i])
            out.push_back({cuts[i], cuts[i + 1],
                           control_frequency(s, omega0, 0.5 * (cuts[i] + cuts[i + 1]))});
    return out;
}

inline cplx p1_of(const ModelParams& p, double C) { return {p.gamma, C + p.Omega}; }
inline cplx p2_of(const ModelParams& p, double C) {
    return {p.Gamma * p.gamma / 2 - C * p.Omega, p.gamma * C};
}

}  // namespace detail_control

/// Piecewise closed-form evaluator for A(t) or the scaled bath response
/// B(w', t) under a pulse schedule. Exact up to roundoff.
class ChainedSolution {
  public:
    ChainedSolution(const ModelParams& p, const PulseSchedule& sched, double t_max,
                    std::optional<double> omega_prime = std::nullopt)
        : omega_prime_(omega_prime) {
        const auto segs = detail_control::segments(sched, p.omega0, t_max);
        const cplx lam = omega_prime ? -I * (*omega_prime) : cplx{};
        const cplx famp = omega_prime ? bath_forcing_amplitude(p, *omega_prime) : cplx{};
        cplx v = omega_prime ? cplx{0, 0} : cplx{1, 0};
        cplx z = 0;  // memory variable, continuous across edges
        for (const auto& sg : segs) {
            GeneralODEProblem pr;
            pr.p1 = detail_control::p1_of(p, sg.C);
            pr.p2 = detail_control::p2_of(p, sg.C);
            cplx vd = -I * sg.C * v - z;
            if (omega_prime) {
                const cplx drive = std::exp(lam * sg.begin);
                pr.forcing_amplitude = famp * drive;
                pr.forcing_exponent = lam;
                vd -= I * drive;
            }
            pr.initial_value = v;
            pr.initial_derivative = vd;
            Piece pc;
            pc.begin = sg.begin;
            pc.end = sg.end;
            pc.sol = solve_forced(pr);
            pieces_.push_back(pc);
            const double w = sg.end - sg.begin;
            const cplx vb = pc.sol.value(w);
            cplx vdb = pc.sol.derivative(w);
            z = -I * sg.C * vb - vdb;
            if (omega_prime) z -= I * std::exp(lam * sg.end);
            v = vb;
        }
    }

    cplx value(double t) const {
        const Piece& pc = piece_at(t);
        return pc.sol.value(t - pc.begin);
    }
    double abs2(double t) const { return std::norm(value(t)); }

  private:
    struct Piece {
        double begin, end;
        ForcedSolution sol;
    };
    const Piece& piece_at(double t) const {
        // pieces cover (begin, end]; t = 0 maps to the first piece
        std::size_t lo = 0, hi = pieces_.size();
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (pieces_[mid].begin < t) lo = mid;
            else hi = mid;
        }
        return pieces_[lo];
    }
    std::vector<Piece> pieces_;
    std::optional<double> omega_prime_;
};

/// First time in (t0, t0 + horizon] at which |A|^2 reaches a strict local
/// minimum while the kick frequency omega_k is held on. The returned time is
/// the suggested kick end (the paper-style stopping rule: stop when the
/// decay strength changes sign).
inline std::optional<double> suggest_kick_end(const ModelParams& p, double omega_k, double t0,
                                              double horizon, std::size_t samples = 8192) {
    PulseSchedule hold = PulseSchedule::kick(omega_k, t0, horizon);
    ChainedSolution A(p, hold, t0 + horizon);
    const double dt = horizon / static_cast<double>(samples);
    double prev2 = A.abs2(t0 + dt * 0.5);
    double prev1 = A.abs2(t0 + dt * 1.5);
    for (std::size_t i = 2; i < samples; ++i) {
        const double cur = A.abs2(t0 + dt * (0.5 + static_cast<double>(i)));
        if (prev1 < prev2 && prev1 < cur)
            return t0 + dt * (0.5 + static_cast<double>(i - 1));
        prev2 = prev1;
        prev1 = cur;
    }
    return std::nullopt;
}

}  // namespace lorosc
