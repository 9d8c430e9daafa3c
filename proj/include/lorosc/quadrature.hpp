#pragma once

// Adaptive Gauss-Kronrod 15(7) quadrature with caller-supplied split points
// and deterministic, compensated accumulation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "lorosc/types.hpp"

namespace lorosc {
namespace quad {

namespace gk15 {
// 15-point Kronrod abscissae/weights and embedded 7-point Gauss weights.
inline constexpr double xgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr double wgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
inline constexpr double wg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

template <class F>
inline void apply(F&& f, double a, double b, double& kronrod, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int j = 0; j < 7; ++j) {
        const double fv = f(c - h * xgk[j]) + f(c + h * xgk[j]);
        resk += wgk[j] * fv;
        if (j % 2 == 1) resg += wg[j / 2] * fv;
    }
    const double f0 = f(c);
    resk += wgk[7] * f0;
    resg += wg[3] * f0;
    kronrod = resk * h;
    err = std::abs((resk - resg) * h);
}
}  // namespace gk15

struct Result {
    double value = 0;
    double error_estimate = 0;
    bool converged = false;
    std::size_t evaluations = 0;
};

/// Integrate f over [a, b]. `splits` inside (a, b) seed the initial subdivision.
template <class F>
Result integrate(F&& f, double a, double b, double rel_tol = 1e-9, double abs_tol = 1e-12,
                 std::size_t max_intervals = 4000, std::vector<double> splits = {}) {
    struct Seg {
        double a, b, val, err;
        std::size_t order;
    };
    struct Cmp {
        bool operator()(const Seg& x, const Seg& y) const {
            if (x.err != y.err) return x.err < y.err;
            return x.order > y.order;  // stable pop order for equal errors
        }
    };

    splits.push_back(a);
    splits.push_back(b);
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

    std::priority_queue<Seg, std::vector<Seg>, Cmp> heap;
    std::size_t order = 0, evals = 0;
    double total = 0, toterr = 0;
    auto push = [&](double lo, double hi) {
        if (!(hi > lo)) return;
        Seg s{lo, hi, 0, 0, order++};
        gk15::apply(f, lo, hi, s.val, s.err);
        evals += 15;
        total += s.val;
        toterr += s.err;
        heap.push(s);
    };
    for (std::size_t i = 0; i + 1 < splits.size(); ++i)
        if (splits[i] >= a && splits[i + 1] <= b) push(splits[i], splits[i + 1]);

    while (toterr > std::max(abs_tol, rel_tol * std::abs(total)) && heap.size() < max_intervals) {
        Seg worst = heap.top();
        heap.pop();
        total -= worst.val;
        toterr -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval exhausted at machine precision
            total += worst.val;
            toterr += worst.err;
            break;
        }
        push(worst.a, mid);
        push(mid, worst.b);
    }

    // deterministic compensated re-accumulation in position order
    std::vector<Seg> segs;
    segs.reserve(heap.size());
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(), [](const Seg& x, const Seg& y) { return x.a < y.a; });
    double sum = 0, comp = 0, errsum = 0;
    for (const auto& s : segs) {
        const double y = s.val - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        errsum += s.err;
    }

    Result r;
    r.value = sum;
    r.error_estimate = errsum;
    r.evaluations = evals;
    r.converged = errsum <= std::max(abs_tol, rel_tol * std::abs(sum)) * 1.0000001;
    return r;
}

/// Fixed composite GK15 over explicit panel edges (no adaptivity); returns the sum.
template <class F>
double integrate_panels(F&& f, const std::vector<double>& edges) {
    double sum = 0, comp = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        double v, e;
        gk15::apply(f, edges[i], edges[i + 1], v, e);
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace quad
}  // namespace lorosc
