#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "gwdiv/errors.hpp"

namespace gwdiv::quad {

// Gauss-Kronrod 7/15 node pairs. Positive abscissae of the 15-point Kronrod
// rule on [-1, 1]; odd indices are the embedded 7-point Gauss nodes.
// Constants from the QUADPACK dqk15 tables.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Options {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;
    int max_intervals = 2000;
};

namespace detail {

struct Segment {
    double a, b;
    double value;
    double error;
};

// One K15/G7 evaluation on [a, b]; returns (K15 value, error estimate).
template <class F>
Segment gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double x = h * kXgk[i];
        const double fsum = f(c - x) + f(c + x);
        resk += kWgk[i] * fsum;
        if (i % 2 == 1) resg += kWg[i / 2] * fsum;
    }
    const double value = resk * h;
    const double delta = std::abs((resk - resg) * h);
    // QUADPACK-style sharpening for nearly converged intervals.
    const double err = std::min(delta, std::pow(200.0 * delta, 1.5));
    if (!std::isfinite(value))
        throw NumericalError("quadrature: integrand not finite", delta, 0.0);
    return {a, b, value, err};
}

} // namespace detail

// Adaptive Gauss-Kronrod integration of f on [a, b]. Splits the interval
// with the largest error estimate until the summed estimate meets the
// tolerance; throws NumericalError (carrying the achieved tolerance) if the
// interval budget runs out first.
template <class F>
double integrate(F&& f, double a, double b, Options opt = {}) {
    if (a == b) return 0.0;

    std::vector<detail::Segment> segs;
    segs.reserve(64);
    segs.push_back(detail::gk15(f, a, b));

    for (;;) {
        double total = 0.0, err = 0.0;
        for (const auto& s : segs) {
            total += s.value;
            err += s.error;
        }
        const double goal = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (err <= goal) return total;
        if (static_cast<int>(segs.size()) >= opt.max_intervals)
            throw NumericalError("quadrature: interval budget exhausted", err, goal);

        auto worst = std::max_element(
            segs.begin(), segs.end(),
            [](const auto& x, const auto& y) { return x.error < y.error; });
        const double wa = worst->a, wb = worst->b;
        const double mid = 0.5 * (wa + wb);
        if (mid <= wa || mid >= wb)
            throw NumericalError("quadrature: interval underflow", err, goal);
        *worst = detail::gk15(f, wa, mid);
        segs.push_back(detail::gk15(f, mid, wb));
    }
}

} // namespace gwdiv::quad
