#pragma once

// Adaptive panel quadrature on a fixed-order interpolatory rule
// (Gauss-Kronrod 7-15). Panels wider than `max_panel_width` are split
// before evaluation, which anti-aliases Fourier-type integrands when the
// cap is set to half the oscillation period. Refinement bisects the panel
// with the largest error estimate until the total estimate drops below
// max(abs_tol, rel_tol*|integral|) or the panel cap is exceeded.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "pdtk/errors.hpp"

namespace pdtk {

struct QuadratureOptions {
    double abs_tol = 1.0e-12;
    double rel_tol = 1.0e-12;
    std::size_t max_panels = 1'000'000;
    double max_panel_width = std::numeric_limits<double>::infinity();
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t panels = 0;
};

namespace detail {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
inline constexpr std::array<double, 8> kGk15Nodes{
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};

inline constexpr std::array<double, 8> kGk15Weights{
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr std::array<double, 4> kGauss7Weights{
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;
    double error = 0.0;
};

template <typename F>
Panel gk15(F& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double halfw = 0.5 * (hi - lo);

    const double fc = f(center);
    double kronrod = kGk15Weights[7] * fc;
    double gauss = kGauss7Weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = halfw * kGk15Nodes[i];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kGk15Weights[i] * sum;
        if (i % 2 == 1) // odd-index Kronrod nodes are the Gauss-7 nodes
            gauss += kGauss7Weights[i / 2] * sum;
    }
    kronrod *= halfw;
    gauss *= halfw;
    return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

} // namespace detail

// Integrates f over consecutive [breakpoints[i], breakpoints[i+1]] panels.
// Breakpoints must be finite and strictly increasing (>= 2 entries).
template <typename F>
QuadratureResult integrate_adaptive(F&& f, const std::vector<double>& breakpoints,
                                    const QuadratureOptions& opt = {}) {
    if (breakpoints.size() < 2)
        throw std::domain_error("integrate_adaptive: need at least two breakpoints");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::domain_error("integrate_adaptive: breakpoints must be strictly increasing");

    std::vector<detail::Panel> panels;
    auto add_segment = [&](double lo, double hi) {
        const double width = hi - lo;
        std::size_t pieces = 1;
        if (std::isfinite(opt.max_panel_width) && width > opt.max_panel_width) {
            const double n = std::ceil(width / opt.max_panel_width);
            if (n > static_cast<double>(opt.max_panels))
                throw NumericalError("integrate_adaptive: panel-width cap requires " +
                                     std::to_string(n) + " panels, limit " +
                                     std::to_string(opt.max_panels));
            pieces = static_cast<std::size_t>(n);
        }
        for (std::size_t i = 0; i < pieces; ++i) {
            const double a = lo + width * static_cast<double>(i) / static_cast<double>(pieces);
            const double b =
                (i + 1 == pieces) ? hi
                                  : lo + width * static_cast<double>(i + 1) / static_cast<double>(pieces);
            panels.push_back(detail::gk15(f, a, b));
        }
    };

    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        add_segment(breakpoints[i], breakpoints[i + 1]);
    if (panels.size() > opt.max_panels)
        throw NumericalError("integrate_adaptive: initial panel count " +
                             std::to_string(panels.size()) + " exceeds limit " +
                             std::to_string(opt.max_panels));

    auto worse = [](const detail::Panel& a, const detail::Panel& b) { return a.error < b.error; };
    std::make_heap(panels.begin(), panels.end(), worse);

    auto totals = [&panels]() {
        double value = 0.0, error = 0.0;
        for (const auto& p : panels) {
            value += p.value;
            error += p.error;
        }
        return std::pair<double, double>{value, error};
    };

    auto [value, error] = totals();
    std::size_t refinements = 0;
    while (error > std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) {
        if (panels.size() + 1 > opt.max_panels)
            throw NumericalError("integrate_adaptive: refinement cap exceeded at " +
                                 std::to_string(panels.size()) + " panels (error estimate " +
                                 std::to_string(error) + ")");
        std::pop_heap(panels.begin(), panels.end(), worse);
        detail::Panel worst = panels.back();
        panels.pop_back();
        if (worst.error <= 0.0) { // largest estimate already zero: converged
            panels.push_back(worst);
            break;
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(worst.lo < mid && mid < worst.hi)) {
            // Panel at double resolution; its estimate cannot improve.
            worst.error = 0.0;
            panels.push_back(worst);
            std::push_heap(panels.begin(), panels.end(), worse);
            std::tie(value, error) = totals();
            continue;
        }
        const detail::Panel left = detail::gk15(f, worst.lo, mid);
        const detail::Panel right = detail::gk15(f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push_back(left);
        std::push_heap(panels.begin(), panels.end(), worse);
        panels.push_back(right);
        std::push_heap(panels.begin(), panels.end(), worse);
        if (++refinements % 4096 == 0)
            std::tie(value, error) = totals(); // reset accumulated drift
    }
    std::tie(value, error) = totals();
    return {value, error, panels.size()};
}

template <typename F>
QuadratureResult integrate_adaptive(F&& f, double lo, double hi,
                                    const QuadratureOptions& opt = {}) {
    return integrate_adaptive(static_cast<F&&>(f), std::vector<double>{lo, hi}, opt);
}

// Breakpoints for a Lorentzian of half-width-at-half-maximum scale `gamma`
// peaked at 0, integrated over [-hi, hi] (or [0, hi] one-sided): panels are
// geometrically concentrated within |x| < 10*gamma and keep doubling
// outward so that wide supports (hi/gamma up to ~1e57) stay cheap.
inline std::vector<double> lorentzian_breakpoints(double gamma, double hi,
                                                  bool one_sided = false) {
    if (!(gamma > 0.0) || !(hi > 0.0))
        throw std::domain_error("lorentzian_breakpoints: gamma and hi must be > 0");
    std::vector<double> right{0.0};
    double x = 0.25 * gamma;
    while (x < hi) {
        right.push_back(x);
        x *= 2.0;
    }
    right.push_back(hi);
    if (one_sided)
        return right;
    std::vector<double> pts;
    pts.reserve(2 * right.size() - 1);
    for (std::size_t i = right.size(); i-- > 1;)
        pts.push_back(-right[i]);
    pts.insert(pts.end(), right.begin(), right.end());
    return pts;
}

} // namespace pdtk
