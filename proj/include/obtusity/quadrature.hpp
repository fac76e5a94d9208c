#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <type_traits>
#include <vector>

namespace obtusity::quad {

struct QuadratureSpec {
    double tolerance = 1e-10;
    int max_levels = 12;
    bool singular_lo = false;
    bool singular_hi = false;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = std::numeric_limits<double>::infinity();
    bool converged = false;
    long evaluations = 0;
};

namespace detail {

// Integrands may take (x) or (x, dist_lo, dist_hi); the distances to the
// interval endpoints are exact at tanh-sinh nodes, letting singular factors
// like 1/sqrt(b-x) or log(x-a) be evaluated without cancellation.
template <class F>
inline double call_integrand(F&& f, double x, double dl, double dh) {
    if constexpr (std::is_invocable_r_v<double, F, double, double, double>)
        return f(x, dl, dh);
    else
        return f(x);
}

}  // namespace detail

// Double-exponential (tanh-sinh) quadrature over [a, b]. Handles integrable
// endpoint singularities (log, inverse square root). Levels halve the node
// spacing; convergence is judged by the change between levels.
template <class F>
QuadratureResult tanh_sinh(F&& f, double a, double b, double tolerance, int max_levels = 12) {
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        res.error_estimate = 0.0;
        return res;
    }
    const double r = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double half_pi = 1.5707963267948966;
    // Complements below this are indistinguishable from the endpoint.
    const double min_complement = 1e-280;
    const double u_cap = 6.1;

    double total = 0.0;  // sum of w(u_k) * f over all nodes at current spacing
    long evals = 0;

    // One node pair at +-u; returns the summed contribution.
    auto node_pair = [&](double u, bool& alive) {
        double v = half_pi * std::sinh(u);
        double e2 = std::exp(-2.0 * v);  // v >= 0
        double comp = 2.0 * e2 / (1.0 + e2);
        if (comp < min_complement) {
            alive = false;
            return 0.0;
        }
        double sech2 = 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
        double w = half_pi * std::cosh(u) * sech2;
        double dc = r * comp;
        double dfar = (b - a) - dc;
        double contrib = 0.0;
        {
            double fx = detail::call_integrand(f, b - dc, dfar, dc);
            ++evals;
            if (std::isfinite(fx)) contrib += w * fx;
        }
        {
            double fx = detail::call_integrand(f, a + dc, dc, dfar);
            ++evals;
            if (std::isfinite(fx)) contrib += w * fx;
        }
        return contrib;
    };

    // Level 0: h = 1, all integer nodes.
    {
        double f0 = detail::call_integrand(f, mid, r, r);
        ++evals;
        if (std::isfinite(f0)) total += half_pi * f0;
        bool alive = true;
        int small_run = 0;
        for (int k = 1; alive && k * 1.0 <= u_cap; ++k) {
            double c = node_pair(static_cast<double>(k), alive);
            total += c;
            small_run = (std::abs(c) < 1e-18 * (std::abs(total) + 1e-300)) ? small_run + 1 : 0;
            if (small_run >= 2) break;
        }
    }

    double h = 1.0;
    double prev = r * h * total;
    double prev_delta = std::numeric_limits<double>::infinity();
    res.value = prev;

    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        bool alive = true;
        int small_run = 0;
        double added = 0.0;
        long kmax = static_cast<long>(u_cap / h) + 1;
        for (long k = 1; alive && k <= kmax; k += 2) {  // odd multiples only
            double c = node_pair(static_cast<double>(k) * h, alive);
            added += c;
            small_run =
                (std::abs(c) < 1e-18 * (std::abs(total + added) + 1e-300)) ? small_run + 1 : 0;
            if (small_run >= 2) break;
        }
        total += added;
        double cur = r * h * total;
        double delta = std::abs(cur - prev);
        res.value = cur;
        res.evaluations = evals;
        // Error model: one further level would shrink the change quadratically.
        double err = delta;
        if (prev_delta > 0 && prev_delta < 1.0 && delta > 0)
            err = std::min(delta, delta * (delta / prev_delta));
        res.error_estimate = std::max(err, std::abs(cur) * 1e-16);
        if (level >= 2 && delta <= tolerance * 0.5 + std::abs(cur) * 1e-16) {
            res.converged = true;
            return res;
        }
        prev = cur;
        prev_delta = delta;
    }
    res.converged = res.error_estimate <= tolerance;
    return res;
}

namespace detail {

// Gauss-Kronrod 7-15 abscissae and weights on [-1, 1].
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct GkSegment {
    double a, b, value, error;
    bool operator<(const GkSegment& o) const { return error < o.error; }
};

template <class F>
GkSegment gk15(F&& f, double a, double b, double lo0, double hi0, long& evals) {
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        if (i == 7) {
            double fx = call_integrand(f, c, c - lo0, hi0 - c);
            ++evals;
            resk += kWgk[7] * fx;
            resg += kWg[3] * fx;
        } else {
            double x1 = c - r * kXgk[i];
            double x2 = c + r * kXgk[i];
            double f1 = call_integrand(f, x1, x1 - lo0, hi0 - x1);
            double f2 = call_integrand(f, x2, x2 - lo0, hi0 - x2);
            evals += 2;
            resk += kWgk[i] * (f1 + f2);
            if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
        }
    }
    GkSegment seg;
    seg.a = a;
    seg.b = b;
    seg.value = resk * r;
    seg.error = std::abs(resk - resg) * r;
    return seg;
}

}  // namespace detail

// Adaptive Gauss-Kronrod 7-15 for panels without endpoint singularities.
template <class F>
QuadratureResult gauss_kronrod(F&& f, double a, double b, double tolerance,
                               int max_segments = 4000) {
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        res.error_estimate = 0.0;
        return res;
    }
    long evals = 0;
    std::priority_queue<detail::GkSegment> heap;
    heap.push(detail::gk15(f, a, b, a, b, evals));
    double value = heap.top().value;
    double error = heap.top().error;
    int segments = 1;
    while (error > tolerance && segments < max_segments) {
        detail::GkSegment worst = heap.top();
        heap.pop();
        if (worst.b - worst.a < 1e-15 * (std::abs(worst.a) + std::abs(worst.b) + 1.0)) {
            heap.push(worst);  // cannot split further
            break;
        }
        double m = 0.5 * (worst.a + worst.b);
        detail::GkSegment left = detail::gk15(f, worst.a, m, a, b, evals);
        detail::GkSegment right = detail::gk15(f, m, worst.b, a, b, evals);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++segments;
    }
    res.value = value;
    res.error_estimate = error;
    res.evaluations = evals;
    res.converged = error <= tolerance;
    return res;
}

// Dispatch on the singularity flags of the spec.
template <class F>
QuadratureResult integrate_1d(F&& f, double a, double b, const QuadratureSpec& spec) {
    if (spec.singular_lo || spec.singular_hi)
        return tanh_sinh(std::forward<F>(f), a, b, spec.tolerance, spec.max_levels);
    return gauss_kronrod(std::forward<F>(f), a, b, spec.tolerance);
}

struct Panel {
    double a, b;
    bool singular_lo = false;
    bool singular_hi = false;
};

// Sum of panel integrals; each panel gets the per-panel tolerance.
template <class F>
QuadratureResult integrate_panels(F&& f, const std::vector<Panel>& panels, double tol_each,
                                  int max_levels = 12) {
    QuadratureResult total;
    total.converged = true;
    total.error_estimate = 0.0;
    for (const Panel& p : panels) {
        QuadratureSpec spec;
        spec.tolerance = tol_each;
        spec.max_levels = max_levels;
        spec.singular_lo = p.singular_lo;
        spec.singular_hi = p.singular_hi;
        QuadratureResult r = integrate_1d(f, p.a, p.b, spec);
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.evaluations += r.evaluations;
        total.converged = total.converged && r.converged;
    }
    return total;
}

}  // namespace obtusity::quad
