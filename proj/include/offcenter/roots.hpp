#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "offcenter/angle.hpp"

namespace offcenter::roots {

struct RootResult {
    double x = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    bool newton_used = false;
};

/// Plain bisection on a sign-changing bracket, down to width `tol`.
template <class F>
RootResult bisect(F&& f, double a, double b, double tol = 1e-12, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return {a, 0.0, 0, true};
    if (fb == 0.0) return {b, 0.0, 0, true};
    if ((fa < 0.0) == (fb < 0.0)) throw DomainError("bisect: root not bracketed");
    int it = 0;
    while (std::abs(b - a) > tol && it < max_iter) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        const double fm = f(m);
        ++it;
        if (fm == 0.0) return {m, 0.0, it, true};
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    const double x = std::abs(fa) < std::abs(fb) ? a : b;
    return {x, std::min(std::abs(fa), std::abs(fb)), it, true};
}

/// Hybrid refinement of a bracketed root: bisection down to `bisect_width`, then
/// safeguarded Newton until |f| < `residual_tol`. Newton steps that leave the
/// bracket or fail to shrink the residual hand control back to bisection.
///
/// `fdf(x)` returns a pair {f(x), f'(x)}.
template <class FDF>
RootResult refine_bracketed(FDF&& fdf, double a, double b, double bisect_width = 1e-8,
                            double residual_tol = 1e-12, int newton_max = 100) {
    double fa = fdf(a).first;
    double fb = fdf(b).first;
    if (fa == 0.0) return {a, 0.0, 0, true};
    if (fb == 0.0) return {b, 0.0, 0, true};
    if ((fa < 0.0) == (fb < 0.0)) throw DomainError("refine_bracketed: root not bracketed");
    if (a > b) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    int it = 0;
    auto bisect_step = [&] {
        const double m = 0.5 * (a + b);
        const double fm = fdf(m).first;
        ++it;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
        return fm;
    };
    while (b - a > bisect_width) {
        if (bisect_step() == 0.0) return {0.5 * (a + b), 0.0, it, true};
    }

    double x = std::abs(fa) < std::abs(fb) ? a : b;
    auto [fx, dfx] = fdf(x);
    bool newton_used = false;
    for (int k = 0; k < newton_max && std::abs(fx) >= residual_tol; ++k) {
        const double step = (dfx != 0.0) ? fx / dfx : 0.0;
        const double xn = x - step;
        bool accepted = false;
        if (dfx != 0.0 && std::isfinite(xn) && xn >= a && xn <= b) {
            auto [fn, dfn] = fdf(xn);
            ++it;
            if (std::abs(fn) < std::abs(fx)) {
                // keep the bracket consistent with the new point
                if ((fn < 0.0) == (fa < 0.0)) {
                    a = xn;
                    fa = fn;
                } else {
                    b = xn;
                    fb = fn;
                }
                x = xn;
                fx = fn;
                dfx = dfn;
                accepted = true;
                newton_used = true;
            }
        }
        if (!accepted) {
            const double m = 0.5 * (a + b);
            if (m == a || m == b) break; // bracket at machine resolution
            bisect_step();
            x = std::abs(fa) < std::abs(fb) ? a : b;
            std::tie(fx, dfx) = fdf(x);
        }
    }
    return {x, std::abs(fx), it, std::abs(fx) < residual_tol || (b - a) <= 8.0 * 2.2e-16 * std::max(1.0, std::abs(x)),
            newton_used};
}

/// Polynomial roots from ascending coefficients c[0] + c[1] y + ... via
/// Durand-Kerner iteration, each root Newton-polished afterwards.
inline std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs) {
    using cd = std::complex<double>;
    std::size_t deg = coeffs.size();
    while (deg > 0 && coeffs[deg - 1] == 0.0) --deg;
    if (deg < 2) return {};
    const std::size_t n = deg - 1;
    std::vector<cd> a(deg);
    for (std::size_t i = 0; i < deg; ++i) a[i] = coeffs[i] / coeffs[n];

    auto eval = [&](cd y) {
        cd v = a[n];
        for (std::size_t i = n; i-- > 0;) v = v * y + a[i];
        return v;
    };
    auto eval_d = [&](cd y) {
        cd v = a[n] * static_cast<double>(n);
        for (std::size_t i = n - 1; i >= 1; --i) v = v * y + a[i] * static_cast<double>(i);
        return v;
    };

    double bound = 0.0;
    for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[i]));
    bound += 1.0;
    std::vector<cd> z(n);
    const cd seed(0.4, 0.9);
    for (std::size_t i = 0; i < n; ++i) z[i] = bound * std::pow(seed, static_cast<double>(i));

    for (int iter = 0; iter < 500; ++iter) {
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cd den = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            const cd dz = eval(z[i]) / den;
            z[i] -= dz;
            change = std::max(change, std::abs(dz));
        }
        if (change < 1e-15 * bound) break;
    }
    for (auto& zi : z) {
        for (int k = 0; k < 5; ++k) {
            const cd d = eval_d(zi);
            if (std::abs(d) == 0.0) break;
            const cd step = eval(zi) / d;
            zi -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(zi))) break;
        }
    }
    std::sort(z.begin(), z.end(), [](cd l, cd r) { return l.real() < r.real(); });
    return z;
}

} // namespace offcenter::roots
