// quadrature.hpp — adaptive Gauss-Kronrod (G7, K15) integration

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpump::quad {

struct Result {
    double value{0};
    double error{0};  // absolute error estimate
    std::size_t panels{0};
    std::size_t evaluations{0};
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, Result achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    const Result& achieved() const { return achieved_; }

private:
    Result achieved_;
};

struct Options {
    double rel_tol{1e-9};
    double abs_tol{0.0};
    std::size_t max_panels{200000};
};

namespace detail {

// K15 abscissae on [0,1] and the paired G7/K15 weights
inline constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;
    double value;
    double error;
};

// One K15 evaluation with the QUADPACK-style scaled error estimate
template <class F>
Panel evaluate(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    double fv1[7], fv2[7];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * xgk[i];
        fv1[i] = f(center - dx);
        fv2[i] = f(center + dx);
        const double fsum = fv1[i] + fv2[i];
        resk += wgk[i] * fsum;
        if (i % 2 == 1) resg += wg[i / 2] * fsum;
    }
    const double reskh = 0.5 * resk;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += wgk[i] * (std::abs(fv1[i] - reskh) + std::abs(fv2[i] - reskh));
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {a, b, resk * half, err};
}

}

// Greedy refinement: always split the panel with the largest error estimate
// until the summed estimate meets max(abs_tol, rel_tol*|integral|).
template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {}) {
    Result out;
    if (a == b) return out;

    std::vector<detail::Panel> heap;
    auto by_error = [](const detail::Panel& lhs, const detail::Panel& rhs) {
        return lhs.error < rhs.error;
    };

    heap.push_back(detail::evaluate(f, a, b));
    out.evaluations = 15;
    double total_value = heap.front().value;
    double total_error = heap.front().error;

    while (true) {
        if (std::isnan(total_value))
            throw ConvergenceError("quadrature: integrand produced NaN",
                                   {total_value, total_error, heap.size(), out.evaluations});
        if (total_error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total_value))) break;
        if (heap.size() >= opt.max_panels) {
            const Result achieved{total_value, total_error, heap.size(), out.evaluations};
            throw ConvergenceError(
                "quadrature: no convergence after " + std::to_string(heap.size()) +
                    " panels (error estimate " + std::to_string(total_error) + ")",
                achieved);
        }
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const detail::Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval no longer splittable in double precision; accept as-is
            const Result achieved{total_value, total_error, heap.size() + 1, out.evaluations};
            throw ConvergenceError("quadrature: interval below machine resolution", achieved);
        }
        const detail::Panel lo = detail::evaluate(f, worst.a, mid);
        const detail::Panel hi = detail::evaluate(f, mid, worst.b);
        out.evaluations += 30;
        total_value += lo.value + hi.value - worst.value;
        total_error += lo.error + hi.error - worst.error;
        heap.push_back(lo);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(hi);
        std::push_heap(heap.begin(), heap.end(), by_error);
    }

    out.value = total_value;
    out.error = total_error;
    out.panels = heap.size();
    return out;
}

template <class F>
Result integrate(F&& f, double a, double b, double rel_tol, double abs_tol,
                 std::size_t max_panels = 200000) {
    return integrate(std::forward<F>(f), a, b, Options{rel_tol, abs_tol, max_panels});
}

}
