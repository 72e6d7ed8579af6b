#include "hulthen/shooting.hpp"

#include <algorithm>
#include <cmath>

namespace hulthen {

namespace {
// Cash-Karp tableau
constexpr double a2 = 1.0 / 5, a3 = 3.0 / 10, a4 = 3.0 / 5, a5 = 1.0, a6 = 7.0 / 8;
constexpr double b21 = 1.0 / 5;
constexpr double b31 = 3.0 / 40, b32 = 9.0 / 40;
constexpr double b41 = 3.0 / 10, b42 = -9.0 / 10, b43 = 6.0 / 5;
constexpr double b51 = -11.0 / 54, b52 = 5.0 / 2, b53 = -70.0 / 27, b54 = 35.0 / 27;
constexpr double b61 = 1631.0 / 55296, b62 = 175.0 / 512, b63 = 575.0 / 13824,
                 b64 = 44275.0 / 110592, b65 = 253.0 / 4096;
constexpr double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594, c6 = 512.0 / 1771;
constexpr double d1 = c1 - 2825.0 / 27648, d3 = c3 - 18575.0 / 48384, d4 = c4 - 13525.0 / 55296,
                 d5 = -277.0 / 14336, d6 = c6 - 1.0 / 4;
}  // namespace

std::array<double, 2> integrate_ode(const Ode2& f, std::array<double, 2> y, double x0, double x1,
                                    const IntegrationOptions& opts,
                                    std::vector<std::pair<double, double>>* trace) {
    if (x0 == x1) return y;
    const double dir = x1 > x0 ? 1.0 : -1.0;
    double x = x0;
    double h = dir * std::max(1e-12, std::fabs(x1 - x0) / 1000.0);
    if (trace) trace->emplace_back(x, y[0]);

    for (std::size_t step = 0; step < opts.max_steps; ++step) {
        if (dir * (x + h - x1) > 0.0) h = x1 - x;
        const auto k1 = f(x, y);
        std::array<double, 2> y2{y[0] + h * b21 * k1[0], y[1] + h * b21 * k1[1]};
        const auto k2 = f(x + a2 * h, y2);
        std::array<double, 2> y3{y[0] + h * (b31 * k1[0] + b32 * k2[0]),
                                 y[1] + h * (b31 * k1[1] + b32 * k2[1])};
        const auto k3 = f(x + a3 * h, y3);
        std::array<double, 2> y4{y[0] + h * (b41 * k1[0] + b42 * k2[0] + b43 * k3[0]),
                                 y[1] + h * (b41 * k1[1] + b42 * k2[1] + b43 * k3[1])};
        const auto k4 = f(x + a4 * h, y4);
        std::array<double, 2> y5{y[0] + h * (b51 * k1[0] + b52 * k2[0] + b53 * k3[0] + b54 * k4[0]),
                                 y[1] + h * (b51 * k1[1] + b52 * k2[1] + b53 * k3[1] + b54 * k4[1])};
        const auto k5 = f(x + a5 * h, y5);
        std::array<double, 2> y6{
            y[0] + h * (b61 * k1[0] + b62 * k2[0] + b63 * k3[0] + b64 * k4[0] + b65 * k5[0]),
            y[1] + h * (b61 * k1[1] + b62 * k2[1] + b63 * k3[1] + b64 * k4[1] + b65 * k5[1])};
        const auto k6 = f(x + a6 * h, y6);

        std::array<double, 2> ynew, yerr;
        for (int i = 0; i < 2; ++i) {
            ynew[i] = y[i] + h * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
            yerr[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i]);
        }
        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double scale = opts.abs_tol + opts.rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
            err = std::max(err, std::fabs(yerr[i]) / scale);
        }
        if (!std::isfinite(ynew[0]) || !std::isfinite(ynew[1]) || !std::isfinite(err))
            throw integration_error("integrate_ode: non-finite state at x=" + std::to_string(x), x);

        if (err <= 1.0) {
            x += h;
            y = ynew;
            if (opts.linear_rescale) {
                const double mag = std::max(std::fabs(y[0]), std::fabs(y[1]));
                if (mag > 1e150) {
                    y[0] /= mag;
                    y[1] /= mag;
                }
            }
            if (trace) trace->emplace_back(x, y[0]);
            if (x == x1 || dir * (x - x1) >= 0.0) return y;
        }
        const double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(fac, 0.1, 5.0);
        if (std::fabs(h) < 1e-15 * std::fabs(x1 - x0))
            throw integration_error("integrate_ode: step size underflow at x=" + std::to_string(x), x);
    }
    throw integration_error("integrate_ode: step budget exhausted at x=" + std::to_string(x), x);
}

TwoSidedShot two_sided_shoot(const Ode2& f, double x_left, std::array<double, 2> y_left, double x_right,
                             std::array<double, 2> y_right, double x_match,
                             const IntegrationOptions& opts) {
    std::vector<std::pair<double, double>> left_trace, right_trace;
    const auto yl = integrate_ode(f, y_left, x_left, x_match, opts, &left_trace);
    const auto yr = integrate_ode(f, y_right, x_right, x_match, opts, &right_trace);
    if (yl[0] == 0.0 || yr[0] == 0.0)
        throw integration_error("two_sided_shoot: zero amplitude at the match point", x_match);

    TwoSidedShot out;
    out.mismatch = yl[1] / yl[0] - yr[1] / yr[0];
    const double scale = yl[0] / yr[0];
    out.profile = std::move(left_trace);
    for (auto it = right_trace.rbegin(); it != right_trace.rend(); ++it)
        out.profile.emplace_back(it->first, it->second * scale);
    return out;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double x_tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisect: endpoints do not bracket a sign change");
    for (int i = 0; i < max_iter && hi - lo > x_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace hulthen
