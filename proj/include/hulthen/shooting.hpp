#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hulthen {

/// First-order system y' = f(x, y) with y = (F, F').
using Ode2 = std::function<std::array<double, 2>(double, const std::array<double, 2>&)>;

struct integration_error : std::runtime_error {
    double x_location;
    integration_error(const std::string& msg, double x) : std::runtime_error(msg), x_location(x) {}
};

struct IntegrationOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    std::size_t max_steps = 400000;
    /// For linear ODEs: rescale the state when it exceeds 1e150 so long
    /// forbidden-region sweeps cannot overflow. Log-derivatives and sign
    /// patterns are invariant under the rescale.
    bool linear_rescale = true;
};

/// Adaptive embedded Runge-Kutta (Cash-Karp 4/5). Integrates from x0 to x1
/// (either direction); optionally records (x, F) at every accepted step.
std::array<double, 2> integrate_ode(const Ode2& f, std::array<double, 2> y, double x0, double x1,
                                    const IntegrationOptions& opts = {},
                                    std::vector<std::pair<double, double>>* trace = nullptr);

struct TwoSidedShot {
    double mismatch;  ///< F'/F at the match point, left minus right
    std::vector<std::pair<double, double>> profile;  ///< joined (x, F), right side rescaled
};

/// Integrates from both endpoints toward x_match and returns the
/// log-derivative mismatch plus the joined solution profile.
TwoSidedShot two_sided_shoot(const Ode2& f, double x_left, std::array<double, 2> y_left, double x_right,
                             std::array<double, 2> y_right, double x_match,
                             const IntegrationOptions& opts = {});

/// Plain bisection on a bracketing interval; f(lo) and f(hi) must differ in
/// sign. Returns the midpoint once |hi - lo| < x_tol.
double bisect(const std::function<double(double)>& f, double lo, double hi, double x_tol,
              int max_iter = 200);

}  // namespace hulthen
