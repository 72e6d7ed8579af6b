#include "hulthen/model.hpp"

#include <algorithm>

namespace hulthen {

namespace {
void require_positive_r(double r) {
    if (!(r > 0.0)) throw std::domain_error("radial coordinate must be > 0, got r=" + std::to_string(r));
}
}  // namespace

double hulthen_potential(double r, const ModelParams& p) {
    require_positive_r(r);
    const double s = std::exp(-p.alpha * r);
    // 1 - s computed via expm1 to keep precision at small alpha*r
    const double one_minus_s = -std::expm1(-p.alpha * r);
    return -p.Z * p.alpha * s / one_minus_s;
}

double mass_function(double r, const ModelParams& p) {
    require_positive_r(r);
    const double one_minus_s = -std::expm1(-p.alpha * r);
    return p.mu0 + p.Z * p.alpha / one_minus_s;
}

double centrifugal_exact(double r) {
    require_positive_r(r);
    return 1.0 / (r * r);
}

double centrifugal_approx(double r, double alpha) {
    require_positive_r(r);
    if (!(alpha > 0.0)) throw std::domain_error("centrifugal_approx: alpha must be > 0");
    const double s = std::exp(-alpha * r);
    const double one_minus_s = -std::expm1(-alpha * r);
    return alpha * alpha * s / (one_minus_s * one_minus_s);
}

double kappa_of(const QuantumState& state) { return state.kappa(); }

std::vector<double> make_radial_grid(double alpha, std::size_t n_points, double r_max_scale) {
    if (!(alpha > 0.0)) throw std::domain_error("make_radial_grid: alpha must be > 0");
    if (n_points < 16) throw std::domain_error("make_radial_grid: need at least 16 points");
    const double r_knee = 1.0 / alpha;
    const double r_min = 1e-6 / alpha;
    const double r_max = r_max_scale / alpha;

    const std::size_t n_log = n_points / 2;
    const std::size_t n_lin = n_points - n_log;

    std::vector<double> grid;
    grid.reserve(n_points);
    const double lmin = std::log(r_min);
    const double lmax = std::log(r_knee);
    for (std::size_t i = 0; i < n_log; ++i)
        grid.push_back(std::exp(lmin + (lmax - lmin) * static_cast<double>(i) / static_cast<double>(n_log)));
    for (std::size_t i = 0; i < n_lin; ++i)
        grid.push_back(r_knee + (r_max - r_knee) * static_cast<double>(i + 1) / static_cast<double>(n_lin));
    return grid;
}

}  // namespace hulthen
