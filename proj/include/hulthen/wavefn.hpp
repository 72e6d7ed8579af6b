#pragma once

#include <span>
#include <vector>

#include "hulthen/model.hpp"
#include "hulthen/spectra.hpp"

namespace hulthen {

/// Sampled spinor components on a radial grid. Immutable after normalize().
struct RadialFunction {
    QuantumState state;
    ModelParams params;
    EnergyResult energy;
    std::vector<double> grid;
    std::vector<double> F;
    std::vector<double> G;
    double norm_constant = 1.0;  ///< C such that the stored samples are C * (raw closed form)
    bool normalized = false;
    double epsilon = 0.0;  ///< exponent of s = exp(-alpha r) at s -> 0
    double delta = 0.0;    ///< exponent of (1-s) at s -> 1
    DeltaPolicy policy = DeltaPolicy::abs_kappa_plus_one;
};

struct pole_error : std::runtime_error {
    double r_location;
    explicit pole_error(const std::string& msg, double r) : std::runtime_error(msg), r_location(r) {}
};

/// Upper component C s^eps (1-s)^delta P_{n_r}^{(2 eps, 2 delta - 1)}(1-2s)
/// with C = 1, sampled on the grid. Throws std::invalid_argument for an
/// imaginary-status energy and std::domain_error when 2*eps <= -1.
std::vector<double> upper_component(const QuantumState& state, const ModelParams& p,
                                    const EnergyResult& E, std::span<const double> grid,
                                    DeltaPolicy policy = DeltaPolicy::abs_kappa_plus_one);

/// Analytic dF/dr of the upper component on the grid (C = 1).
std::vector<double> upper_component_derivative(const QuantumState& state, const ModelParams& p,
                                               const EnergyResult& E, std::span<const double> grid,
                                               DeltaPolicy policy = DeltaPolicy::abs_kappa_plus_one);

/// Lower component G = [(d/dr + kappa/r) F] / [mu(r) + E - V(r)], using the
/// analytic derivative of F. Throws pole_error if the denominator changes
/// sign on the grid.
std::vector<double> lower_component(const QuantumState& state, const ModelParams& p,
                                    const EnergyResult& E, std::span<const double> grid,
                                    std::span<const double> F,
                                    DeltaPolicy policy = DeltaPolicy::abs_kappa_plus_one);

/// Builds the full unnormalized pair (C = 1).
RadialFunction make_radial_function(const QuantumState& state, const ModelParams& p,
                                    const EnergyResult& E, std::vector<double> grid,
                                    DeltaPolicy policy = DeltaPolicy::abs_kappa_plus_one);

/// Rescales so that the adaptive-quadrature integral of F^2 + G^2 over
/// (0, r_max] equals 1, and records the constant.
RadialFunction normalize(RadialFunction rf);

/// Count of strict sign changes, ignoring samples below 1e-12 * max|F|.
int node_count(std::span<const double> samples);

/// Pointwise relative residual of the second coupled first-order equation,
/// (d/dr - kappa/r) G - (mu - E + V) F, scaled by the sup of |(mu - E + V) F|
/// over the interior. dG/dr is taken by central differences on the grid.
std::vector<double> eq9_relative_residual(const RadialFunction& rf);

/// Least-squares fit of the constant B in the two-polynomial form of the
/// lower component; diagnostic only.
struct Eq28Fit {
    double B;             ///< fitted constant (0 when n_r = 0: second term absent)
    double max_residual;  ///< max |G - model| / max|G| over the interior
};
Eq28Fit fit_lower_component_form(const RadialFunction& rf);

}  // namespace hulthen
