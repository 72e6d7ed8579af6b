#pragma once

#include "hulthen/model.hpp"

namespace hulthen {

/// How the exponent delta at s=1 is chosen in the quantization condition.
/// delta solves delta^2 - delta - kappa(kappa+1) = 0 with roots kappa+1 and
/// -kappa. The default uses |kappa|+1 for both alignments (the form the
/// closed-form energy is written in); `literal` takes the positive root of
/// the quadratic, which is -kappa = |kappa| for aligned states.
enum class DeltaPolicy { abs_kappa_plus_one, literal };

/// Auxiliary quantities of the transformed radial equation.
struct AuxiliaryQuantities {
    double epsilon;  ///< sqrt(mu0^2 + beta1 alpha^2 - E^2)/alpha, NaN if radicand < 0
    double beta1;    ///< (2 Z mu0 + Z^2 alpha)/alpha
    double beta2;    ///< (2 Z E + Z^2 alpha)/alpha
    double delta;    ///< exponent at s = 1 under the chosen policy
    double eta;      ///< (n_r + |kappa| + 1)^2 + Z^2
    bool epsilon_real;
};

AuxiliaryQuantities epsilon_beta(double E, const QuantumState& state, const ModelParams& p,
                                 DeltaPolicy policy = DeltaPolicy::abs_kappa_plus_one);

/// Closed-form bound-state energy of the transformed equation.
EnergyResult dirac_energy(const QuantumState& state, const ModelParams& p, Branch branch);

/// Coulomb-limit spectrum sqrt(mu0) [1 + Z^2/(n_r+|kappa|+1)^2]^{-1/2}.
double coulomb_limit_energy(const QuantumState& state, double Z, double mu0);

/// Residual n_r + delta + epsilon - sqrt(epsilon^2 - (beta1+beta2)) of the
/// series-termination condition. Throws std::domain_error when epsilon is
/// imaginary at E, and complex_branch_error when the inner radicand is negative.
double quantization_residual(double E, const QuantumState& state, const ModelParams& p,
                             DeltaPolicy policy = DeltaPolicy::abs_kappa_plus_one);

struct complex_branch_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Klein-Gordon energy for equal vector and scalar potentials (general form).
EnergyResult kg_energy(const QuantumState& state, double Z, double mu, double alpha, Branch branch);

/// Klein-Gordon energy in principal-quantum-number form at Z = mu = 1,
/// rho1 = (2n + D - 3)^2; minus branch is built in.
EnergyResult kg_energy_simplified(int n, double D, double alpha);

/// Dirac energy in principal-quantum-number form at Z = mu0 = 1,
/// rho2 = (n + (D-1)/2)^2; minus branch is built in.
EnergyResult dirac_energy_simplified(double n, double D, double alpha);

enum class ThresholdKind { kg, dirac };

/// Screening value at which the corresponding radicand crosses zero:
/// kg -> 4/(2n+D-3); dirac -> 2(1+sqrt(1+rho2))/rho2.
double alpha_threshold(ThresholdKind kind, double n, double D);

}  // namespace hulthen
