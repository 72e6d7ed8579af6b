#pragma once

#include <optional>
#include <vector>

#include "hulthen/model.hpp"
#include "hulthen/shooting.hpp"
#include "hulthen/spectra.hpp"

namespace hulthen {

enum class CentrifugalMode { approximated, exact };

/// Independent eigenvalue search by two-sided shooting. The mismatch is a
/// nonlinear function of the trial energy (the endpoint exponents depend on
/// E); eigenvalues are mismatch zeros refined by bisection.
struct ShootingProblem {
    QuantumState state;
    ModelParams params;
    CentrifugalMode mode = CentrifugalMode::approximated;
    double E_lo;
    double E_hi;
    int scan_points = 400;
    double match_radius;  ///< r_m, defaults to 1/alpha
    double rel_tol = 1e-10;

    static ShootingProblem make(const QuantumState& state, const ModelParams& p,
                                CentrifugalMode mode = CentrifugalMode::approximated);
};

/// Log-derivative mismatch of the transformed equation integrated in
/// s = exp(-alpha r), with asymptotic two-term starts at both endpoints.
double shoot_approximated(const QuantumState& state, const ModelParams& p, double E,
                          double match_radius = -1.0, double rel_tol = 1e-10);

/// Same, for the untransformed second-order equation in r with the exact
/// centrifugal term kappa(kappa+1)/r^2 retained.
double shoot_exact_centrifugal(const QuantumState& state, const ModelParams& p, double E,
                               double match_radius = -1.0, double rel_tol = 1e-10);

struct OracleEigenvalue {
    EnergyResult energy;  ///< source = oracle
    int nodes;
};

struct OracleScan {
    int points_evaluated = 0;
    int points_failed = 0;    ///< trial energies where integration failed
    int brackets_found = 0;
    int poles_rejected = 0;   ///< sign changes that refined to a pole, not a root
    double E_lo = 0.0, E_hi = 0.0;
};

struct OracleResult {
    std::vector<OracleEigenvalue> eigenvalues;
    OracleScan scan;
};

/// Scans the energy window for mismatch sign changes, refines each bracket
/// by bisection to 1e-10 absolute in E, rejects pole crossings, and labels
/// every eigenvalue with its node count. An empty list with the scan record
/// is the result when no bracket is found.
OracleResult find_eigenvalues(const ShootingProblem& problem, int count);

}  // namespace hulthen
