#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hulthen/model.hpp"
#include "hulthen/oracle.hpp"
#include "hulthen/spectra.hpp"

namespace hulthen {

enum class ScanAxis { alpha, dimension };

struct ScanPoint {
    double x;
    EnergyResult energy;
};

/// One energy curve against alpha or dimension. Carries its evaluator so
/// crossings can be refined off-grid.
struct ScanCurve {
    std::string label;
    ScanAxis axis;
    std::vector<ScanPoint> points;
    std::function<EnergyResult(double)> eval;
};

struct IntersectionRecord {
    std::string label_a;
    std::string label_b;
    double alpha_star;
    double energy_at_crossing;
    double tolerance;  ///< verified |E_a - E_b| bound at alpha_star
};

/// Default scan grids.
std::vector<double> log_spaced(double lo, double hi, std::size_t n);
std::vector<double> lin_spaced(double lo, double hi, std::size_t n);
std::vector<double> default_alpha_grid();      // 512 log-spaced in [1e-3, 1.5]
std::vector<double> default_dimension_grid();  // 256 points in [2, 12]

/// Energy-vs-alpha curve for the principal-quantum-number formulas.
ScanCurve alpha_curve_simplified(EnergySource source, double n, double D,
                                 std::span<const double> alphas);

/// Energy-vs-alpha curve for the quantum-state formulas (general forms).
ScanCurve alpha_curve(EnergySource source, const QuantumState& state, double Z, double mu,
                      Branch branch, std::span<const double> alphas);

/// Energy-vs-dimension curve at fixed alpha (continuous D).
ScanCurve dimension_curve_simplified(EnergySource source, double n, double alpha,
                                     std::span<const double> dims);

/// Sign changes of E_a - E_b on the shared real-status range, refined by
/// bisection to 1e-10 in the scan variable. Identical curves (difference
/// identically zero on the overlap) are a degenerate input.
struct degenerate_curves_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
std::vector<IntersectionRecord> find_intersections(const ScanCurve& a, const ScanCurve& b);

struct ThresholdEntry {
    double n;
    double D;
    double alpha_threshold;
};
std::vector<ThresholdEntry> threshold_map(ThresholdKind kind, std::span<const double> n_values,
                                          std::span<const double> d_values);

/// Empirical comparison of the claimed-equivalent formula pairs at
/// Z = mu = mu0 = 1. For each pair the report fits the best constant ratio
/// over the real-status sample and states the maximum deviation from it.
struct RatioFit {
    std::string lhs_label;
    std::string rhs_label;
    std::size_t samples = 0;
    std::size_t skipped_imaginary = 0;
    double fitted_ratio = 0.0;   ///< median of rhs/lhs
    double max_deviation = 0.0;  ///< max |rhs/lhs - fitted_ratio|
    bool constant_ratio = false; ///< max_deviation < 1e-9 * |fitted_ratio|
};

struct ConsistencyReport {
    RatioFit kg;                    ///< general KG form vs principal-n KG form
    RatioFit dirac_n_from_ell;      ///< closed-form Dirac vs principal form, n = n_r + ell + 1
    RatioFit dirac_n_from_kappa;    ///< same with n = n_r + |kappa| + 1
};

struct ConsistencySample {
    std::vector<int> n_r_values;
    std::vector<int> ell_values;
    std::vector<int> d_values;
    std::vector<double> alpha_values;
};
ConsistencySample default_consistency_sample();
ConsistencyReport consistency_report(const ConsistencySample& sample = default_consistency_sample());

/// Per-state, per-alpha comparison of the closed form with both oracle modes.
struct ApproximationErrorRow {
    int n_r;
    int ell;
    double D;
    double alpha;
    std::optional<double> E_closed_form;   ///< unset when imaginary-status
    std::optional<double> E_oracle_approx; ///< unset when the scan finds nothing
    std::optional<double> E_oracle_exact;
    std::optional<double> gap_approx;      ///< |E_closed_form - E_oracle_approx|
    std::optional<double> gap_exact;       ///< |E_closed_form - E_oracle_exact|
    std::string diagnostic;                ///< oracle scan summary / failure note
};
std::vector<ApproximationErrorRow> approximation_error_report(std::span<const QuantumState> states,
                                                              const ModelParams& base,
                                                              std::span<const double> alphas);

}  // namespace hulthen
