#include "hulthen/spectra.hpp"

#include <cmath>
#include <limits>

namespace hulthen {

namespace {
constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

double delta_for(const QuantumState& state, DeltaPolicy policy) {
    if (policy == DeltaPolicy::abs_kappa_plus_one) return state.kappa_abs() + 1.0;
    const double k = state.kappa();
    return k >= 0.0 ? k + 1.0 : -k;  // positive root of delta^2 - delta - k(k+1) = 0
}

EnergyResult make_result(double first_term, double prefactor, double radicand, Branch branch,
                         EnergySource source) {
    if (radicand < 0.0)
        return {nan_v, radicand, EnergyStatus::imaginary, branch, source};
    const double sign = branch == Branch::plus ? 1.0 : -1.0;
    return {first_term + sign * prefactor * std::sqrt(radicand), radicand, EnergyStatus::real, branch,
            source};
}
}  // namespace

AuxiliaryQuantities epsilon_beta(double E, const QuantumState& state, const ModelParams& p,
                                 DeltaPolicy policy) {
    AuxiliaryQuantities q;
    q.beta1 = (2.0 * p.Z * p.mu0 + p.Z * p.Z * p.alpha) / p.alpha;
    q.beta2 = (2.0 * p.Z * E + p.Z * p.Z * p.alpha) / p.alpha;
    q.delta = delta_for(state, policy);
    const double N = state.n_r() + state.kappa_abs() + 1.0;
    q.eta = N * N + p.Z * p.Z;
    const double rad = p.mu0 * p.mu0 + q.beta1 * p.alpha * p.alpha - E * E;
    q.epsilon_real = rad >= 0.0;
    q.epsilon = q.epsilon_real ? std::sqrt(rad) / p.alpha : nan_v;
    return q;
}

EnergyResult dirac_energy(const QuantumState& state, const ModelParams& p, Branch branch) {
    const double N = state.n_r() + state.kappa_abs() + 1.0;
    const double eta = N * N + p.Z * p.Z;
    const double beta1 = (2.0 * p.Z * p.mu0 + p.Z * p.Z * p.alpha) / p.alpha;
    const double radicand =
        4.0 * (p.mu0 + p.alpha * p.alpha * beta1) * eta - p.alpha * p.alpha * (eta + beta1) * (eta + beta1);
    const double first = -p.Z * p.alpha * (eta + beta1) / (2.0 * eta);
    return make_result(first, N / (2.0 * eta), radicand, branch, EnergySource::dirac_eq23);
}

double coulomb_limit_energy(const QuantumState& state, double Z, double mu0) {
    const double N = state.n_r() + state.kappa_abs() + 1.0;
    return std::sqrt(mu0) / std::sqrt(1.0 + Z * Z / (N * N));
}

double quantization_residual(double E, const QuantumState& state, const ModelParams& p,
                             DeltaPolicy policy) {
    const AuxiliaryQuantities q = epsilon_beta(E, state, p, policy);
    if (!q.epsilon_real)
        throw std::domain_error("quantization_residual: epsilon is imaginary at E=" + std::to_string(E));
    const double inner = q.epsilon * q.epsilon - (q.beta1 + q.beta2);
    if (inner < 0.0)
        throw complex_branch_error("quantization_residual: epsilon^2 - (beta1+beta2) < 0 at E=" +
                                   std::to_string(E));
    return state.n_r() + q.delta + q.epsilon - std::sqrt(inner);
}

EnergyResult kg_energy(const QuantumState& state, double Z, double mu, double alpha, Branch branch) {
    const double v1 = (state.dimension() + 2.0 * state.ell() - 1.0) / 2.0;
    const double q = state.n_r() + v1;
    const double gamma = 2.0 * Z * mu - alpha * q * q;
    const double eta = q * q + Z * Z;
    const double radicand = 4.0 * mu * mu - alpha * (2.0 * Z * mu - gamma);
    const double first = -Z * gamma / (2.0 * eta);
    EnergyResult res = make_result(first, q * q / (2.0 * eta), radicand, branch, EnergySource::kg_eq30);
    return res;
}

EnergyResult kg_energy_simplified(int n, double D, double alpha) {
    if (n < 1) throw std::domain_error("kg_energy_simplified: n must be >= 1");
    const double m = 2.0 * n + D - 3.0;
    if (!(m > 0.0)) throw std::domain_error("kg_energy_simplified: 2n + D - 3 must be > 0");
    const double rho1 = m * m;
    const double radicand = 16.0 - alpha * alpha * rho1;
    const double first = (2.0 * alpha * rho1 - 16.0) / (4.0 + rho1);
    EnergyResult res =
        make_result(first, rho1 / (4.0 + rho1), radicand, Branch::minus, EnergySource::kg_eq32);
    return res;
}

EnergyResult dirac_energy_simplified(double n, double D, double alpha) {
    if (!(n >= 1.0)) throw std::domain_error("dirac_energy_simplified: n must be >= 1");
    const double rho2 = (n + (D - 1.0) / 2.0) * (n + (D - 1.0) / 2.0);
    const double t = alpha * (rho2 + 2.0) + 2.0;
    const double radicand = 4.0 * (rho2 + 1.0) * (alpha + 1.0) * (alpha + 1.0) - t * t;
    const double first = -(alpha * (rho2 + 1.0) + alpha + 2.0) / (2.0 * (rho2 + 1.0));
    return make_result(first, rho2 / (2.0 * (rho2 + 1.0)), radicand, Branch::minus,
                       EnergySource::dirac_eq33);
}

double alpha_threshold(ThresholdKind kind, double n, double D) {
    if (!(n >= 1.0)) throw std::domain_error("alpha_threshold: n must be >= 1");
    if (kind == ThresholdKind::kg) {
        const double m = 2.0 * n + D - 3.0;
        if (!(m > 0.0)) throw std::domain_error("alpha_threshold: 2n + D - 3 must be > 0");
        return 4.0 / m;
    }
    const double rho2 = (n + (D - 1.0) / 2.0) * (n + (D - 1.0) / 2.0);
    return 2.0 * (1.0 + std::sqrt(1.0 + rho2)) / rho2;
}

}  // namespace hulthen
