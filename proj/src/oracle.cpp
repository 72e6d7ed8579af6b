#include "hulthen/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hulthen/wavefn.hpp"

namespace hulthen {

namespace {
constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

double regular_delta(double kappa) { return std::max(kappa + 1.0, -kappa); }

Ode2 transformed_ode(double kk1, double eps, double beta12) {
    return [=](double s, const std::array<double, 2>& y) -> std::array<double, 2> {
        const double oms = 1.0 - s;
        const double coef = kk1 / (s * oms * oms) + eps * eps / (s * s) + beta12 / (s * oms);
        return {y[1], coef * y[0] - y[1] / s};
    };
}
}  // namespace

ShootingProblem ShootingProblem::make(const QuantumState& state, const ModelParams& p,
                                      CentrifugalMode mode) {
    const double edge = 0.999 * (p.mu0 + p.Z * p.alpha);
    return ShootingProblem{state, p, mode, -edge, edge, 400, 1.0 / p.alpha, 1e-10};
}

double shoot_approximated(const QuantumState& state, const ModelParams& p, double E,
                          double match_radius, double rel_tol) {
    const AuxiliaryQuantities q = epsilon_beta(E, state, p, DeltaPolicy::literal);
    if (!q.epsilon_real)
        throw std::domain_error("shoot_approximated: epsilon imaginary at E=" + std::to_string(E));
    const double kappa = state.kappa();
    const double kk1 = kappa * (kappa + 1.0);
    const double eps = q.epsilon;
    const double beta12 = q.beta1 + q.beta2;
    const double delta = regular_delta(kappa);
    const double rm = match_radius > 0.0 ? match_radius : 1.0 / p.alpha;
    const double sm = std::exp(-p.alpha * rm);

    const double s0 = 1e-8;
    const double t0 = 1e-8;
    // Two-term Frobenius starts; overall scale is arbitrary.
    const double c1 = (kk1 + beta12) / (2.0 * eps + 1.0);
    const std::array<double, 2> y_left{1.0 + c1 * s0, (eps + (eps + 1.0) * c1 * s0) / s0};
    const double d1 = (delta * delta + beta12) / (2.0 * delta);
    const std::array<double, 2> y_right{1.0 + d1 * t0, -(delta + (delta + 1.0) * d1 * t0) / t0};

    IntegrationOptions opts;
    opts.rel_tol = rel_tol;
    const auto shot =
        two_sided_shoot(transformed_ode(kk1, eps, beta12), s0, y_left, 1.0 - t0, y_right, sm, opts);
    return shot.mismatch;
}

double shoot_exact_centrifugal(const QuantumState& state, const ModelParams& p, double E,
                               double match_radius, double rel_tol) {
    const double kappa = state.kappa();
    const double kk1 = kappa * (kappa + 1.0);
    const double mu_inf = p.mu0 + p.Z * p.alpha;
    if (!(E * E < mu_inf * mu_inf))
        throw std::domain_error("shoot_exact_centrifugal: |E| must be below mu0 + Z*alpha");
    const double decay = std::sqrt(mu_inf * mu_inf - E * E);
    const double pexp = regular_delta(kappa);  // small-r exponent of the regular solution
    const double rm = match_radius > 0.0 ? match_radius : 1.0 / p.alpha;

    Ode2 ode = [&p, kk1, E](double r, const std::array<double, 2>& y) -> std::array<double, 2> {
        const double mu = mass_function(r, p);
        const double V = hulthen_potential(r, p);
        const double coef = kk1 / (r * r) + (mu + E - V) * (mu - E + V);
        return {y[1], coef * y[0]};
    };

    const double r0 = 1e-8 / p.alpha;
    const double r1 = 50.0 / p.alpha;
    const double c1 = p.Z * (mu_inf - E) / pexp;
    const std::array<double, 2> y_left{1.0 + c1 * r0, (pexp + (pexp + 1.0) * c1 * r0) / r0};
    const std::array<double, 2> y_right{1.0, -decay};

    IntegrationOptions opts;
    opts.rel_tol = rel_tol;
    const auto shot = two_sided_shoot(ode, r0, y_left, r1, y_right, rm, opts);
    return shot.mismatch;
}

OracleResult find_eigenvalues(const ShootingProblem& problem, int count) {
    OracleResult out;
    out.scan.E_lo = problem.E_lo;
    out.scan.E_hi = problem.E_hi;
    if (count <= 0) return out;
    if (!(problem.E_lo < problem.E_hi))
        throw std::invalid_argument("find_eigenvalues: empty energy window");

    auto mismatch = [&](double E) -> double {
        try {
            return problem.mode == CentrifugalMode::approximated
                       ? shoot_approximated(problem.state, problem.params, E, problem.match_radius,
                                            problem.rel_tol)
                       : shoot_exact_centrifugal(problem.state, problem.params, E,
                                                 problem.match_radius, problem.rel_tol);
        } catch (const std::exception&) {
            return nan_v;
        }
    };

    const int n = std::max(problem.scan_points, 2);
    double prev_E = 0.0, prev_f = nan_v;
    std::vector<std::pair<double, double>> brackets;
    for (int i = 0; i <= n; ++i) {
        const double E = problem.E_lo + (problem.E_hi - problem.E_lo) * i / n;
        const double f = mismatch(E);
        ++out.scan.points_evaluated;
        if (std::isnan(f)) {
            ++out.scan.points_failed;
            prev_f = nan_v;
            continue;
        }
        if (!std::isnan(prev_f) && (f > 0.0) != (prev_f > 0.0)) brackets.emplace_back(prev_E, E);
        prev_E = E;
        prev_f = f;
    }
    out.scan.brackets_found = static_cast<int>(brackets.size());

    for (const auto& [lo0, hi0] : brackets) {
        double lo = lo0, hi = hi0;
        double flo = mismatch(lo), fhi = mismatch(hi);
        if (std::isnan(flo) || std::isnan(fhi)) continue;
        const double edge_mag = std::min(std::fabs(flo), std::fabs(fhi));
        bool failed = false;
        while (hi - lo > 1e-10) {
            const double mid = 0.5 * (lo + hi);
            const double fm = mismatch(mid);
            if (std::isnan(fm)) {
                failed = true;
                break;
            }
            if ((fm > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
                fhi = fm;
            }
        }
        if (failed) continue;
        const double E_root = 0.5 * (lo + hi);
        const double f_root = mismatch(E_root);
        // A pole crosses zero on paper but the magnitude blows up as the
        // bracket shrinks; a genuine root shrinks with it.
        if (std::isnan(f_root) || std::fabs(f_root) > edge_mag) {
            ++out.scan.poles_rejected;
            continue;
        }
        int nodes = -1;
        try {
            if (problem.mode == CentrifugalMode::approximated) {
                // Node count from the joined shooting profile in s; reverse so
                // samples run in increasing r.
                const AuxiliaryQuantities q =
                    epsilon_beta(E_root, problem.state, problem.params, DeltaPolicy::literal);
                const double kappa = problem.state.kappa();
                const double kk1 = kappa * (kappa + 1.0);
                const double beta12 = q.beta1 + q.beta2;
                const double delta = regular_delta(kappa);
                const double c1 = (kk1 + beta12) / (2.0 * q.epsilon + 1.0);
                const double d1 = (delta * delta + beta12) / (2.0 * delta);
                const double s0 = 1e-8, t0 = 1e-8;
                IntegrationOptions opts;
                opts.rel_tol = problem.rel_tol;
                const auto shot = two_sided_shoot(
                    transformed_ode(kk1, q.epsilon, beta12), s0,
                    {1.0 + c1 * s0, (q.epsilon + (q.epsilon + 1.0) * c1 * s0) / s0}, 1.0 - t0,
                    {1.0 + d1 * t0, -(delta + (delta + 1.0) * d1 * t0) / t0},
                    std::exp(-problem.params.alpha * problem.match_radius), opts);
                std::vector<double> samples;
                samples.reserve(shot.profile.size());
                for (const auto& [x, F] : shot.profile) samples.push_back(F);
                nodes = node_count(samples);
            } else {
                std::vector<std::pair<double, double>> trace;
                const double kappa = problem.state.kappa();
                const double pexp = regular_delta(kappa);
                const double mu_inf = problem.params.mu0 + problem.params.Z * problem.params.alpha;
                const double c1 = problem.params.Z * (mu_inf - E_root) / pexp;
                const double r0 = 1e-8 / problem.params.alpha;
                Ode2 ode = [&](double r, const std::array<double, 2>& y) -> std::array<double, 2> {
                    const double mu = mass_function(r, problem.params);
                    const double V = hulthen_potential(r, problem.params);
                    return {y[1],
                            (kappa * (kappa + 1.0) / (r * r) + (mu + E_root - V) * (mu - E_root + V)) *
                                y[0]};
                };
                IntegrationOptions opts;
                opts.rel_tol = problem.rel_tol;
                integrate_ode(ode, {1.0 + c1 * r0, (pexp + (pexp + 1.0) * c1 * r0) / r0}, r0,
                              50.0 / problem.params.alpha, opts, &trace);
                std::vector<double> samples;
                samples.reserve(trace.size());
                for (const auto& [x, F] : trace) samples.push_back(F);
                nodes = node_count(samples);
            }
        } catch (const std::exception&) {
            nodes = -1;
        }
        out.eigenvalues.push_back(
            {EnergyResult{E_root, 0.0, EnergyStatus::real, Branch::minus, EnergySource::oracle}, nodes});
        if (static_cast<int>(out.eigenvalues.size()) >= count) break;
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
              [](const OracleEigenvalue& a, const OracleEigenvalue& b) {
                  return a.energy.value < b.energy.value;
              });
    return out;
}

}  // namespace hulthen
