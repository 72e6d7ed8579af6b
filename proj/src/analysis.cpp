#include "hulthen/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hulthen/shooting.hpp"

namespace hulthen {

namespace {
std::string source_name(EnergySource s) {
    switch (s) {
        case EnergySource::dirac_eq23: return "dirac";
        case EnergySource::coulomb_eq24: return "coulomb";
        case EnergySource::kg_eq30: return "kg";
        case EnergySource::kg_eq32: return "kg-simplified";
        case EnergySource::dirac_eq33: return "dirac-simplified";
        case EnergySource::oracle: return "oracle";
    }
    return "?";
}

ScanCurve build_curve(std::string label, ScanAxis axis, std::span<const double> xs,
                      std::function<EnergyResult(double)> eval) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::invalid_argument("scan grid must be strictly increasing");
    if (xs.empty()) throw std::invalid_argument("scan grid must be non-empty");
    ScanCurve c{std::move(label), axis, {}, std::move(eval)};
    c.points.reserve(xs.size());
    for (double x : xs) c.points.push_back({x, c.eval(x)});
    return c;
}
}  // namespace

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
    v.front() = lo;
    v.back() = hi;
    return v;
}

std::vector<double> lin_spaced(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return v;
}

std::vector<double> default_alpha_grid() { return log_spaced(1e-3, 1.5, 512); }
std::vector<double> default_dimension_grid() { return lin_spaced(2.0, 12.0, 256); }

ScanCurve alpha_curve_simplified(EnergySource source, double n, double D,
                                 std::span<const double> alphas) {
    std::ostringstream label;
    label << source_name(source) << " n=" << n << " D=" << D;
    std::function<EnergyResult(double)> eval;
    if (source == EnergySource::kg_eq32)
        eval = [n, D](double a) { return kg_energy_simplified(static_cast<int>(n), D, a); };
    else if (source == EnergySource::dirac_eq33)
        eval = [n, D](double a) { return dirac_energy_simplified(n, D, a); };
    else
        throw std::invalid_argument("alpha_curve_simplified: source must be a simplified formula");
    return build_curve(label.str(), ScanAxis::alpha, alphas, std::move(eval));
}

ScanCurve alpha_curve(EnergySource source, const QuantumState& state, double Z, double mu,
                      Branch branch, std::span<const double> alphas) {
    std::ostringstream label;
    label << source_name(source) << " nr=" << state.n_r() << " l=" << state.ell()
          << " D=" << state.dimension() << (branch == Branch::plus ? " +" : " -");
    std::function<EnergyResult(double)> eval;
    if (source == EnergySource::dirac_eq23)
        eval = [state, Z, mu, branch](double a) {
            return dirac_energy(state, ModelParams(Z, a, mu), branch);
        };
    else if (source == EnergySource::kg_eq30)
        eval = [state, Z, mu, branch](double a) { return kg_energy(state, Z, mu, a, branch); };
    else
        throw std::invalid_argument("alpha_curve: source must be a general formula");
    return build_curve(label.str(), ScanAxis::alpha, alphas, std::move(eval));
}

ScanCurve dimension_curve_simplified(EnergySource source, double n, double alpha,
                                     std::span<const double> dims) {
    std::ostringstream label;
    label << source_name(source) << " n=" << n << " alpha=" << alpha;
    std::function<EnergyResult(double)> eval;
    if (source == EnergySource::kg_eq32)
        eval = [n, alpha](double D) { return kg_energy_simplified(static_cast<int>(n), D, alpha); };
    else if (source == EnergySource::dirac_eq33)
        eval = [n, alpha](double D) { return dirac_energy_simplified(n, D, alpha); };
    else
        throw std::invalid_argument("dimension_curve_simplified: source must be a simplified formula");
    return build_curve(label.str(), ScanAxis::dimension, dims, std::move(eval));
}

std::vector<IntersectionRecord> find_intersections(const ScanCurve& a, const ScanCurve& b) {
    if (a.points.size() != b.points.size())
        throw std::invalid_argument("find_intersections: curves must share a grid");
    bool any_overlap = false;
    bool all_zero = true;
    std::vector<IntersectionRecord> out;
    double prev_x = 0.0, prev_d = 0.0;
    bool have_prev = false;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        if (a.points[i].x != b.points[i].x)
            throw std::invalid_argument("find_intersections: curves must share a grid");
        if (!a.points[i].energy.real() || !b.points[i].energy.real()) {
            have_prev = false;
            continue;
        }
        any_overlap = true;
        const double d = a.points[i].energy.value - b.points[i].energy.value;
        if (std::fabs(d) > 1e-15) all_zero = false;
        if (d == 0.0 && have_prev && prev_d != 0.0) {
            // exact crossing on a grid point
            out.push_back({a.label, b.label, a.points[i].x, a.points[i].energy.value, 0.0});
        } else if (have_prev && (d > 0.0) != (prev_d > 0.0) && d != 0.0 && prev_d != 0.0) {
            const double x_star = bisect(
                [&](double x) { return a.eval(x).value - b.eval(x).value; }, prev_x, a.points[i].x,
                1e-10);
            const auto ea = a.eval(x_star);
            const auto eb = b.eval(x_star);
            if (ea.real() && eb.real()) {
                const double gap = std::fabs(ea.value - eb.value);
                out.push_back({a.label, b.label, x_star, 0.5 * (ea.value + eb.value), gap});
            }
        }
        prev_x = a.points[i].x;
        prev_d = d;
        have_prev = true;
    }
    if (any_overlap && all_zero)
        throw degenerate_curves_error("find_intersections: curves are identical on the overlap");
    return out;
}

std::vector<ThresholdEntry> threshold_map(ThresholdKind kind, std::span<const double> n_values,
                                          std::span<const double> d_values) {
    std::vector<ThresholdEntry> out;
    out.reserve(n_values.size() * d_values.size());
    for (double n : n_values)
        for (double D : d_values) out.push_back({n, D, alpha_threshold(kind, n, D)});
    return out;
}

ConsistencySample default_consistency_sample() {
    return ConsistencySample{{0, 1, 2}, {0, 1, 2}, {2, 3, 4, 5}, {0.05, 0.1, 0.2, 0.3}};
}

namespace {
RatioFit fit_ratio(std::string lhs_label, std::string rhs_label,
                   const std::vector<std::pair<double, double>>& pairs, std::size_t skipped) {
    RatioFit fit;
    fit.lhs_label = std::move(lhs_label);
    fit.rhs_label = std::move(rhs_label);
    fit.skipped_imaginary = skipped;
    std::vector<double> ratios;
    for (const auto& [lhs, rhs] : pairs)
        if (lhs != 0.0) ratios.push_back(rhs / lhs);
    fit.samples = ratios.size();
    if (ratios.empty()) return fit;
    std::sort(ratios.begin(), ratios.end());
    fit.fitted_ratio = ratios[ratios.size() / 2];
    for (double r : ratios) fit.max_deviation = std::max(fit.max_deviation, std::fabs(r - fit.fitted_ratio));
    fit.constant_ratio = fit.max_deviation < 1e-9 * std::fabs(fit.fitted_ratio);
    return fit;
}
}  // namespace

ConsistencyReport consistency_report(const ConsistencySample& sample) {
    std::vector<std::pair<double, double>> kg_pairs, d_ell_pairs, d_kappa_pairs;
    std::size_t kg_skip = 0, d_ell_skip = 0, d_kappa_skip = 0;

    for (int n_r : sample.n_r_values)
        for (int ell : sample.ell_values)
            for (int D : sample.d_values)
                for (double alpha : sample.alpha_values) {
                    const QuantumState st(n_r, ell, D, Alignment::unaligned);
                    const int n_ell = n_r + ell + 1;
                    const double n_kappa = n_r + st.kappa_abs() + 1.0;

                    if (2 * n_ell + D - 3 > 0) {
                        const auto lhs = kg_energy(st, 1.0, 1.0, alpha, Branch::minus);
                        const auto rhs = kg_energy_simplified(n_ell, D, alpha);
                        if (lhs.real() && rhs.real())
                            kg_pairs.emplace_back(lhs.value, rhs.value);
                        else
                            ++kg_skip;
                    }

                    const auto e23 = dirac_energy(st, ModelParams(1.0, alpha, 1.0), Branch::minus);
                    const auto e33a = dirac_energy_simplified(n_ell, D, alpha);
                    if (e23.real() && e33a.real())
                        d_ell_pairs.emplace_back(e23.value, e33a.value);
                    else
                        ++d_ell_skip;
                    const auto e33b = dirac_energy_simplified(n_kappa, D, alpha);
                    if (e23.real() && e33b.real())
                        d_kappa_pairs.emplace_back(e23.value, e33b.value);
                    else
                        ++d_kappa_skip;
                }

    ConsistencyReport rep;
    rep.kg = fit_ratio("kg", "kg-simplified", kg_pairs, kg_skip);
    rep.dirac_n_from_ell = fit_ratio("dirac", "dirac-simplified[n=nr+l+1]", d_ell_pairs, d_ell_skip);
    rep.dirac_n_from_kappa =
        fit_ratio("dirac", "dirac-simplified[n=nr+|kappa|+1]", d_kappa_pairs, d_kappa_skip);
    return rep;
}

std::vector<ApproximationErrorRow> approximation_error_report(std::span<const QuantumState> states,
                                                              const ModelParams& base,
                                                              std::span<const double> alphas) {
    std::vector<ApproximationErrorRow> rows;
    for (const auto& st : states)
        for (double alpha : alphas) {
            const ModelParams p(base.Z, alpha, base.mu0);
            ApproximationErrorRow row{st.n_r(), st.ell(), st.dimension(), alpha, {}, {}, {}, {}, {}, ""};
            const auto closed = dirac_energy(st, p, Branch::minus);
            if (closed.real()) row.E_closed_form = closed.value;

            std::ostringstream diag;
            for (auto mode : {CentrifugalMode::approximated, CentrifugalMode::exact}) {
                auto problem = ShootingProblem::make(st, p, mode);
                try {
                    const auto res = find_eigenvalues(problem, st.n_r() + 1);
                    // Pick the eigenvalue whose node count matches n_r, else the
                    // (n_r+1)-th found.
                    std::optional<double> picked;
                    for (const auto& ev : res.eigenvalues)
                        if (ev.nodes == st.n_r()) picked = ev.energy.value;
                    if (!picked && static_cast<int>(res.eigenvalues.size()) > st.n_r())
                        picked = res.eigenvalues[st.n_r()].energy.value;
                    if (mode == CentrifugalMode::approximated)
                        row.E_oracle_approx = picked;
                    else
                        row.E_oracle_exact = picked;
                    diag << (mode == CentrifugalMode::approximated ? "approx" : "exact") << ": "
                         << res.scan.brackets_found << " brackets, " << res.scan.poles_rejected
                         << " poles, " << res.scan.points_failed << " failed of "
                         << res.scan.points_evaluated << "; ";
                } catch (const std::exception& e) {
                    diag << "oracle failure: " << e.what() << "; ";
                }
            }
            if (row.E_closed_form && row.E_oracle_approx)
                row.gap_approx = std::fabs(*row.E_closed_form - *row.E_oracle_approx);
            if (row.E_closed_form && row.E_oracle_exact)
                row.gap_exact = std::fabs(*row.E_closed_form - *row.E_oracle_exact);
            row.diagnostic = diag.str();
            rows.push_back(std::move(row));
        }
    return rows;
}

}  // namespace hulthen
