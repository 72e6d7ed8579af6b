#include "hulthen/hulthen.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "hulthen/analysis.hpp"
#include "hulthen/model.hpp"
#include "hulthen/oracle.hpp"
#include "hulthen/spectra.hpp"
#include "hulthen/wavefn.hpp"
#include "json.hpp"

using nlohmann::json;

struct hul_model {
    hulthen::ModelParams params;
};

struct hul_state {
    hulthen::QuantumState state;
};

struct hul_wavefn {
    hulthen::RadialFunction rf;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Runs fn(), translating exceptions into status codes.
template <typename Fn>
hul_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const hulthen::pole_error& e) {
        set_error(e.what());
        return HUL_ERR_POLE;
    } catch (const hulthen::integration_error& e) {
        set_error(e.what());
        return HUL_ERR_INTERNAL;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return HUL_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return HUL_ERR_INVALID;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return HUL_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return HUL_ERR_INTERNAL;
    }
}

hul_status require(bool ok, const char* msg) {
    if (!ok) {
        set_error(msg);
        return HUL_ERR_INVALID;
    }
    return HUL_OK;
}

hulthen::Branch to_branch(hul_branch b) {
    return b == HUL_BRANCH_PLUS ? hulthen::Branch::plus : hulthen::Branch::minus;
}

hulthen::DeltaPolicy to_policy(hul_delta_policy p) {
    return p == HUL_DELTA_LITERAL ? hulthen::DeltaPolicy::literal
                                  : hulthen::DeltaPolicy::abs_kappa_plus_one;
}

int from_source(hulthen::EnergySource s) {
    switch (s) {
        case hulthen::EnergySource::dirac_eq23: return HUL_SOURCE_DIRAC;
        case hulthen::EnergySource::coulomb_eq24: return HUL_SOURCE_COULOMB;
        case hulthen::EnergySource::kg_eq30: return HUL_SOURCE_KG;
        case hulthen::EnergySource::kg_eq32: return HUL_SOURCE_KG_SIMPLIFIED;
        case hulthen::EnergySource::dirac_eq33: return HUL_SOURCE_DIRAC_SIMPLIFIED;
        case hulthen::EnergySource::oracle: return HUL_SOURCE_ORACLE;
    }
    return -1;
}

hul_energy from_result(const hulthen::EnergyResult& r) {
    hul_energy e;
    e.value = r.value;
    e.radicand = r.radicand;
    e.is_real = r.real() ? 1 : 0;
    e.branch = r.branch == hulthen::Branch::plus ? HUL_BRANCH_PLUS : HUL_BRANCH_MINUS;
    e.source = from_source(r.source);
    return e;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

json ratio_fit_json(const hulthen::RatioFit& f) {
    return json{{"lhs", f.lhs_label},
                {"rhs", f.rhs_label},
                {"samples", f.samples},
                {"skipped_imaginary", f.skipped_imaginary},
                {"fitted_ratio", f.fitted_ratio},
                {"max_deviation", f.max_deviation},
                {"constant_ratio", f.constant_ratio}};
}

}  // namespace

extern "C" {

const char* hul_last_error(void) { return g_last_error.c_str(); }

hul_status hul_model_create(double Z, double alpha, double mu0, hul_model** out) {
    if (auto st = require(out != nullptr, "hul_model_create: out is null")) return st;
    return guarded([&] {
        *out = new hul_model{hulthen::ModelParams(Z, alpha, mu0)};
        return HUL_OK;
    });
}

void hul_model_destroy(hul_model* m) { delete m; }

hul_status hul_state_create(int n_r, int ell, int D, hul_alignment align, hul_state** out) {
    if (auto st = require(out != nullptr, "hul_state_create: out is null")) return st;
    return guarded([&] {
        const auto a = align == HUL_ALIGNED ? hulthen::Alignment::aligned
                                            : hulthen::Alignment::unaligned;
        *out = new hul_state{hulthen::QuantumState(n_r, ell, D, a)};
        return HUL_OK;
    });
}

hul_status hul_state_create_continuous(int n_r, int ell, double D, hul_alignment align,
                                       hul_state** out) {
    if (auto st = require(out != nullptr, "hul_state_create_continuous: out is null")) return st;
    return guarded([&] {
        const auto a = align == HUL_ALIGNED ? hulthen::Alignment::aligned
                                            : hulthen::Alignment::unaligned;
        *out = new hul_state{hulthen::QuantumState::continuous_dimension(n_r, ell, D, a)};
        return HUL_OK;
    });
}

void hul_state_destroy(hul_state* s) { delete s; }

hul_status hul_potential(const hul_model* m, double r, double* out) {
    if (auto st = require(m && out, "hul_potential: null argument")) return st;
    return guarded([&] {
        *out = hulthen::hulthen_potential(r, m->params);
        return HUL_OK;
    });
}

hul_status hul_mass(const hul_model* m, double r, double* out) {
    if (auto st = require(m && out, "hul_mass: null argument")) return st;
    return guarded([&] {
        *out = hulthen::mass_function(r, m->params);
        return HUL_OK;
    });
}

hul_status hul_centrifugal_exact(double r, double* out) {
    if (auto st = require(out != nullptr, "hul_centrifugal_exact: out is null")) return st;
    return guarded([&] {
        *out = hulthen::centrifugal_exact(r);
        return HUL_OK;
    });
}

hul_status hul_centrifugal_approx(double r, double alpha, double* out) {
    if (auto st = require(out != nullptr, "hul_centrifugal_approx: out is null")) return st;
    return guarded([&] {
        *out = hulthen::centrifugal_approx(r, alpha);
        return HUL_OK;
    });
}

hul_status hul_kappa(const hul_state* s, double* out) {
    if (auto st = require(s && out, "hul_kappa: null argument")) return st;
    *out = s->state.kappa();
    return HUL_OK;
}

hul_status hul_dirac_energy(const hul_state* s, const hul_model* m, hul_branch branch,
                            hul_energy* out) {
    if (auto st = require(s && m && out, "hul_dirac_energy: null argument")) return st;
    return guarded([&] {
        *out = from_result(hulthen::dirac_energy(s->state, m->params, to_branch(branch)));
        return HUL_OK;
    });
}

hul_status hul_coulomb_limit_energy(const hul_state* s, double Z, double mu0, double* out) {
    if (auto st = require(s && out, "hul_coulomb_limit_energy: null argument")) return st;
    return guarded([&] {
        *out = hulthen::coulomb_limit_energy(s->state, Z, mu0);
        return HUL_OK;
    });
}

hul_status hul_quantization_residual(double E, const hul_state* s, const hul_model* m,
                                     hul_delta_policy policy, double* out) {
    if (auto st = require(s && m && out, "hul_quantization_residual: null argument")) return st;
    return guarded([&] {
        *out = hulthen::quantization_residual(E, s->state, m->params, to_policy(policy));
        return HUL_OK;
    });
}

hul_status hul_kg_energy(const hul_state* s, double Z, double mu, double alpha, hul_branch branch,
                         hul_energy* out) {
    if (auto st = require(s && out, "hul_kg_energy: null argument")) return st;
    return guarded([&] {
        *out = from_result(hulthen::kg_energy(s->state, Z, mu, alpha, to_branch(branch)));
        return HUL_OK;
    });
}

hul_status hul_kg_energy_simplified(int n, double D, double alpha, hul_energy* out) {
    if (auto st = require(out != nullptr, "hul_kg_energy_simplified: out is null")) return st;
    return guarded([&] {
        *out = from_result(hulthen::kg_energy_simplified(n, D, alpha));
        return HUL_OK;
    });
}

hul_status hul_dirac_energy_simplified(double n, double D, double alpha, hul_energy* out) {
    if (auto st = require(out != nullptr, "hul_dirac_energy_simplified: out is null")) return st;
    return guarded([&] {
        *out = from_result(hulthen::dirac_energy_simplified(n, D, alpha));
        return HUL_OK;
    });
}

hul_status hul_alpha_threshold(hul_threshold_kind kind, double n, double D, double* out) {
    if (auto st = require(out != nullptr, "hul_alpha_threshold: out is null")) return st;
    return guarded([&] {
        const auto k = kind == HUL_THRESHOLD_KG ? hulthen::ThresholdKind::kg
                                                : hulthen::ThresholdKind::dirac;
        *out = hulthen::alpha_threshold(k, n, D);
        return HUL_OK;
    });
}

hul_status hul_wavefn_create(const hul_state* s, const hul_model* m, hul_delta_policy policy,
                             size_t n_points, int normalized, hul_wavefn** out) {
    if (auto st = require(s && m && out, "hul_wavefn_create: null argument")) return st;
    if (auto st = require(n_points >= 8, "hul_wavefn_create: need at least 8 grid points")) return st;
    return guarded([&] {
        const auto E = hulthen::dirac_energy(s->state, m->params, hulthen::Branch::minus);
        if (!E.real()) {
            set_error("closed-form energy has imaginary status at these parameters");
            return HUL_ERR_DOMAIN;
        }
        auto grid = hulthen::make_radial_grid(m->params.alpha, n_points);
        auto rf = hulthen::make_radial_function(s->state, m->params, E, std::move(grid),
                                                to_policy(policy));
        if (normalized) rf = hulthen::normalize(std::move(rf));
        *out = new hul_wavefn{std::move(rf)};
        return HUL_OK;
    });
}

size_t hul_wavefn_size(const hul_wavefn* w) { return w ? w->rf.grid.size() : 0; }

hul_status hul_wavefn_copy(const hul_wavefn* w, double* r, double* F, double* G) {
    if (auto st = require(w != nullptr, "hul_wavefn_copy: null handle")) return st;
    const size_t n = w->rf.grid.size();
    if (r) std::memcpy(r, w->rf.grid.data(), n * sizeof(double));
    if (F) std::memcpy(F, w->rf.F.data(), n * sizeof(double));
    if (G) std::memcpy(G, w->rf.G.data(), n * sizeof(double));
    return HUL_OK;
}

hul_status hul_wavefn_info(const hul_wavefn* w, double* energy, double* norm_constant,
                           double* epsilon, double* delta) {
    if (auto st = require(w != nullptr, "hul_wavefn_info: null handle")) return st;
    if (energy) *energy = w->rf.energy.value;
    if (norm_constant) *norm_constant = w->rf.norm_constant;
    if (epsilon) *epsilon = w->rf.epsilon;
    if (delta) *delta = w->rf.delta;
    return HUL_OK;
}

void hul_wavefn_destroy(hul_wavefn* w) { delete w; }

hul_status hul_node_count(const double* samples, size_t n, int* out) {
    if (auto st = require(samples && out, "hul_node_count: null argument")) return st;
    return guarded([&] {
        *out = hulthen::node_count(std::span<const double>(samples, n));
        return HUL_OK;
    });
}

hul_status hul_oracle_find(const hul_state* s, const hul_model* m, hul_centrifugal_mode mode,
                           int cap, hul_energy* out_energies, int* out_nodes, int* found,
                           char* diag_buf, size_t diag_len) {
    if (auto st = require(s && m && found, "hul_oracle_find: null argument")) return st;
    if (auto st = require(cap >= 0, "hul_oracle_find: negative capacity")) return st;
    return guarded([&] {
        const auto cmode = mode == HUL_CENTRIFUGAL_EXACT ? hulthen::CentrifugalMode::exact
                                                         : hulthen::CentrifugalMode::approximated;
        const auto problem = hulthen::ShootingProblem::make(s->state, m->params, cmode);
        const auto res = hulthen::find_eigenvalues(problem, cap);
        *found = static_cast<int>(res.eigenvalues.size());
        for (int i = 0; i < *found; ++i) {
            if (out_energies) out_energies[i] = from_result(res.eigenvalues[i].energy);
            if (out_nodes) out_nodes[i] = res.eigenvalues[i].nodes;
        }
        if (diag_buf && diag_len > 0) {
            std::string d = "scanned " + std::to_string(res.scan.points_evaluated) + " energies in [" +
                            std::to_string(res.scan.E_lo) + ", " + std::to_string(res.scan.E_hi) +
                            "]: " + std::to_string(res.scan.brackets_found) + " brackets, " +
                            std::to_string(res.scan.poles_rejected) + " pole crossings, " +
                            std::to_string(res.scan.points_failed) + " failed points";
            std::strncpy(diag_buf, d.c_str(), diag_len - 1);
            diag_buf[diag_len - 1] = '\0';
        }
        return HUL_OK;
    });
}

hul_status hul_intersections_simplified(hul_source source, double n1, double D1, double n2,
                                        double D2, double alpha_lo, double alpha_hi,
                                        size_t grid_points, double* alpha_star, double* energy,
                                        size_t cap, size_t* found) {
    if (auto st = require(found != nullptr, "hul_intersections_simplified: found is null")) return st;
    if (auto st = require(grid_points >= 2, "hul_intersections_simplified: need >= 2 grid points"))
        return st;
    return guarded([&] {
        hulthen::EnergySource src;
        if (source == HUL_SOURCE_KG_SIMPLIFIED)
            src = hulthen::EnergySource::kg_eq32;
        else if (source == HUL_SOURCE_DIRAC_SIMPLIFIED)
            src = hulthen::EnergySource::dirac_eq33;
        else {
            set_error("hul_intersections_simplified: source must be a simplified formula");
            return HUL_ERR_INVALID;
        }
        if (!(alpha_lo > 0.0 && alpha_hi > alpha_lo)) {
            set_error("hul_intersections_simplified: need 0 < alpha_lo < alpha_hi");
            return HUL_ERR_DOMAIN;
        }
        const auto grid = hulthen::log_spaced(alpha_lo, alpha_hi, grid_points);
        const auto a = hulthen::alpha_curve_simplified(src, n1, D1, grid);
        const auto b = hulthen::alpha_curve_simplified(src, n2, D2, grid);
        const auto hits = hulthen::find_intersections(a, b);
        *found = hits.size();
        for (size_t i = 0; i < hits.size() && i < cap; ++i) {
            if (alpha_star) alpha_star[i] = hits[i].alpha_star;
            if (energy) energy[i] = hits[i].energy_at_crossing;
        }
        return HUL_OK;
    });
}

hul_status hul_consistency_report_json(char** out_json) {
    if (auto st = require(out_json != nullptr, "hul_consistency_report_json: out is null")) return st;
    return guarded([&] {
        const auto rep = hulthen::consistency_report();
        json j{{"kg_pair", ratio_fit_json(rep.kg)},
               {"dirac_pair_n_from_ell", ratio_fit_json(rep.dirac_n_from_ell)},
               {"dirac_pair_n_from_kappa", ratio_fit_json(rep.dirac_n_from_kappa)}};
        *out_json = dup_string(j.dump(2));
        if (!*out_json) {
            set_error("out of memory");
            return HUL_ERR_INTERNAL;
        }
        return HUL_OK;
    });
}

hul_status hul_approximation_report_json(const hul_model* m, const int* n_r, const int* ell,
                                         const int* D, size_t n_states, const double* alphas,
                                         size_t n_alphas, char** out_json) {
    if (auto st = require(m && n_r && ell && D && alphas && out_json,
                          "hul_approximation_report_json: null argument"))
        return st;
    return guarded([&] {
        std::vector<hulthen::QuantumState> states;
        states.reserve(n_states);
        for (size_t i = 0; i < n_states; ++i)
            states.emplace_back(n_r[i], ell[i], D[i], hulthen::Alignment::unaligned);
        const auto rows = hulthen::approximation_error_report(
            states, m->params, std::span<const double>(alphas, n_alphas));
        json j = json::array();
        for (const auto& row : rows) {
            json r{{"n_r", row.n_r},      {"ell", row.ell},     {"D", row.D},
                   {"alpha", row.alpha},  {"diagnostic", row.diagnostic}};
            r["E_closed_form"] = row.E_closed_form ? json(*row.E_closed_form) : json();
            r["E_oracle_approx"] = row.E_oracle_approx ? json(*row.E_oracle_approx) : json();
            r["E_oracle_exact"] = row.E_oracle_exact ? json(*row.E_oracle_exact) : json();
            r["gap_approx"] = row.gap_approx ? json(*row.gap_approx) : json();
            r["gap_exact"] = row.gap_exact ? json(*row.gap_exact) : json();
            j.push_back(std::move(r));
        }
        *out_json = dup_string(j.dump(2));
        if (!*out_json) {
            set_error("out of memory");
            return HUL_ERR_INTERNAL;
        }
        return HUL_OK;
    });
}

void hul_string_free(char* s) { std::free(s); }

}  // extern "C"
