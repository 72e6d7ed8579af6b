#include <cmath>

#include "doctest.h"
#include "hulthen/specfun.hpp"
#include "hulthen/wavefn.hpp"

using namespace hulthen;

namespace {
const ModelParams kP(1.0, 0.2, 1.0);
QuantumState st(int nr, int ell, int D) { return QuantumState(nr, ell, D, Alignment::unaligned); }
}  // namespace

TEST_CASE("upper component endpoints and positivity for the nodeless state") {
    const auto e = dirac_energy(st(0, 0, 3), kP, Branch::minus);
    const auto grid = make_radial_grid(kP.alpha, 800);
    const auto F = upper_component(st(0, 0, 3), kP, e, grid);
    REQUIRE(F.size() == grid.size());
    CHECK(std::fabs(F.front()) < 1e-3);  // ~ s^eps (1-s)^delta -> (alpha r)^delta at r -> 0
    CHECK(std::fabs(F.back()) < 1e-10);  // exponential decay
    CHECK(node_count(F) == 0);
}

TEST_CASE("node counts follow the radial quantum number (closed form)") {
    for (int nr : {0, 1, 2}) {
        const auto e = dirac_energy(st(nr, 0, 3), kP, Branch::minus);
        REQUIRE(e.real());
        const auto grid = make_radial_grid(kP.alpha, 3000);
        const auto F = upper_component(st(nr, 0, 3), kP, e, grid);
        CHECK(node_count(F) == nr);
    }
}

TEST_CASE("imaginary-status energy is rejected") {
    const auto e = dirac_energy(st(2, 1, 5), ModelParams(1.0, 0.4, 1.0), Branch::minus);
    REQUIRE_FALSE(e.real());
    const auto grid = make_radial_grid(0.4, 100);
    CHECK_THROWS_AS(upper_component(st(2, 1, 5), ModelParams(1.0, 0.4, 1.0), e, grid),
                    std::invalid_argument);
}

TEST_CASE("analytic derivative matches finite differences") {
    const auto e = dirac_energy(st(1, 0, 3), kP, Branch::minus);
    const auto dF = upper_component_derivative(st(1, 0, 3), kP, e, std::vector<double>{1.0, 3.0, 7.0});
    for (std::size_t i = 0; i < 3; ++i) {
        const double r = std::vector<double>{1.0, 3.0, 7.0}[i];
        const double h = 1e-6;
        const auto Fp = upper_component(st(1, 0, 3), kP, e, std::vector<double>{r + h});
        const auto Fm = upper_component(st(1, 0, 3), kP, e, std::vector<double>{r - h});
        CHECK(dF[i] == doctest::Approx((Fp[0] - Fm[0]) / (2 * h)).epsilon(1e-6));
    }
}

TEST_CASE("upper component equals its hypergeometric form") {
    // F = s^eps (1-s)^delta P_n^{(2eps, 2delta-1)}(1-2s)
    //   = s^eps (1-s)^delta binom(n+2eps, n) 2F1(-n, n+2eps+2delta; 2eps+1; s)
    const auto state = st(2, 0, 3);
    const auto e = dirac_energy(state, kP, Branch::minus);
    const auto q = epsilon_beta(e.value, state, kP);
    const auto grid = make_radial_grid(kP.alpha, 60);
    const auto F = upper_component(state, kP, e, grid);
    const double pref = std::exp(std::lgamma(2 + 2.0 * q.epsilon + 1.0) -
                                 std::lgamma(2.0 * q.epsilon + 1.0) - std::lgamma(3.0));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double s = std::exp(-kP.alpha * grid[i]);
        const double oms = -std::expm1(-kP.alpha * grid[i]);
        const double alt = std::pow(s, q.epsilon) * std::pow(oms, q.delta) * pref *
                           hyp2f1_terminating(2, 2 + 2.0 * q.epsilon + 2.0 * q.delta,
                                              2.0 * q.epsilon + 1.0, s);
        CHECK(F[i] == doctest::Approx(alt).epsilon(1e-10));
    }
}

TEST_CASE("lower component honors the scaling of the supplied F") {
    const auto state = st(0, 0, 3);
    const auto e = dirac_energy(state, kP, Branch::minus);
    const auto grid = make_radial_grid(kP.alpha, 300);
    auto F = upper_component(state, kP, e, grid);
    const auto G1 = lower_component(state, kP, e, grid, F);
    for (auto& v : F) v *= 2.5;
    const auto G2 = lower_component(state, kP, e, grid, F);
    for (std::size_t i = 0; i < G1.size(); ++i)
        CHECK(G2[i] == doctest::Approx(2.5 * G1[i]).epsilon(1e-12));
}

TEST_CASE("denominator cannot vanish while epsilon stays real") {
    // mu0^2 + beta1 alpha^2 = (mu0 + Z alpha)^2, so epsilon is real exactly
    // for |E| <= mu0 + Z alpha -- and min_r [mu + E - V] = mu0 + Z alpha + E
    // is then >= 0. A pole would need E below the window, where the closed
    // form already refuses.
    const auto state = st(0, 0, 3);
    const auto grid = make_radial_grid(kP.alpha, 300);
    const double mu_inf = kP.mu0 + kP.Z * kP.alpha;
    const EnergyResult edge{-0.999 * mu_inf, 1.0, EnergyStatus::real, Branch::minus,
                            EnergySource::dirac_eq23};
    CHECK_NOTHROW(lower_component(state, kP, edge, grid, upper_component(state, kP, edge, grid)));
    const EnergyResult below{-1.01 * mu_inf, 1.0, EnergyStatus::real, Branch::minus,
                             EnergySource::dirac_eq23};
    CHECK_THROWS_AS(upper_component(state, kP, below, grid), std::domain_error);
}

TEST_CASE("normalization integrates to one and ignores prior scaling") {
    const auto state = st(1, 0, 3);
    const auto e = dirac_energy(state, kP, Branch::minus);
    auto rf = make_radial_function(state, kP, e, make_radial_grid(kP.alpha, 2000));
    auto scaled = rf;
    for (auto& v : scaled.F) v *= 17.0;
    for (auto& v : scaled.G) v *= 17.0;

    const auto n1 = normalize(rf);
    const auto n2 = normalize(scaled);
    CHECK(n1.normalized);
    CHECK(n1.norm_constant > 0.0);
    for (std::size_t i = 0; i < n1.F.size(); i += 97) {
        CHECK(n1.F[i] == doctest::Approx(n2.F[i]).epsilon(1e-14));
        CHECK(n1.G[i] == doctest::Approx(n2.G[i]).epsilon(1e-14));
    }

    // trapezoid check of the density integral on the dense grid
    double I = 0.0;
    for (std::size_t i = 1; i < n1.grid.size(); ++i) {
        const double d0 = n1.F[i - 1] * n1.F[i - 1] + n1.G[i - 1] * n1.G[i - 1];
        const double d1 = n1.F[i] * n1.F[i] + n1.G[i] * n1.G[i];
        I += 0.5 * (d0 + d1) * (n1.grid[i] - n1.grid[i - 1]);
    }
    CHECK(I == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("node_count on synthetic samples") {
    CHECK(node_count(std::vector<double>{1.0, 2.0, 3.0}) == 0);
    CHECK(node_count(std::vector<double>{1.0, -1.0, 1.0}) == 2);
    CHECK(node_count(std::vector<double>{1.0, 1e-15, -1.0}) == 1);  // tiny sample ignored
    CHECK(node_count(std::vector<double>{-1.0, -0.5, 0.5, 1.0, 0.5, -2.0}) == 2);
    CHECK_THROWS_AS(node_count(std::vector<double>{1.0, NAN}), std::invalid_argument);
}

TEST_CASE("first-order-pair residual is computable and finite") {
    const auto state = st(0, 0, 3);
    const auto e = dirac_energy(state, kP, Branch::minus);
    auto rf = normalize(make_radial_function(state, kP, e, make_radial_grid(kP.alpha, 2000)));
    const auto res = eq9_relative_residual(rf);
    REQUIRE(res.size() == rf.grid.size());
    double worst = 0.0;
    for (std::size_t i = res.size() / 20; i < res.size() - res.size() / 20; ++i)
        worst = std::max(worst, res[i]);
    CHECK(std::isfinite(worst));
    CHECK(worst > 0.0);
}

TEST_CASE("two-polynomial fit of the lower component runs") {
    const auto state = st(1, 0, 3);
    const auto e = dirac_energy(state, kP, Branch::minus);
    auto rf = normalize(make_radial_function(state, kP, e, make_radial_grid(kP.alpha, 1000)));
    const auto fit = fit_lower_component_form(rf);
    CHECK(std::isfinite(fit.B));
    CHECK(std::isfinite(fit.max_residual));
    CHECK(fit.max_residual >= 0.0);
}
