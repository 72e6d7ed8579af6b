#include <cmath>

#include "doctest.h"
#include "hulthen/spectra.hpp"

using namespace hulthen;

namespace {
QuantumState st(int nr, int ell, int D) { return QuantumState(nr, ell, D, Alignment::unaligned); }
}  // namespace

TEST_CASE("closed-form energies, minus branch, Z = mu0 = 1") {
    struct Row {
        int nr, ell, D;
        double alpha, E;
    };
    const Row rows[] = {
        {0, 0, 3, 0.1, -1.0952245207128440144},
        {0, 0, 3, 0.2, -1.181626369141520645},
        {0, 0, 3, 0.4, -1.3308422980528035075},
        {1, 0, 3, 0.2, -1.1582088377567464964},
        {0, 0, 4, 0.2, -1.1711521124009285237},
        {2, 1, 5, 0.2, -1.0214741892887040013},
    };
    for (const auto& r : rows) {
        const auto e = dirac_energy(st(r.nr, r.ell, r.D), ModelParams(1.0, r.alpha, 1.0), Branch::minus);
        REQUIRE(e.real());
        CHECK(e.value == doctest::Approx(r.E).epsilon(1e-14));
        CHECK(e.source == EnergySource::dirac_eq23);
    }
}

TEST_CASE("imaginary status is data, not an error") {
    const auto e = dirac_energy(st(2, 1, 5), ModelParams(1.0, 0.4, 1.0), Branch::minus);
    CHECK_FALSE(e.real());
    CHECK(std::isnan(e.value));
    CHECK(e.radicand < 0.0);
}

TEST_CASE("branch ordering: plus above minus when both real") {
    for (double alpha : {0.1, 0.2, 0.4}) {
        const ModelParams p(1.0, alpha, 1.0);
        const auto lo = dirac_energy(st(0, 0, 3), p, Branch::minus);
        const auto hi = dirac_energy(st(0, 0, 3), p, Branch::plus);
        REQUIRE(lo.real());
        REQUIRE(hi.real());
        CHECK(hi.value > lo.value);
        CHECK(hi.radicand == doctest::Approx(lo.radicand));
    }
}

TEST_CASE("Coulomb-limit spectrum") {
    // N = n_r + |kappa| + 1 = 2 for the D = 3 ground state
    CHECK(coulomb_limit_energy(st(0, 0, 3), 1.0, 1.0) == doctest::Approx(2.0 / std::sqrt(5.0)));
    // increases toward sqrt(mu0) with N
    double prev = 0.0;
    for (int nr = 0; nr < 5; ++nr) {
        const double e = coulomb_limit_energy(st(nr, 0, 3), 1.0, 1.0);
        CHECK(e > prev);
        CHECK(e < 1.0);
        prev = e;
    }
}

TEST_CASE("epsilon/beta identity round trip") {
    const ModelParams p(1.0, 0.2, 1.0);
    const auto e = dirac_energy(st(0, 0, 3), p, Branch::minus);
    const auto q = epsilon_beta(e.value, st(0, 0, 3), p);
    REQUIRE(q.epsilon_real);
    CHECK(q.epsilon * q.epsilon * p.alpha * p.alpha ==
          doctest::Approx(p.mu0 * p.mu0 + q.beta1 * p.alpha * p.alpha - e.value * e.value)
              .epsilon(1e-12));
    CHECK(q.beta1 == doctest::Approx((2.0 + 0.2) / 0.2));
    CHECK(q.beta2 == doctest::Approx((2.0 * e.value + 0.2) / 0.2));
    CHECK(q.eta == doctest::Approx(5.0));  // N^2 + Z^2 with N = 2
}

TEST_CASE("series-termination residual at the closed-form energy") {
    // The closed-form energies do not annihilate the residual; the values are
    // pinned so any change in either side is caught.
    const ModelParams p(1.0, 0.2, 1.0);
    const auto e0 = dirac_energy(st(0, 0, 3), p, Branch::minus);
    CHECK(quantization_residual(e0.value, st(0, 0, 3), p) ==
          doctest::Approx(2.09186815429).epsilon(1e-9));
    const auto e1 = dirac_energy(st(1, 0, 3), p, Branch::minus);
    CHECK(quantization_residual(e1.value, st(1, 0, 3), p) ==
          doctest::Approx(3.13930387414).epsilon(1e-9));
}

TEST_CASE("residual error modes") {
    const ModelParams p(1.0, 0.2, 1.0);
    // |E| far above the window makes epsilon imaginary
    CHECK_THROWS_AS(quantization_residual(50.0, st(0, 0, 3), p), std::domain_error);
}

TEST_CASE("delta policy changes only aligned states") {
    const ModelParams p(1.0, 0.2, 1.0);
    const QuantumState aligned(0, 1, 3, Alignment::aligned);    // kappa = -2
    const QuantumState unaligned(0, 1, 3, Alignment::unaligned);  // kappa = +2
    const auto qa_def = epsilon_beta(-1.0, aligned, p, DeltaPolicy::abs_kappa_plus_one);
    const auto qa_lit = epsilon_beta(-1.0, aligned, p, DeltaPolicy::literal);
    CHECK(qa_def.delta == doctest::Approx(3.0));
    CHECK(qa_lit.delta == doctest::Approx(2.0));  // positive root -kappa = |kappa|
    const auto qu_def = epsilon_beta(-1.0, unaligned, p, DeltaPolicy::abs_kappa_plus_one);
    const auto qu_lit = epsilon_beta(-1.0, unaligned, p, DeltaPolicy::literal);
    CHECK(qu_def.delta == doctest::Approx(3.0));
    CHECK(qu_lit.delta == doctest::Approx(3.0));
    // the literal policy's delta is a root of delta^2 - delta - kappa(kappa+1);
    // the default (|kappa|+1) is NOT one for aligned states -- that gap is the
    // point of having both policies.
    const double k = aligned.kappa();
    CHECK(qa_lit.delta * qa_lit.delta - qa_lit.delta - k * (k + 1.0) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::fabs(qa_def.delta * qa_def.delta - qa_def.delta - k * (k + 1.0)) > 1.0);
}

TEST_CASE("Klein-Gordon energies") {
    const auto e30 = kg_energy(st(0, 0, 3), 1.0, 1.0, 0.5, Branch::minus);
    REQUIRE(e30.real());
    CHECK(e30.value == doctest::Approx(-0.85912291827592711065).epsilon(1e-14));

    const auto e32 = kg_energy_simplified(1, 3.0, 1.0);
    REQUIRE(e32.real());
    CHECK(e32.value == doctest::Approx(-1.0 - std::sqrt(3.0)).epsilon(1e-14));

    CHECK_THROWS_AS(kg_energy_simplified(0, 3.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(kg_energy_simplified(1, 1.0, 0.5), std::domain_error);  // 2n+D-3 = 0
}

TEST_CASE("exact inter-dimensional degeneracy of the principal-n form") {
    // rho1 = (2n+D-3)^2 is invariant under (n, D) -> (n+1, D-2).
    for (int n : {1, 2, 3})
        for (int D : {4, 5, 6})
            for (double alpha : {0.05, 0.3, 0.9}) {
                const auto a = kg_energy_simplified(n, D, alpha);
                const auto b = kg_energy_simplified(n + 1, D - 2, alpha);
                CHECK(a.real() == b.real());
                if (a.real()) CHECK(a.value == doctest::Approx(b.value).epsilon(1e-15));
            }
}

TEST_CASE("principal-n Dirac form") {
    const auto e = dirac_energy_simplified(1.0, 3.0, 0.5);
    REQUIRE(e.real());
    CHECK(e.value == doctest::Approx(-2.2888543819998317571).epsilon(1e-14));
    CHECK_THROWS_AS(dirac_energy_simplified(0.0, 3.0, 0.5), std::domain_error);
}

TEST_CASE("thresholds and radicand sign flips") {
    CHECK(alpha_threshold(ThresholdKind::kg, 1.0, 3.0) == doctest::Approx(2.0));
    CHECK(alpha_threshold(ThresholdKind::dirac, 1.0, 3.0) ==
          doctest::Approx(1.6180339887498948482).epsilon(1e-15));

    for (int n = 1; n <= 5; ++n)
        for (int D = 2; D <= 8; ++D) {
            if (2 * n + D - 3 <= 0) continue;
            const double at = alpha_threshold(ThresholdKind::kg, n, D);
            CHECK(std::fabs(kg_energy_simplified(n, D, at).radicand) < 1e-10);
            CHECK(kg_energy_simplified(n, D, at * (1.0 + 1e-6)).radicand < 0.0);
            CHECK(kg_energy_simplified(n, D, at * (1.0 - 1e-6)).radicand > 0.0);

            const double ad = alpha_threshold(ThresholdKind::dirac, n, D);
            CHECK(std::fabs(dirac_energy_simplified(n, D, ad).radicand) < 1e-9);
            CHECK(dirac_energy_simplified(n, D, ad * (1.0 + 1e-6)).radicand < 0.0);
            CHECK(dirac_energy_simplified(n, D, ad * (1.0 - 1e-6)).radicand > 0.0);
        }
}

TEST_CASE("small-alpha anchor of the principal-n KG form") {
    // E -> -4 as alpha -> 0 for every n, D with 2n+D-3 > 0.
    for (int n : {1, 3, 5})
        for (double D : {3.0, 10.0, 50.0})
            CHECK(kg_energy_simplified(n, D, 1e-8).value == doctest::Approx(-4.0).epsilon(1e-6));
}
