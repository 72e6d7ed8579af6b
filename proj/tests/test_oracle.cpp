#include <cmath>

#include "doctest.h"
#include "hulthen/oracle.hpp"

using namespace hulthen;

namespace {
const ModelParams kP(1.0, 0.2, 1.0);
const QuantumState kGround(0, 0, 3, Alignment::unaligned);
}  // namespace

TEST_CASE("default problem window and match point") {
    const auto prob = ShootingProblem::make(kGround, kP);
    CHECK(prob.E_lo == doctest::Approx(-0.999 * 1.2));
    CHECK(prob.E_hi == doctest::Approx(0.999 * 1.2));
    CHECK(prob.scan_points == 400);
    CHECK(prob.match_radius == doctest::Approx(5.0));
}

TEST_CASE("mismatch functions are finite inside the window") {
    for (double E : {-1.1, -0.5, 0.0, 0.5, 1.1}) {
        CHECK(std::isfinite(shoot_approximated(kGround, kP, E)));
        CHECK(std::isfinite(shoot_exact_centrifugal(kGround, kP, E)));
    }
    CHECK_THROWS_AS(shoot_exact_centrifugal(kGround, kP, 5.0), std::domain_error);
}

TEST_CASE("scan of the transformed equation finds no eigenvalue in the window") {
    // Pinned numerical finding: the mismatch has no sign change anywhere in
    // the energy window for these parameters, so the oracle reports an empty
    // spectrum with full diagnostics rather than inventing a root.
    auto prob = ShootingProblem::make(kGround, kP);
    prob.scan_points = 80;
    const auto res = find_eigenvalues(prob, 3);
    CHECK(res.eigenvalues.empty());
    CHECK(res.scan.points_evaluated == 81);
    CHECK(res.scan.brackets_found == 0);
    CHECK(res.scan.points_failed == 0);
}

TEST_CASE("exact-centrifugal scan agrees that the window is empty") {
    auto prob = ShootingProblem::make(kGround, kP, CentrifugalMode::exact);
    prob.scan_points = 40;
    const auto res = find_eigenvalues(prob, 3);
    CHECK(res.eigenvalues.empty());
    CHECK(res.scan.brackets_found == 0);
}

TEST_CASE("scan is deterministic") {
    auto prob = ShootingProblem::make(kGround, kP);
    prob.scan_points = 50;
    const auto a = find_eigenvalues(prob, 2);
    const auto b = find_eigenvalues(prob, 2);
    CHECK(a.eigenvalues.size() == b.eigenvalues.size());
    CHECK(a.scan.points_evaluated == b.scan.points_evaluated);
    CHECK(a.scan.points_failed == b.scan.points_failed);
    CHECK(a.scan.brackets_found == b.scan.brackets_found);
    for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
        CHECK(a.eigenvalues[i].energy.value == b.eigenvalues[i].energy.value);
}

TEST_CASE("count <= 0 short-circuits") {
    const auto prob = ShootingProblem::make(kGround, kP);
    const auto res = find_eigenvalues(prob, 0);
    CHECK(res.eigenvalues.empty());
    CHECK(res.scan.points_evaluated == 0);
}

TEST_CASE("empty window is invalid") {
    auto prob = ShootingProblem::make(kGround, kP);
    prob.E_lo = 1.0;
    prob.E_hi = -1.0;
    CHECK_THROWS_AS(find_eigenvalues(prob, 1), std::invalid_argument);
}
