#include <random>

#include "doctest.h"
#include "dgla/corpus.hpp"
#include "dgla/deformation.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dgla;
using testing::gen_vec;
using testing::term;

namespace {

Scalar small_rational(std::mt19937& rng) {
  return rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
}

// Random element of g^degree (x) m with every monomial up to the ring order.
FormalElement random_element(const Dgla& g, const CoefficientRing& ring, int degree,
                             std::mt19937& rng) {
  FormalElement out = zero_element(g, ring, degree);
  for (int p = 1; p <= ring.order; ++p) {
    Vector v = zero_vector(g.dim(degree));
    for (auto& c : v) c = rng() % 3 == 0 ? Scalar(0) : small_rational(rng);
    out.add_term(Monomial::variable(ring.size(), 0, p), v);
  }
  return out;
}

FormalElement harmonic_direction(const Dgla& g, const SdrData& sdr, std::size_t i,
                                 const CoefficientRing& ring) {
  return monomial_element(g, ring, 1, sdr.splitting.at(1).harmonic[i],
                          Monomial::variable(ring.size(), 0));
}

}  // namespace

TEST_CASE("E1 worked example: tau = x t - 1/2 c t^2") {
  const Dgla e1 = builtin_example("E1");
  const SdrData sdr = build_sdr(e1);
  for (int order : {3, 4, 6}) {
    CAPTURE(order);
    const auto ring = CoefficientRing::single(order);
    const FormalElement x = term(e1, ring, "x", 1, 1);
    const MCSolution sol = solve_mc_ivp(e1, sdr, x);
    CHECK(sol.tau == x + term(e1, ring, "c", rational(-1, 2), 2));
    CHECK(sol.residual.is_zero());
    CHECK(sol.obstruction.is_zero());
    CHECK(sol.flat());
    CHECK(sol.iterations <= order);
  }
  // Direct substitution, independent of the solver.
  const auto ring = CoefficientRing::single(3);
  const FormalElement tau = term(e1, ring, "x", 1, 1) + term(e1, ring, "c", rational(-1, 2), 2);
  CHECK(curvature(e1, tau).is_zero());
  CHECK(curvature(e1, term(e1, ring, "x", 1, 1)) == term(e1, ring, "b", rational(1, 2), 2));
}

TEST_CASE("E3 worked example is obstructed") {
  const Dgla e3 = builtin_example("E3");
  const SdrData sdr = build_sdr(e3);
  const auto ring = CoefficientRing::single(2);
  const FormalElement x = term(e3, ring, "x", 1, 1);
  const MCSolution sol = solve_mc_ivp(e3, sdr, x);
  const FormalElement half_b = term(e3, ring, "b", rational(1, 2), 2);
  CHECK(sol.tau == x);
  CHECK(sol.residual == half_b);
  CHECK(sol.obstruction == half_b);
  CHECK(obstruction(e3, sdr, x) == half_b);
  CHECK_FALSE(kur_membership(e3, sdr, x));
}

TEST_CASE("E0 solutions are the directions themselves") {
  const Dgla e0 = builtin_example("E0");
  const SdrData sdr = build_sdr(e0);
  const auto ring = CoefficientRing::single(4);
  const FormalElement x = term(e0, ring, "x1", 2, 1) + term(e0, ring, "x2", rational(-1, 3), 2);
  const MCSolution sol = solve_mc_ivp(e0, sdr, x);
  CHECK(sol.tau == x);
  CHECK(sol.flat());
  CHECK(kuranishi_map(e0, sdr, x) == x);
  CHECK(kur_membership(e0, sdr, term(e0, ring, "x1", 1, 1)));
  CHECK(obstruction(e0, sdr, x).is_zero());
}

TEST_CASE("solve_mc_ivp rejects bad directions") {
  const Dgla e1 = builtin_example("E1");
  const SdrData sdr = build_sdr(e1);
  const auto ring = CoefficientRing::single(3);
  CHECK_THROWS_AS(solve_mc_ivp(e1, sdr, term(e1, ring, "c", 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(solve_mc_ivp(e1, sdr, term(e1, ring, "b", 1, 1)), std::invalid_argument);
  // A coboundary component at order 2 is allowed: only the order-1 part must be a cocycle.
  CHECK_NOTHROW(solve_mc_ivp(e1, sdr, term(e1, ring, "x", 1, 1) + term(e1, ring, "c", 1, 2)));
  CHECK_THROWS_AS(kur_membership(e1, sdr, term(e1, ring, "c", 1, 1)), std::invalid_argument);
}

TEST_CASE("universal solutions") {
  SUBCASE("E1") {
    const Dgla e1 = builtin_example("E1");
    const MCSolution sol = universal_solution(e1, build_sdr(e1), 4);
    const auto& ring = sol.tau.ring();
    REQUIRE(ring.size() == 1);
    CHECK(ring.variables[0] == "t1");
    CHECK(sol.tau.coefficient(Monomial::variable(1, 0, 1)) == gen_vec(e1, "x"));
    CHECK(sol.tau.coefficient(Monomial::variable(1, 0, 2)) == rational(-1, 2) * gen_vec(e1, "c"));
    CHECK(is_zero(sol.tau.coefficient(Monomial::variable(1, 0, 3))));
    CHECK(sol.flat());
  }
  SUBCASE("E0") {
    const Dgla e0 = builtin_example("E0");
    const MCSolution sol = universal_solution(e0, build_sdr(e0), 3);
    const auto& ring = sol.tau.ring();
    REQUIRE(ring.size() == 2);
    CHECK(sol.tau == term(e0, ring, "x1", 1, 1, 0) + term(e0, ring, "x2", 1, 1, 1));
  }
  SUBCASE("E3") {
    const Dgla e3 = builtin_example("E3");
    const MCSolution sol = universal_solution(e3, build_sdr(e3), 3);
    const auto& ring = sol.tau.ring();
    CHECK(sol.tau == term(e3, ring, "x", 1, 1));
    CHECK(sol.obstruction == term(e3, ring, "b", rational(1, 2), 2));
  }
  SUBCASE("E4 has no first cohomology") {
    const Dgla e4 = builtin_example("E4");
    const MCSolution sol = universal_solution(e4, build_sdr(e4), 3);
    CHECK(sol.tau.is_zero());
    CHECK(sol.flat());
  }
}

TEST_CASE("Kuranishi map and its inverse") {
  const Dgla e1 = builtin_example("E1");
  const SdrData sdr = build_sdr(e1);
  const auto ring = CoefficientRing::single(3);
  const FormalElement x = term(e1, ring, "x", 1, 1);
  const FormalElement tau = x + term(e1, ring, "c", rational(-1, 2), 2);
  CHECK(kuranishi_map(e1, sdr, tau) == x);
  CHECK(kuranishi_inverse(e1, sdr, x) == tau);
  CHECK(kuranishi_inverse(e1, sdr, zero_element(e1, ring, 1)).is_zero());
  CHECK(obstruction(e1, sdr, x).is_zero());
  CHECK(kur_membership(e1, sdr, x));

  const Dgla e3 = builtin_example("E3");
  const SdrData s3 = build_sdr(e3);
  const FormalElement y = term(e3, ring, "x", 3, 1) + term(e3, ring, "x", -1, 3);
  CHECK(kuranishi_map(e3, s3, y) == y);
}

TEST_CASE("exp/log round trip over the corpus") {
  for (const auto& name : builtin_names()) {
    const Dgla g = builtin_example(name);
    const SdrData sdr = build_sdr(g);
    const std::size_t k = g.dim(1) == 0 ? 0 : sdr.splitting.at(1).harmonic.size();
    for (int order = 2; order <= 5; ++order) {
      const auto ring = CoefficientRing::single(order);
      for (std::size_t i = 0; i < k; ++i) {
        CAPTURE(name);
        CAPTURE(order);
        CAPTURE(i);
        const FormalElement x = harmonic_direction(g, sdr, i, ring);
        const MCSolution sol = solve_mc_ivp(g, sdr, x);
        CHECK(kuranishi_map(g, sdr, sol.tau) == x);
        CHECK(kuranishi_inverse(g, sdr, kuranishi_map(g, sdr, sol.tau)) == sol.tau);
        CHECK(sol.iterations <= order);
        CHECK(sol.tau.order_part(1) == x.order_part(1));
        CHECK(solve_by_recursion(g, sdr, x) == sol.tau);
        CHECK(sol.residual.is_zero() == sol.obstruction.is_zero());
        CHECK(obstruction(g, sdr, x) == sol.obstruction);
        // F = 2 Id - C_x, evaluated at x.
        CHECK(kuranishi_map(g, sdr, x) == x.scaled(2) - contraction_step(g, sdr, x, x));
      }
    }
  }
}

TEST_CASE("iterates agree with the fixed point below order n + 1") {
  const Dgla e1 = builtin_example("E1");
  const SdrData sdr = build_sdr(e1);
  const auto ring = CoefficientRing::single(5);
  // A direction with higher-order terms keeps the iteration going longer.
  const FormalElement x = term(e1, ring, "x", 1, 1) + term(e1, ring, "c", 2, 2) +
                          term(e1, ring, "x", -1, 3);
  const auto ys = fixed_point_iterates(e1, sdr, x);
  const FormalElement& fixed = ys.back();
  CHECK(contraction_step(e1, sdr, x, fixed) == fixed);
  CHECK(static_cast<int>(ys.size()) <= ring.order);
  for (std::size_t n = 0; n < ys.size(); ++n) {
    CHECK(ys[n].truncated(static_cast<int>(n) + 1) == fixed.truncated(static_cast<int>(n) + 1));
  }
  CHECK(solve_by_recursion(e1, sdr, x) == fixed);
  CHECK(kuranishi_map(e1, sdr, fixed) == x);
}

TEST_CASE("E2 obstruction matches the brute-force Jacobiator") {
  const Dgla e2 = builtin_example("E2");
  const SdrData sdr = build_sdr(e2);
  const auto ring = CoefficientRing::single(3);
  oracle::Bilinear mu;
  mu.set(1, 2, oracle::e(3));
  mu.set(1, 3, oracle::e(1));
  const oracle::Vec3 jac = oracle::jacobiator(mu, oracle::e(1), oracle::e(2), oracle::e(3));
  REQUIRE(jac == oracle::Vec3{0, 0, -1});

  const FormalElement x =
      monomial_element(e2, ring, 1, testing::ce3_coordinates(e2, mu), Monomial::variable(1, 0));
  const MCSolution sol = solve_mc_ivp(e2, sdr, x);
  const Vector expected = testing::ce3_top_coordinates(e2, jac);
  CHECK(sol.obstruction.coefficient(Monomial::variable(1, 0, 2)) == expected);
  CHECK(obstruction(e2, sdr, x) == sol.obstruction);
  CHECK_FALSE(kur_membership(e2, sdr, x));

  oracle::Bilinear heisenberg;
  heisenberg.set(1, 2, oracle::e(3));
  const FormalElement hx = monomial_element(e2, ring, 1, testing::ce3_coordinates(e2, heisenberg),
                                            Monomial::variable(1, 0));
  CHECK(kur_membership(e2, sdr, hx));
}

TEST_CASE("gauge action on E4") {
  const Dgla e4 = builtin_example("E4");
  const SdrData sdr = build_sdr(e4);
  const auto ring = CoefficientRing::single(3, "s");
  const FormalElement a = term(e4, ring, "a", 1, 1);
  const FormalElement zero = zero_element(e4, ring, 1);
  const FormalElement minus_sx = term(e4, ring, "x", -1, 1);
  CHECK(gauge_act(e4, a, zero) == minus_sx);
  CHECK(gauge_act(e4, zero_element(e4, ring, 0), minus_sx) == minus_sx);

  const GaugeEquivalence eq = gauge_equivalent(e4, sdr, zero, minus_sx);
  REQUIRE(eq.witness);
  CHECK(*eq.witness == a);
  CHECK(gauge_act(e4, *eq.witness, zero) == minus_sx);

  const GaugeEquivalence same = gauge_equivalent(e4, sdr, minus_sx, minus_sx);
  REQUIRE(same.witness);
  CHECK(same.witness->is_zero());
}

TEST_CASE("gauge equivalence without a differential on g^0") {
  const Dgla e0 = builtin_example("E0");
  const SdrData sdr = build_sdr(e0);
  const auto ring = CoefficientRing::single(2);
  const FormalElement a = term(e0, ring, "x1", 1, 1);
  const FormalElement b = term(e0, ring, "x2", 1, 1);
  CHECK(gauge_act(e0, zero_element(e0, ring, 0), a) == a);
  const GaugeEquivalence eq = gauge_equivalent(e0, sdr, a, b);
  CHECK_FALSE(eq.witness);
  CHECK(eq.failed_order == 1);
  CHECK(gauge_equivalent(e0, sdr, a, a).witness);

  const Dgla e3 = builtin_example("E3");
  const auto r3 = CoefficientRing::single(2);
  CHECK_THROWS_AS(gauge_equivalent(e3, build_sdr(e3), term(e3, r3, "x", 1, 1), term(e3, r3, "x", 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("gauge action preserves flatness (randomised)") {
  std::mt19937 rng(20240611);
  SUBCASE("E4") {
    const Dgla e4 = builtin_example("E4");
    const SdrData sdr = build_sdr(e4);
    const auto ring = CoefficientRing::single(4, "s");
    for (int trial = 0; trial < 100; ++trial) {
      const FormalElement a = random_element(e4, ring, 0, rng);
      const FormalElement flat = random_element(e4, ring, 1, rng);
      REQUIRE(mc_residual(e4, flat).is_zero());
      const FormalElement moved = gauge_act(e4, a, flat);
      CHECK(mc_residual(e4, moved).is_zero());
      const GaugeEquivalence eq = gauge_equivalent(e4, sdr, flat, moved);
      REQUIRE(eq.witness);
      CHECK(gauge_act(e4, *eq.witness, flat) == moved);
    }
  }
  SUBCASE("E2: gl(3) acting on a Lie bracket") {
    const Dgla e2 = builtin_example("E2");
    const auto ring = CoefficientRing::single(3);
    oracle::Bilinear heisenberg;
    heisenberg.set(1, 2, oracle::e(3));
    const FormalElement flat = monomial_element(e2, ring, 1, testing::ce3_coordinates(e2, heisenberg),
                                                Monomial::variable(1, 0));
    REQUIRE(mc_residual(e2, flat).is_zero());
    for (int trial = 0; trial < 10; ++trial) {
      const FormalElement a = random_element(e2, ring, 0, rng);
      const FormalElement moved = gauge_act(e2, a, flat);
      CHECK(mc_residual(e2, moved).is_zero());
    }
  }
}

TEST_CASE("gauge fixing") {
  const Dgla e4 = builtin_example("E4");
  const SdrData s4 = build_sdr(e4);
  const auto ring = CoefficientRing::single(3, "s");
  CHECK(gauge_fix(s4, term(e4, ring, "x", 1, 1)).is_zero());
  CHECK(gauge_fix(s4, zero_element(e4, ring, 1)).is_zero());

  const Dgla e1 = builtin_example("E1");
  const SdrData s1 = build_sdr(e1);
  const auto r1 = CoefficientRing::single(3);
  const FormalElement tau = term(e1, r1, "x", 1, 1) + term(e1, r1, "c", rational(-1, 2), 2);
  CHECK(gauge_fix(s1, tau) == tau);

  std::mt19937 rng(99);
  for (const auto& name : builtin_names()) {
    const Dgla g = builtin_example(name);
    if (g.dim(1) == 0) continue;
    const SdrData sdr = build_sdr(g);
    for (int trial = 0; trial < 5; ++trial) {
      CAPTURE(name);
      const FormalElement v = random_element(g, r1, 1, rng);
      const FormalElement fixed = gauge_fix(sdr, v);
      CHECK(gauge_fix(sdr, fixed) == fixed);
      if (mc_residual(g, v).is_zero()) {
        const FormalElement k = kuranishi_map(g, sdr, fixed);
        CHECK(apply_graded(sdr.boundary_projection, k).is_zero());
      }
    }
  }
}
