// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "dgla/cli.hpp"
#include "dgla/corpus.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dgla;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) {
      passed = false;
      detail = what;
    }
  }
};

struct Corpus {
  std::vector<std::pair<std::string, Dgla>> algebras;
  std::vector<SdrData> sdrs;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    for (const auto& name : builtin_names()) {
      out.algebras.emplace_back(name, builtin_example(name));
      out.sdrs.push_back(build_sdr(out.algebras.back().second));
    }
    return out;
  }();
  return c;
}

std::size_t h1_dim(const SdrData& sdr) {
  const auto it = sdr.splitting.degrees.find(1);
  return it == sdr.splitting.degrees.end() ? 0 : it->second.harmonic.size();
}

FormalElement h1_direction(const Dgla& g, const SdrData& sdr, std::size_t i, int order) {
  const auto ring = CoefficientRing::single(order);
  return monomial_element(g, ring, 1, sdr.splitting.at(1).harmonic[i], Monomial::variable(1, 0));
}

Outcome sdr_suite() {
  Outcome o;
  const auto& c = corpus();
  for (std::size_t k = 0; k < c.algebras.size(); ++k) {
    const CheckList checks = verify_sdr(c.sdrs[k]);
    o.require(checks.size() == 7, c.algebras[k].first + ": expected seven identities");
    for (const auto& chk : checks) o.require(chk.passed, c.algebras[k].first + ": " + chk.name);
  }
  return o;
}

Outcome hodge_suite() {
  Outcome o;
  const auto& c = corpus();
  for (std::size_t k = 0; k < c.algebras.size(); ++k) {
    const CheckList checks = verify_hodge(c.algebras[k].second, c.sdrs[k]);
    for (const char* name : {"star-involution", "star-codifferential", "laplacian-projection",
                             "laplacian-kernel", "decomposition"}) {
      const Check* chk = find_check(checks, name);
      o.require(chk != nullptr && chk->passed, c.algebras[k].first + ": " + name);
    }
  }
  return o;
}

Outcome exp_log_round_trip() {
  Outcome o;
  const auto& c = corpus();
  for (std::size_t k = 0; k < c.algebras.size(); ++k) {
    const Dgla& g = c.algebras[k].second;
    for (int order = 2; order <= 5; ++order) {
      for (std::size_t i = 0; i < h1_dim(c.sdrs[k]); ++i) {
        const FormalElement x = h1_direction(g, c.sdrs[k], i, order);
        const MCSolution sol = solve_mc_ivp(g, c.sdrs[k], x);
        const std::string where = c.algebras[k].first + " N=" + std::to_string(order) +
                                  " direction " + std::to_string(i);
        o.require(kuranishi_map(g, c.sdrs[k], sol.tau) == x, where + ": F(tau) != x");
        o.require(sol.iterations <= order, where + ": too many iterations");
      }
    }
  }
  return o;
}

Outcome worked_examples() {
  Outcome o;
  using testing::term;
  const Dgla e1 = builtin_example("E1");
  const SdrData s1 = build_sdr(e1);
  for (int order : {3, 4, 5}) {
    const auto ring = CoefficientRing::single(order);
    const MCSolution sol = solve_mc_ivp(e1, s1, term(e1, ring, "x", 1, 1));
    const FormalElement expected = term(e1, ring, "x", 1, 1) + term(e1, ring, "c", rational(-1, 2), 2);
    o.require(sol.tau == expected, "E1: tau != x t - 1/2 c t^2");
    o.require(sol.residual.is_zero() && sol.obstruction.is_zero(), "E1: not flat");
  }

  const Dgla e3 = builtin_example("E3");
  const SdrData s3 = build_sdr(e3);
  const auto r3 = CoefficientRing::single(2);
  const FormalElement x3 = term(e3, r3, "x", 1, 1);
  o.require(obstruction(e3, s3, x3) == term(e3, r3, "b", rational(1, 2), 2), "E3: obstruction != 1/2 b t^2");
  o.require(!kur_membership(e3, s3, x3), "E3: reported unobstructed");

  const Dgla e4 = builtin_example("E4");
  const SdrData s4 = build_sdr(e4);
  const auto r4 = CoefficientRing::single(3, "s");
  const FormalElement zero = zero_element(e4, r4, 1);
  const FormalElement target = term(e4, r4, "x", -1, 1);
  const GaugeEquivalence eq = gauge_equivalent(e4, s4, zero, target);
  o.require(eq.witness && *eq.witness == term(e4, r4, "a", 1, 1), "E4: witness != s a");
  o.require(eq.witness && gauge_act(e4, *eq.witness, zero) == target, "E4: witness does not verify");
  return o;
}

Outcome e2_oracle() {
  Outcome o;
  oracle::Bilinear mu;
  mu.set(1, 2, oracle::e(3));
  mu.set(1, 3, oracle::e(1));
  const oracle::Vec3 jac = oracle::jacobiator(mu, oracle::e(1), oracle::e(2), oracle::e(3));
  o.require(jac == oracle::Vec3{0, 0, -1}, "oracle Jacobiator != -e3");

  const Dgla e2 = builtin_example("E2");
  const SdrData sdr = build_sdr(e2);
  const auto ring = CoefficientRing::single(3);
  const FormalElement x =
      monomial_element(e2, ring, 1, testing::ce3_coordinates(e2, mu), Monomial::variable(1, 0));
  const MCSolution sol = solve_mc_ivp(e2, sdr, x);
  o.require(sol.obstruction.coefficient(Monomial::variable(1, 0, 2)) ==
                testing::ce3_top_coordinates(e2, jac),
            "t^2 obstruction coefficient differs from the Jacobiator");
  o.require(obstruction(e2, sdr, x) == sol.obstruction, "obstruction routes disagree");
  return o;
}

Outcome solver_cross_check() {
  Outcome o;
  const auto& c = corpus();
  for (std::size_t k = 0; k < c.algebras.size(); ++k) {
    const Dgla& g = c.algebras[k].second;
    for (int order = 2; order <= 5; ++order) {
      for (std::size_t i = 0; i < h1_dim(c.sdrs[k]); ++i) {
        const FormalElement x = h1_direction(g, c.sdrs[k], i, order);
        o.require(fixed_point_iterates(g, c.sdrs[k], x).back() == solve_by_recursion(g, c.sdrs[k], x),
                  c.algebras[k].first + ": iteration and recursion differ");
      }
    }
    const MCSolution uni = universal_solution(g, c.sdrs[k], 4);
    o.require(uni.tau == solve_by_recursion(g, c.sdrs[k], uni.direction),
              c.algebras[k].first + ": universal solution differs from recursion");
  }
  return o;
}

Outcome gauge_coherence() {
  Outcome o;
  const Dgla e4 = builtin_example("E4");
  const SdrData sdr = build_sdr(e4);
  const auto ring = CoefficientRing::single(4, "s");
  std::mt19937 rng(4242);
  auto random = [&](int degree) {
    FormalElement v = zero_element(e4, ring, degree);
    for (int p = 1; p <= ring.order; ++p) {
      const Scalar c = rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
      v.add_term(Monomial::variable(1, 0, p), Vector{c});
    }
    return v;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const FormalElement a = random(0);
    const FormalElement flat = random(1);
    o.require(mc_residual(e4, flat).is_zero(), "random degree-1 element of E4 is not flat");
    const FormalElement moved = gauge_act(e4, a, flat);
    o.require(mc_residual(e4, moved).is_zero(), "gauge image not flat");
    const FormalElement fixed = gauge_fix(sdr, moved);
    o.require(gauge_fix(sdr, fixed) == fixed, "gauge_fix not idempotent");
    o.require(apply_graded(sdr.boundary_projection, kuranishi_map(e4, sdr, fixed)).is_zero(),
              "F(gauge_fix(A)) has a B^1 component");
  }
  // The same identities on E1, where B^1 = 0 and the flat elements are the solved tau.
  const Dgla e1 = builtin_example("E1");
  const SdrData s1 = build_sdr(e1);
  const MCSolution sol = universal_solution(e1, s1, 4);
  const FormalElement fixed = gauge_fix(s1, sol.tau);
  o.require(gauge_fix(s1, fixed) == fixed, "E1: gauge_fix not idempotent");
  o.require(apply_graded(s1.boundary_projection, kuranishi_map(e1, s1, fixed)).is_zero(),
            "E1: F(gauge_fix(tau)) has a B^1 component");
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string runs[2];
  for (auto& r : runs) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command({"selftest"}, out, err);
    o.require(code == kExitOk, "selftest exit " + std::to_string(code) + ": " + err.str());
    r = out.str();
  }
  o.require(!runs[0].empty() && runs[0] == runs[1], "selftest reports differ");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "SDR identities on the corpus", 1.0, sdr_suite},
      {2, "Hodge identities on the corpus", 1.0, hodge_suite},
      {3, "exp/log round trip, N = 2..5", 5.0, exp_log_round_trip},
      {4, "worked examples E1, E3, E4", 0, worked_examples},
      {5, "E2 obstruction equals brute-force Jacobiator", 0, e2_oracle},
      {6, "fixed-point iteration equals recursion", 0, solver_cross_check},
      {7, "gauge coherence", 0, gauge_coherence},
      {8, "selftest reports are byte-identical", 0, determinism},
  };
  corpus();
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds && o.passed) {
      o.passed = false;
      o.detail = "runtime limit exceeded";
    }
    std::printf("%s  criterion %d: %s (%.3f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.title,
                seconds, o.passed ? "" : " -- ", o.detail.c_str());
    if (!o.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
