#include "doctest.h"
#include "dgla/corpus.hpp"
#include "dgla/hodge.hpp"
#include "helpers.hpp"

using namespace dgla;
using testing::gen_vec;

namespace {

// Total coordinates of a generator: degrees are stacked in increasing order.
Vector total_vec(const Dgla& g, const std::string& name) {
  const std::size_t idx = *g.index_of(name);
  Vector out = zero_vector(g.dims().total());
  out[g.dims().offset(g.generators()[idx].degree) + g.local_index(idx)] = 1;
  return out;
}

}  // namespace

TEST_CASE("star operator on E1") {
  const Dgla e1 = builtin_example("E1");
  const Matrix star = star_operator(build_sdr(e1));
  CHECK(star.apply(total_vec(e1, "c")) == total_vec(e1, "b"));
  CHECK(star.apply(total_vec(e1, "b")) == total_vec(e1, "c"));
  CHECK(star.apply(total_vec(e1, "x")) == total_vec(e1, "x"));
  CHECK(star_operator(build_sdr(builtin_example("E0"))) == Matrix::identity(2));
}

TEST_CASE("star rejects an invalid contraction") {
  const Dgla e1 = builtin_example("E1");
  SdrData sdr = build_sdr(e1);
  sdr.h.blocks.at(2).set(e1.local_index(*e1.index_of("c")), 0, rational(2));
  CHECK_THROWS_AS(star_operator(sdr), std::invalid_argument);
}

TEST_CASE("codifferential equals h") {
  const Dgla e1 = builtin_example("E1");
  const SdrData sdr = build_sdr(e1);
  const Codifferential cd = codifferential(sdr);
  CHECK(cd.star_identity);
  CHECK(cd.map.apply(2, gen_vec(e1, "b")) == gen_vec(e1, "c"));
  CHECK(is_zero(cd.map.apply(1, gen_vec(e1, "x"))));
  CHECK(codifferential(build_sdr(builtin_example("E0"))).star_identity);
}

TEST_CASE("Laplacian is the projection onto the double") {
  const Dgla e1 = builtin_example("E1");
  const Laplacian lap = laplacian(build_sdr(e1));
  CHECK(lap.is_projection_identity);
  CHECK(lap.map.apply(1, gen_vec(e1, "c")) == gen_vec(e1, "c"));
  CHECK(lap.map.apply(2, gen_vec(e1, "b")) == gen_vec(e1, "b"));
  CHECK(is_zero(lap.map.apply(1, gen_vec(e1, "x"))));
  CHECK(laplacian(build_sdr(builtin_example("E0"))).map.is_zero());
  CHECK(laplacian(build_sdr(builtin_example("E3"))).map.is_zero());
}

TEST_CASE("three-way decomposition") {
  const Dgla e1 = builtin_example("E1");
  const SdrData sdr = build_sdr(e1);
  const Vector x = gen_vec(e1, "x");
  const Vector c = gen_vec(e1, "c");
  const Vector b = gen_vec(e1, "b");

  const HodgeParts p = hodge_decompose(sdr, 1, x + c);
  CHECK(p.harmonic == x);
  CHECK(p.coboundary == c);
  CHECK(is_zero(p.boundary));

  const HodgeParts q = hodge_decompose(sdr, 1, c);
  CHECK(q.coboundary == c);
  CHECK(is_zero(q.harmonic));

  const HodgeParts r = hodge_decompose(sdr, 2, b);
  CHECK(r.boundary == b);

  const HodgeParts z = hodge_decompose(sdr, 1, zero_vector(2));
  CHECK((is_zero(z.boundary) && is_zero(z.harmonic) && is_zero(z.coboundary)));
}

TEST_CASE("B and H split a mixed vector in E4") {
  const Dgla e4 = builtin_example("E4");
  const SdrData sdr = build_sdr(e4);
  const HodgeParts p = hodge_decompose(sdr, 1, rational(3) * gen_vec(e4, "x"));
  CHECK(p.boundary == rational(3) * gen_vec(e4, "x"));
  const HodgeParts q = hodge_decompose(sdr, 0, gen_vec(e4, "a"));
  CHECK(q.coboundary == gen_vec(e4, "a"));
}

TEST_CASE("Hodge-Cartan condition") {
  for (const char* name : {"E0", "E1", "E3"}) {
    CAPTURE(name);
    const Dgla g = builtin_example(name);
    CHECK(check_cartan(g, build_sdr(g)).holds);
  }
  const Dgla e1 = builtin_example("E1");
  const SdrData sdr = build_sdr(e1);
  const Vector x = gen_vec(e1, "x");
  CHECK(sdr.h.apply(2, e1.bracket(1, x, 1, x)) == gen_vec(e1, "c"));
}

TEST_CASE("every Hodge identity holds on the corpus") {
  for (const auto& name : builtin_names()) {
    const Dgla g = builtin_example(name);
    const SdrData sdr = build_sdr(g);
    const CheckList checks = verify_hodge(g, sdr);
    CHECK(checks.size() == 11);
    for (const auto& c : checks) {
      CAPTURE(name);
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    const HodgeData hd = build_hodge(sdr);
    CHECK(hd.star * hd.star == Matrix::identity(g.dims().total()));
    CHECK(hd.codifferential == sdr.h);
    CHECK(compose(hd.double_projection, hd.double_projection) == hd.double_projection);
  }
}
