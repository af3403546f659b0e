#include <random>

#include "doctest.h"
#include "dgla/linear.hpp"

using namespace dgla;

namespace {

Vector vec(std::initializer_list<Scalar> xs) { return Vector(xs); }

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      // Sparse, small entries so that rank deficiency actually happens.
      if (rng() % 3 == 0) m.set(r, c, rational(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 3)));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("scalar parsing is strict and canonical") {
  CHECK(parse_scalar("2/4") == Scalar(1, 2));
  CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
  CHECK(to_string(parse_scalar("+7")) == "7");
  CHECK_THROWS_AS(parse_scalar("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
}

TEST_CASE("solve_linear") {
  SUBCASE("identity") {
    auto x = solve_linear(Matrix::identity(2), vec({Scalar(1, 2), -3}));
    REQUIRE(x);
    CHECK(*x == vec({Scalar(1, 2), -3}));
  }
  SUBCASE("right-hand side outside the image") {
    CHECK_FALSE(solve_linear(Matrix{{1, 1}, {2, 2}}, vec({1, 3})));
  }
  SUBCASE("free variables are zero") {
    auto x = solve_linear(Matrix{{1, 1}, {2, 2}}, vec({1, 2}));
    REQUIRE(x);
    CHECK(*x == vec({1, 0}));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(solve_linear(Matrix::identity(2), vec({1})), std::invalid_argument);
  }
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(Matrix(2, 2)) == SubspaceBasis::full(2));
  CHECK(kernel_basis(Matrix::identity(3)).empty());
  const auto k = kernel_basis(Matrix{{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec({1, -1}));
}

TEST_CASE("image_basis") {
  CHECK(image_basis(Matrix(2, 3)).empty());
  CHECK(image_basis(Matrix::identity(2)) == SubspaceBasis::full(2));
  const auto im = image_basis(Matrix{{1}, {2}});
  REQUIRE(im.size() == 1);
  CHECK(im[0] == vec({1, 2}));
}

TEST_CASE("complement_basis") {
  const SubspaceBasis e1(2, {vec({1, 0})});
  const auto c = complement_basis(e1);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == vec({0, 1}));

  CHECK(complement_basis(SubspaceBasis::full(2)).empty());

  const auto diag = complement_basis(SubspaceBasis(2, {vec({1, 1})}));
  REQUIRE(diag.size() == 1);
  CHECK(diag[0] == vec({1, 0}));

  SUBCASE("containment violated") {
    const SubspaceBasis line(3, {vec({1, 0, 0})});
    const SubspaceBasis other(3, {vec({0, 1, 0})});
    CHECK_THROWS_AS(complement_basis(line, other), std::invalid_argument);
  }
}

TEST_CASE("subspace basis rejects dependent vectors") {
  CHECK_THROWS_AS(SubspaceBasis(2, {vec({1, 2}), vec({2, 4})}), std::invalid_argument);
}

TEST_CASE("property: rank-nullity, exact solves and complements on random matrices") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    const Matrix a = random_matrix(rng, rows, cols);

    const auto ker = kernel_basis(a);
    const auto im = image_basis(a);
    CHECK(ker.size() + im.size() == cols);
    for (const auto& v : ker.vectors()) CHECK(is_zero(a.apply(v)));

    Vector x = zero_vector(cols);
    for (auto& xi : x) xi = Scalar(static_cast<int>(rng() % 7) - 3);
    const Vector b = a.apply(x);
    const auto sol = solve_linear(a, b);
    REQUIRE(sol);
    CHECK(a.apply(*sol) == b);

    const auto comp = complement_basis(im);
    std::vector<Vector> joint = im.vectors();
    joint.insert(joint.end(), comp.vectors().begin(), comp.vectors().end());
    CHECK(rank(joint, rows) == rows);
    CHECK(joint.size() == rows);
  }
}

TEST_CASE("matrix arithmetic") {
  const Matrix a{{1, 2}, {0, 1}};
  const Matrix b{{0, 1}, {1, 0}};
  CHECK(a * b == Matrix{{2, 1}, {1, 0}});
  CHECK(a + b - b == a);
  CHECK((a - a).is_zero());
  CHECK(a.transpose() == Matrix{{1, 0}, {2, 1}});
  CHECK_THROWS_AS(a * Matrix(3, 1), std::invalid_argument);
}
