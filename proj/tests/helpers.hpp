#ifndef DGLA_TESTS_HELPERS_HPP
#define DGLA_TESTS_HELPERS_HPP

#include <string>

#include "dgla/corpus.hpp"
#include "dgla/dgla.hpp"
#include "dgla/formal.hpp"
#include "oracles.hpp"

namespace testing {

using dgla::operator*;

inline dgla::Vector gen_vec(const dgla::Dgla& g, const std::string& name) {
  return g.unit(*g.index_of(name));
}

/// c * gen * v^power for the variable at position `var`.
inline dgla::FormalElement term(const dgla::Dgla& g, const dgla::CoefficientRing& ring,
                                const std::string& gen, const dgla::Scalar& c, int power,
                                std::size_t var = 0) {
  const auto idx = *g.index_of(gen);
  return dgla::monomial_element(g, ring, g.generators()[idx].degree, c * g.unit(idx),
                                dgla::Monomial::variable(ring.size(), var, power));
}

/// Coordinates in g^1 of the ce3 algebra of an antisymmetric bilinear map.
inline dgla::Vector ce3_coordinates(const dgla::Dgla& e2, const oracle::Bilinear& mu) {
  dgla::Vector v = dgla::zero_vector(e2.dim(1));
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        v[e2.local_index(*e2.index_of(dgla::ce3_generator({i, j}, k)))] = mu.table[i - 1][j - 1][k - 1];
      }
    }
  }
  return v;
}

/// Coordinates in g^2 of the ce3 algebra of a trilinear value on (e1, e2, e3).
inline dgla::Vector ce3_top_coordinates(const dgla::Dgla& e2, const oracle::Vec3& value) {
  dgla::Vector v = dgla::zero_vector(e2.dim(2));
  for (int k = 1; k <= 3; ++k) {
    v[e2.local_index(*e2.index_of(dgla::ce3_generator({1, 2, 3}, k)))] = value[k - 1];
  }
  return v;
}

}  // namespace testing

#endif  // DGLA_TESTS_HELPERS_HPP
