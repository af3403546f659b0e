#ifndef DGLA_HODGE_HPP
#define DGLA_HODGE_HPP

#include <optional>
#include <utility>

#include "dgla/sdr.hpp"

namespace dgla {

/// Hodge package of a contraction. Sign convention: the Laplacian is
/// (d + h)^2 = dh + hd = Id - inclusion o projection, i.e. the projection
/// onto the double D(B) = B + B* along the harmonic part; B* = im h = C.
struct HodgeData {
  /// inclusion o projection + d + h on the direct sum of all degrees,
  /// ordered by increasing degree. Not homogeneous, so kept as one matrix.
  Matrix star;
  GradedMap codifferential;
  GradedMap laplacian;
  GradedMap double_projection;
};

/// Throws std::invalid_argument if the SDR side conditions fail.
Matrix star_operator(const SdrData& sdr);

struct Codifferential {
  GradedMap map;
  /// * d * == h as total matrices (* is its own inverse).
  bool star_identity = false;
};
Codifferential codifferential(const SdrData& sdr);

struct Laplacian {
  GradedMap map;
  /// dh + hd == Id - inclusion o projection.
  bool is_projection_identity = false;
};
Laplacian laplacian(const SdrData& sdr);

HodgeData build_hodge(const SdrData& sdr);

/// v = boundary + harmonic + coboundary, with coboundary in B* = C.
struct HodgeParts {
  Vector boundary;
  Vector harmonic;
  Vector coboundary;
};
HodgeParts hodge_decompose(const SdrData& sdr, int degree, const Vector& v);

/// Harmonic basis vector `index` of degree `degree`.
struct HarmonicRef {
  int degree = 0;
  std::size_t index = 0;

  friend bool operator==(const HarmonicRef&, const HarmonicRef&) = default;
};

struct CartanResult {
  bool holds = true;
  std::optional<std::pair<HarmonicRef, HarmonicRef>> witness;
};

/// h[u, v] lies in B* for every pair of harmonic representatives.
CartanResult check_cartan(const Dgla& g, const SdrData& sdr);

/// Every exact identity of the Hodge package, as named checks:
/// star-involution, star-codifferential, laplacian-projection,
/// laplacian-kernel, double-idempotent, double-image, decomposition,
/// coboundaries-image-h, d-injective-on-coboundaries, h-injective-on-boundaries,
/// cartan.
CheckList verify_hodge(const Dgla& g, const SdrData& sdr);

}  // namespace dgla

#endif  // DGLA_HODGE_HPP
