#ifndef DGLA_SDR_HPP
#define DGLA_SDR_HPP

#include <map>

#include "dgla/checks.hpp"
#include "dgla/dgla.hpp"

namespace dgla {

/// Cycles, boundaries and harmonic representatives of one degree.
struct HomologyDegree {
  SubspaceBasis cycles{0};
  SubspaceBasis boundaries{0};
  SubspaceBasis harmonic{0};
};

struct Homology {
  std::map<int, HomologyDegree> degrees;

  std::size_t betti(int degree) const;
  /// Dimensions of the harmonic pieces, as a graded space.
  GradedDims harmonic_dims() const;
};

/// Z^i = ker d^i, B^i = im d^{i-1}, H^i = greedy complement of B^i inside Z^i.
Homology compute_homology(const Dgla& g);

/// g^i = B^i + H^i + C^i, with B^i + H^i = Z^i.
struct DegreeSplitting {
  SubspaceBasis boundaries{0};
  SubspaceBasis harmonic{0};
  SubspaceBasis complement{0};

  std::size_t ambient_dim() const { return boundaries.ambient_dim(); }
};

struct Splitting {
  std::map<int, DegreeSplitting> degrees;

  const DegreeSplitting& at(int degree) const { return degrees.at(degree); }
};

/// C^i is the greedy complement of Z^i by standard basis vectors.
Splitting build_splitting(const Dgla& g);

/// Strong deformation retract of g onto the harmonic representatives.
///
/// `projection` maps g^i onto coordinates of H^i (kernel B^i + C^i) and
/// `inclusion` embeds those coordinates back into g^i. The contraction h
/// has degree -1 and sends g^{i+1} to C^i: project onto B^{i+1} along
/// H^{i+1} + C^{i+1}, then invert d restricted to C^i.
struct SdrData {
  Splitting splitting;
  GradedMap d;
  GradedMap h;
  GradedMap projection;
  GradedMap inclusion;
  GradedMap boundary_projection;
  GradedMap harmonic_projection;
  GradedMap complement_projection;

  const GradedDims& dims() const { return d.source; }
};

/// Throws std::logic_error if d restricted to C is not an isomorphism onto B.
SdrData build_contraction(const Dgla& g, const Splitting& splitting);
SdrData build_sdr(const Dgla& g);

/// The seven side conditions, each as an exact matrix identity:
///   homotopy          dh + hd = Id - inclusion o projection
///   boundary-inverse  (dh + hd) pi_B = pi_B and d h z = z on B
///   h-squared         h o h = 0
///   retract           projection o inclusion = Id_H
///   h-inclusion       h o inclusion = 0
///   projection-h      projection o h = 0
///   harmonic          d v = 0 and h v = 0 for every harmonic representative
CheckList verify_sdr(const SdrData& sdr);

}  // namespace dgla

#endif  // DGLA_SDR_HPP
