#ifndef DGLA_DEFORMATION_HPP
#define DGLA_DEFORMATION_HPP

#include <optional>
#include <vector>

#include "dgla/formal.hpp"
#include "dgla/sdr.hpp"

namespace dgla {

// Conventions: the Maurer-Cartan equation is d tau + 1/2 [tau, tau] = 0, the
// h-adic contraction is C_x(y) = x - 1/2 h[y, y] and the Kuranishi map is
// F(y) = y + 1/2 h[y, y]. Every identity below is stated in these terms.

/// Result of solving the Maurer-Cartan initial value problem.
struct MCSolution {
  FormalElement direction;
  FormalElement tau;
  /// Curvature d tau + 1/2 [tau, tau].
  FormalElement residual;
  /// Harmonic part of the residual, as a degree-2 element of g.
  FormalElement obstruction;
  /// Smallest n with y_n == y_{n+1} for y_1 = x, y_{n+1} = C_x(y_n).
  int iterations = 0;

  bool flat() const { return residual.is_zero(); }
};

/// C_x(y) = x - 1/2 h[y, y].
FormalElement contraction_step(const Dgla& g, const SdrData& sdr, const FormalElement& x,
                               const FormalElement& y);

/// Fixed point of C_x together with the iterate sequence y_1 = x, y_2, ...
/// ending at the first repeated value. Throws std::logic_error if no fixed
/// point appears within order + 1 steps.
std::vector<FormalElement> fixed_point_iterates(const Dgla& g, const SdrData& sdr,
                                                const FormalElement& x);

/// Order-by-order recursion tau^b = x^b - 1/2 h sum_{i=1}^{b-1} [tau^i, tau^{b-i}].
/// Independent of the fixed-point iteration; both must agree exactly.
FormalElement solve_by_recursion(const Dgla& g, const SdrData& sdr, const FormalElement& x);

/// Solves d tau + 1/2[tau, tau] = 0 with tau^1 = x as the fixed point of C_x.
/// Throws std::invalid_argument if x is not degree 1 or its order-1 part is
/// not a cocycle. Obstructed directions still return tau; flatness is
/// reported through residual and obstruction.
MCSolution solve_mc_ivp(const Dgla& g, const SdrData& sdr, const FormalElement& x);

/// Runs solve_mc_ivp over k[t1..tk]/m^{order+1}, k = dim H^1, with initial
/// value sum_i eta_i t_i over the harmonic representatives eta_i of H^1.
/// When H^1 = 0 the ring still has one variable and the solution is zero.
MCSolution universal_solution(const Dgla& g, const SdrData& sdr, int order);

FormalElement mc_residual(const Dgla& g, const FormalElement& tau);

/// F(y) = y + 1/2 h[y, y].
FormalElement kuranishi_map(const Dgla& g, const SdrData& sdr, const FormalElement& y);

/// The fixed point of y -> x - 1/2 h[y, y]; F(result) == x exactly.
FormalElement kuranishi_inverse(const Dgla& g, const SdrData& sdr, const FormalElement& x);

/// Harmonic projection of a degree-2 element, re-embedded in g^2.
FormalElement harmonic_part(const SdrData& sdr, const FormalElement& v);

/// pi_H(1/2 [F^{-1}(x), F^{-1}(x)]), computed from the bracket alone (the
/// d-term is exact and projects to zero).
FormalElement obstruction(const Dgla& g, const SdrData& sdr, const FormalElement& x);

/// True iff the obstruction of x vanishes mod m^{N+1}. Throws
/// std::invalid_argument if the order-1 part of x is not harmonic.
bool kur_membership(const Dgla& g, const SdrData& sdr, const FormalElement& x);

/// exp(a) . A = A + sum_{n>=0} ad_a^n / (n+1)! ([a, A] - da) for a in g^0 (x) m.
FormalElement gauge_act(const Dgla& g, const FormalElement& a, const FormalElement& flat);

struct GaugeEquivalence {
  std::optional<FormalElement> witness;
  /// Total degree at which the order-by-order system had no solution.
  int failed_order = 0;
  /// True if some solved system had free components (set to zero), in which
  /// case a "none" answer is not a proof of inequivalence.
  bool free_components = false;
};

/// Solves exp(a) . from = to order by order. Throws std::invalid_argument
/// if either input is not flat.
GaugeEquivalence gauge_equivalent(const Dgla& g, const SdrData& sdr, const FormalElement& from,
                                  const FormalElement& to);

/// Projection onto C^1 + H^1 along B^1.
FormalElement gauge_fix(const SdrData& sdr, const FormalElement& a);

}  // namespace dgla

#endif  // DGLA_DEFORMATION_HPP
