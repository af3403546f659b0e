#include "dgla/deformation.hpp"

#include <stdexcept>

namespace dgla {

namespace {

const Scalar kHalf(1, 2);

FormalElement half_h_bracket(const Dgla& g, const SdrData& sdr, const FormalElement& u,
                             const FormalElement& v) {
  return apply_graded(sdr.h, apply_bracket(g, u, v)).scaled(kHalf);
}

void require_degree(const FormalElement& v, int degree, const char* what) {
  if (v.degree() != degree) {
    throw std::invalid_argument(std::string(what) + ": expected an element of degree " +
                                std::to_string(degree));
  }
}

void require_cocycle_direction(const Dgla& g, const FormalElement& x) {
  if (!apply_differential(g, x.order_part(1)).is_zero()) {
    throw std::invalid_argument("initial value is not a cocycle at order 1");
  }
}

}  // namespace

FormalElement contraction_step(const Dgla& g, const SdrData& sdr, const FormalElement& x,
                               const FormalElement& y) {
  return x - half_h_bracket(g, sdr, y, y);
}

std::vector<FormalElement> fixed_point_iterates(const Dgla& g, const SdrData& sdr,
                                                const FormalElement& x) {
  require_degree(x, 1, "fixed point iteration");
  std::vector<FormalElement> ys{x};
  // y_n agrees with the fixed point below order n + 1, so y_N is final.
  const int limit = x.ring().order + 1;
  for (int n = 1; n <= limit; ++n) {
    FormalElement next = contraction_step(g, sdr, x, ys.back());
    if (next == ys.back()) return ys;
    ys.push_back(std::move(next));
  }
  throw std::logic_error("fixed point iteration did not stabilise");
}

FormalElement solve_by_recursion(const Dgla& g, const SdrData& sdr, const FormalElement& x) {
  require_degree(x, 1, "recursion");
  const int order = x.ring().order;
  std::vector<FormalElement> parts;  // parts[b] = tau^b
  parts.push_back(zero_element(g, x.ring(), 1));
  FormalElement tau = zero_element(g, x.ring(), 1);
  for (int b = 1; b <= order; ++b) {
    FormalElement sum = zero_element(g, x.ring(), 2);
    for (int i = 1; i < b; ++i) sum += apply_bracket(g, parts[i], parts[b - i]);
    FormalElement part = x.order_part(b) - apply_graded(sdr.h, sum).scaled(kHalf).order_part(b);
    tau += part;
    parts.push_back(std::move(part));
  }
  return tau;
}

FormalElement mc_residual(const Dgla& g, const FormalElement& tau) { return curvature(g, tau); }

FormalElement harmonic_part(const SdrData& sdr, const FormalElement& v) {
  return apply_graded(sdr.harmonic_projection, v);
}

MCSolution solve_mc_ivp(const Dgla& g, const SdrData& sdr, const FormalElement& x) {
  require_degree(x, 1, "solve_mc_ivp");
  require_cocycle_direction(g, x);
  const auto ys = fixed_point_iterates(g, sdr, x);
  MCSolution out{x, ys.back(), mc_residual(g, ys.back()), zero_element(g, x.ring(), 2),
                 static_cast<int>(ys.size())};
  out.obstruction = harmonic_part(sdr, out.residual);
  return out;
}

MCSolution universal_solution(const Dgla& g, const SdrData& sdr, int order) {
  const auto it = sdr.splitting.degrees.find(1);
  const std::size_t k = it == sdr.splitting.degrees.end() ? 0 : it->second.harmonic.size();
  const CoefficientRing ring = k <= 1 ? CoefficientRing::single(order, k == 1 ? "t1" : "t")
                                      : CoefficientRing::indexed(k, order);
  FormalElement x = zero_element(g, ring, 1);
  for (std::size_t i = 0; i < k; ++i) {
    x.add_term(Monomial::variable(ring.size(), i), it->second.harmonic[i]);
  }
  return solve_mc_ivp(g, sdr, x);
}

FormalElement kuranishi_map(const Dgla& g, const SdrData& sdr, const FormalElement& y) {
  require_degree(y, 1, "kuranishi_map");
  return y + half_h_bracket(g, sdr, y, y);
}

FormalElement kuranishi_inverse(const Dgla& g, const SdrData& sdr, const FormalElement& x) {
  return fixed_point_iterates(g, sdr, x).back();
}

FormalElement obstruction(const Dgla& g, const SdrData& sdr, const FormalElement& x) {
  const FormalElement tau = kuranishi_inverse(g, sdr, x);
  return harmonic_part(sdr, apply_bracket(g, tau, tau).scaled(kHalf));
}

bool kur_membership(const Dgla& g, const SdrData& sdr, const FormalElement& x) {
  require_degree(x, 1, "kur_membership");
  const FormalElement first = x.order_part(1);
  if (!(apply_graded(sdr.harmonic_projection, first) == first)) {
    throw std::invalid_argument("order-1 part of the direction is not harmonic");
  }
  return obstruction(g, sdr, x).is_zero();
}

FormalElement gauge_act(const Dgla& g, const FormalElement& a, const FormalElement& flat) {
  require_degree(a, 0, "gauge element");
  require_degree(flat, 1, "gauge_act");
  if (!(a.ring() == flat.ring())) throw std::invalid_argument("gauge_act: ring mismatch");
  FormalElement term = apply_bracket(g, a, flat) - apply_differential(g, a);
  FormalElement out = flat;
  // ad_a raises the order by at least one, so the series stops by order N.
  Scalar factorial(1);
  for (int n = 0; !term.is_zero(); ++n) {
    factorial *= n + 1;
    out += term.scaled(1 / factorial);
    term = apply_bracket(g, a, term);
  }
  return out;
}

GaugeEquivalence gauge_equivalent(const Dgla& g, const SdrData& sdr, const FormalElement& from,
                                  const FormalElement& to) {
  require_degree(from, 1, "gauge_equivalent");
  require_degree(to, 1, "gauge_equivalent");
  if (!(from.ring() == to.ring())) throw std::invalid_argument("gauge_equivalent: ring mismatch");
  if (!mc_residual(g, from).is_zero() || !mc_residual(g, to).is_zero()) {
    throw std::invalid_argument("gauge_equivalent: inputs must be Maurer-Cartan elements");
  }

  GaugeEquivalence result;
  FormalElement a = zero_element(g, from.ring(), 0);
  if (g.dim(0) == 0) {
    if (from == to) result.witness = a;
    else result.failed_order = (to - from).lowest_order();
    return result;
  }
  const Matrix& d0 = sdr.d.block(0);
  if (rank(d0) < d0.cols()) result.free_components = true;

  for (int b = 1; b <= from.ring().order; ++b) {
    // Components of a at order b enter order b only through -d a_b.
    const FormalElement gap = (gauge_act(g, a, from) - to).order_part(b);
    for (const auto& [m, v] : gap.terms()) {
      const auto solution = solve_linear(d0, v);
      if (!solution) {
        result.failed_order = b;
        return result;
      }
      a.add_term(m, *solution);
    }
  }
  if (!(gauge_act(g, a, from) == to)) {
    throw std::logic_error("gauge_equivalent: witness does not reproduce the target");
  }
  result.witness = std::move(a);
  return result;
}

FormalElement gauge_fix(const SdrData& sdr, const FormalElement& a) {
  require_degree(a, 1, "gauge_fix");
  return a - apply_graded(sdr.boundary_projection, a);
}

}  // namespace dgla
