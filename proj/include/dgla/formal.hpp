#ifndef DGLA_FORMAL_HPP
#define DGLA_FORMAL_HPP

#include <map>
#include <string>
#include <vector>

#include "dgla/dgla.hpp"

namespace dgla {

/// Truncated polynomial ring k[t_1..t_k] / m^{N+1}. Formal elements only
/// ever carry monomials of total degree 1..N, i.e. they live in g (x) m.
struct CoefficientRing {
  std::vector<std::string> variables;
  int order = 1;

  CoefficientRing() : variables{"t"} {}
  CoefficientRing(std::vector<std::string> vars, int truncation_order);

  static CoefficientRing single(int truncation_order, std::string var = "t");
  /// Variables t1..tk.
  static CoefficientRing indexed(std::size_t k, int truncation_order, const std::string& stem = "t");

  std::size_t size() const { return variables.size(); }

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};

/// Exponent vector, ordered by total degree and then lexicographically
/// descending (t1^2 < t1 t2 < t2^2).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  const std::vector<int>& exponents() const { return exp_; }
  int total_degree() const { return total_; }
  Monomial operator*(const Monomial& rhs) const;

  /// "t", "t^2", "t1*t2^3"; "1" for the constant monomial.
  std::string to_string(const CoefficientRing& ring) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<int> exp_;
  int total_ = 0;
};

/// Homogeneous element of g^degree (x) m: a map from monomials to
/// coefficient vectors in local coordinates of g^degree. Zero vectors are
/// never stored, so structural equality is mathematical equality.
class FormalElement {
 public:
  FormalElement(CoefficientRing ring, int degree, std::size_t dim);

  /// Adds v * m. Monomials above the truncation order are dropped; the
  /// constant monomial throws std::invalid_argument.
  void add_term(const Monomial& m, const Vector& v);

  const CoefficientRing& ring() const { return ring_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  const std::map<Monomial, Vector>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient at m (zero vector when absent).
  Vector coefficient(const Monomial& m) const;
  /// Homogeneous component of total degree `order`.
  FormalElement order_part(int order) const;
  /// Components of total degree <= order.
  FormalElement truncated(int order) const;
  int lowest_order() const;

  FormalElement& operator+=(const FormalElement& rhs);
  FormalElement& operator-=(const FormalElement& rhs);
  friend FormalElement operator+(FormalElement a, const FormalElement& b) { return a += b; }
  friend FormalElement operator-(FormalElement a, const FormalElement& b) { return a -= b; }
  FormalElement scaled(const Scalar& s) const;
  FormalElement times_monomial(const Monomial& m) const;
  /// Applies a linear map g^degree -> g^target_degree coefficient-wise.
  FormalElement mapped(const Matrix& block, int target_degree) const;

  friend bool operator==(const FormalElement&, const FormalElement&) = default;

 private:
  void check_compatible(const FormalElement& rhs) const;

  CoefficientRing ring_;
  int degree_;
  std::size_t dim_;
  std::map<Monomial, Vector> terms_;
};

FormalElement zero_element(const Dgla& g, const CoefficientRing& ring, int degree);
/// v * m for v in g^degree.
FormalElement monomial_element(const Dgla& g, const CoefficientRing& ring, int degree,
                               const Vector& v, const Monomial& m);

FormalElement apply_differential(const Dgla& g, const FormalElement& v);
FormalElement apply_bracket(const Dgla& g, const FormalElement& u, const FormalElement& v);
/// Applies a graded map blockwise.
FormalElement apply_graded(const GradedMap& map, const FormalElement& v);

/// Maurer-Cartan curvature dA + 1/2 [A, A] of a degree-1 element.
FormalElement curvature(const Dgla& g, const FormalElement& a);

}  // namespace dgla

#endif  // DGLA_FORMAL_HPP
