#include "dgla/formal.hpp"

#include <numeric>
#include <stdexcept>

namespace dgla {

CoefficientRing::CoefficientRing(std::vector<std::string> vars, int truncation_order)
    : variables(std::move(vars)), order(truncation_order) {
  if (variables.empty()) throw std::invalid_argument("coefficient ring needs at least one variable");
  if (order < 1) throw std::invalid_argument("truncation order must be >= 1");
}

CoefficientRing CoefficientRing::single(int truncation_order, std::string var) {
  return CoefficientRing({std::move(var)}, truncation_order);
}

CoefficientRing CoefficientRing::indexed(std::size_t k, int truncation_order,
                                         const std::string& stem) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= k; ++i) vars.push_back(stem + std::to_string(i));
  return CoefficientRing(std::move(vars), truncation_order);
}

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int e : exp_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
  total_ = std::accumulate(exp_.begin(), exp_.end(), 0);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  std::vector<int> e(nvars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  if (exp_.size() != rhs.exp_.size()) throw std::invalid_argument("monomial arity mismatch");
  std::vector<int> e(exp_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += rhs.exp_[i];
  return Monomial(std::move(e));
}

std::string Monomial::to_string(const CoefficientRing& ring) const {
  std::string out;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.variables.at(i);
    if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.total_ != b.total_) return a.total_ < b.total_;
  return a.exp_ > b.exp_;
}

FormalElement::FormalElement(CoefficientRing ring, int degree, std::size_t dim)
    : ring_(std::move(ring)), degree_(degree), dim_(dim) {}

void FormalElement::add_term(const Monomial& m, const Vector& v) {
  if (m.exponents().size() != ring_.size()) throw std::invalid_argument("monomial arity mismatch");
  if (v.size() != dim_) throw std::invalid_argument("coefficient vector has wrong dimension");
  if (m.total_degree() == 0) {
    if (dgla::is_zero(v)) return;
    throw std::invalid_argument("formal elements have no constant term");
  }
  if (m.total_degree() > ring_.order) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) it->second += v;
  if (dgla::is_zero(it->second)) terms_.erase(it);
}

Vector FormalElement::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? zero_vector(dim_) : it->second;
}

FormalElement FormalElement::order_part(int order) const {
  FormalElement out(ring_, degree_, dim_);
  for (const auto& [m, v] : terms_) {
    if (m.total_degree() == order) out.terms_.emplace(m, v);
  }
  return out;
}

FormalElement FormalElement::truncated(int order) const {
  FormalElement out(ring_, degree_, dim_);
  for (const auto& [m, v] : terms_) {
    if (m.total_degree() <= order) out.terms_.emplace(m, v);
  }
  return out;
}

int FormalElement::lowest_order() const {
  return terms_.empty() ? ring_.order + 1 : terms_.begin()->first.total_degree();
}

void FormalElement::check_compatible(const FormalElement& rhs) const {
  if (!(ring_ == rhs.ring_)) throw std::invalid_argument("formal elements over different rings");
  if (degree_ != rhs.degree_ || dim_ != rhs.dim_) {
    throw std::invalid_argument("formal elements of different degree");
  }
}

FormalElement& FormalElement::operator+=(const FormalElement& rhs) {
  check_compatible(rhs);
  for (const auto& [m, v] : rhs.terms_) add_term(m, v);
  return *this;
}

FormalElement& FormalElement::operator-=(const FormalElement& rhs) {
  check_compatible(rhs);
  for (const auto& [m, v] : rhs.terms_) add_term(m, Scalar(-1) * v);
  return *this;
}

FormalElement FormalElement::scaled(const Scalar& s) const {
  FormalElement out(ring_, degree_, dim_);
  if (s == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, s * v);
  return out;
}

FormalElement FormalElement::times_monomial(const Monomial& m) const {
  FormalElement out(ring_, degree_, dim_);
  for (const auto& [mono, v] : terms_) out.add_term(mono * m, v);
  return out;
}

FormalElement FormalElement::mapped(const Matrix& block, int target_degree) const {
  if (block.cols() != dim_) throw std::invalid_argument("linear map has wrong source dimension");
  FormalElement out(ring_, target_degree, block.rows());
  for (const auto& [m, v] : terms_) out.add_term(m, block.apply(v));
  return out;
}

FormalElement zero_element(const Dgla& g, const CoefficientRing& ring, int degree) {
  return FormalElement(ring, degree, g.dim(degree));
}

FormalElement monomial_element(const Dgla& g, const CoefficientRing& ring, int degree,
                               const Vector& v, const Monomial& m) {
  FormalElement out(ring, degree, g.dim(degree));
  out.add_term(m, v);
  return out;
}

FormalElement apply_graded(const GradedMap& map, const FormalElement& v) {
  const int target = v.degree() + map.shift;
  const auto it = map.blocks.find(v.degree());
  if (it == map.blocks.end()) {
    if (v.dim() != 0) throw std::invalid_argument("graded map: degree outside range");
    return FormalElement(v.ring(), target, map.target(target));
  }
  return v.mapped(it->second, target);
}

FormalElement apply_differential(const Dgla& g, const FormalElement& v) {
  if (v.dim() != g.dim(v.degree())) throw std::invalid_argument("element does not belong to this DGLA");
  return apply_graded(g.differential(), v);
}

FormalElement apply_bracket(const Dgla& g, const FormalElement& u, const FormalElement& v) {
  if (!(u.ring() == v.ring())) throw std::invalid_argument("bracket: ring mismatch");
  if (u.dim() != g.dim(u.degree()) || v.dim() != g.dim(v.degree())) {
    throw std::invalid_argument("element does not belong to this DGLA");
  }
  const int target = u.degree() + v.degree();
  FormalElement out(u.ring(), target, g.dim(target));
  const int order = u.ring().order;
  for (const auto& [mu, a] : u.terms()) {
    for (const auto& [mv, b] : v.terms()) {
      if (mu.total_degree() + mv.total_degree() > order) break;
      out.add_term(mu * mv, g.bracket(u.degree(), a, v.degree(), b));
    }
  }
  return out;
}

FormalElement curvature(const Dgla& g, const FormalElement& a) {
  if (a.degree() != 1) throw std::invalid_argument("curvature: element must have degree 1");
  return apply_differential(g, a) + apply_bracket(g, a, a).scaled(Scalar(1, 2));
}

}  // namespace dgla
