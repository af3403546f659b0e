#include "dgla/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace dgla {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Scalar out(numerator, denominator);
  out.canonicalize();
  return out;
}

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("exact rationals only: expected \"p\" or \"p/q\", got \"" +
                                std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  Scalar out(negative ? mpz_class(-n) : n, d);
  out.canonicalize();
  return out;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vector& operator+=(Vector& lhs, const Vector& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += rhs[i];
  return lhs;
}

Vector& operator-=(Vector& lhs, const Vector& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= rhs[i];
  return lhs;
}

Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }

Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace dgla
