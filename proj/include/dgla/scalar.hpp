#ifndef DGLA_SCALAR_HPP
#define DGLA_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dgla {

/// Exact rational number. GMP keeps mpq_class values canonical (lowest
/// terms, positive denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Scalar>;

/// n/d in lowest terms. Prefer this over the two-argument mpq_class
/// constructor, which does not canonicalize.
Scalar rational(long numerator, long denominator = 1);

/// Parses "p" or "p/q" (optional sign, decimal digits only). Decimal points,
/// exponents and zero denominators are rejected with std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Scalar& value);

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);

Vector& operator+=(Vector& lhs, const Vector& rhs);
Vector& operator-=(Vector& lhs, const Vector& rhs);
Vector operator+(Vector lhs, const Vector& rhs);
Vector operator-(Vector lhs, const Vector& rhs);
Vector operator*(const Scalar& s, Vector v);

}  // namespace dgla

#endif  // DGLA_SCALAR_HPP
