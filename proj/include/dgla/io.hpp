#ifndef DGLA_IO_HPP
#define DGLA_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "dgla/dgla.hpp"
#include "dgla/formal.hpp"

namespace dgla {

using Json = nlohmann::ordered_json;

/// Malformed input (file, document or expression). The message carries the
/// position or the offending entry.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally valid input whose DGLA fails an axiom.
class AxiomError : public InputError {
 public:
  AxiomError(const std::string& message, ValidationReport report)
      : InputError(message), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// DGLA document:
///   {"name": "...", "field": "Q",
///    "generators": [{"name": "x", "degree": 1}, ...],
///    "d":       [{"from": "c", "to": [{"gen": "b", "coeff": "1"}]}, ...],
///    "bracket": [{"left": "x", "right": "x", "result": [{"gen": "b", "coeff": "1"}]}, ...]}
/// Coefficients are "p" or "p/q" strings. Bracket pairs are given with left
/// declared no later than right; the rest follows from graded antisymmetry.
Dgla dgla_from_json(const Json& doc, bool allow_invalid = false);
Json dgla_to_json(const Dgla& g);
Dgla load_dgla(const std::string& path, bool allow_invalid = false);
Dgla parse_dgla(std::string_view text, bool allow_invalid = false);

/// Element expressions: terms "coeff gen@monomial" joined by + and -, e.g.
/// "x@t - 1/2 c@t^2" or "2*a@s" or "phi[12>3]@t1*t2". "0" is the zero
/// element of `degree`. All terms must share one generator degree, which
/// must equal `degree` when given.
FormalElement parse_element(const Dgla& g, const CoefficientRing& ring, std::string_view text,
                            std::optional<int> degree = std::nullopt);

/// Inverse of parse_element: "0" for zero.
std::string format_element(const Dgla& g, const FormalElement& v);
/// Linear combination of generators, e.g. "x - 1/2 c"; "0" for zero.
std::string format_vector(const Dgla& g, int degree, const Vector& v);
/// {"t": "x", "t^2": "-1/2 c"}, monomials in ring order.
Json element_coefficients(const Dgla& g, const FormalElement& v);

/// Comma-separated rationals, e.g. "1,-1/2".
Vector parse_coordinates(std::string_view text);

}  // namespace dgla

#endif  // DGLA_IO_HPP
