#ifndef DGLA_DGLA_HPP
#define DGLA_DGLA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgla/linear.hpp"

namespace dgla {

struct Generator {
  std::string name;
  int degree = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Linear combination of generators by global index; indices strictly
/// increasing, coefficients nonzero.
using Combination = std::vector<std::pair<std::size_t, Scalar>>;

/// Dimension of each homogeneous piece g^i, for i in [min, max].
class GradedDims {
 public:
  GradedDims() = default;
  explicit GradedDims(std::map<int, std::size_t> dims);

  std::size_t operator()(int degree) const;
  int min_degree() const { return min_; }
  int max_degree() const { return max_; }
  bool empty() const { return dims_.empty(); }
  std::size_t total() const;
  /// Position of the first coordinate of g^degree in the direct sum ordered
  /// by increasing degree.
  std::size_t offset(int degree) const;
  const std::map<int, std::size_t>& map() const { return dims_; }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

 private:
  std::map<int, std::size_t> dims_;
  int min_ = 0;
  int max_ = -1;
};

/// Homogeneous linear map of fixed degree between graded spaces:
/// blocks[i] maps source^i to target^{i+shift}. Every degree of `source`
/// carries a block (possibly with zero rows or columns).
struct GradedMap {
  int shift = 0;
  GradedDims source;
  GradedDims target;
  std::map<int, Matrix> blocks;

  static GradedMap zero(const GradedDims& source, const GradedDims& target, int shift);
  static GradedMap zero(const GradedDims& dims, int shift) { return zero(dims, dims, shift); }
  static GradedMap identity(const GradedDims& dims);

  const Matrix& block(int source_degree) const { return blocks.at(source_degree); }
  Vector apply(int source_degree, const Vector& v) const;
  bool is_zero() const;

  /// The whole map as one matrix between the direct sums of all degrees.
  Matrix total() const;

  friend bool operator==(const GradedMap&, const GradedMap&) = default;
};

GradedMap compose(const GradedMap& outer, const GradedMap& inner);
GradedMap operator+(const GradedMap& a, const GradedMap& b);
GradedMap operator-(const GradedMap& a, const GradedMap& b);

/// Finite-dimensional DGLA given by structure constants on named generators.
/// Entries that violate degree bookkeeping are stored as given (so that
/// validation can report them) but never contribute to evaluation.
class Dgla {
 public:
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Combination>;

  Dgla() = default;
  /// `bracket` must list every nonzero ordered pair; see with_antisymmetric_closure.
  Dgla(std::string name, std::vector<Generator> generators, std::vector<Combination> differential,
       BracketTable bracket);

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  const Combination& differential_of(std::size_t gen) const { return differential_.at(gen); }
  const Combination& bracket_of(std::size_t left, std::size_t right) const;
  const BracketTable& bracket_table() const { return bracket_; }

  const GradedDims& dims() const { return dims_; }
  std::size_t dim(int degree) const { return dims_(degree); }
  /// Global generator indices spanning g^degree, in declaration order.
  const std::vector<std::size_t>& basis(int degree) const;
  std::size_t local_index(std::size_t gen) const { return local_.at(gen); }

  /// d as a graded map of degree +1.
  const GradedMap& differential() const { return d_; }
  /// [u, v] for u in g^p, v in g^q (local coordinates), landing in g^{p+q}.
  Vector bracket(int p, const Vector& u, int q, const Vector& v) const;

  /// Standard basis vector of g^{degree(gen)} for a generator.
  Vector unit(std::size_t gen) const;

  friend bool operator==(const Dgla& a, const Dgla& b) {
    return a.generators_ == b.generators_ && a.differential_ == b.differential_ &&
           a.bracket_ == b.bracket_;
  }

 private:
  struct BracketBlock {
    std::size_t left_dim = 0;
    // entries[a * right_dim + b] = sparse local result.
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> entries;
    std::size_t right_dim = 0;
  };

  std::string name_;
  std::vector<Generator> generators_;
  std::vector<Combination> differential_;
  BracketTable bracket_;

  GradedDims dims_;
  std::map<int, std::vector<std::size_t>> basis_;
  std::vector<std::size_t> local_;
  GradedMap d_;
  std::map<std::pair<int, int>, BracketBlock> bracket_blocks_;
};

/// Completes `supplied` (normally pairs i <= j) by graded antisymmetry,
/// [g_j, g_i] = -(-1)^{|g_i||g_j|} [g_i, g_j]. A reversed pair given alone is
/// mirrored. Throws std::invalid_argument if both orders are supplied and
/// disagree.
Dgla::BracketTable with_antisymmetric_closure(const std::vector<Generator>& generators,
                                              const Dgla::BracketTable& supplied);

struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool mentions(const std::string& message) const;
};

/// Checks degree bookkeeping, d^2 = 0, graded antisymmetry, graded Leibniz
/// and graded Jacobi on all generator tuples.
ValidationReport validate_dgla(const Dgla& dgla);

}  // namespace dgla

#endif  // DGLA_DGLA_HPP
