#ifndef DGLA_LINEAR_HPP
#define DGLA_LINEAR_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include "dgla/scalar.hpp"

namespace dgla {

/// Sparse row-major matrix over the rationals. Absent entries are exactly
/// zero; stored entries are never zero.
class Matrix {
 public:
  using Row = std::map<std::size_t, Scalar>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Dense literal, one initializer list per row.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void add(std::size_t r, std::size_t c, const Scalar& value);
  const Row& row(std::size_t r) const { return data_.at(r); }

  Vector column(std::size_t c) const;
  Vector apply(const Vector& x) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Linearly independent vectors in k^ambient_dim.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  /// Throws std::invalid_argument if the vectors are dependent or sized wrongly.
  SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors);

  static SubspaceBasis full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }

  /// ambient_dim x size matrix whose columns are the basis vectors.
  Matrix as_matrix() const;
  bool contains(const Vector& v) const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> vectors_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(const Matrix& a);
std::size_t rank(const Matrix& a);
std::size_t rank(const std::vector<Vector>& vectors, std::size_t ambient_dim);

/// Some x with A x = b, or nullopt when b is outside the column space.
/// Free variables of the reduced row echelon form are set to zero.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Basis of ker A, one vector per free column of the echelon form, each
/// scaled so its first nonzero coordinate is 1.
SubspaceBasis kernel_basis(const Matrix& a);

/// Basis of the column space: the pivot columns of A, in column order.
SubspaceBasis image_basis(const Matrix& a);

/// Greedy extension of `s` to a basis of `inside`: candidates (the vectors of
/// `inside`, in order) are taken whenever they raise the rank. Throws
/// std::invalid_argument if span(s) is not contained in span(inside).
SubspaceBasis complement_basis(const SubspaceBasis& s, const SubspaceBasis& inside);
SubspaceBasis complement_basis(const SubspaceBasis& s);

/// Coordinates of v in the concatenation of the given bases, which must
/// together form a basis of the ambient space.
std::vector<Vector> split_coordinates(const std::vector<const SubspaceBasis*>& parts,
                                      const Vector& v);

}  // namespace dgla

#endif  // DGLA_LINEAR_HPP
