#include "dgla/linear.hpp"

#include <stdexcept>
#include <string>

namespace dgla {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()), data_(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    std::size_t c = 0;
    for (const auto& x : row) set(r, c++, x);
    ++r;
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

void Matrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  const auto it = data_[r].find(c);
  return it == data_[r].end() ? Scalar(0) : it->second;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  check_index(r, c);
  if (value == 0) {
    data_[r].erase(c);
  } else {
    data_[r][c] = value;
  }
}

void Matrix::add(std::size_t r, std::size_t c, const Scalar& value) {
  check_index(r, c);
  if (value == 0) return;
  auto [it, inserted] = data_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) data_[r].erase(it);
  }
}

Vector Matrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("column index");
  Vector out = zero_vector(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto it = data_[r].find(c);
    if (it != data_[r].end()) out[r] = it->second;
  }
  return out;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out = zero_vector(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) {
      if (x[c] != 0) out[r] += v * x[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
  }
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& row : data_) {
    if (!row.empty()) return false;
  }
  return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [k, a] : data_[r]) {
      for (const auto& [c, b] : rhs.data_[k]) out.add(r, c, a * b);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix sum dimension mismatch");
  }
  Matrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : rhs.data_[r]) out.add(r, c, v);
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + rhs.scaled(-1); }

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(rows_, cols_);
  if (s == 0) return out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out.data_[r][c] = v * s;
  }
  return out;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (v.size() != ambient_dim_) throw std::invalid_argument("basis vector has wrong dimension");
  }
  if (rank(vectors_, ambient_dim_) != vectors_.size()) {
    throw std::invalid_argument("basis vectors are linearly dependent");
  }
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
  std::vector<Vector> vs;
  vs.reserve(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector e = zero_vector(ambient_dim);
    e[i] = 1;
    vs.push_back(std::move(e));
  }
  return SubspaceBasis(ambient_dim, std::move(vs));
}

Matrix SubspaceBasis::as_matrix() const { return Matrix::from_columns(ambient_dim_, vectors_); }

bool SubspaceBasis::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("vector has wrong dimension");
  return solve_linear(as_matrix(), v).has_value();
}

Echelon row_reduce(const Matrix& a) {
  std::vector<Matrix::Row> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows[r] = a.row(r);

  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < a.cols() && next < rows.size(); ++col) {
    std::size_t pick = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r].count(col) != 0) {
        pick = r;
        break;
      }
    }
    if (pick == rows.size()) continue;
    std::swap(rows[next], rows[pick]);

    const Scalar inv = 1 / rows[next].at(col);
    for (auto& [c, v] : rows[next]) v *= inv;

    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next) continue;
      const auto hit = rows[r].find(col);
      if (hit == rows[r].end()) continue;
      const Scalar factor = hit->second;
      for (const auto& [c, v] : rows[next]) {
        auto [it, inserted] = rows[r].try_emplace(c, -factor * v);
        if (!inserted) {
          it->second -= factor * v;
          if (it->second == 0) rows[r].erase(it);
        }
      }
    }
    pivots.push_back(col);
    ++next;
  }

  Matrix reduced(a.rows(), a.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) reduced.set(r, c, v);
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

std::size_t rank(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_columns(ambient_dim, vectors));
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [c, v] : a.row(r)) aug.set(r, c, v);
    aug.set(r, a.cols(), b[r]);
  }
  const Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced.at(i, a.cols());
  return x;
}

SubspaceBasis kernel_basis(const Matrix& a) {
  const Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced.at(i, free);
    for (const auto& x : v) {
      if (x != 0) {
        const Scalar lead = x;
        for (auto& y : v) y /= lead;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return SubspaceBasis(a.cols(), std::move(basis));
}

SubspaceBasis image_basis(const Matrix& a) {
  const Echelon e = row_reduce(a);
  std::vector<Vector> basis;
  basis.reserve(e.pivots.size());
  for (auto p : e.pivots) basis.push_back(a.column(p));
  return SubspaceBasis(a.rows(), std::move(basis));
}

namespace {

// Incrementally maintained echelon basis; insert() reports whether the
// vector was independent of everything inserted so far.
class EchelonAccumulator {
 public:
  explicit EchelonAccumulator(std::size_t dim) : dim_(dim) {}

  bool insert(Vector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar f = v[pivots_[i]];
      if (f != 0) {
        for (std::size_t c = 0; c < dim_; ++c) v[c] -= f * rows_[i][c];
      }
    }
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    const Scalar inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_) {
      const Scalar f = row[p];
      if (f != 0) {
        for (std::size_t c = 0; c < dim_; ++c) row[c] -= f * v[c];
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

SubspaceBasis complement_basis(const SubspaceBasis& s, const SubspaceBasis& inside) {
  if (s.ambient_dim() != inside.ambient_dim()) {
    throw std::invalid_argument("complement_basis: ambient dimension mismatch");
  }
  std::vector<Vector> joint = inside.vectors();
  joint.insert(joint.end(), s.vectors().begin(), s.vectors().end());
  if (rank(joint, s.ambient_dim()) != inside.size()) {
    throw std::invalid_argument("complement_basis: subspace not contained in the ambient span");
  }

  EchelonAccumulator acc(s.ambient_dim());
  for (const auto& v : s.vectors()) acc.insert(v);
  std::vector<Vector> out;
  for (const auto& candidate : inside.vectors()) {
    if (out.size() + s.size() == inside.size()) break;
    if (acc.insert(candidate)) out.push_back(candidate);
  }
  return SubspaceBasis(s.ambient_dim(), std::move(out));
}

SubspaceBasis complement_basis(const SubspaceBasis& s) {
  return complement_basis(s, SubspaceBasis::full(s.ambient_dim()));
}

std::vector<Vector> split_coordinates(const std::vector<const SubspaceBasis*>& parts,
                                      const Vector& v) {
  std::vector<Vector> columns;
  for (const auto* part : parts) {
    columns.insert(columns.end(), part->vectors().begin(), part->vectors().end());
  }
  if (columns.size() != v.size()) {
    throw std::invalid_argument("split_coordinates: parts do not form a basis");
  }
  const auto coords = solve_linear(Matrix::from_columns(v.size(), columns), v);
  if (!coords) throw std::logic_error("split_coordinates: parts do not span the space");
  std::vector<Vector> out;
  std::size_t offset = 0;
  for (const auto* part : parts) {
    out.emplace_back(coords->begin() + static_cast<std::ptrdiff_t>(offset),
                     coords->begin() + static_cast<std::ptrdiff_t>(offset + part->size()));
    offset += part->size();
  }
  return out;
}

}  // namespace dgla
