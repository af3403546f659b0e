#include "dgla/dgla.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgla {

GradedDims::GradedDims(std::map<int, std::size_t> dims) {
  if (dims.empty()) return;
  min_ = dims.begin()->first;
  max_ = dims.rbegin()->first;
  for (int i = min_; i <= max_; ++i) {
    const auto it = dims.find(i);
    dims_[i] = it == dims.end() ? 0 : it->second;
  }
}

std::size_t GradedDims::operator()(int degree) const {
  const auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

std::size_t GradedDims::total() const {
  std::size_t n = 0;
  for (const auto& [deg, dim] : dims_) n += dim;
  return n;
}

std::size_t GradedDims::offset(int degree) const {
  std::size_t n = 0;
  for (const auto& [deg, dim] : dims_) {
    if (deg >= degree) break;
    n += dim;
  }
  return n;
}

GradedMap GradedMap::zero(const GradedDims& source, const GradedDims& target, int shift) {
  GradedMap m{shift, source, target, {}};
  for (const auto& [deg, dim] : source.map()) m.blocks.emplace(deg, Matrix(target(deg + shift), dim));
  return m;
}

GradedMap GradedMap::identity(const GradedDims& dims) {
  GradedMap m{0, dims, dims, {}};
  for (const auto& [deg, dim] : dims.map()) m.blocks.emplace(deg, Matrix::identity(dim));
  return m;
}

Vector GradedMap::apply(int source_degree, const Vector& v) const {
  const auto it = blocks.find(source_degree);
  if (it == blocks.end()) {
    if (!v.empty()) throw std::invalid_argument("graded map: degree outside range");
    return {};
  }
  return it->second.apply(v);
}

bool GradedMap::is_zero() const {
  for (const auto& [deg, block] : blocks) {
    if (!block.is_zero()) return false;
  }
  return true;
}

Matrix GradedMap::total() const {
  Matrix out(target.total(), source.total());
  for (const auto& [deg, block] : blocks) {
    const std::size_t col0 = source.offset(deg);
    const std::size_t row0 = target.offset(deg + shift);
    for (std::size_t r = 0; r < block.rows(); ++r) {
      for (const auto& [c, v] : block.row(r)) out.set(row0 + r, col0 + c, v);
    }
  }
  return out;
}

GradedMap compose(const GradedMap& outer, const GradedMap& inner) {
  if (!(outer.source == inner.target)) throw std::invalid_argument("compose: dimension mismatch");
  GradedMap out = GradedMap::zero(inner.source, outer.target, outer.shift + inner.shift);
  for (const auto& [deg, block] : inner.blocks) {
    const auto it = outer.blocks.find(deg + inner.shift);
    if (it == outer.blocks.end()) continue;  // intermediate space is zero
    out.blocks.at(deg) = it->second * block;
  }
  return out;
}

namespace {

void check_same_shape(const GradedMap& a, const GradedMap& b) {
  if (a.shift != b.shift || !(a.source == b.source) || !(a.target == b.target)) {
    throw std::invalid_argument("graded maps have different shapes");
  }
}

}  // namespace

GradedMap operator+(const GradedMap& a, const GradedMap& b) {
  check_same_shape(a, b);
  GradedMap out = a;
  for (auto& [deg, block] : out.blocks) block = block + b.blocks.at(deg);
  return out;
}

GradedMap operator-(const GradedMap& a, const GradedMap& b) {
  check_same_shape(a, b);
  GradedMap out = a;
  for (auto& [deg, block] : out.blocks) block = block - b.blocks.at(deg);
  return out;
}

Dgla::Dgla(std::string name, std::vector<Generator> generators,
           std::vector<Combination> differential, BracketTable bracket)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      differential_(std::move(differential)),
      bracket_(std::move(bracket)) {
  if (differential_.size() != generators_.size()) {
    throw std::invalid_argument("differential must list one entry per generator");
  }
  auto check_combination = [&](const Combination& comb) {
    for (std::size_t i = 0; i < comb.size(); ++i) {
      if (comb[i].first >= generators_.size()) throw std::out_of_range("generator index");
      if (comb[i].second == 0) throw std::invalid_argument("zero coefficient in combination");
      if (i > 0 && comb[i - 1].first >= comb[i].first) {
        throw std::invalid_argument("combination indices must be strictly increasing");
      }
    }
  };
  for (const auto& c : differential_) check_combination(c);
  for (auto it = bracket_.begin(); it != bracket_.end();) {
    if (it->first.first >= generators_.size() || it->first.second >= generators_.size()) {
      throw std::out_of_range("bracket generator index");
    }
    check_combination(it->second);
    it = it->second.empty() ? bracket_.erase(it) : std::next(it);
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[i].name == generators_[j].name) {
        throw std::invalid_argument("duplicate generator name '" + generators_[i].name + "'");
      }
    }
  }

  std::map<int, std::size_t> dim_map;
  local_.resize(generators_.size());
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    auto& b = basis_[generators_[g].degree];
    local_[g] = b.size();
    b.push_back(g);
    dim_map[generators_[g].degree] = b.size();
  }
  dims_ = GradedDims(std::move(dim_map));
  for (const auto& [deg, dim] : dims_.map()) basis_[deg];

  d_ = GradedMap::zero(dims_, 1);
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const int deg = generators_[g].degree;
    for (const auto& [k, c] : differential_[g]) {
      if (generators_[k].degree != deg + 1) continue;
      d_.blocks.at(deg).set(local_[k], local_[g], c);
    }
  }

  for (const auto& [pair, comb] : bracket_) {
    const auto [i, j] = pair;
    const int p = generators_[i].degree;
    const int q = generators_[j].degree;
    auto& block = bracket_blocks_[{p, q}];
    if (block.entries.empty()) {
      block.left_dim = dims_(p);
      block.right_dim = dims_(q);
      block.entries.resize(block.left_dim * block.right_dim);
    }
    auto& slot = block.entries[local_[i] * block.right_dim + local_[j]];
    for (const auto& [k, c] : comb) {
      if (generators_[k].degree == p + q) slot.emplace_back(local_[k], c);
    }
  }
}

std::optional<std::size_t> Dgla::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

const Combination& Dgla::bracket_of(std::size_t left, std::size_t right) const {
  static const Combination empty;
  const auto it = bracket_.find({left, right});
  return it == bracket_.end() ? empty : it->second;
}

const std::vector<std::size_t>& Dgla::basis(int degree) const {
  static const std::vector<std::size_t> empty;
  const auto it = basis_.find(degree);
  return it == basis_.end() ? empty : it->second;
}

Vector Dgla::bracket(int p, const Vector& u, int q, const Vector& v) const {
  if (u.size() != dims_(p) || v.size() != dims_(q)) {
    throw std::invalid_argument("bracket: argument dimension mismatch");
  }
  Vector out = zero_vector(dims_(p + q));
  const auto it = bracket_blocks_.find({p, q});
  if (it == bracket_blocks_.end()) return out;
  const BracketBlock& block = it->second;
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (v[b] == 0) continue;
      const auto& slot = block.entries[a * block.right_dim + b];
      if (slot.empty()) continue;
      const Scalar w = u[a] * v[b];
      for (const auto& [k, c] : slot) out[k] += w * c;
    }
  }
  return out;
}

Vector Dgla::unit(std::size_t gen) const {
  Vector e = zero_vector(dims_(generators_.at(gen).degree));
  e[local_[gen]] = 1;
  return e;
}

namespace {

int koszul(int a, int b) { return (a * b) % 2 == 0 ? 1 : -1; }

}  // namespace

Dgla::BracketTable with_antisymmetric_closure(const std::vector<Generator>& generators,
                                              const Dgla::BracketTable& supplied) {
  auto mirror = [&](std::size_t i, std::size_t j, const Combination& comb) {
    const int sign = -koszul(generators.at(i).degree, generators.at(j).degree);
    Combination out;
    for (const auto& [k, c] : comb) out.emplace_back(k, c * sign);
    return out;
  };
  // Canonical entries have left <= right; a lone reversed entry is mirrored.
  Dgla::BracketTable canonical;
  for (const auto& [pair, comb] : supplied) {
    if (pair.first <= pair.second) {
      canonical[pair] = comb;
    } else if (supplied.count({pair.second, pair.first}) == 0) {
      canonical[{pair.second, pair.first}] = mirror(pair.first, pair.second, comb);
    }
  }
  Dgla::BracketTable out = canonical;
  for (const auto& [pair, comb] : canonical) {
    if (pair.first < pair.second) out[{pair.second, pair.first}] = mirror(pair.first, pair.second, comb);
  }
  for (const auto& [pair, comb] : supplied) {
    const auto it = out.find(pair);
    const Combination& implied = it == out.end() ? Combination{} : it->second;
    if (implied != comb) {
      throw std::invalid_argument("bracket entry (" + generators[pair.first].name + "," +
                                  generators[pair.second].name +
                                  ") contradicts graded antisymmetry");
    }
  }
  return out;
}

bool ValidationReport::mentions(const std::string& message) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.message == message; });
}

namespace {

// Raw evaluation on sparse global vectors, using every stored structure
// constant regardless of degree bookkeeping.
using Sparse = std::map<std::size_t, Scalar>;

void accumulate(Sparse& acc, const Sparse& v, const Scalar& scale) {
  for (const auto& [k, c] : v) {
    auto [it, inserted] = acc.try_emplace(k, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second == 0) acc.erase(it);
    }
  }
}

Sparse to_sparse(const Combination& comb) { return Sparse(comb.begin(), comb.end()); }

Sparse raw_d(const Dgla& g, const Sparse& v) {
  Sparse out;
  for (const auto& [i, c] : v) accumulate(out, to_sparse(g.differential_of(i)), c);
  return out;
}

Sparse raw_bracket(const Dgla& g, const Sparse& u, const Sparse& v) {
  Sparse out;
  for (const auto& [i, a] : u) {
    for (const auto& [j, b] : v) accumulate(out, to_sparse(g.bracket_of(i, j)), a * b);
  }
  return out;
}

Sparse single(std::size_t i) { return Sparse{{i, Scalar(1)}}; }

std::string tuple_text(const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += ",";
    s += names[i];
  }
  return s + ")";
}

}  // namespace

ValidationReport validate_dgla(const Dgla& g) {
  ValidationReport report;
  const auto& gens = g.generators();
  const std::size_t n = gens.size();
  auto add = [&](std::string axiom, std::vector<std::string> witness, const std::string& what) {
    std::string message = what + " at " + tuple_text(witness);
    report.violations.push_back({std::move(axiom), std::move(witness), std::move(message)});
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [k, c] : g.differential_of(i)) {
      if (gens[k].degree != gens[i].degree + 1) {
        add("differential-degree", {gens[i].name}, "differential degree violation");
        break;
      }
    }
  }
  for (const auto& [pair, comb] : g.bracket_table()) {
    const int target = gens[pair.first].degree + gens[pair.second].degree;
    for (const auto& [k, c] : comb) {
      if (gens[k].degree != target) {
        add("bracket-degree", {gens[pair.first].name, gens[pair.second].name},
            "bracket degree violation");
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!raw_d(g, raw_d(g, single(i))).empty()) {
      add("d-squared", {gens[i].name}, "d^2 != 0");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Sparse sum = raw_bracket(g, single(i), single(j));
      accumulate(sum, raw_bracket(g, single(j), single(i)), koszul(gens[i].degree, gens[j].degree));
      if (!sum.empty()) add("antisymmetry", {gens[i].name, gens[j].name}, "graded antisymmetry fails");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Sparse x = single(i);
      const Sparse y = single(j);
      Sparse diff = raw_d(g, raw_bracket(g, x, y));
      accumulate(diff, raw_bracket(g, raw_d(g, x), y), -1);
      accumulate(diff, raw_bracket(g, x, raw_d(g, y)), -Scalar(koszul(gens[i].degree, 1)));
      if (!diff.empty()) add("leibniz", {gens[i].name, gens[j].name}, "graded Leibniz fails");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        const int dx = gens[i].degree;
        const int dy = gens[j].degree;
        const int dz = gens[k].degree;
        const Sparse x = single(i);
        const Sparse y = single(j);
        const Sparse z = single(k);
        Sparse sum;
        accumulate(sum, raw_bracket(g, x, raw_bracket(g, y, z)), koszul(dx, dz));
        accumulate(sum, raw_bracket(g, y, raw_bracket(g, z, x)), koszul(dy, dx));
        accumulate(sum, raw_bracket(g, z, raw_bracket(g, x, y)), koszul(dz, dy));
        if (!sum.empty()) {
          add("jacobi", {gens[i].name, gens[j].name, gens[k].name}, "graded Jacobi fails");
        }
      }
    }
  }
  return report;
}

}  // namespace dgla
