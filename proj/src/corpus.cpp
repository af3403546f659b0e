#include "dgla/corpus.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace dgla {

namespace {

constexpr int kDim = 3;

struct Builder {
  std::vector<Generator> gens;
  std::vector<Combination> d;
  Dgla::BracketTable bracket;

  std::size_t gen(const std::string& name, int degree) {
    gens.push_back({name, degree});
    d.emplace_back();
    return gens.size() - 1;
  }
  Dgla build(const std::string& name) {
    return Dgla(name, gens, d, with_antisymmetric_closure(gens, bracket));
  }
};

// --- E2: alternating multilinear maps on k^3 --------------------------------

using Subset = std::vector<int>;  // increasing, 1-based
using Value = std::array<Scalar, kDim>;
using AltMap = std::map<Subset, Value>;

std::vector<Subset> subsets_of_size(int n) {
  std::vector<Subset> out;
  for (int mask = 0; mask < (1 << kDim); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != n) continue;
    Subset s;
    for (int i = 0; i < kDim; ++i) {
      if (mask & (1 << i)) s.push_back(i + 1);
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// f(e_first, e_rest...) with `rest` increasing.
Value eval_with_first(const AltMap& f, int first, const Subset& rest) {
  Value zero{};
  if (std::find(rest.begin(), rest.end(), first) != rest.end()) return zero;
  Subset sorted = rest;
  const auto pos = std::lower_bound(sorted.begin(), sorted.end(), first);
  const int moves = static_cast<int>(pos - sorted.begin());
  sorted.insert(pos, first);
  const auto it = f.find(sorted);
  if (it == f.end()) return zero;
  Value out = it->second;
  if (moves % 2 != 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

int arity_of(const AltMap& f) { return f.empty() ? -1 : static_cast<int>(f.begin()->first.size()); }

// Insertion (f o g)(x_1..x_m) = sum over (a, b-1)-shuffles sgn * f(g(x_A), x_R).
AltMap insert(const AltMap& f, const AltMap& g) {
  AltMap out;
  const int b = arity_of(f);
  const int a = arity_of(g);
  if (a < 0 || b < 1) return out;
  const int m = a + b - 1;
  if (m > kDim) return out;
  for (const auto& s : subsets_of_size(m)) {
    Value total{};
    for (int mask = 0; mask < (1 << m); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != a) continue;
      Subset chosen;
      Subset rest;
      int inversions = 0;
      for (int pos = 0; pos < m; ++pos) {
        if (mask & (1 << pos)) {
          chosen.push_back(s[pos]);
          inversions += static_cast<int>(rest.size());
        } else {
          rest.push_back(s[pos]);
        }
      }
      const auto git = g.find(chosen);
      if (git == g.end()) continue;
      const int sign = inversions % 2 == 0 ? 1 : -1;
      for (int k = 0; k < kDim; ++k) {
        if (git->second[k] == 0) continue;
        const Value fv = eval_with_first(f, k + 1, rest);
        for (int c = 0; c < kDim; ++c) total[c] += sign * git->second[k] * fv[c];
      }
    }
    if (std::any_of(total.begin(), total.end(), [](const Scalar& x) { return x != 0; })) {
      out[s] = total;
    }
  }
  return out;
}

Dgla build_ce3() {
  Builder b;
  struct Entry {
    Subset inputs;
    int output;
  };
  std::vector<Entry> entries;
  std::map<std::pair<Subset, int>, std::size_t> index;
  for (int n = 0; n <= kDim; ++n) {
    for (const auto& s : subsets_of_size(n)) {
      for (int k = 1; k <= kDim; ++k) {
        index[{s, k}] = b.gen(ce3_generator(s, k), n - 1);
        entries.push_back({s, k});
      }
    }
  }
  auto as_map = [](const Entry& e) {
    Value v{};
    v[e.output - 1] = 1;
    return AltMap{{e.inputs, v}};
  };
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i; j < entries.size(); ++j) {
      const AltMap f = as_map(entries[i]);
      const AltMap g = as_map(entries[j]);
      const int p = static_cast<int>(entries[i].inputs.size()) - 1;
      const int q = static_cast<int>(entries[j].inputs.size()) - 1;
      const int sign = (p * q) % 2 == 0 ? -1 : 1;
      std::map<std::size_t, Scalar> acc;
      for (const auto& [s, v] : insert(f, g)) {
        for (int k = 0; k < kDim; ++k) acc[index.at({s, k + 1})] += v[k];
      }
      for (const auto& [s, v] : insert(g, f)) {
        for (int k = 0; k < kDim; ++k) acc[index.at({s, k + 1})] += sign * v[k];
      }
      Combination comb;
      for (const auto& [gen, c] : acc) {
        if (c != 0) comb.emplace_back(gen, c);
      }
      if (!comb.empty()) b.bracket[{i, j}] = comb;
    }
  }
  return b.build("ce3");
}

}  // namespace

std::string ce3_generator(const std::vector<int>& inputs, int output) {
  std::string s = "phi[";
  for (int i : inputs) s += std::to_string(i);
  return s + ">" + std::to_string(output) + "]";
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"E0", "E1", "E2", "E3", "E4"};
  return names;
}

Dgla builtin_example(const std::string& name) {
  if (name == "E0") {
    Builder b;
    b.gen("x1", 1);
    b.gen("x2", 1);
    return b.build("abelian2");
  }
  if (name == "E1") {
    Builder b;
    const auto x = b.gen("x", 1);
    const auto c = b.gen("c", 1);
    const auto bb = b.gen("b", 2);
    b.d[c] = {{bb, Scalar(1)}};
    b.bracket[{x, x}] = {{bb, Scalar(1)}};
    return b.build("curl");
  }
  if (name == "E2") return build_ce3();
  if (name == "E3") {
    Builder b;
    const auto x = b.gen("x", 1);
    const auto bb = b.gen("b", 2);
    b.bracket[{x, x}] = {{bb, Scalar(1)}};
    return b.build("obst");
  }
  if (name == "E4") {
    Builder b;
    const auto a = b.gen("a", 0);
    const auto x = b.gen("x", 1);
    b.d[a] = {{x, Scalar(1)}};
    return b.build("gauge2");
  }
  throw std::invalid_argument("unknown built-in example '" + name + "'");
}

}  // namespace dgla
