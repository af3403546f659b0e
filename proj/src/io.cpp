#include "dgla/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dgla {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(where + ": missing field \"" + key + "\"");
  }
  return obj.at(key);
}

std::string string_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) throw InputError(where + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

Scalar coefficient_field(const Json& obj, const std::string& where) {
  const Json& v = field(obj, "coeff", where);
  if (!v.is_string()) {
    throw InputError(where + ": coefficient must be a \"p/q\" string (exact rationals only)");
  }
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
}

const Json& array_field(const Json& obj, const char* key, const std::string& where) {
  static const Json empty = Json::array();
  if (!obj.contains(key)) return empty;
  const Json& v = obj.at(key);
  if (!v.is_array()) throw InputError(where + ": field \"" + key + "\" must be an array");
  return v;
}

}  // namespace

Dgla dgla_from_json(const Json& doc, bool allow_invalid) {
  if (!doc.is_object()) throw InputError("DGLA document must be a JSON object");
  const std::string name = doc.contains("name") ? string_field(doc, "name", "document") : "unnamed";
  if (doc.contains("field") && string_field(doc, "field", "document") != "Q") {
    throw InputError("document: only the field \"Q\" is supported");
  }

  std::vector<Generator> gens;
  std::map<std::string, std::size_t> index;
  for (const auto& entry : array_field(doc, "generators", "document")) {
    const std::string where = "generator #" + std::to_string(gens.size());
    const std::string gname = string_field(entry, "name", where);
    const Json& deg = field(entry, "degree", where);
    if (!deg.is_number_integer()) throw InputError(where + ": degree must be an integer");
    if (gname.empty() || gname.find_first_of("+-*@ \t") != std::string::npos) {
      throw InputError(where + ": generator names must be non-empty and avoid + - * @ and spaces");
    }
    if (!index.emplace(gname, gens.size()).second) {
      throw InputError("duplicate generator name '" + gname + "'");
    }
    gens.push_back({gname, deg.get<int>()});
  }

  auto lookup = [&](const std::string& gname, const std::string& where) {
    const auto it = index.find(gname);
    if (it == index.end()) throw InputError(where + ": unknown generator '" + gname + "'");
    return it->second;
  };
  auto combination = [&](const Json& terms, const std::string& where) {
    if (!terms.is_array()) throw InputError(where + ": expected an array of terms");
    std::map<std::size_t, Scalar> acc;
    for (const auto& t : terms) {
      const std::size_t k = lookup(string_field(t, "gen", where), where);
      acc[k] += coefficient_field(t, where);
    }
    Combination out;
    for (const auto& [k, c] : acc) {
      if (c != 0) out.emplace_back(k, c);
    }
    return out;
  };

  std::vector<Combination> d(gens.size());
  std::set<std::size_t> seen_d;
  for (const auto& entry : array_field(doc, "d", "document")) {
    const std::string from = string_field(entry, "from", "d entry");
    const std::string where = "d entry for '" + from + "'";
    const std::size_t i = lookup(from, where);
    if (!seen_d.insert(i).second) throw InputError(where + ": listed twice");
    d[i] = combination(field(entry, "to", where), where);
  }

  Dgla::BracketTable supplied;
  for (const auto& entry : array_field(doc, "bracket", "document")) {
    const std::string left = string_field(entry, "left", "bracket entry");
    const std::string right = string_field(entry, "right", "bracket entry");
    const std::string where = "bracket entry (" + left + "," + right + ")";
    const std::size_t i = lookup(left, where);
    const std::size_t j = lookup(right, where);
    if (supplied.count({i, j}) != 0) throw InputError(where + ": listed twice");
    supplied[{i, j}] = combination(field(entry, "result", where), where);
  }

  Dgla::BracketTable closed;
  try {
    closed = with_antisymmetric_closure(gens, supplied);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Dgla g(name, gens, d, closed);
  if (!allow_invalid) {
    ValidationReport report = validate_dgla(g);
    if (!report.ok()) {
      const std::string message = "DGLA axiom violated: " + report.violations.front().message;
      throw AxiomError(message, std::move(report));
    }
  }
  return g;
}

Json dgla_to_json(const Dgla& g) {
  const auto& gens = g.generators();
  auto terms = [&](const Combination& comb) {
    Json arr = Json::array();
    for (const auto& [k, c] : comb) arr.push_back({{"gen", gens[k].name}, {"coeff", to_string(c)}});
    return arr;
  };
  Json doc;
  doc["name"] = g.name();
  doc["field"] = "Q";
  doc["generators"] = Json::array();
  for (const auto& gen : gens) doc["generators"].push_back({{"name", gen.name}, {"degree", gen.degree}});
  doc["d"] = Json::array();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (g.differential_of(i).empty()) continue;
    doc["d"].push_back({{"from", gens[i].name}, {"to", terms(g.differential_of(i))}});
  }
  doc["bracket"] = Json::array();
  for (const auto& [pair, comb] : g.bracket_table()) {
    if (pair.first > pair.second) continue;
    doc["bracket"].push_back(
        {{"left", gens[pair.first].name}, {"right", gens[pair.second].name}, {"result", terms(comb)}});
  }
  return doc;
}

Dgla parse_dgla(std::string_view text, bool allow_invalid) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  return dgla_from_json(doc, allow_invalid);
}

Dgla load_dgla(const std::string& path, bool allow_invalid) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dgla(buf.str(), allow_invalid);
}

namespace {

Monomial parse_monomial(const CoefficientRing& ring, const std::string& text) {
  std::vector<int> exps(ring.size(), 0);
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find('*', start), text.size());
    const std::string factor = trim(std::string_view(text).substr(start, stop - start));
    const std::size_t caret = factor.find('^');
    const std::string var = trim(factor.substr(0, caret));
    int power = 1;
    if (caret != std::string::npos) {
      const std::string p = trim(factor.substr(caret + 1));
      if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos || p.size() > 4) {
        throw InputError("bad exponent in monomial '" + text + "'");
      }
      power = std::stoi(p);
    }
    std::size_t v = 0;
    while (v < ring.size() && ring.variables[v] != var) ++v;
    if (v == ring.size()) throw InputError("unknown variable '" + var + "' in '" + text + "'");
    exps[v] += power;
    start = stop + 1;
  }
  return Monomial(std::move(exps));
}

}  // namespace

FormalElement parse_element(const Dgla& g, const CoefficientRing& ring, std::string_view text,
                            std::optional<int> degree) {
  // Split into signed terms at top-level + and -.
  std::vector<std::pair<int, std::string>> terms;
  int sign = 1;
  std::string current;
  auto flush = [&](std::size_t pos) {
    const std::string t = trim(current);
    if (t.empty()) {
      if (!current.empty() || pos != 0) {
        throw InputError("empty term in '" + std::string(text) + "'");
      }
    } else {
      terms.emplace_back(sign, t);
    }
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '+' || c == '-') {
      const bool leading = trim(current).empty() && terms.empty();
      if (!leading) flush(i);
      else current.clear();
      sign = c == '-' ? -1 : 1;
    } else {
      current += c;
    }
  }
  flush(text.size());

  if (terms.size() == 1 && terms.front().second == "0") {
    if (!degree) throw InputError("the zero element needs an explicit degree");
    return zero_element(g, ring, *degree);
  }
  if (terms.empty()) throw InputError("empty element expression");

  std::optional<int> deg = degree;
  std::vector<std::tuple<Monomial, std::size_t, Scalar>> parsed;
  for (const auto& [s, t] : terms) {
    const std::size_t at = t.find('@');
    if (at == std::string::npos) {
      throw InputError("term '" + t + "' lacks a monomial (constant terms are not allowed)");
    }
    const std::string lhs = trim(t.substr(0, at));
    const std::size_t split = lhs.find_last_of("* \t");
    Scalar coeff(s);
    std::string name = lhs;
    if (split != std::string::npos) {
      try {
        coeff *= parse_scalar(trim(lhs.substr(0, split)));
      } catch (const std::invalid_argument& e) {
        throw InputError("term '" + t + "': " + e.what());
      }
      name = trim(lhs.substr(split + 1));
    }
    const auto gen = g.index_of(name);
    if (!gen) throw InputError("unknown generator '" + name + "'");
    const int gdeg = g.generators()[*gen].degree;
    if (deg && *deg != gdeg) {
      throw InputError("term '" + t + "' has degree " + std::to_string(gdeg) + ", expected " +
                       std::to_string(*deg));
    }
    deg = gdeg;
    const Monomial m = parse_monomial(ring, trim(t.substr(at + 1)));
    if (m.total_degree() == 0) throw InputError("term '" + t + "' has a constant monomial");
    parsed.emplace_back(m, *gen, coeff);
  }
  FormalElement out = zero_element(g, ring, *deg);
  for (const auto& [m, gen, c] : parsed) out.add_term(m, c * g.unit(gen));
  return out;
}

namespace {

// Appends "c name" with the sign folded into the joiner.
void append_term(std::string& out, const Scalar& c, const std::string& name) {
  const Scalar mag = abs(c);
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mag != 1) out += to_string(mag) + " ";
  out += name;
}

}  // namespace

std::string format_vector(const Dgla& g, int degree, const Vector& v) {
  std::string out;
  const auto& basis = g.basis(degree);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) append_term(out, v[k], g.generators()[basis.at(k)].name);
  }
  return out.empty() ? "0" : out;
}

std::string format_element(const Dgla& g, const FormalElement& v) {
  std::string out;
  const auto& basis = g.basis(v.degree());
  for (const auto& [m, coeffs] : v.terms()) {
    const std::string mono = m.to_string(v.ring());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] != 0) append_term(out, coeffs[k], g.generators()[basis.at(k)].name + "@" + mono);
    }
  }
  return out.empty() ? "0" : out;
}

Json element_coefficients(const Dgla& g, const FormalElement& v) {
  Json out = Json::object();
  for (const auto& [m, coeffs] : v.terms()) {
    out[m.to_string(v.ring())] = format_vector(g, v.degree(), coeffs);
  }
  return out;
}

Vector parse_coordinates(std::string_view text) {
  Vector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find(',', start), text.size());
    try {
      out.push_back(parse_scalar(trim(text.substr(start, stop - start))));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("coordinates: ") + e.what());
    }
    start = stop + 1;
  }
  return out;
}

}  // namespace dgla
