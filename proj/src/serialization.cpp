#include "twlat/serialization.hpp"

#include <algorithm>

namespace twlat {

Json element_to_json(const FieldElement& x) {
  if (x.params().e() == 1) return static_cast<long long>(x.index());
  return x.digits();
}

FieldElement element_from_json(const Json& j, const FieldParams& field, const std::string& where) {
  if (field.e() == 1) {
    if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
    const auto v = j.get<long long>();
    if (v < 0 || v >= field.p()) throw FormatError(where + ": value out of range for F_" + std::to_string(field.p()));
    return field.from_int(v);
  }
  if (!j.is_array() || j.size() != static_cast<std::size_t>(field.e()))
    throw FormatError(where + ": expected a list of " + std::to_string(field.e()) + " digits");
  std::vector<int> d;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw FormatError(where + ": digits must be integers");
    const auto v = x.get<int>();
    if (v < 0 || v >= field.p()) throw FormatError(where + ": digit out of range");
    d.push_back(v);
  }
  return field.from_digits(d);
}

Json field_header(const FieldParams& field) {
  Json h;
  h["p"] = field.p();
  h["e"] = field.e();
  if (field.e() > 1) h["modulus"] = field.modulus();
  return h;
}

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

long long require_int(const Json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  return v.get<long long>();
}

}  // namespace

FieldParams field_from_json(const Json& j) {
  const auto p = require_int(j, "p");
  const auto e = require_int(j, "e");
  try {
    if (j.contains("modulus")) {
      const auto& m = j.at("modulus");
      if (!m.is_array()) throw FormatError("field \"modulus\" must be a list of integers");
      std::vector<int> c;
      for (const auto& x : m) {
        if (!x.is_number_integer()) throw FormatError("field \"modulus\" must be a list of integers");
        c.push_back(x.get<int>());
      }
      return FieldParams::make(static_cast<int>(p), static_cast<int>(e), c);
    }
    return FieldParams::make(static_cast<int>(p), static_cast<int>(e));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(std::string("field parameters: ") + ex.what());
  }
}

Json ideal_to_json(const TwistedLinearIdeal& I) {
  const auto& a = I.ambient();
  Json out = field_header(a.field);
  out["n"] = a.n;
  out["N"] = a.N;
  std::vector<const TwistedLinearForm*> gens;
  for (const auto& g : I.generators()) gens.push_back(&g);
  std::stable_sort(gens.begin(), gens.end(), [](auto* x, auto* y) { return x->level() < y->level(); });
  Json list = Json::array();
  for (const auto* g : gens) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < a.n; ++i)
      for (std::size_t j = 0; j <= g->max_j(); ++j)
        if (!g->coeff(i, j).is_zero()) terms.push_back(Json::array({i + 1, j, element_to_json(g->coeff(i, j))}));
    Json gj;
    gj["level"] = g->level();
    gj["terms"] = std::move(terms);
    list.push_back(std::move(gj));
  }
  out["generators"] = std::move(list);
  return out;
}

TwistedLinearIdeal ideal_from_json(const Json& j) {
  const auto field = field_from_json(j);
  const auto n = require_int(j, "n");
  const auto N = require_int(j, "N");
  if (n < 1 || N < 1) throw FormatError("fields \"n\" and \"N\" must be positive");
  const AmbientParams a(field, static_cast<std::size_t>(n), static_cast<std::size_t>(N));
  const auto& gl = require(j, "generators");
  if (!gl.is_array()) throw FormatError("field \"generators\" must be a list");
  std::vector<TwistedLinearForm> gens;
  for (std::size_t g = 0; g < gl.size(); ++g) {
    const std::string where = "generators[" + std::to_string(g) + "]";
    long long level;
    try {
      level = require_int(gl[g], "level");
    } catch (const FormatError& e) {
      throw FormatError(where + ": " + e.what());
    }
    if (level < 0) throw FormatError(where + ".level must be non-negative");
    TwistedLinearForm f(a, static_cast<std::size_t>(level));
    if (!gl[g].contains("terms") || !gl[g]["terms"].is_array()) throw FormatError(where + ".terms must be a list");
    const auto& terms = gl[g]["terms"];
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = where + ".terms[" + std::to_string(t) + "]";
      const auto& term = terms[t];
      if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() || !term[1].is_number_integer())
        throw FormatError(tw + ": expected [i, j, coefficient]");
      const auto i = term[0].get<long long>();
      const auto jj = term[1].get<long long>();
      if (i < 1 || i > n) throw FormatError(tw + ": i out of range 1.." + std::to_string(n));
      if (jj < 0 || jj > std::min<long long>(level, N - 1)) throw FormatError(tw + ": j out of range for the level");
      const auto i0 = static_cast<std::size_t>(i - 1), j0 = static_cast<std::size_t>(jj);
      f.set(i0, j0, f.coeff(i0, j0) + element_from_json(term[2], field, tw));
    }
    gens.push_back(std::move(f));
  }
  return TwistedLinearIdeal(a, std::move(gens));
}

TwistedLinearIdeal ideal_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw FormatError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  return ideal_from_json(j);
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(element_to_json(x));
  return out;
}

Json lattice_to_json(const Lattice& L) {
  Json out = Json::array();
  for (const auto& v : L.space().basis()) out.push_back(vector_to_json(v));
  return out;
}

Json chain_to_json(const LatticeChain& chain) {
  Json out = Json::array();
  for (const auto& L : chain) out.push_back(lattice_to_json(L));
  return out;
}

}  // namespace twlat
