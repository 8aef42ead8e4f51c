#include "mpl/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "mpl/abstraction.hpp"
#include "mpl/error.hpp"

namespace mpl::io {

namespace {

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

std::size_t as_count(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ParseError(where + ": expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

Scalar as_scalar(const json& j, const std::string& where) {
  if (j.is_null()) return eps;
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer or null");
  return Scalar{j.get<std::int64_t>()};
}

json scalar_to_json(Scalar s) { return s.is_eps() ? json(nullptr) : json(s.value()); }

// Reads a square array of arrays; `expected` is the required side length if
// known.
template <class Cell>
void read_square(const json& rows, const std::string& where, std::optional<std::size_t> expected, Cell cell) {
  if (!rows.is_array()) throw ParseError(where + ": expected an array of rows");
  const std::size_t r = rows.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array()) throw ParseError(at(where, i) + ": expected an array");
  }
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw DimensionError(at(where, i) + ": row has " + std::to_string(rows[i].size()) + " entries, row 0 has " +
                           std::to_string(c));
    }
  }
  if (r != c) {
    throw DimensionError(where + ": matrix is " + std::to_string(r) + "x" + std::to_string(c) +
                         " (" + std::to_string(r) + " rows, " + std::to_string(c) + " columns), expected square");
  }
  if (expected && r != *expected) {
    throw DimensionError(where + ": expected " + std::to_string(*expected) + " rows, got " + std::to_string(r));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) cell(i, k, rows[i][k], at(at(where, i), k));
}

Matrix strip_dummy(const Matrix& aug) {
  const std::size_t n = aug.rows() - 1;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = aug(i + 1, j + 1);
  return m;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.rows()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j, bool require_row_finite) {
  const json& entries = field(j, "entries", "matrix");
  std::optional<std::size_t> n;
  if (j.contains("n")) n = as_count(j["n"], "matrix.n");
  const std::size_t side = entries.is_array() ? entries.size() : 0;
  Matrix m(side, side);
  read_square(entries, "matrix.entries", n,
              [&](std::size_t r, std::size_t c, const json& v, const std::string& where) { m(r, c) = as_scalar(v, where); });
  if (require_row_finite) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const auto row = m.row(r);
      if (std::none_of(row.begin(), row.end(), [](Scalar s) { return s.is_finite(); })) {
        throw NotRowFiniteError(at("matrix.entries", r) + ": row has no finite entry (matrix must be row-finite)");
      }
    }
  }
  return m;
}

json dbm_to_json(const Dbm& d, bool raw) {
  const Dbm out = raw ? d : canonical_form(d);
  json bounds = json::array();
  json strict = json::array();
  for (std::size_t i = 0; i < out.size(); ++i) {
    json b = json::array();
    json s = json::array();
    for (std::size_t k = 0; k < out.size(); ++k) {
      b.push_back(scalar_to_json(out.bound(i, k)));
      s.push_back(out.is_strict(i, k));
    }
    bounds.push_back(std::move(b));
    strict.push_back(std::move(s));
  }
  return json{{"n", out.dim()}, {"bounds", std::move(bounds)}, {"strict", std::move(strict)}};
}

Dbm dbm_from_json(const json& j) {
  const json& b = field(j, "bounds", "dbm");
  const json& s = field(j, "strict", "dbm");
  std::optional<std::size_t> side;
  if (j.contains("n")) side = as_count(j["n"], "dbm.n") + 1;
  if (!b.is_array() || b.empty()) throw ParseError("dbm.bounds: expected a non-empty array of rows");
  const std::size_t m = b.size();
  Matrix bounds(m, m);
  std::vector<std::uint8_t> signs(m * m, 1);
  read_square(b, "dbm.bounds", side,
              [&](std::size_t r, std::size_t c, const json& v, const std::string& where) { bounds(r, c) = as_scalar(v, where); });
  read_square(s, "dbm.strict", m, [&](std::size_t r, std::size_t c, const json& v, const std::string& where) {
    if (!v.is_boolean()) throw ParseError(where + ": expected true or false");
    signs[r * m + c] = v.get<bool>() ? 0 : 1;
  });
  return Dbm::from_parts(std::move(bounds), std::move(signs));
}

json union_to_json(const DbmUnion& u) {
  json parts = json::array();
  for (const auto& p : u.parts()) parts.push_back(dbm_to_json(p));
  return json{{"n", u.dim()}, {"parts", std::move(parts)}};
}

DbmUnion union_from_json(const json& j) {
  if (j.is_object() && j.contains("bounds")) return DbmUnion(dbm_from_json(j));
  const json& parts = field(j, "parts", "union");
  if (!parts.is_array()) throw ParseError("union.parts: expected an array");
  std::optional<std::size_t> n;
  if (j.contains("n")) n = as_count(j["n"], "union.n");
  if (!n && parts.empty()) throw ParseError("union: an empty union needs \"n\"");
  DbmUnion u(n.value_or(0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Dbm d = [&] {
      try {
        return dbm_from_json(parts[i]);
      } catch (const ParseError& e) {
        throw ParseError(at("union.parts", i) + ": " + e.what());
      }
    }();
    if (i == 0 && !n) u = DbmUnion(d.dim());
    if (d.dim() != u.dim()) throw DimensionError(at("union.parts", i) + ": part has a different variable count");
    u.add(d);
  }
  return u;
}

json region_to_json(const Region& r) {
  return json{{"coefficient", r.variable_coefficient()},
              {"dbm", dbm_to_json(r.zone)},
              {"dynamics", matrix_to_json(strip_dummy(r.dynamics))}};
}

json pwa_to_json(const PwaSystem& pwa) {
  json out = json::array();
  for (const auto& r : pwa.regions()) out.push_back(region_to_json(r));
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": malformed JSON: " + e.what());
  }
}

Matrix parse_matrix(const std::filesystem::path& path, bool require_row_finite) {
  return matrix_from_json(read_json_file(path), require_row_finite);
}

Dbm parse_dbm(const std::filesystem::path& path) { return dbm_from_json(read_json_file(path)); }

DbmUnion parse_union(const std::filesystem::path& path) { return union_from_json(read_json_file(path)); }

}  // namespace mpl::io

namespace mpl {

std::string to_json(const TransitionSystem& ts) {
  using io::json;
  json states = json::array();
  for (std::size_t i = 0; i < ts.states.size(); ++i) {
    json s = io::region_to_json(ts.states[i]);
    s["id"] = i + 1;
    states.push_back(std::move(s));
  }
  json transitions = json::array();
  for (const auto& [from, to] : ts.transitions) transitions.push_back(json::array({from + 1, to + 1}));
  return json{{"states", std::move(states)}, {"transitions", std::move(transitions)}}.dump(2) + "\n";
}

TransitionSystem transition_system_from_json(const std::string& text) {
  using io::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("transition system: malformed JSON: ") + e.what());
  }
  TransitionSystem ts;
  const json& states = io::field(doc, "states", "transition system");
  if (!states.is_array()) throw ParseError("states: expected an array");
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string where = io::at("states", i);
    const json& s = states[i];
    if (io::as_count(io::field(s, "id", where), where + ".id") != i + 1) {
      throw ParseError(where + ".id: states must be numbered 1..K in order");
    }
    const json& coeff = io::field(s, "coefficient", where);
    if (!coeff.is_array()) throw ParseError(where + ".coefficient: expected an array");
    std::vector<std::size_t> g;
    for (std::size_t v = 0; v < coeff.size(); ++v) g.push_back(io::as_count(coeff[v], io::at(where + ".coefficient", v)));
    Region r{with_dummy(std::move(g)), io::dbm_from_json(io::field(s, "dbm", where)),
             augment_zero(io::matrix_from_json(io::field(s, "dynamics", where)))};
    r.zone = canonical_form(r.zone);
    if (!is_finite_coefficient(r.dynamics, r.coefficient)) {
      throw ParseError(where + ": coefficient does not match the dynamics");
    }
    ts.states.push_back(std::move(r));
  }
  const json& transitions = io::field(doc, "transitions", "transition system");
  if (!transitions.is_array()) throw ParseError("transitions: expected an array");
  for (std::size_t t = 0; t < transitions.size(); ++t) {
    const json& p = transitions[t];
    const std::string where = io::at("transitions", t);
    if (!p.is_array() || p.size() != 2) throw ParseError(where + ": expected [from, to]");
    const auto from = io::as_count(p[0], where), to = io::as_count(p[1], where);
    if (from < 1 || to < 1 || from > ts.states.size() || to > ts.states.size()) {
      throw ParseError(where + ": state id out of range");
    }
    ts.transitions.emplace_back(from - 1, to - 1);
  }
  std::sort(ts.transitions.begin(), ts.transitions.end());
  ts.transitions.erase(std::unique(ts.transitions.begin(), ts.transitions.end()), ts.transitions.end());
  return ts;
}

}  // namespace mpl
