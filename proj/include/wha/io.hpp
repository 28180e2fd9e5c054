#pragma once

// The .wha.json structure-constant format and the module file format.
//
//   {"format": "wha", "version": 1, "field": "Q" | "Fp:<p>", "dim": n,
//    "basis": [labels], "unit": [n scalars], "counit": [n scalars],
//    "mult": [[i, j, k, "c"], ...]      b_i b_j ∋ c·b_k
//    "comult": [[i, j, k, "c"], ...]    Δ(b_i) ∋ c·b_j⊗b_k
//    "antipode": [[i, j, "c"], ...]}    S(b_i) ∋ c·b_j
//
// Scalars are strings; indices are 0-based. Unknown keys and repeated sparse
// entries are rejected.

#include <cstddef>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "wha/modules.hpp"

namespace wha {

using Json = nlohmann::ordered_json;

inline constexpr int kFileFormatVersion = 1;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void write_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot write file");
  out << j.dump(2) << '\n';
}

inline std::string field_of(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j["field"].is_string()) throw InputError("field: missing or not a string");
  return j["field"].get<std::string>();
}

namespace detail {

inline void require_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.contains(k)) throw InputError(where + (where.empty() ? "" : ".") + k + ": unknown field");
  for (const auto& k : allowed)
    if (!j.contains(k)) throw InputError(where + (where.empty() ? "" : ".") + k + ": missing field");
}

template <class K>
K scalar_at(const Field<K>& f, const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": scalar must be a string");
  try {
    return f.parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(where + ": malformed scalar '" + j.get<std::string>() + "' (" + e.what() + ")");
  }
}

inline std::size_t index_at(const Json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_unsigned()) throw InputError(where + ": index must be a non-negative integer");
  auto v = j.get<std::size_t>();
  if (v >= bound) throw InputError(where + ": index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return v;
}

template <class K>
Vector<K> dense_at(const Field<K>& f, const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw InputError(where + ": expected an array of " + std::to_string(n) + " scalars");
  Vector<K> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = scalar_at(f, j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

// Sparse entries [idx..., "c"] with `arity` indices; returns (indices, scalar) pairs.
template <class K>
std::vector<std::pair<std::vector<std::size_t>, K>> sparse_at(const Field<K>& f, const Json& j, std::size_t arity,
                                                              std::size_t n, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of entries");
  std::vector<std::pair<std::vector<std::size_t>, K>> out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    std::string at = where + "[" + std::to_string(e) + "]";
    const Json& entry = j[e];
    if (!entry.is_array() || entry.size() != arity + 1)
      throw InputError(at + ": expected [" + std::string(arity == 3 ? "i, j, k" : "i, j") + ", \"c\"]");
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < arity; ++a) idx.push_back(index_at(entry[a], n, at + "[" + std::to_string(a) + "]"));
    if (!seen.insert(idx).second) throw InputError(at + ": duplicate entry for the same indices");
    out.emplace_back(std::move(idx), scalar_at(f, entry[arity], at + "[" + std::to_string(arity) + "]"));
  }
  return out;
}

template <class K>
Json scalar_json(const Field<K>& f, const K& x) {
  return f.format(x);
}

}  // namespace detail

template <class K>
WeakHopfAlgebra<K> algebra_from_json(const Json& j, const Field<K>& f) {
  detail::require_keys(j, {"format", "version", "field", "dim", "basis", "unit", "counit", "mult", "comult", "antipode"}, "");
  if (j["format"] != "wha") throw InputError("format: expected \"wha\"");
  if (!j["version"].is_number_integer() || j["version"].get<int>() != kFileFormatVersion)
    throw InputError("version: unsupported (expected " + std::to_string(kFileFormatVersion) + ")");
  if (field_of(j) != f.name()) throw InputError("field: file declares " + field_of(j) + ", expected " + f.name());
  if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0) throw InputError("dim: must be a positive integer");
  const std::size_t n = j["dim"].get<std::size_t>();
  const Json& b = j["basis"];
  if (!b.is_array() || b.size() != n) throw InputError("basis: expected " + std::to_string(n) + " labels");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!b[i].is_string() || b[i].get<std::string>().empty())
      throw InputError("basis[" + std::to_string(i) + "]: label must be a nonempty string");
    labels.push_back(b[i].get<std::string>());
    if (!seen.insert(labels.back()).second) throw InputError("basis[" + std::to_string(i) + "]: duplicate label");
  }
  Matrix<K> mult(n, n * n), comult(n * n, n), anti(n, n);
  for (auto& [idx, c] : detail::sparse_at(f, j["mult"], 3, n, "mult")) mult(idx[2], idx[0] * n + idx[1]) = c;
  for (auto& [idx, c] : detail::sparse_at(f, j["comult"], 3, n, "comult")) comult(idx[1] * n + idx[2], idx[0]) = c;
  for (auto& [idx, c] : detail::sparse_at(f, j["antipode"], 2, n, "antipode")) anti(idx[1], idx[0]) = c;
  return WeakHopfAlgebra<K>(f, std::move(labels), std::move(mult), detail::dense_at(f, j["unit"], n, "unit"),
                            std::move(comult), detail::dense_at(f, j["counit"], n, "counit"), std::move(anti));
}

template <class K>
Json algebra_to_json(const WeakHopfAlgebra<K>& h) {
  const auto& f = h.field();
  const std::size_t n = h.dim();
  Json j;
  j["format"] = "wha";
  j["version"] = kFileFormatVersion;
  j["field"] = f.name();
  j["dim"] = n;
  j["basis"] = h.labels();
  Json unit = Json::array(), counit = Json::array(), mult = Json::array(), comult = Json::array(), anti = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    unit.push_back(detail::scalar_json(f, h.unit()[i]));
    counit.push_back(detail::scalar_json(f, h.counit()[i]));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < n; ++k) {
        const K& c = h.mult()(k, i * n + a);
        if (!c.is_zero()) mult.push_back(Json::array({i, a, k, detail::scalar_json(f, c)}));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const K& c = h.comult()(a * n + b, i);
        if (!c.is_zero()) comult.push_back(Json::array({i, a, b, detail::scalar_json(f, c)}));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      const K& c = h.antipode()(a, i);
      if (!c.is_zero()) anti.push_back(Json::array({i, a, detail::scalar_json(f, c)}));
    }
  j["unit"] = unit;
  j["counit"] = counit;
  j["mult"] = mult;
  j["comult"] = comult;
  j["antipode"] = anti;
  return j;
}

template <class K>
WeakHopfAlgebra<K> load_algebra(const std::string& path, const Field<K>& f) {
  Json j = read_json_file(path);
  try {
    return algebra_from_json(j, f);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <class K>
void save_algebra(const WeakHopfAlgebra<K>& h, const std::string& path) {
  write_json_file(algebra_to_json(h), path);
}

// {"format": "wha-module", "version": 1, "field", "side": "left"|"right",
//  "dim": m, "action": {label: m×m rows of scalars, ...}} with one action
// matrix per basis label of the algebra.
template <class K>
Json module_to_json(const WeakHopfAlgebra<K>& h, const ModuleRep<K>& m) {
  const auto& f = h.field();
  Json j;
  j["format"] = "wha-module";
  j["version"] = kFileFormatVersion;
  j["field"] = f.name();
  j["side"] = side_name(m.side);
  j["dim"] = m.dim;
  Json act = Json::object();
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim; ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.dim; ++c) row.push_back(detail::scalar_json(f, m.action[i](r, c)));
      rows.push_back(row);
    }
    act[h.labels()[i]] = rows;
  }
  j["action"] = act;
  return j;
}

template <class K>
ModuleRep<K> module_from_json(const WeakHopfAlgebra<K>& h, const Json& j) {
  const auto& f = h.field();
  detail::require_keys(j, {"format", "version", "field", "side", "dim", "action"}, "");
  if (j["format"] != "wha-module") throw InputError("format: expected \"wha-module\"");
  if (!j["version"].is_number_integer() || j["version"].get<int>() != kFileFormatVersion)
    throw InputError("version: unsupported");
  if (field_of(j) != f.name()) throw InputError("field: file declares " + field_of(j) + ", expected " + f.name());
  ModuleRep<K> m;
  if (j["side"] == "left")
    m.side = Side::left;
  else if (j["side"] == "right")
    m.side = Side::right;
  else
    throw InputError("side: expected \"left\" or \"right\"");
  if (!j["dim"].is_number_unsigned()) throw InputError("dim: must be a non-negative integer");
  m.dim = j["dim"].get<std::size_t>();
  const Json& act = j["action"];
  if (!act.is_object()) throw InputError("action: expected an object keyed by basis label");
  std::set<std::string> labels(h.labels().begin(), h.labels().end());
  for (const auto& [k, v] : act.items())
    if (!labels.contains(k)) throw InputError("action." + k + ": not a basis label");
  for (const auto& label : h.labels()) {
    std::string at = "action." + label;
    if (!act.contains(label)) throw InputError(at + ": missing");
    const Json& rows = act[label];
    if (!rows.is_array() || rows.size() != m.dim) throw InputError(at + ": expected " + std::to_string(m.dim) + " rows");
    Matrix<K> a(m.dim, m.dim);
    for (std::size_t r = 0; r < m.dim; ++r) {
      Vector<K> row = detail::dense_at(f, rows[r], m.dim, at + "[" + std::to_string(r) + "]");
      for (std::size_t c = 0; c < m.dim; ++c) a(r, c) = row[c];
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

}  // namespace wha
