#pragma once

// Command pipelines behind the `wha` executable. run() never throws; it maps
// outcomes to exit codes 0 (all checks pass), 1 (a check failed or could not
// be decided), 2 (input, parse or limit error).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wha/catalog.hpp"
#include "wha/decompose.hpp"
#include "wha/hopf_modules.hpp"
#include "wha/io.hpp"
#include "wha/nakayama.hpp"
#include "wha/simples.hpp"

namespace wha {

inline constexpr int kReportSchemaVersion = 1;

struct CommandConfig {
  std::string command;  // verify | analyze | integrals | nakayama | decompose | check
  std::string input;    // path to a .wha.json file or a builtin catalog name
  std::optional<std::string> field;
  bool json = false;
  std::size_t max_dim = kDefaultMaxNakayamaDim;
  std::size_t power_n = 0;  // 0: power formula not requested
  std::string out_dir;
  bool witness = false;
};

namespace cli_detail {

inline Json witness_json(const Witness& w) {
  return Json{{"axiom", w.axiom}, {"indices", w.indices}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

inline std::string witness_text(const Witness& w) {
  std::string idx;
  for (std::size_t i = 0; i < w.indices.size(); ++i) idx += (i ? "," : "") + std::to_string(w.indices[i]);
  return w.axiom + (idx.empty() ? "" : "(" + idx + ")") + ": " + w.lhs + " vs " + w.rhs;
}

// Collects check reports and data for one algebra, in both output forms.
struct Section {
  Json checks = Json::array();
  Json data = Json::object();
  std::vector<std::string> lines;
  bool passed = true;

  void add(const VerificationReport& r, const std::string& name = "") {
    std::string n = name.empty() ? r.check_name : name;
    Json c{{"name", n}, {"passed", r.passed()}, {"witnesses", Json::array()}};
    for (const auto& w : r.witnesses) c["witnesses"].push_back(witness_json(w));
    if (!r.facts.empty()) {
      Json facts = Json::object();
      for (const auto& [k, v] : r.facts) facts[k] = v;
      c["facts"] = facts;
    }
    checks.push_back(c);
    lines.push_back("  " + n + ": " + (r.passed() ? "pass" : "FAIL"));
    for (const auto& w : r.witnesses) lines.push_back("    " + witness_text(w));
    passed = passed && r.passed();
  }
  void claim(const std::string& name, bool ok, const std::string& detail = "") {
    VerificationReport r;
    r.check_name = name;
    r.expect(ok, name, detail.empty() ? "true" : detail, "false");
    add(r);
  }
  void put(const std::string& key, const Json& value) {
    data[key] = value;
    lines.push_back("  " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()));
  }
};

template <class K>
Json basis_json(const WeakHopfAlgebra<K>& h, const Subspace<K>& s) {
  return format_basis(h, s);
}

template <class K>
Json matrix_json(const Field<K>& f, const Matrix<K>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(f.format(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

template <class K>
bool verify_into(Section& s, const WeakHopfAlgebra<K>& h) {
  auto a = verify_weak_bialgebra(h);
  auto b = verify_antipode(h);
  s.add(a);
  s.add(b);
  return a.passed() && b.passed();
}

template <class K>
void analyze_into(Section& s, const WeakHopfAlgebra<K>& h) {
  auto cd = counital(h);
  s.put("dim_Hs", cd.Hs.dim());
  s.put("dim_Ht", cd.Ht.dim());
  s.put("Hs_basis", basis_json(h, cd.Hs));
  s.put("Ht_basis", basis_json(h, cd.Ht));
  auto order = antipode_order(h);
  s.put("antipode_order", order ? Json(*order) : Json(nullptr));
  s.put("S2_is_identity", antipode_power(h, 2) == Matrix<K>::identity(h.dim()));
  VerificationReport r;
  r.check_name = "counital_maps";
  r.expect(cd.eps_s * cd.eps_s == cd.eps_s, "eps_s_idempotent");
  r.expect(cd.eps_t * cd.eps_t == cd.eps_t, "eps_t_idempotent");
  r.finalize();
  s.add(r);
  s.claim("antipode_bijective", antipode_bijective(h).invertible);
}

template <class K>
void integrals_into(Section& s, const WeakHopfAlgebra<K>& h) {
  auto cd = counital(h);
  auto li = left_integrals(h, cd);
  auto ri = right_integrals(h, cd);
  s.put("left_integrals", basis_json(h, li.space));
  s.put("right_integrals", basis_json(h, ri.space));
  s.put("unimodular", is_unimodular(h, cd, li, ri));
  s.add(check_integral_invertibility(h, cd, li, ri));
}

template <class K>
void nakayama_into(Section& s, const WeakHopfAlgebra<K>& h, const CommandConfig& cfg) {
  auto cd = counital(h);
  auto nr = nakayama(h, cd, cfg.max_dim);
  s.put("dim_U", nr.U.dim);
  s.put("U_invertible", nr.invertible);
  s.add(nr.report);
  if (nr.automorphism) s.put("automorphism_candidate", matrix_json(h.field(), *nr.automorphism));
  if (cfg.witness && nr.witness.exists) s.put("witness", matrix_json(h.field(), nr.witness.map));
  for (std::size_t p = 1; p <= cfg.power_n; ++p) s.add(check_nakayama_power(h, cd, nr, p));
}

inline std::string file_stem(const std::string& input, bool is_file) {
  std::string stem = is_file ? std::filesystem::path(input).filename().string() : input;
  for (const std::string ext : {".wha.json", ".json"})
    if (stem.size() > ext.size() && stem.ends_with(ext)) {
      stem.resize(stem.size() - ext.size());
      break;
    }
  for (auto& c : stem)
    if (c == ':' || c == ',' || c == '/') c = '_';
  return stem;
}

template <class K>
void decompose_into(Section& s, const WeakHopfAlgebra<K>& h, const CommandConfig& cfg, bool is_file) {
  auto dec = decompose(h);
  s.add(dec.report);
  s.put("field_limited", dec.field_limited);
  Json idem = Json::array();
  for (const auto& e : dec.idempotents) idem.push_back(format_element(h.field(), e, h.labels()));
  s.put("idempotents", idem);
  if (!dec.report.passed()) return;
  std::filesystem::path dir = !cfg.out_dir.empty() ? std::filesystem::path(cfg.out_dir)
                              : is_file           ? std::filesystem::path(cfg.input).parent_path()
                                                  : std::filesystem::path(".");
  if (dir.empty()) dir = ".";
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  Json files = Json::array();
  for (std::size_t i = 0; i < dec.summands.size(); ++i) {
    auto path = dir / (file_stem(cfg.input, is_file) + ".summand" + std::to_string(i + 1) + ".wha.json");
    save_algebra(dec.summands[i], path.string());
    files.push_back(path.filename().string());
  }
  s.put("summand_files", files);
}

// Every theorem check for one catalog algebra.
template <class K>
void regression_into(Section& s, const WeakHopfAlgebra<K>& h, const CommandConfig& cfg) {
  if (!verify_into(s, h)) return;
  auto cd = counital(h);
  s.claim("antipode_bijective", antipode_bijective(h).invertible);
  s.claim("counital_idempotent", cd.eps_s * cd.eps_s == cd.eps_s && cd.eps_t * cd.eps_t == cd.eps_t);
  auto li = left_integrals(h, cd);
  auto ri = right_integrals(h, cd);
  s.put("dim_left_integrals", li.space.dim());
  s.put("unimodular", is_unimodular(h, cd, li, ri));
  s.add(check_integral_invertibility(h, cd, li, ri));

  std::vector<ModuleRep<K>> gens{unit_object(h, cd, Side::left), regular_module(h.algebra(), Side::left)};
  for (auto& m : simple_modules(h)) gens.push_back(std::move(m));
  s.put("simple_dims", [&] {
    Json d = Json::array();
    for (std::size_t i = 2; i < gens.size(); ++i) d.push_back(gens[i].dim);
    return d;
  }());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string tag = "[" + std::to_string(i) + "]";
    auto d = left_duality(h, cd, gens[i]);
    s.add(d.report, "left_duality" + tag);
    auto fh = free_hopf_module(h, gens[i]);
    s.add(check_hopf_module(h, fh.hopf), "free_hopf_module" + tag);
    auto fi = fundamental_isos(h, cd, fh.hopf);
    fi.report.expect(fi.coinv.dim() == gens[i].dim, "coinvariant_dimension", std::to_string(fi.coinv.dim()),
                     std::to_string(gens[i].dim));
    s.add(fi.report, "fundamental_theorem" + tag);
    s.add(check_free_vs_balanced(h, cd, gens[i]), "free_vs_balanced" + tag);
    s.add(swap_iso(h, gens[i]).report, "swap_iso" + tag);
  }
  auto hom = hom_space(gens[0], gens[1]);
  bool natural = true;
  for (std::size_t j = 0; j < hom.dim(); ++j) natural = natural && swap_natural(h, gens[0], gens[1], hom.map(j));
  s.claim("swap_natural", natural);
  s.claim("unit_invertible", is_invertible_object(h, cd, gens[0]).invertible);
  s.add(check_hom_adjunction(h, cd, gens[1], gens[0]));
  s.add(check_enveloping_ideals(h));
  s.add(check_ew_adjunction(h, gens[0], regular_bimodule(h.algebra())));
  auto te = twist_equivalence(h.algebra(), antipode_power(h, 2));
  s.claim("s2_twist_equivalence", te.agree() && te.bijective);
  if (h.dim() <= cfg.max_dim) {
    auto nr = nakayama(h, cd, cfg.max_dim);
    s.put("dim_U", nr.U.dim);
    s.add(nr.report);
    for (std::size_t p = 2; p <= cfg.power_n && h.dim() <= 4; ++p) s.add(check_nakayama_power(h, cd, nr, p));
  } else {
    s.put("nakayama", "skipped: dim exceeds --max-dim");
  }
  auto dec = decompose(h);
  s.add(dec.report);
  s.put("summands", dec.summands.size());
}

template <class K>
int run_typed(const CommandConfig& cfg, const Field<K>& f, const std::optional<Json>& file, Json& doc,
              std::vector<std::string>& lines) {
  doc["field"] = f.name();
  if (cfg.command == "check") {
    bool all = true;
    Json algs = Json::array();
    for (const auto& name : builtin_catalog_names()) {
      auto h = builtin(f, name);
      if (!h) throw InputError("unknown builtin " + name);
      Section s;
      lines.push_back(name + " (dim " + std::to_string(h->dim()) + ")");
      regression_into(s, *h, cfg);
      lines.insert(lines.end(), s.lines.begin(), s.lines.end());
      algs.push_back(Json{{"name", name}, {"dim", h->dim()}, {"passed", s.passed}, {"checks", s.checks}, {"data", s.data}});
      all = all && s.passed;
    }
    doc["algebras"] = algs;
    doc["passed"] = all;
    return all ? 0 : 1;
  }
  WeakHopfAlgebra<K> h;
  if (file) {
    try {
      h = algebra_from_json(*file, f);
    } catch (const InputError& e) {
      throw InputError(cfg.input + ": " + e.what());
    }
  } else {
    auto b = builtin(f, cfg.input);
    if (!b) throw InputError("'" + cfg.input + "' is neither a readable file nor a builtin catalog name");
    h = std::move(*b);
  }
  doc["dim"] = h.dim();
  Section s;
  lines.push_back(cfg.command + " " + cfg.input + " [" + f.name() + ", dim " + std::to_string(h.dim()) + "]");
  bool ok = verify_into(s, h);
  if (ok) {
    if (cfg.command == "analyze")
      analyze_into(s, h);
    else if (cfg.command == "integrals")
      integrals_into(s, h);
    else if (cfg.command == "nakayama")
      nakayama_into(s, h, cfg);
    else if (cfg.command == "decompose")
      decompose_into(s, h, cfg, file.has_value());
  }
  lines.insert(lines.end(), s.lines.begin(), s.lines.end());
  doc["checks"] = s.checks;
  doc["data"] = s.data;
  doc["passed"] = s.passed;
  return s.passed ? 0 : 1;
}

}  // namespace cli_detail

inline int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> commands = {"verify", "analyze", "integrals", "nakayama", "decompose", "check"};
  Json doc;
  doc["schema"] = "wha-report";
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = cfg.command;
  doc["input"] = cfg.command == "check" ? std::string("catalog") : cfg.input;
  std::vector<std::string> lines;
  int code = 2;
  std::string error_kind, error_message;
  try {
    if (std::find(commands.begin(), commands.end(), cfg.command) == commands.end())
      throw InputError("unknown command '" + cfg.command + "'");
    if (cfg.max_dim < 1) throw InputError("--max-dim must be at least 1");
    std::optional<Json> file;
    if (cfg.command != "check") {
      if (cfg.input.empty()) throw InputError("missing input (file path or builtin name)");
      if (std::filesystem::is_regular_file(cfg.input)) file = read_json_file(cfg.input);
    }
    std::string field = cfg.field.value_or(file ? field_of(*file) : std::string("Q"));
    if (file && field != field_of(*file))
      throw InputError("--field " + field + " conflicts with file field " + field_of(*file));
    if (field == "Q") {
      code = cli_detail::run_typed(cfg, Field<Rational>{}, file, doc, lines);
    } else if (field.starts_with("Fp:")) {
      std::string digits = field.substr(3);
      if (digits.empty() || digits.size() > 10 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw InputError("malformed field '" + field + "'");
      unsigned long long p = std::stoull(digits);
      if (p > 0xffffffffull || !is_prime_u32(p)) throw InputError("field modulus " + digits + " is not a 32-bit prime");
      code = cli_detail::run_typed(cfg, Field<ModP>(static_cast<std::uint32_t>(p)), file, doc, lines);
    } else {
      throw InputError("unknown field '" + field + "' (expected Q or Fp:<p>)");
    }
  } catch (const InputError& e) {
    code = 2, error_kind = "input", error_message = e.what();
  } catch (const LimitError& e) {
    code = 2, error_kind = "limit", error_message = e.what();
  } catch (const UndecidedError& e) {
    code = 1, error_kind = "undecided", error_message = e.what();
  } catch (const std::exception& e) {
    code = 1, error_kind = "engine", error_message = e.what();
  }
  if (!error_kind.empty()) {
    doc["passed"] = false;
    doc["error"] = Json{{"kind", error_kind}, {"message", error_message}};
  }
  doc["exit_code"] = code;
  if (cfg.json) {
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& l : lines) out << l << '\n';
    out << "result: " << (code == 0 ? "pass" : code == 1 ? "FAIL" : "error") << '\n';
  }
  if (!error_kind.empty()) err << "wha: " << error_kind << " error: " << error_message << '\n';
  return code;
}

}  // namespace wha
