#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace wha {

struct Witness {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::string lhs;
  std::string rhs;

  friend bool operator<(const Witness& a, const Witness& b) {
    return std::tie(a.axiom, a.indices) < std::tie(b.axiom, b.indices);
  }
  friend bool operator==(const Witness&, const Witness&) = default;
};

// Pass/fail outcome of a named check. A check passes iff it has no witnesses.
struct VerificationReport {
  std::string check_name;
  std::vector<std::string> sections;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, std::string>> facts;

  bool passed() const { return witnesses.empty(); }

  void section(std::string id) { sections.push_back(std::move(id)); }

  void fail(std::string axiom, std::vector<std::size_t> indices, std::string lhs, std::string rhs) {
    witnesses.push_back({std::move(axiom), std::move(indices), std::move(lhs), std::move(rhs)});
  }

  // Records a boolean claim; a false claim becomes a witness.
  bool expect(bool ok, const std::string& axiom, std::string lhs = "true", std::string rhs = "false") {
    section(axiom);
    if (!ok) fail(axiom, {}, std::move(lhs), std::move(rhs));
    return ok;
  }

  void note(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }

  void absorb(const VerificationReport& o, const std::string& prefix = "") {
    for (const auto& s : o.sections) sections.push_back(prefix + s);
    for (auto w : o.witnesses) {
      w.axiom = prefix + w.axiom;
      witnesses.push_back(std::move(w));
    }
    for (const auto& [k, v] : o.facts) facts.emplace_back(prefix + k, v);
  }

  void finalize() {
    std::stable_sort(witnesses.begin(), witnesses.end());
    std::vector<std::string> uniq;
    std::set<std::string> seen;
    for (auto& s : sections)
      if (seen.insert(s).second) uniq.push_back(s);
    sections = std::move(uniq);
  }

  std::set<std::string> failed_axioms() const {
    std::set<std::string> r;
    for (const auto& w : witnesses) r.insert(w.axiom);
    return r;
  }
};

}  // namespace wha
