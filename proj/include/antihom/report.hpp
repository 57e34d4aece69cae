#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace antihom {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass

  friend bool operator==(const Check&, const Check&) = default;
};

enum class Uniqueness { none, enumeration, surjectivity };

inline const char* to_string(Uniqueness u) {
  switch (u) {
    case Uniqueness::none: return "none";
    case Uniqueness::enumeration: return "enumeration";
    case Uniqueness::surjectivity: return "surjectivity-argument";
  }
  return "?";
}

/// Outcome of one verifier run: the constructed maps (rendered as image
/// tables), every check performed, and informational notes that do not
/// affect the verdict.
struct TheoremReport {
  std::string theorem;
  std::vector<std::string> inputs;
  std::vector<std::string> witnesses;
  std::vector<Check> checks;
  Uniqueness uniqueness = Uniqueness::none;
  std::vector<std::string> notes;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  /// Records a check; a failing check without a witness gets a generic one so
  /// that no failure is silent.
  bool check(std::string name, bool ok, std::string witness = "") {
    if (ok) witness.clear();
    else if (witness.empty()) witness = "condition false";
    checks.push_back(Check{std::move(name), ok, std::move(witness)});
    return ok;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return c.name + ": " + c.witness;
    return "";
  }

  /// Appends the other report's checks under a prefix.
  void absorb(const TheoremReport& other, const std::string& prefix) {
    for (const auto& c : other.checks) checks.push_back(Check{prefix + c.name, c.pass, c.witness});
    for (const auto& n : other.notes) notes.push_back(prefix + n);
  }

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

}  // namespace antihom
