#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "enumerate.hpp"
#include "error.hpp"
#include "report.hpp"

namespace antihom {

struct RunConfig {
  std::string command;
  std::vector<std::string> corpus;  // empty: the built-in corpus
  long bound = kDefaultBound;
  std::uint64_t seed = 1;
  std::string format = "text";  // text | records
  std::vector<std::string> theorems;
  bool timing = false;
  std::map<std::string, std::string> params;  // selection flags such as group, normal, map

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// One check outcome. `detail` carries a result value (a count, a table)
/// where the check produces one.
struct Record {
  std::string suite;
  std::string id;
  std::string check;
  std::vector<std::string> inputs;
  bool pass = false;
  std::string witness;
  std::string detail;
  std::optional<long> micros;

  friend bool operator==(const Record&, const Record&) = default;
};

struct Note {
  std::string suite;
  std::string id;
  std::string text;
  friend bool operator==(const Note&, const Note&) = default;
};

struct ReportBundle {
  RunConfig config;
  std::vector<Record> records;
  std::vector<Note> notes;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.pass ? 1 : 0;
    return n;
  }
  std::size_t failed() const { return records.size() - passed(); }
  bool pass() const { return failed() == 0; }

  /// Appends every check of a report; witnesses and notes become notes.
  void add(const std::string& suite, const std::string& id, const TheoremReport& r,
           std::optional<long> micros = std::nullopt) {
    for (const auto& c : r.checks) records.push_back(Record{suite, id, c.name, r.inputs, c.pass, c.witness, "", micros});
    if (r.uniqueness != Uniqueness::none) notes.push_back(Note{suite, id, cat("uniqueness: ", to_string(r.uniqueness))});
    for (const auto& w : r.witnesses) notes.push_back(Note{suite, id, "witness: " + w});
    for (const auto& n : r.notes) notes.push_back(Note{suite, id, n});
  }

  void add_error(const std::string& suite, const std::string& id, const AlgebraError& e,
                 std::vector<std::string> inputs = {}) {
    records.push_back(Record{suite, id, to_string(e.kind()), std::move(inputs), false, e.witness(), "", std::nullopt});
  }

  friend bool operator==(const ReportBundle&, const ReportBundle&) = default;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson config_json(const RunConfig& c) {
  return ojson{{"kind", "config"}, {"command", c.command}, {"corpus", c.corpus},  {"bound", c.bound},
               {"seed", c.seed},   {"format", c.format},   {"theorems", c.theorems}, {"timing", c.timing}, {"params", c.params}};
}

}  // namespace detail

/// JSON Lines: a config line, one line per check and note in order, and a
/// summary line. Field order is fixed.
inline std::string emit_records(const ReportBundle& b) {
  using detail::ojson;
  std::ostringstream os;
  os << detail::config_json(b.config).dump() << "\n";
  for (const auto& r : b.records) {
    ojson j{{"kind", "check"}, {"suite", r.suite}, {"id", r.id},           {"check", r.check},
            {"inputs", r.inputs}, {"pass", r.pass}, {"witness", r.witness}, {"detail", r.detail}};
    if (r.micros) j["micros"] = *r.micros;
    os << j.dump() << "\n";
  }
  for (const auto& n : b.notes) os << ojson{{"kind", "note"}, {"suite", n.suite}, {"id", n.id}, {"text", n.text}}.dump() << "\n";
  os << ojson{{"kind", "summary"}, {"checks", b.records.size()}, {"passed", b.passed()}, {"failed", b.failed()}}.dump()
     << "\n";
  return os.str();
}

/// Inverse of emit_records. Throws ParseError on malformed input or when the
/// summary disagrees with the records.
inline ReportBundle parse_records(const std::string& text) {
  ReportBundle b;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  bool summary = false;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      const std::string kind = j.at("kind");
      if (kind == "config") {
        auto& c = b.config;
        c.command = j.at("command");
        c.corpus = j.at("corpus").get<std::vector<std::string>>();
        c.bound = j.at("bound");
        c.seed = j.at("seed");
        c.format = j.at("format");
        c.theorems = j.at("theorems").get<std::vector<std::string>>();
        c.timing = j.at("timing");
        c.params = j.at("params").get<std::map<std::string, std::string>>();
      } else if (kind == "check") {
        Record r{j.at("suite"), j.at("id"), j.at("check"), j.at("inputs").get<std::vector<std::string>>(),
                 j.at("pass"), j.at("witness"), j.at("detail"), std::nullopt};
        if (j.contains("micros")) r.micros = j.at("micros").get<long>();
        b.records.push_back(std::move(r));
      } else if (kind == "note") {
        b.notes.push_back(Note{j.at("suite"), j.at("id"), j.at("text")});
      } else if (kind == "summary") {
        summary = true;
        if (j.at("checks").get<std::size_t>() != b.records.size() || j.at("passed").get<std::size_t>() != b.passed())
          fail(ErrorKind::ParseError, cat("line ", number, ": summary does not match records"));
      } else {
        fail(ErrorKind::ParseError, cat("line ", number, ": unknown record kind '", kind, "'"));
      }
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::ParseError, cat("line ", number, ": ", e.what()));
    }
  }
  if (!summary) fail(ErrorKind::ParseError, "missing summary line");
  return b;
}

/// Human-readable rendering of the same records.
inline std::string emit_text(const ReportBundle& b) {
  std::ostringstream os;
  const auto& c = b.config;
  os << "command: " << c.command << "\n";
  os << "corpus: " << (c.corpus.empty() ? std::string("built-in") : format_list(c.corpus)) << "\n";
  os << "bound: " << c.bound << "  seed: " << c.seed << "\n";
  std::string last;
  for (const auto& r : b.records) {
    auto head = r.suite + " " + r.id;
    if (head != last) {
      os << "\n[" << head << "]";
      if (!r.inputs.empty()) os << " " << format_list(r.inputs);
      os << "\n";
      for (const auto& n : b.notes)
        if (n.suite == r.suite && n.id == r.id) os << "  - " << n.text << "\n";
      last = head;
    }
    os << "  " << (r.pass ? "PASS" : "FAIL") << " " << r.check;
    if (!r.detail.empty()) os << " = " << r.detail;
    if (r.micros) os << " (" << *r.micros << " us)";
    os << "\n";
    if (!r.pass) os << "       witness: " << r.witness << "\n";
  }
  os << "\n" << b.records.size() << " checks, " << b.passed() << " passed, " << b.failed() << " failed\n";
  return os.str();
}

inline std::string emit(const ReportBundle& b) { return b.config.format == "records" ? emit_records(b) : emit_text(b); }

}  // namespace antihom
