// Command-line front end: runs verification suites over a corpus and prints
// a text or JSON Lines report. Exit status is 0 iff every check passed.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "antihom/antihom.hpp"

namespace {

int export_corpus(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "cannot create " << dir << ": " << ec.message() << "\n";
    return 2;
  }
  for (const auto& [name, text] : antihom::corpus_files()) {
    std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "cannot write " << name << "\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-structure checker for homomorphisms, anti-homomorphisms and factorization categories"};
  app.require_subcommand(1);
  app.fallthrough();

  antihom::RunConfig cfg;
  std::string out_path;
  app.add_option("--corpus", cfg.corpus, "Corpus files or directories (default: built-in corpus)")->take_all();
  app.add_option("--bound", cfg.bound, "Enumeration bound on candidate maps")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampled instances")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "records"}))->capture_default_str();
  app.add_flag("--timing", cfg.timing, "Record wall time per unit (breaks byte-identical output)");
  app.add_option("--output,-o", out_path, "Write the report to a file instead of stdout");

  std::map<std::string, std::string> params;
  auto param = [&](CLI::App* sub, const std::string& flag, const std::string& key, const std::string& help) {
    sub->add_option_function<std::string>(flag, [&params, key](const std::string& v) { params[key] = v; }, help);
  };

  auto* validate = app.add_subcommand("validate", "Validate every structure in the corpus");
  auto* enum_homs = app.add_subcommand("enum-homs", "Enumerate straight maps between corpus structures");
  auto* enum_anti = app.add_subcommand("enum-antihoms", "Enumerate anti maps between corpus structures");
  for (auto* sub : {enum_homs, enum_anti}) {
    param(sub, "--from", "from", "Source structure name");
    param(sub, "--to", "to", "Target structure name");
    sub->add_flag_callback("--list", [&params] { params["list"] = "yes"; }, "List every map table");
  }

  auto* verify = app.add_subcommand("verify", "Run theorem verifiers");
  verify->add_option("id", cfg.theorems, "Theorem ids")->check(CLI::IsMember(antihom::detail::theorem_ids()));
  param(verify, "--group", "group", "Group name");
  param(verify, "--ring", "ring", "Ring name");
  param(verify, "--normal", "normal", "Normal subgroup or ideal name declared in the structure file");
  param(verify, "--map", "map", "Map name or map file");
  param(verify, "--sub", "sub", "Two subgroup names B,C (second) or A,N (third); 1 and G name the trivial and whole group");

  auto* catc = app.add_subcommand("cat", "Category engine operations");
  catc->add_option("op", cfg.theorems, "Operations")->required()->check(CLI::IsMember(antihom::detail::category_ops()));
  param(catc, "--category", "category", "Restrict to one category label");

  auto* audit = app.add_subcommand("audit", "Audits of claims that are reported rather than asserted");
  audit->add_option("id", cfg.theorems, "Audit ids")->required()->check(CLI::IsMember(antihom::detail::audit_ids()));
  param(audit, "--ring", "ring", "Restrict to one ring");
  param(audit, "--to", "to", "Restrict the target ring of the pointwise audit");

  auto* report = app.add_subcommand("report", "Run every suite");

  std::string export_dir;
  auto* exporter = app.add_subcommand("export-corpus", "Write the built-in corpus files to a directory");
  exporter->add_option("dir", export_dir, "Target directory")->required();
  exporter->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (exporter->parsed()) return export_corpus(export_dir);
  for (auto* sub : {validate, enum_homs, enum_anti, verify, catc, audit, report})
    if (sub->parsed()) cfg.command = sub->get_name();
  cfg.params = params;

  antihom::ReportBundle bundle = antihom::run(cfg);
  std::string text = antihom::emit(bundle);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
  }
  return bundle.pass() ? 0 : 1;
}
