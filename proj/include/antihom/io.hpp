#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "category.hpp"
#include "error.hpp"
#include "field.hpp"
#include "group.hpp"
#include "morphism.hpp"
#include "ring.hpp"
#include "semilinear.hpp"

namespace antihom {

/// A group with the named subgroups declared in its file.
struct NamedGroup {
  FiniteGroup group;
  std::vector<std::pair<std::string, Subgroup>> subgroups;

  std::optional<Subgroup> subgroup(const std::string& name) const {
    for (const auto& [n, s] : subgroups)
      if (n == name) return s;
    return std::nullopt;
  }
};

struct NamedRing {
  FiniteRing ring;
  std::vector<std::pair<std::string, RingIdeal>> ideals;

  std::optional<RingIdeal> ideal(const std::string& name) const {
    for (const auto& [n, s] : ideals)
      if (n == name) return s;
    return std::nullopt;
  }
};

/// A map as written in a file; the endpoints are resolved by name later.
struct MapSpec {
  std::string name;
  std::string source;
  std::string target;
  Variance variance = Variance::straight;
  std::vector<int> images;
  friend bool operator==(const MapSpec&, const MapSpec&) = default;
};

struct NamedSemilinear {
  std::string name;
  int p = 2;
  SemilinearMap map;
};

/// A parsed category file: plain, or with a factorial structure.
struct NamedCategory {
  FiniteCategory category;
  std::optional<FactorizationCategory> factorization;
};

using Structure = std::variant<NamedGroup, NamedRing, MapSpec, NamedSemilinear, NamedCategory>;

namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string> words;
};

/// Non-empty lines split on whitespace; '#' starts a comment.
inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string w;
    while (ls >> w) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

class Cursor {
 public:
  Cursor(std::vector<Line> lines, std::string source) : lines_(std::move(lines)), source_(std::move(source)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& next(const std::string& what) {
    if (done()) error(last_line() + 1, cat("unexpected end of input, expected ", what));
    return lines_[pos_++];
  }
  int last_line() const { return lines_.empty() ? 0 : lines_[std::min(pos_, lines_.size()) - (pos_ ? 1 : 0)].number; }

  [[noreturn]] void error(int line, const std::string& message) const {
    fail(ErrorKind::ParseError, cat(source_, ":", line, ": ", message));
  }

 private:
  std::vector<Line> lines_;
  std::string source_;
  std::size_t pos_ = 0;
};

inline int to_int(const Cursor& c, const Line& l, const std::string& w) {
  try {
    std::size_t used = 0;
    int v = std::stoi(w, &used);
    if (used != w.size()) throw std::invalid_argument(w);
    return v;
  } catch (const std::exception&) {
    c.error(l.number, cat("expected an integer, got '", w, "'"));
  }
}

inline std::vector<int> int_row(Cursor& c, int n, const std::string& what) {
  const Line& l = c.next(what);
  if (static_cast<int>(l.words.size()) != n)
    c.error(l.number, cat(what, " has ", l.words.size(), " entries, expected ", n));
  std::vector<int> row;
  for (const auto& w : l.words) row.push_back(to_int(c, l, w));
  return row;
}

inline std::vector<std::vector<int>> int_table(Cursor& c, int n, const std::string& what) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < n; ++i) rows.push_back(int_row(c, n, cat(what, " row ", i)));
  return rows;
}

/// Wraps validation failures so the caller sees which file was at fault.
template <class F>
auto validated(const std::string& source, F build) {
  try {
    return build();
  } catch (const AlgebraError& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(ErrorKind::ValidationError, cat(source, ": ", e.what()));
  }
}

inline std::vector<int> gens_after(const Cursor& c, const Line& l, std::size_t from) {
  std::vector<int> out;
  for (std::size_t i = from; i < l.words.size(); ++i) out.push_back(to_int(c, l, l.words[i]));
  return out;
}

}  // namespace detail

/// `group <name> order <n>`, n rows of n indices, then optional
/// `subgroup <name> gens <g>...` lines.
inline NamedGroup parse_group(const std::string& text, const std::string& source = "<group>") {
  detail::Cursor c(detail::tokenize(text), source);
  const auto& head = c.next("group header");
  if (head.words.size() != 4 || head.words[0] != "group" || head.words[2] != "order")
    c.error(head.number, "expected 'group <name> order <n>'");
  int n = detail::to_int(c, head, head.words[3]);
  if (n <= 0) c.error(head.number, "order must be positive");
  auto rows = detail::int_table(c, n, "table");
  NamedGroup out;
  out.group = detail::validated(source, [&] { return validate_group(rows, head.words[1]); });
  while (!c.done()) {
    const auto& l = c.next("subgroup line");
    if (l.words.size() < 3 || l.words[0] != "subgroup" || l.words[2] != "gens")
      c.error(l.number, "expected 'subgroup <name> gens <g>...'");
    auto gens = detail::gens_after(c, l, 3);
    for (int g : gens)
      if (g < 0 || g >= n) c.error(l.number, cat("generator ", g, " is not an element"));
    out.subgroups.emplace_back(l.words[1], subgroup_closure(out.group, gens));
  }
  return out;
}

/// `ring <name> order <n>`, `add:` and n rows, `mul:` and n rows, optional
/// `involution:` and one row, then optional `ideal <name> gens <g>...`.
inline NamedRing parse_ring(const std::string& text, const std::string& source = "<ring>") {
  detail::Cursor c(detail::tokenize(text), source);
  const auto& head = c.next("ring header");
  if (head.words.size() != 4 || head.words[0] != "ring" || head.words[2] != "order")
    c.error(head.number, "expected 'ring <name> order <n>'");
  int n = detail::to_int(c, head, head.words[3]);
  if (n <= 0) c.error(head.number, "order must be positive");
  const auto& a = c.next("add: block");
  if (a.words.size() != 1 || a.words[0] != "add:") c.error(a.number, "expected 'add:'");
  auto add = detail::int_table(c, n, "add");
  const auto& m = c.next("mul: block");
  if (m.words.size() != 1 || m.words[0] != "mul:") c.error(m.number, "expected 'mul:'");
  auto mul = detail::int_table(c, n, "mul");
  std::optional<std::vector<int>> inv;
  if (!c.done() && c.peek().words[0] == "involution:") {
    c.next("involution:");
    inv = detail::int_row(c, n, "involution");
  }
  NamedRing out;
  out.ring = detail::validated(source, [&] { return validate_ring(add, mul, inv, head.words[1]); });
  while (!c.done()) {
    const auto& l = c.next("ideal line");
    if (l.words.size() < 3 || l.words[0] != "ideal" || l.words[2] != "gens")
      c.error(l.number, "expected 'ideal <name> gens <g>...'");
    auto gens = detail::gens_after(c, l, 3);
    for (int g : gens)
      if (g < 0 || g >= n) c.error(l.number, cat("generator ", g, " is not an element"));
    out.ideals.emplace_back(l.words[1], ideal_closure(out.ring, gens));
  }
  return out;
}

inline Variance parse_variance(const detail::Cursor& c, const detail::Line& l, const std::string& w) {
  if (w == "straight") return Variance::straight;
  if (w == "anti") return Variance::anti;
  c.error(l.number, cat("variance must be straight or anti, got '", w, "'"));
}

/// `map <name> from <src> to <dst> variance <straight|anti>` then one row.
inline MapSpec parse_map(const std::string& text, const std::string& source = "<map>") {
  detail::Cursor c(detail::tokenize(text), source);
  const auto& head = c.next("map header");
  if (head.words.size() != 8 || head.words[0] != "map" || head.words[2] != "from" || head.words[4] != "to" ||
      head.words[6] != "variance")
    c.error(head.number, "expected 'map <name> from <src> to <dst> variance <straight|anti>'");
  MapSpec m{head.words[1], head.words[3], head.words[5], parse_variance(c, head, head.words[7]), {}};
  const auto& row = c.next("image row");
  for (const auto& w : row.words) m.images.push_back(detail::to_int(c, row, w));
  if (!c.done()) c.error(c.peek().number, "trailing content after image row");
  return m;
}

/// `semilinear <name> over F4|F9 rows r cols c twist <straight|anti>` then r
/// rows of c field symbols.
inline NamedSemilinear parse_semilinear(const std::string& text, const std::string& source = "<semilinear>") {
  detail::Cursor c(detail::tokenize(text), source);
  const auto& head = c.next("semilinear header");
  if (head.words.size() != 10 || head.words[0] != "semilinear" || head.words[2] != "over" || head.words[4] != "rows" ||
      head.words[6] != "cols" || head.words[8] != "twist")
    c.error(head.number, "expected 'semilinear <name> over F4 rows <r> cols <c> twist <straight|anti>'");
  int p = head.words[3] == "F4" ? 2 : head.words[3] == "F9" ? 3 : 0;
  if (!p) c.error(head.number, cat("unsupported field ", head.words[3]));
  FieldFq2 f(p);
  int rows = detail::to_int(c, head, head.words[5]);
  int cols = detail::to_int(c, head, head.words[7]);
  if (rows < 0 || cols < 0) c.error(head.number, "dimensions must be non-negative");
  NamedSemilinear out{head.words[1], p, SemilinearMap{Matrix(rows, cols), parse_variance(c, head, head.words[9])}};
  for (int i = 0; i < rows; ++i) {
    const auto& l = c.next(cat("matrix row ", i));
    if (static_cast<int>(l.words.size()) != cols)
      c.error(l.number, cat("matrix row ", i, " has ", l.words.size(), " entries, expected ", cols));
    for (int j = 0; j < cols; ++j) {
      auto v = f.parse_symbol(l.words[static_cast<std::size_t>(j)]);
      if (!v) c.error(l.number, cat("unknown field element '", l.words[static_cast<std::size_t>(j)], "'"));
      out.map.matrix.at(i, j) = *v;
    }
  }
  if (!c.done()) c.error(c.peek().number, "trailing content after matrix");
  return out;
}

/// Category files:
///   category <label>
///   objects: a b ...
///   hom <src> <dst>: m1 m2 ...        an <src> <dst>: a1 a2 ...
///   id <obj> = <arrow>                reverse <obj> = <anti arrow>
///   compose <g> <f> = <h>             (composites with identities are implied)
///   add <src> <dst>: then one row per arrow of that hom-set, listed in the
///   same order, giving row + column sums by name
/// A file with any `an` line describes a factorization category.
inline NamedCategory parse_category(const std::string& text, const std::string& source = "<category>") {
  detail::Cursor c(detail::tokenize(text), source);
  FiniteCategory cat_;
  std::vector<Variance> tags;
  std::map<std::string, int> arrow_index;
  std::map<std::pair<int, int>, int> composites;
  std::map<int, int> reverse;
  std::vector<std::pair<std::vector<int>, std::vector<std::vector<std::string>>>> sums;
  std::vector<int> sum_lines;
  bool factorization = false;

  auto object = [&](const detail::Line& l, const std::string& name) {
    auto o = cat_.find_object(name);
    if (!o) c.error(l.number, cat("unknown object '", name, "'"));
    return *o;
  };
  auto arrow = [&](const detail::Line& l, const std::string& name) {
    auto it = arrow_index.find(name);
    if (it == arrow_index.end()) c.error(l.number, cat("unknown arrow '", name, "'"));
    return it->second;
  };

  const auto& head = c.next("category header");
  if (head.words.size() != 2 || head.words[0] != "category") c.error(head.number, "expected 'category <label>'");
  cat_.label = head.words[1];
  const auto& objs = c.next("objects line");
  if (objs.words.empty() || objs.words[0] != "objects:") c.error(objs.number, "expected 'objects: ...'");
  for (std::size_t i = 1; i < objs.words.size(); ++i) {
    if (cat_.find_object(objs.words[i])) c.error(objs.number, cat("duplicate object '", objs.words[i], "'"));
    cat_.objects.push_back(objs.words[i]);
  }
  cat_.identities.assign(cat_.objects.size(), -1);

  while (!c.done()) {
    const auto& l = c.next("category line");
    const auto& w = l.words;
    if ((w[0] == "hom" || w[0] == "an") && w.size() >= 3) {
      std::string dst = w[2];
      if (dst.empty() || dst.back() != ':') c.error(l.number, cat("expected '", w[0], " <src> <dst>: ...'"));
      dst.pop_back();
      int s = object(l, w[1]), d = object(l, dst);
      for (std::size_t i = 3; i < w.size(); ++i) {
        if (arrow_index.count(w[i])) c.error(l.number, cat("duplicate arrow '", w[i], "'"));
        arrow_index[w[i]] = cat_.size();
        cat_.arrows.push_back(Arrow{w[i], s, d});
        tags.push_back(w[0] == "an" ? Variance::anti : Variance::straight);
      }
      factorization = factorization || w[0] == "an";
    } else if ((w[0] == "id" || w[0] == "reverse") && w.size() == 4 && w[2] == "=") {
      int o = object(l, w[1]);
      int a = arrow(l, w[3]);
      if (w[0] == "id") cat_.identities[static_cast<std::size_t>(o)] = a;
      else reverse[o] = a;
    } else if (w[0] == "compose" && w.size() == 5 && w[3] == "=") {
      int g = arrow(l, w[1]), f = arrow(l, w[2]), h = arrow(l, w[4]);
      if (cat_.dst(f) != cat_.src(g)) c.error(l.number, cat(w[1], " after ", w[2], " is not composable"));
      auto [it, fresh] = composites.emplace(std::make_pair(g, f), h);
      if (!fresh && it->second != h) c.error(l.number, cat("conflicting composite for ", w[1], " after ", w[2]));
    } else if (w[0] == "add" && w.size() == 3) {
      std::string dst = w[2];
      if (dst.empty() || dst.back() != ':') c.error(l.number, "expected 'add <src> <dst>:'");
      dst.pop_back();
      int s = object(l, w[1]), d = object(l, dst);
      std::vector<int> block;
      for (int x = 0; x < cat_.size(); ++x)
        if (cat_.src(x) == s && cat_.dst(x) == d && tags[static_cast<std::size_t>(x)] == Variance::straight) block.push_back(x);
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < block.size(); ++i) {
        const auto& r = c.next("add row");
        if (r.words.size() != block.size()) c.error(r.number, cat("add row has ", r.words.size(), " entries, expected ", block.size()));
        rows.push_back(r.words);
      }
      sums.emplace_back(block, rows);
      sum_lines.push_back(l.number);
    } else {
      c.error(l.number, cat("unrecognized line starting with '", w[0], "'"));
    }
  }
  for (std::size_t o = 0; o < cat_.identities.size(); ++o)
    if (cat_.identities[o] < 0) c.error(c.last_line(), cat("object '", cat_.objects[o], "' has no identity"));

  NamedCategory out;
  out.category = detail::validated(source, [&] {
    auto built = make_category(cat_.objects, cat_.arrows, cat_.identities, [&](int g, int f) {
      if (auto it = composites.find({g, f}); it != composites.end()) return it->second;
      for (int e : cat_.identities) {
        if (g == e) return f;
        if (f == e) return g;
      }
      fail(ErrorKind::ValidationError, cat("composite ", cat_.name(g), " after ", cat_.name(f), " is not declared"));
    });
    built.label = cat_.label;
    if (!sums.empty()) {
      // the straight part is preadditive; anti blocks follow by transport
      built.sum.assign(static_cast<std::size_t>(built.size() * built.size()), -1);
      for (std::size_t k = 0; k < sums.size(); ++k) {
        const auto& [block, rows] = sums[k];
        for (std::size_t i = 0; i < block.size(); ++i)
          for (std::size_t j = 0; j < block.size(); ++j) {
            auto it = arrow_index.find(rows[i][j]);
            if (it == arrow_index.end()) c.error(sum_lines[k], cat("unknown arrow '", rows[i][j], "' in add table"));
            built.sum[static_cast<std::size_t>(block[i] * built.size() + block[j])] = it->second;
          }
      }
    }
    return built;
  });

  if (!factorization) {
    detail::validated(source, [&] { return validate_category(out.category), 0; });
    return out;
  }
  FactorizationCategory fc;
  fc.total = out.category;
  fc.variance = tags;
  for (int o = 0; o < out.category.object_count(); ++o) {
    auto it = reverse.find(o);
    if (it == reverse.end()) c.error(c.last_line(), cat("object '", out.category.objects[static_cast<std::size_t>(o)], "' has no reverse morphism"));
    fc.reverse.push_back(it->second);
  }
  if (fc.total.preadditive()) {
    // sums of anti arrows are transported through f ↦ f∘1*
    detail::validated(source, [&] {
      const int n = fc.total.size();
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (!fc.is_anti(x) || !fc.is_anti(y) || fc.total.src(x) != fc.total.src(y) || fc.total.dst(x) != fc.total.dst(y))
            continue;
          int r = fc.reverse_of(fc.total.src(x));
          int s = fc.total.add(fc.total.compose(x, r), fc.total.compose(y, r));
          fc.total.sum[static_cast<std::size_t>(x * n + y)] = fc.total.compose(s, r);
        }
      return 0;
    });
  }
  detail::validated(source, [&] { return validate_factorization(fc), 0; });
  out.category = fca(fc);
  out.factorization = std::move(fc);
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, cat(path, ":0: cannot open file"));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Dispatches on the first keyword of the file.
inline Structure parse_structure_text(const std::string& text, const std::string& source) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) fail(ErrorKind::ParseError, cat(source, ":1: empty file"));
  const auto& kw = lines.front().words.front();
  if (kw == "group") return parse_group(text, source);
  if (kw == "ring") return parse_ring(text, source);
  if (kw == "map") return parse_map(text, source);
  if (kw == "semilinear") return parse_semilinear(text, source);
  if (kw == "category") return parse_category(text, source);
  fail(ErrorKind::ParseError, cat(source, ":", lines.front().number, ": unknown structure keyword '", kw, "'"));
}

inline Structure parse_structure(const std::string& path) { return parse_structure_text(read_file(path), path); }

// Writers produce text the parsers read back to equal values.

inline std::string write_group(const FiniteGroup& g, const std::vector<std::pair<std::string, std::vector<int>>>& subgroups = {}) {
  std::ostringstream os;
  os << "group " << g.name() << " order " << g.order() << "\n";
  for (const auto& row : g.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
  for (const auto& [name, gens] : subgroups) {
    os << "subgroup " << name << " gens";
    for (int x : gens) os << " " << x;
    os << "\n";
  }
  return os.str();
}

inline std::string write_ring(const FiniteRing& r, const std::vector<std::pair<std::string, std::vector<int>>>& ideals = {}) {
  std::ostringstream os;
  auto table = [&](const std::vector<std::vector<int>>& rows) {
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
      os << "\n";
    }
  };
  os << "ring " << r.name() << " order " << r.order() << "\nadd:\n";
  table(r.add_rows());
  os << "mul:\n";
  table(r.mul_rows());
  if (r.has_involution()) {
    os << "involution:\n";
    for (int x = 0; x < r.order(); ++x) os << (x ? " " : "") << r.involution(x);
    os << "\n";
  }
  for (const auto& [name, gens] : ideals) {
    os << "ideal " << name << " gens";
    for (int x : gens) os << " " << x;
    os << "\n";
  }
  return os.str();
}

inline std::string write_map(const MapSpec& m) {
  std::ostringstream os;
  os << "map " << m.name << " from " << m.source << " to " << m.target << " variance " << to_string(m.variance) << "\n";
  for (std::size_t i = 0; i < m.images.size(); ++i) os << (i ? " " : "") << m.images[i];
  os << "\n";
  return os.str();
}

inline std::string write_semilinear(const std::string& name, const FieldFq2& f, const SemilinearMap& m) {
  std::ostringstream os;
  os << "semilinear " << name << " over " << f.name() << " rows " << m.matrix.rows << " cols " << m.matrix.cols
     << " twist " << to_string(m.twist) << "\n";
  for (int i = 0; i < m.matrix.rows; ++i) {
    for (int j = 0; j < m.matrix.cols; ++j) os << (j ? " " : "") << f.symbol(m.matrix.at(i, j));
    os << "\n";
  }
  return os.str();
}

namespace detail {

inline void write_category_body(std::ostringstream& os, const FiniteCategory& c, const std::vector<Variance>* tags,
                                const std::vector<int>* reverse) {
  auto tag = [&](int x) { return tags ? (*tags)[static_cast<std::size_t>(x)] : Variance::straight; };
  os << "category " << c.label << "\nobjects:";
  for (const auto& o : c.objects) os << " " << o;
  os << "\n";
  for (Variance v : {Variance::straight, Variance::anti}) {
    if (v == Variance::anti && !tags) break;
    for (int a = 0; a < c.object_count(); ++a)
      for (int b = 0; b < c.object_count(); ++b) {
        std::vector<int> block;
        for (int x : c.hom(a, b))
          if (tag(x) == v) block.push_back(x);
        if (block.empty()) continue;
        os << (v == Variance::straight ? "hom " : "an ") << c.objects[static_cast<std::size_t>(a)] << " "
           << c.objects[static_cast<std::size_t>(b)] << ":";
        for (int x : block) os << " " << c.name(x);
        os << "\n";
      }
  }
  for (int o = 0; o < c.object_count(); ++o) os << "id " << c.objects[static_cast<std::size_t>(o)] << " = " << c.name(c.id(o)) << "\n";
  if (reverse)
    for (int o = 0; o < c.object_count(); ++o)
      os << "reverse " << c.objects[static_cast<std::size_t>(o)] << " = " << c.name((*reverse)[static_cast<std::size_t>(o)]) << "\n";
  auto is_id = [&](int x) { return std::find(c.identities.begin(), c.identities.end(), x) != c.identities.end(); };
  for (int g = 0; g < c.size(); ++g)
    for (int f = 0; f < c.size(); ++f)
      if (c.dst(f) == c.src(g) && !is_id(g) && !is_id(f))
        os << "compose " << c.name(g) << " " << c.name(f) << " = " << c.name(c.compose(g, f)) << "\n";
  if (c.preadditive())
    for (int a = 0; a < c.object_count(); ++a)
      for (int b = 0; b < c.object_count(); ++b) {
        std::vector<int> block;
        for (int x : c.hom(a, b))
          if (tag(x) == Variance::straight) block.push_back(x);
        if (block.empty()) continue;
        os << "add " << c.objects[static_cast<std::size_t>(a)] << " " << c.objects[static_cast<std::size_t>(b)] << ":\n";
        for (int x : block) {
          for (std::size_t j = 0; j < block.size(); ++j) os << (j ? " " : "") << c.name(c.add(x, block[j]));
          os << "\n";
        }
      }
}

}  // namespace detail

inline std::string write_category(const FiniteCategory& c) {
  std::ostringstream os;
  detail::write_category_body(os, c, nullptr, nullptr);
  return os.str();
}

inline std::string write_factorization(const FactorizationCategory& fc) {
  std::ostringstream os;
  detail::write_category_body(os, fc.total, &fc.variance, &fc.reverse);
  return os.str();
}

}  // namespace antihom
