#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "morphism.hpp"
#include "report.hpp"

namespace antihom {

/// Every composable pair drawn from Hom and An sets between the given
/// structures: the composite must obey the law named by the XOR of the two
/// variances. Structures larger than `max_order` are skipped.
template <class S>
TheoremReport verify_variance_table(const std::vector<S>& corpus, int max_order = 8, long bound = kDefaultBound) {
  TheoremReport r;
  r.theorem = "variance-table";
  r.uniqueness = Uniqueness::enumeration;
  std::vector<S> xs;
  for (const auto& s : corpus)
    if (s.order() <= max_order) {
      xs.push_back(s);
      r.inputs.push_back(s.name());
    }
  // maps[i][j] = Hom(i,j) followed by An(i,j)
  std::vector<std::vector<std::vector<Morphism<S>>>> maps(xs.size(), std::vector<std::vector<Morphism<S>>>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      maps[i][j] = enumerate_homs(xs[i], xs[j], bound);
      for (auto& f : enumerate_antihoms(xs[i], xs[j], bound)) maps[i][j].push_back(std::move(f));
    }
  long pairs = 0;
  std::map<std::string, long> tally;
  std::string bad;
  std::vector<int> img;
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < xs.size(); ++b)
      for (std::size_t c = 0; c < xs.size(); ++c)
        for (const auto& f : maps[a][b])
          for (const auto& g : maps[b][c]) {
            ++pairs;
            img.resize(f.images.size());
            for (std::size_t x = 0; x < img.size(); ++x) img[x] = g(f.images[x]);
            Variance v = g.variance ^ f.variance;
            Classification k = classify(img, xs[a], xs[c]);
            ++tally[cat(to_string(g.variance), "*", to_string(f.variance), "->", to_string(k))];
            if (bad.empty() && !satisfies(k, v))
              bad = cat(xs[a].name(), "->", xs[b].name(), "->", xs[c].name(), " f=", format_list(f.images), " (",
                        to_string(f.variance), ") g=", format_list(g.images), " (", to_string(g.variance),
                        ") composite ", format_list(img), " is ", to_string(k));
          }
  r.check("composite-obeys-xor-law", bad.empty(), bad);
  r.notes.push_back(cat(pairs, " composable pairs"));
  for (const auto& [k, n] : tally) r.notes.push_back(cat(k, ": ", n));
  return r;
}

/// f -> f∘1* from Hom(A,B) to An(A,B) and back: both land in the other set,
/// are mutually inverse, and the two sets have the same size.
template <class S>
TheoremReport verify_correspondence(const S& a, const S& b, long bound = kDefaultBound) {
  TheoremReport r;
  r.theorem = "hom-an-correspondence";
  r.inputs = {a.name(), b.name()};
  auto hom = enumerate_homs(a, b, bound);
  auto an = enumerate_antihoms(a, b, bound);
  std::set<std::vector<int>> an_tables, hom_tables;
  for (const auto& f : an) an_tables.insert(f.images);
  for (const auto& f : hom) hom_tables.insert(f.images);
  r.witnesses.push_back(cat("|Hom|=", hom.size(), " |An|=", an.size()));
  r.check("counts-equal", hom.size() == an.size(), cat(hom.size(), " vs ", an.size()));
  std::string to_an, to_hom, round;
  std::set<std::vector<int>> hit;
  for (const auto& f : hom) {
    auto g = corresponding_anti(f);
    hit.insert(g.images);
    if (to_an.empty() && !an_tables.count(g.images)) to_an = cat(format_list(f.images), " -> ", format_list(g.images));
    if (round.empty() && corresponding_hom(g).images != f.images) round = format_list(f.images);
  }
  for (const auto& g : an) {
    auto f = corresponding_hom(g);
    if (to_hom.empty() && !hom_tables.count(f.images)) to_hom = cat(format_list(g.images), " -> ", format_list(f.images));
  }
  r.check("hom-to-an-lands-in-an", to_an.empty(), to_an);
  r.check("an-to-hom-lands-in-hom", to_hom.empty(), to_hom);
  r.check("round-trip-identity", round.empty(), round);
  r.check("hom-to-an-surjective", hit.size() == an_tables.size(), cat(hit.size(), " of ", an_tables.size(), " reached"));
  return r;
}

/// An(A,A) under g ⋆ f = (g∘f)∘1*: closed, associative on every triple,
/// with the reverse morphism as two-sided unit.
template <class S>
TheoremReport verify_star_monoid(const S& a, long bound = kDefaultBound) {
  TheoremReport r;
  r.theorem = "star-monoid";
  r.inputs = {a.name()};
  r.uniqueness = Uniqueness::enumeration;
  auto an = enumerate_antihoms(a, a, bound);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < an.size(); ++i) index[an[i].images] = static_cast<int>(i);
  const int n = static_cast<int>(an.size());
  std::vector<int> table(static_cast<std::size_t>(n * n), -1);
  std::string open;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto s = star_compose(an[static_cast<std::size_t>(i)], an[static_cast<std::size_t>(j)]);
      auto it = index.find(s.images);
      if (it == index.end()) {
        if (open.empty()) open = cat(i, " * ", j, " = ", format_list(s.images));
        continue;
      }
      table[static_cast<std::size_t>(i * n + j)] = it->second;
    }
  r.witnesses.push_back(cat("|An(", a.name(), ",", a.name(), ")|=", n));
  if (!r.check("closed", open.empty(), open)) return r;
  auto at = [&](int i, int j) { return table[static_cast<std::size_t>(i * n + j)]; };
  std::string assoc;
  long triples = 0;
  for (int i = 0; i < n && assoc.empty(); ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ++triples;
        if (at(at(i, j), k) != at(i, at(j, k)) && assoc.empty()) assoc = cat("(", i, ",", j, ",", k, ")");
      }
  r.check("associative", assoc.empty(), assoc);
  auto unit = index.find(reverse_morphism(a).images);
  if (!r.check("reverse-morphism-in-set", unit != index.end())) return r;
  std::string left;
  for (int i = 0; i < n; ++i)
    if (left.empty() && (at(unit->second, i) != i || at(i, unit->second) != i)) left = format_list(an[static_cast<std::size_t>(i)].images);
  r.check("reverse-morphism-is-unit", left.empty(), left);
  r.notes.push_back(cat(triples, " triples"));
  return r;
}

/// Every straight f in Hom(A,B) equals f*∘1* where f* = f∘1*, and the
/// composable anti pairs A -> A -> B are partitioned by their composite.
template <class S>
TheoremReport verify_factorization_law(const S& a, const S& b, long bound = kDefaultBound) {
  TheoremReport r;
  r.theorem = "law-of-factorization";
  r.inputs = {a.name(), b.name()};
  auto hom = enumerate_homs(a, b, bound);
  auto one = reverse_morphism(a);
  std::string bad;
  for (const auto& f : hom)
    if (bad.empty() && compose(corresponding_anti(f), one).images != f.images) bad = format_list(f.images);
  r.check("straight-equals-star-after-reverse", bad.empty(), bad);

  auto classes = factorization_classes(a, a, b, bound);
  const std::size_t expected = enumerate_antihoms(a, a, bound).size() * enumerate_antihoms(a, b, bound).size();
  std::size_t total = 0;
  std::string wrong;
  std::set<std::vector<int>> composites;
  for (const auto& k : classes) {
    total += k.pairs.size();
    composites.insert(k.composite.images);
    for (const auto& [f1, f2] : k.pairs)
      if (wrong.empty() && compose(f2, f1).images != k.composite.images)
        wrong = cat(format_list(f1.images), " then ", format_list(f2.images));
  }
  r.check("classes-cover-all-pairs", total == expected, cat(total, " of ", expected));
  r.check("classes-disjoint", composites.size() == classes.size());
  r.check("pairs-share-class-composite", wrong.empty(), wrong);
  std::set<std::vector<int>> hom_tables;
  for (const auto& f : hom) hom_tables.insert(f.images);
  std::string stray;
  for (const auto& c : composites)
    if (stray.empty() && !hom_tables.count(c)) stray = format_list(c);
  r.check("composites-are-straight", stray.empty(), stray);
  r.notes.push_back(cat(classes.size(), " classes over ", total, " pairs"));
  return r;
}

}  // namespace antihom
