#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "morphism_type.hpp"

namespace antihom {

/// A finite group given by a validated Cayley table over dense indices
/// 0..n-1. The identity is discovered, not assumed to be index 0. Values are
/// immutable and cheap to copy (the table is shared).
class FiniteGroup {
 public:
  FiniteGroup() = default;

  int order() const { return d_->n; }
  int identity() const { return d_->identity; }
  int mul(int a, int b) const { return d_->table[static_cast<std::size_t>(a * d_->n + b)]; }
  int inv(int a) const { return d_->inverses[static_cast<std::size_t>(a)]; }
  const std::string& name() const { return d_->name; }
  std::span<const int> cayley() const { return d_->table; }
  std::span<const int> inverses() const { return d_->inverses; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(order()));
    for (int i = 0; i < order(); ++i)
      out[static_cast<std::size_t>(i)].assign(d_->table.begin() + i * order(),
                                              d_->table.begin() + (i + 1) * order());
    return out;
  }

  /// Structural equality: same table (names are labels only).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->table == b.d_->table;
  }

 private:
  struct Data {
    std::string name;
    int n = 0;
    std::vector<int> table;
    int identity = 0;
    std::vector<int> inverses;
  };
  std::shared_ptr<const Data> d_;

  friend FiniteGroup validate_group(const std::vector<std::vector<int>>& rows, std::string name);
};

/// Checks closure, identity, associativity and inverses exhaustively, in that
/// order; the first violation is reported with its witness.
inline FiniteGroup validate_group(const std::vector<std::vector<int>>& rows, std::string name = "") {
  const int n = static_cast<int>(rows.size());
  if (n == 0) fail(ErrorKind::NotSquare, "empty table");
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) != n)
      fail(ErrorKind::NotSquare, cat("row ", i, " has ", r.size(), " entries, expected ", n));
    for (int j = 0; j < n; ++j) {
      int v = r[static_cast<std::size_t>(j)];
      if (v < 0 || v >= n) fail(ErrorKind::NotClosed, cat(i, "*", j, "=", v, " is not an element"));
      t.push_back(v);
    }
  }
  auto at = [&](int a, int b) { return t[static_cast<std::size_t>(a * n + b)]; };

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) fail(ErrorKind::NoIdentity, "no element is a two-sided identity");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          fail(ErrorKind::NotAssociative, cat("(", x, "*", y, ")*", z, " != ", x, "*(", y, "*", z, ")"));

  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (at(x, y) == e && at(y, x) == e) {
        inv[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (inv[static_cast<std::size_t>(x)] < 0) fail(ErrorKind::MissingInverse, cat("element ", x, " has no inverse"));
  }

  FiniteGroup g;
  auto d = std::make_shared<FiniteGroup::Data>();
  d->name = std::move(name);
  d->n = n;
  d->table = std::move(t);
  d->identity = e;
  d->inverses = std::move(inv);
  g.d_ = std::move(d);
  return g;
}

/// Builds and validates the table of a binary operation on 0..n-1.
inline FiniteGroup group_from_op(int n, const std::function<int(int, int)>& op, std::string name) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = op(i, j);
  return validate_group(rows, std::move(name));
}

inline std::optional<std::pair<int, int>> non_commuting_pair(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return std::pair{a, b};
  return std::nullopt;
}

inline bool is_abelian(const FiniteGroup& g) { return !non_commuting_pair(g).has_value(); }

inline int power(const FiniteGroup& g, int x, long n) {
  if (n < 0) {
    x = g.inv(x);
    n = -n;
  }
  int r = g.identity();
  for (long i = 0; i < n; ++i) r = g.mul(r, x);
  return r;
}

inline int element_order(const FiniteGroup& g, int x) {
  int k = 1;
  for (int y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

inline int exponent(const FiniteGroup& g) {
  int e = 1;
  for (int x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

struct Subgroup {
  FiniteGroup parent;
  std::vector<int> members;  // sorted

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

/// Smallest subgroup containing `gens`; in a finite group closure under the
/// product suffices.
inline Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> members{g.identity()};
  in[static_cast<std::size_t>(g.identity())] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      int p = g.mul(members[i], s);
      if (!in[static_cast<std::size_t>(p)]) {
        in[static_cast<std::size_t>(p)] = 1;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{g, std::move(members)};
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{g, {g.identity()}}; }

inline Subgroup whole_group(const FiniteGroup& g) {
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  return Subgroup{g, std::move(all)};
}

/// Checks that `members` is a subgroup of g; returns a witness on failure.
inline std::optional<std::string> subgroup_violation(const FiniteGroup& g, const std::vector<int>& members) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int m : members) in[static_cast<std::size_t>(m)] = 1;
  if (!in[static_cast<std::size_t>(g.identity())]) return std::string("identity missing");
  for (int a : members) {
    if (!in[static_cast<std::size_t>(g.inv(a))]) return cat("inverse of ", a, " missing");
    for (int b : members)
      if (!in[static_cast<std::size_t>(g.mul(a, b))]) return cat(a, "*", b, "=", g.mul(a, b), " missing");
  }
  return std::nullopt;
}

/// First (conjugator g, member s) with g s g^-1 outside S, if any.
inline std::optional<std::pair<int, int>> normality_witness(const FiniteGroup& g, const Subgroup& s) {
  for (int x = 0; x < g.order(); ++x)
    for (int m : s.members)
      if (!s.contains(g.mul(g.mul(x, m), g.inv(x)))) return std::pair{x, m};
  return std::nullopt;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& s) { return !normality_witness(g, s).has_value(); }

/// The set {a*n}; closure is guaranteed when N is normal and verified anyway.
inline Subgroup subgroup_product(const FiniteGroup& g, const Subgroup& a, const Subgroup& n) {
  if (auto w = normality_witness(g, n))
    fail(ErrorKind::NotNormal, cat("conjugating ", w->second, " by ", w->first, " leaves the subgroup"));
  std::vector<int> prod;
  for (int x : a.members)
    for (int y : n.members) prod.push_back(g.mul(x, y));
  std::sort(prod.begin(), prod.end());
  prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
  if (auto v = subgroup_violation(g, prod)) fail(ErrorKind::ClosureViolation, *v);
  return Subgroup{g, std::move(prod)};
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out));
  return Subgroup{a.parent, std::move(out)};
}

struct GroupQuotient {
  FiniteGroup group;
  Morphism<FiniteGroup> projection;
  std::vector<std::vector<int>> cosets;  // coset k = element k of the quotient
};

/// G/N. Cosets are labelled in increasing order of their least member.
inline GroupQuotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (auto w = normality_witness(g, n))
    fail(ErrorKind::NotNormal, cat("conjugating ", w->second, " by ", w->first, " leaves the subgroup"));
  const int order = g.order();
  std::vector<int> label(static_cast<std::size_t>(order), -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < order; ++x) {
    if (label[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> c;
    for (int m : n.members) c.push_back(g.mul(x, m));
    std::sort(c.begin(), c.end());
    for (int y : c) label[static_cast<std::size_t>(y)] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(c));
  }
  const int k = static_cast<int>(cosets.size());
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          label[static_cast<std::size_t>(g.mul(cosets[static_cast<std::size_t>(i)][0], cosets[static_cast<std::size_t>(j)][0]))];
  std::string qname = g.name().empty() ? std::string() : g.name() + "/" + cat("N", n.order());
  FiniteGroup q = validate_group(rows, qname);
  return GroupQuotient{q, Morphism<FiniteGroup>{g, q, label, Variance::straight}, std::move(cosets)};
}

struct GroupProduct {
  FiniteGroup group;
  Morphism<FiniteGroup> p1;
  Morphism<FiniteGroup> p2;
};

/// G x H with element (g, h) at index g * |H| + h.
inline GroupProduct direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = h.order();
  auto op = [&](int a, int b) { return g.mul(a / m, b / m) * m + h.mul(a % m, b % m); };
  FiniteGroup p = group_from_op(g.order() * m, op, g.name() + "x" + h.name());
  std::vector<int> i1, i2;
  for (int x = 0; x < p.order(); ++x) {
    i1.push_back(x / m);
    i2.push_back(x % m);
  }
  return GroupProduct{p, {p, g, i1, Variance::straight}, {p, h, i2, Variance::straight}};
}

struct InducedGroup {
  FiniteGroup group;
  Morphism<FiniteGroup> inclusion;  // straight, injective
};

/// The subgroup as a group in its own right (member k becomes index k).
inline InducedGroup induced_group(const Subgroup& s, std::string name = "") {
  const FiniteGroup& g = s.parent;
  auto local = [&](int x) {
    return static_cast<int>(std::lower_bound(s.members.begin(), s.members.end(), x) - s.members.begin());
  };
  const int k = s.order();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          local(g.mul(s.members[static_cast<std::size_t>(i)], s.members[static_cast<std::size_t>(j)]));
  FiniteGroup sub = validate_group(rows, std::move(name));
  return InducedGroup{sub, Morphism<FiniteGroup>{sub, g, s.members, Variance::straight}};
}

/// Greedy generating set: scan elements in index order and keep each one not
/// already in the span of those kept. Deterministic.
inline std::vector<int> generators(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup span = trivial_subgroup(g);
  for (int x = 0; x < g.order() && span.order() < g.order(); ++x) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = subgroup_closure(g, gens);
  }
  return gens;
}

/// Spanning tree of the Cayley graph on `gens`: for every element x other
/// than the identity, x = parent[x] * gens[via[x]].
struct GeneratorTree {
  std::vector<int> order;  // BFS order starting with the identity
  std::vector<int> parent;
  std::vector<int> via;
};

inline GeneratorTree generator_tree(const FiniteGroup& g, const std::vector<int>& gens) {
  GeneratorTree t;
  t.parent.assign(static_cast<std::size_t>(g.order()), -1);
  t.via.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  t.order.push_back(g.identity());
  seen[static_cast<std::size_t>(g.identity())] = 1;
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = g.mul(t.order[i], gens[k]);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      t.parent[static_cast<std::size_t>(y)] = t.order[i];
      t.via[static_cast<std::size_t>(y)] = static_cast<int>(k);
      t.order.push_back(y);
    }
  }
  return t;
}

/// Extends an assignment of generator images along the tree with the
/// product `target_mul`, then checks the relation m(xy) = m(x)m(y) on all
/// pairs. Returns the image table when the extension is a homomorphism.
inline std::optional<std::vector<int>> extend_homomorphism(const FiniteGroup& g, const GeneratorTree& tree,
                                                           const std::vector<int>& gen_images, int target_identity,
                                                           const std::function<int(int, int)>& target_mul) {
  std::vector<int> img(static_cast<std::size_t>(g.order()), -1);
  img[static_cast<std::size_t>(g.identity())] = target_identity;
  for (std::size_t i = 1; i < tree.order.size(); ++i) {
    int x = tree.order[i];
    img[static_cast<std::size_t>(x)] =
        target_mul(img[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(x)])],
                   gen_images[static_cast<std::size_t>(tree.via[static_cast<std::size_t>(x)])]);
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (img[static_cast<std::size_t>(g.mul(a, b))] !=
          target_mul(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]))
        return std::nullopt;
  return img;
}

constexpr int kMaxIsomorphismOrder = 12;

/// Exhaustive isomorphism search over generator-image assignments. Refuses
/// above order 12 rather than guessing.
inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder)
    fail(ErrorKind::BoundExceeded, cat("isomorphism search is limited to order <= ", kMaxIsomorphismOrder));
  if (g.order() != h.order()) return std::nullopt;
  auto gens = generators(g);
  auto tree = generator_tree(g, gens);
  std::vector<int> choice(gens.size(), 0);
  auto mul = [&](int a, int b) { return h.mul(a, b); };
  while (true) {
    bool orders_ok = true;
    for (std::size_t k = 0; k < gens.size() && orders_ok; ++k)
      orders_ok = element_order(h, choice[k]) == element_order(g, gens[k]);
    if (orders_ok) {
      if (auto img = extend_homomorphism(g, tree, choice, h.identity(), mul)) {
        std::vector<int> sorted = *img;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return img;
      }
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == h.order()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return std::nullopt;
}

}  // namespace antihom
