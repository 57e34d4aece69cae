#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "morphism_type.hpp"

namespace antihom {

/// A finite unital ring over dense indices 0..n-1. The involution, when
/// present, is an additive anti-automorphism of order at most two.
class FiniteRing {
 public:
  FiniteRing() = default;

  int order() const { return d_->n; }
  int zero() const { return d_->zero; }
  int one() const { return d_->one; }
  int add(int a, int b) const { return d_->add[static_cast<std::size_t>(a * d_->n + b)]; }
  int mul(int a, int b) const { return d_->mul[static_cast<std::size_t>(a * d_->n + b)]; }
  int neg(int a) const { return d_->neg[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  bool has_involution() const { return !d_->involution.empty(); }
  int involution(int a) const { return d_->involution[static_cast<std::size_t>(a)]; }
  const std::vector<int>& involution_table() const { return d_->involution; }
  const std::string& name() const { return d_->name; }
  std::span<const int> add_table() const { return d_->add; }
  std::span<const int> mul_table() const { return d_->mul; }

  std::vector<std::vector<int>> add_rows() const { return rows_of(d_->add); }
  std::vector<std::vector<int>> mul_rows() const { return rows_of(d_->mul); }

  /// Tables and involution must agree; names are labels only.
  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->add == b.d_->add && a.d_->mul == b.d_->mul && a.d_->involution == b.d_->involution;
  }

 private:
  struct Data {
    std::string name;
    int n = 0;
    std::vector<int> add, mul, neg, involution;
    int zero = 0, one = 0;
  };
  std::shared_ptr<const Data> d_;

  std::vector<std::vector<int>> rows_of(const std::vector<int>& t) const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(order()));
    for (int i = 0; i < order(); ++i)
      out[static_cast<std::size_t>(i)].assign(t.begin() + i * order(), t.begin() + (i + 1) * order());
    return out;
  }

  friend FiniteRing validate_ring(const std::vector<std::vector<int>>&, const std::vector<std::vector<int>>&,
                                  std::optional<std::vector<int>>, std::string);
};

inline FiniteRing validate_ring(const std::vector<std::vector<int>>& add_rows,
                                const std::vector<std::vector<int>>& mul_rows,
                                std::optional<std::vector<int>> involution = std::nullopt, std::string name = "") {
  const int n = static_cast<int>(add_rows.size());
  if (static_cast<int>(mul_rows.size()) != n)
    fail(ErrorKind::NotSquare, cat("add has ", n, " rows but mul has ", mul_rows.size()));

  FiniteGroup additive;
  try {
    additive = validate_group(add_rows);
  } catch (const AlgebraError& e) {
    if (e.kind() == ErrorKind::NotSquare) throw;
    fail(ErrorKind::AddNotAbelianGroup, e.what());
  }
  if (auto p = non_commuting_pair(additive))
    fail(ErrorKind::AddNotAbelianGroup, cat(p->first, "+", p->second, " != ", p->second, "+", p->first));

  std::vector<int> mul;
  for (int i = 0; i < n; ++i) {
    const auto& r = mul_rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) != n)
      fail(ErrorKind::NotSquare, cat("mul row ", i, " has ", r.size(), " entries, expected ", n));
    for (int v : r) {
      if (v < 0 || v >= n) fail(ErrorKind::MulNotMonoid, cat("mul row ", i, " has out-of-range entry ", v));
      mul.push_back(v);
    }
  }
  auto m = [&](int a, int b) { return mul[static_cast<std::size_t>(a * n + b)]; };
  auto a = [&](int x, int y) { return additive.mul(x, y); };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (m(m(x, y), z) != m(x, m(y, z)))
          fail(ErrorKind::MulNotMonoid, cat("(", x, "*", y, ")*", z, " != ", x, "*(", y, "*", z, ")"));
  int one = -1;
  for (int c = 0; c < n && one < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = m(c, x) == x && m(x, c) == x;
    if (ok) one = c;
  }
  if (one < 0) fail(ErrorKind::MulNotMonoid, "no multiplicative identity");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (m(x, a(y, z)) != a(m(x, y), m(x, z)))
          fail(ErrorKind::NotDistributive, cat(x, "*(", y, "+", z, ") != ", x, "*", y, "+", x, "*", z));
        if (m(a(x, y), z) != a(m(x, z), m(y, z)))
          fail(ErrorKind::NotDistributive, cat("(", x, "+", y, ")*", z, " != ", x, "*", z, "+", y, "*", z));
      }

  if (involution) {
    const auto& s = *involution;
    if (static_cast<int>(s.size()) != n)
      fail(ErrorKind::BadInvolution, cat("involution has ", s.size(), " entries, expected ", n));
    for (int x = 0; x < n; ++x)
      if (s[static_cast<std::size_t>(x)] < 0 || s[static_cast<std::size_t>(x)] >= n)
        fail(ErrorKind::BadInvolution, cat("image of ", x, " out of range"));
    auto sg = [&](int x) { return s[static_cast<std::size_t>(x)]; };
    for (int x = 0; x < n; ++x)
      if (sg(sg(x)) != x) fail(ErrorKind::BadInvolution, cat("s(s(", x, ")) = ", sg(sg(x))));
    if (sg(one) != one) fail(ErrorKind::BadInvolution, cat("s(1) = ", sg(one)));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (sg(a(x, y)) != a(sg(x), sg(y))) fail(ErrorKind::BadInvolution, cat("not additive at (", x, ",", y, ")"));
        if (sg(m(x, y)) != m(sg(y), sg(x)))
          fail(ErrorKind::BadInvolution, cat("s(", x, "*", y, ") != s(", y, ")*s(", x, ")"));
      }
  }

  auto d = std::make_shared<FiniteRing::Data>();
  d->name = std::move(name);
  d->n = n;
  d->add.assign(additive.cayley().begin(), additive.cayley().end());
  d->mul = std::move(mul);
  d->neg.assign(additive.inverses().begin(), additive.inverses().end());
  d->involution = involution ? std::move(*involution) : std::vector<int>{};
  d->zero = additive.identity();
  d->one = one;
  FiniteRing r;
  r.d_ = std::move(d);
  return r;
}

inline FiniteRing ring_from_ops(int n, const std::function<int(int, int)>& add, const std::function<int(int, int)>& mul,
                                std::optional<std::vector<int>> involution, std::string name) {
  std::vector<std::vector<int>> ar(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  auto mr = ar;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = add(i, j);
      mr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mul(i, j);
    }
  return validate_ring(ar, mr, std::move(involution), std::move(name));
}

inline std::optional<std::pair<int, int>> non_commuting_pair(const FiniteRing& r) {
  for (int a = 0; a < r.order(); ++a)
    for (int b = a + 1; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return std::pair{a, b};
  return std::nullopt;
}

inline bool is_commutative(const FiniteRing& r) { return !non_commuting_pair(r).has_value(); }

/// Same additive group, reversed product. The involution is not carried over.
inline FiniteRing opposite(const FiniteRing& r) {
  auto mr = r.mul_rows();
  for (int i = 0; i < r.order(); ++i)
    for (int j = 0; j < r.order(); ++j) mr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r.mul(j, i);
  return validate_ring(r.add_rows(), mr, std::nullopt, r.name().empty() ? "" : r.name() + "^op");
}

/// Copy of `r` equipped with `involution` (validated).
inline FiniteRing with_involution(const FiniteRing& r, std::vector<int> involution) {
  return validate_ring(r.add_rows(), r.mul_rows(), std::move(involution), r.name());
}

enum class Side { left, right, two_sided };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two-sided";
  }
  return "?";
}

struct RingIdeal {
  FiniteRing parent;
  std::vector<int> members;  // sorted
  Side side = Side::two_sided;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }
};

inline std::optional<std::string> additive_subgroup_violation(const FiniteRing& r, const std::vector<int>& s) {
  std::vector<char> in(static_cast<std::size_t>(r.order()), 0);
  for (int x : s) in[static_cast<std::size_t>(x)] = 1;
  if (!in[static_cast<std::size_t>(r.zero())]) return std::string("zero missing");
  for (int x : s) {
    if (!in[static_cast<std::size_t>(r.neg(x))]) return cat("-", x, " missing");
    for (int y : s)
      if (!in[static_cast<std::size_t>(r.add(x, y))]) return cat(x, "+", y, " missing");
  }
  return std::nullopt;
}

/// Witness of the first failure of `s` to be an ideal on `side`.
inline std::optional<std::string> ideal_violation(const FiniteRing& r, const std::vector<int>& s, Side side) {
  if (auto v = additive_subgroup_violation(r, s)) return v;
  std::vector<char> in(static_cast<std::size_t>(r.order()), 0);
  for (int x : s) in[static_cast<std::size_t>(x)] = 1;
  for (int x : s)
    for (int a = 0; a < r.order(); ++a) {
      if (side != Side::right && !in[static_cast<std::size_t>(r.mul(a, x))]) return cat(a, "*", x, " escapes");
      if (side != Side::left && !in[static_cast<std::size_t>(r.mul(x, a))]) return cat(x, "*", a, " escapes");
    }
  return std::nullopt;
}

inline bool is_ideal(const FiniteRing& r, const std::vector<int>& s, Side side) {
  return !ideal_violation(r, s, side).has_value();
}

inline RingIdeal make_ideal(const FiniteRing& r, std::vector<int> s, Side side = Side::two_sided) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (auto v = ideal_violation(r, s, side)) fail(ErrorKind::NotIdeal, *v);
  return RingIdeal{r, std::move(s), side};
}

/// Smallest ideal on `side` containing `gens`.
inline RingIdeal ideal_closure(const FiniteRing& r, const std::vector<int>& gens, Side side = Side::two_sided) {
  std::vector<char> in(static_cast<std::size_t>(r.order()), 0);
  std::vector<int> members{r.zero()};
  in[static_cast<std::size_t>(r.zero())] = 1;
  auto push = [&](int x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      members.push_back(x);
    }
  };
  for (int g : gens) push(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    int x = members[i];
    for (std::size_t j = 0; j <= i; ++j) push(r.add(x, members[j]));
    for (int a = 0; a < r.order(); ++a) {
      if (side != Side::right) push(r.mul(a, x));
      if (side != Side::left) push(r.mul(x, a));
    }
  }
  std::sort(members.begin(), members.end());
  return RingIdeal{r, std::move(members), side};
}

/// Contains 1 and is closed under +, - and *.
inline std::optional<std::string> subring_violation(const FiniteRing& r, const std::vector<int>& s) {
  if (auto v = additive_subgroup_violation(r, s)) return v;
  std::vector<char> in(static_cast<std::size_t>(r.order()), 0);
  for (int x : s) in[static_cast<std::size_t>(x)] = 1;
  if (!in[static_cast<std::size_t>(r.one())]) return std::string("one missing");
  for (int x : s)
    for (int y : s)
      if (!in[static_cast<std::size_t>(r.mul(x, y))]) return cat(x, "*", y, " missing");
  return std::nullopt;
}

inline bool is_subring(const FiniteRing& r, const std::vector<int>& s) { return !subring_violation(r, s).has_value(); }

struct InducedRing {
  FiniteRing ring;
  Morphism<FiniteRing> inclusion;
};

/// A subring as a ring in its own right (member k becomes index k).
inline InducedRing induced_ring(const FiniteRing& r, const std::vector<int>& members, std::string name = "") {
  if (auto v = subring_violation(r, members)) fail(ErrorKind::PreconditionFailed, "not a subring: " + *v);
  auto local = [&](int x) {
    return static_cast<int>(std::lower_bound(members.begin(), members.end(), x) - members.begin());
  };
  const int k = static_cast<int>(members.size());
  auto at = [&](int i) { return members[static_cast<std::size_t>(i)]; };
  FiniteRing sub = ring_from_ops(
      k, [&](int i, int j) { return local(r.add(at(i), at(j))); }, [&](int i, int j) { return local(r.mul(at(i), at(j))); },
      std::nullopt, std::move(name));
  return InducedRing{sub, Morphism<FiniteRing>{sub, r, members, Variance::straight}};
}

struct RingQuotient {
  FiniteRing ring;
  Morphism<FiniteRing> projection;
  std::vector<std::vector<int>> cosets;
};

/// R/I over additive cosets labelled by least member. A present involution
/// descends when it maps I into itself.
inline RingQuotient quotient_ring(const FiniteRing& r, const RingIdeal& ideal) {
  if (auto v = ideal_violation(r, ideal.members, Side::two_sided)) fail(ErrorKind::NotIdeal, *v);
  const int n = r.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < n; ++x) {
    if (label[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> c;
    for (int m : ideal.members) c.push_back(r.add(x, m));
    std::sort(c.begin(), c.end());
    for (int y : c) label[static_cast<std::size_t>(y)] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(c));
  }
  const int k = static_cast<int>(cosets.size());
  std::vector<std::vector<int>> ar(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  auto mr = ar;
  auto rep = [&](int i) { return cosets[static_cast<std::size_t>(i)][0]; };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = label[static_cast<std::size_t>(r.add(rep(i), rep(j)))];
      mr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = label[static_cast<std::size_t>(r.mul(rep(i), rep(j)))];
    }
  std::optional<std::vector<int>> inv;
  if (r.has_involution()) {
    bool stable = true;
    for (int m : ideal.members) stable = stable && ideal.contains(r.involution(m));
    if (stable) {
      inv.emplace();
      for (int i = 0; i < k; ++i) inv->push_back(label[static_cast<std::size_t>(r.involution(rep(i)))]);
    }
  }
  std::string qname = r.name().empty() ? std::string() : r.name() + "/" + cat("I", ideal.order());
  FiniteRing q = validate_ring(ar, mr, std::move(inv), qname);
  return RingQuotient{q, Morphism<FiniteRing>{r, q, label, Variance::straight}, std::move(cosets)};
}

}  // namespace antihom
