#pragma once

#include <array>
#include <string>
#include <vector>

#include "category.hpp"
#include "group.hpp"
#include "morphism.hpp"
#include "ring.hpp"

namespace antihom::builtin {

inline FiniteGroup cyclic(int n) {
  return group_from_op(n, [n](int a, int b) { return (a + b) % n; }, "Z" + std::to_string(n));
}

inline FiniteGroup trivial() { return group_from_op(1, [](int, int) { return 0; }, "1"); }

/// Permutations of {0,1,2} in lexicographic order of their one-line form;
/// (p q)(i) = p(q(i)). Index 0 is the identity, 1 = (12), 2 = (01), 5 = (02).
inline const std::array<std::array<int, 3>, 6>& s3_permutations() {
  static const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

inline FiniteGroup s3() {
  const auto& p = s3_permutations();
  auto op = [&](int a, int b) {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(a)][static_cast<std::size_t>(p[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
    for (int k = 0; k < 6; ++k)
      if (p[static_cast<std::size_t>(k)] == c) return k;
    return -1;
  };
  return group_from_op(6, op, "S3");
}

/// r^i s^j at index i + 4j, with s r s = r^-1.
inline FiniteGroup d4() {
  auto op = [](int x, int y) {
    int i = x % 4, j = x / 4, k = y % 4, l = y / 4;
    int rot = (i + (j ? 4 - k : k)) % 4;
    return rot + 4 * ((j + l) % 2);
  };
  return group_from_op(8, op, "D4");
}

/// Unit u in {1,i,j,k} with sign bit s at index 2u + s.
inline FiniteGroup q8() {
  // unit product table: sign and resulting unit
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto op = [](int x, int y) {
    int u = x / 2, v = y / 2;
    int s = (x % 2 + y % 2 + sign[u][v]) % 2;
    return 2 * unit[u][v] + s;
  };
  return group_from_op(8, op, "Q8");
}

inline FiniteGroup klein() {
  return group_from_op(4, [](int a, int b) { return a ^ b; }, "Z2xZ2");
}

inline std::vector<FiniteGroup> groups() {
  return {cyclic(2), cyclic(3), cyclic(4), cyclic(6), s3(), d4(), q8(), klein()};
}

/// Sign of S3 onto Z2.
inline GroupMorphism s3_sign() {
  return make_morphism(s3(), cyclic(2), {0, 1, 1, 0, 0, 1}, Variance::straight);
}

inline std::vector<int> identity_table(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

inline FiniteRing zn_ring(int n) {
  return ring_from_ops(
      n, [n](int a, int b) { return (a + b) % n; }, [n](int a, int b) { return (a * b) % n; }, identity_table(n),
      "Z" + std::to_string(n));
}

/// a + b t at index a + 2b with t^2 = t + 1.
inline FiniteRing f4_ring() {
  auto mul = [](int x, int y) {
    int a = x & 1, b = x >> 1, c = y & 1, d = y >> 1;
    // (a + b t)(c + d t) = ac + (ad + bc) t + bd (t + 1)
    int c0 = (a * c + b * d) & 1;
    int c1 = (a * d + b * c + b * d) & 1;
    return c0 + 2 * c1;
  };
  return ring_from_ops(4, [](int a, int b) { return a ^ b; }, mul, identity_table(4), "F4");
}

inline FiniteRing klein_ring() {
  return ring_from_ops(4, [](int a, int b) { return a ^ b; }, [](int a, int b) { return a & b; }, identity_table(4),
                       "Z2xZ2");
}

/// [[a, b], [0, c]] over F2 at index a + 2b + 4c; the involution swaps the
/// diagonal entries.
inline FiniteRing t2_ring() {
  auto mul = [](int x, int y) {
    int a = x & 1, b = (x >> 1) & 1, c = (x >> 2) & 1;
    int d = y & 1, e = (y >> 1) & 1, f = (y >> 2) & 1;
    return (a & d) + 2 * ((a & e) ^ (b & f)) + 4 * (c & f);
  };
  std::vector<int> swap(8);
  for (int x = 0; x < 8; ++x) swap[static_cast<std::size_t>(x)] = ((x >> 2) & 1) + (x & 2) + 4 * (x & 1);
  return ring_from_ops(8, [](int a, int b) { return a ^ b; }, mul, swap, "T2F2");
}

/// [[a, b], [c, d]] over F2 at index a + 2b + 4c + 8d; transpose involution.
inline FiniteRing m2_ring() {
  auto bit = [](int x, int k) { return (x >> k) & 1; };
  auto mul = [&](int x, int y) {
    int a = bit(x, 0), b = bit(x, 1), c = bit(x, 2), d = bit(x, 3);
    int e = bit(y, 0), f = bit(y, 1), g = bit(y, 2), h = bit(y, 3);
    return ((a & e) ^ (b & g)) + 2 * ((a & f) ^ (b & h)) + 4 * ((c & e) ^ (d & g)) + 8 * ((c & f) ^ (d & h));
  };
  std::vector<int> transpose(16);
  for (int x = 0; x < 16; ++x)
    transpose[static_cast<std::size_t>(x)] = bit(x, 0) + 2 * bit(x, 2) + 4 * bit(x, 1) + 8 * bit(x, 3);
  return ring_from_ops(16, [](int a, int b) { return a ^ b; }, mul, transpose, "M2F2");
}

inline std::vector<FiniteRing> rings() {
  return {zn_ring(2), zn_ring(4), f4_ring(), klein_ring(), t2_ring(), m2_ring()};
}

/// Thin category of a partial order given by `leq[i][j]` (reflexive,
/// transitive). Identities are named 1_x and the other arrows x<y.
inline FiniteCategory poset_category(std::string label, const std::vector<std::string>& names,
                                     const std::vector<std::vector<bool>>& leq) {
  const auto m = names.size();
  std::vector<Arrow> arrows;
  std::vector<int> ids(m);
  std::vector<std::vector<int>> index(m, std::vector<int>(m, -1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!leq[i][j]) continue;
      index[i][j] = static_cast<int>(arrows.size());
      if (i == j) ids[i] = static_cast<int>(arrows.size());
      arrows.push_back(Arrow{i == j ? "1_" + names[i] : names[i] + "<" + names[j], static_cast<int>(i), static_cast<int>(j)});
    }
  auto c = make_category(names, arrows, ids, [&](int g, int f) {
    return index[static_cast<std::size_t>(arrows[static_cast<std::size_t>(f)].src)]
                [static_cast<std::size_t>(arrows[static_cast<std::size_t>(g)].dst)];
  });
  c.label = std::move(label);
  validate_category(c);
  return c;
}

/// Objects a, b and one arrow f: a -> b.
inline FiniteCategory arrow_category() {
  auto c = poset_category("2", {"a", "b"}, {{true, true}, {false, true}});
  c.arrows[1].name = "f";
  return c;
}

inline FiniteCategory chain3() {
  return poset_category("chain3", {"0", "1", "2"}, {{true, true, true}, {false, true, true}, {false, false, true}});
}

/// m below both x and y, which are incomparable; m is their meet.
inline FiniteCategory meet_semilattice() {
  return poset_category("meet", {"m", "x", "y"}, {{true, true, true}, {false, true, false}, {false, false, true}});
}

/// One object; arrows are the group elements g0, g1, ... composing by the table.
inline FiniteCategory monoid_category(const FiniteGroup& g) {
  std::vector<Arrow> arrows;
  for (int x = 0; x < g.order(); ++x) arrows.push_back(Arrow{"g" + std::to_string(x), 0, 0});
  auto c = make_category({"*"}, arrows, {g.identity()}, [&](int a, int b) { return g.mul(a, b); });
  c.label = "B" + g.name();
  validate_category(c);
  return c;
}

/// One object; arrows are the ring elements r0, r1, ...; composition is the
/// product and hom-set addition the ring sum.
inline FiniteCategory ring_category(const FiniteRing& r) {
  std::vector<Arrow> arrows;
  for (int x = 0; x < r.order(); ++x) arrows.push_back(Arrow{"r" + std::to_string(x), 0, 0});
  auto c = make_category({"*"}, arrows, {r.one()}, [&](int a, int b) { return r.mul(a, b); });
  set_sum(c, [&](int a, int b) { return r.add(a, b); });
  c.label = "R" + r.name();
  validate_category(c);
  return c;
}

/// Objects p, q over F2 with Hom(p,p) = Hom(q,q) = Hom(p,q) = F2 and
/// Hom(q,p) = 0. Composition multiplies scalars, addition adds them.
inline FiniteCategory upper_triangular_category() {
  struct Entry {
    int src, dst, value;
  };
  const std::vector<Entry> e{{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}};
  const std::vector<std::string> names{"0_p", "1_p", "0_q", "1_q", "0_pq", "u", "0_qp"};
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < e.size(); ++i) arrows.push_back(Arrow{names[i], e[i].src, e[i].dst});
  // Hom(q, p) has only the zero arrow, so a product landing there is zero.
  auto find = [&](int s, int d, int v) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i].src == s && e[i].dst == d && e[i].value == (s == 1 && d == 0 ? 0 : v)) return static_cast<int>(i);
    return -1;
  };
  auto c = make_category({"p", "q"}, arrows, {1, 3}, [&](int g, int f) {
    const auto& a = e[static_cast<std::size_t>(f)];
    const auto& b = e[static_cast<std::size_t>(g)];
    return find(a.src, b.dst, a.value * b.value);
  });
  set_sum(c, [&](int x, int y) {
    const auto& a = e[static_cast<std::size_t>(x)];
    return find(a.src, a.dst, a.value ^ e[static_cast<std::size_t>(y)].value);
  });
  c.label = "T2cat";
  validate_category(c);
  return c;
}

inline std::vector<FiniteCategory> categories() {
  return {arrow_category(), chain3(), meet_semilattice(), monoid_category(cyclic(2))};
}

inline std::vector<FiniteCategory> preadditive_categories() {
  return {ring_category(zn_ring(2)), upper_triangular_category()};
}

}  // namespace antihom::builtin
