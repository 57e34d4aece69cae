#pragma once

// Brute-force reference computations. These scan full map spaces and use
// only the raw operation tables, never the library's enumerators.

#include <functional>
#include <vector>

#include "antihom/category.hpp"
#include "antihom/group.hpp"
#include "antihom/ring.hpp"

namespace oracle {

/// Calls visit(table) for every map {0..n-1} -> {0..m-1}.
inline void for_each_table(int n, int m, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(t);
    int i = 0;
    while (i < n && ++t[static_cast<std::size_t>(i)] == m) t[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return;
  }
}

inline bool group_straight(const antihom::FiniteGroup& a, const antihom::FiniteGroup& b, const std::vector<int>& f) {
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (f[static_cast<std::size_t>(a.mul(x, y))] != b.mul(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

inline bool group_anti(const antihom::FiniteGroup& a, const antihom::FiniteGroup& b, const std::vector<int>& f) {
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (f[static_cast<std::size_t>(a.mul(x, y))] != b.mul(f[static_cast<std::size_t>(y)], f[static_cast<std::size_t>(x)]))
        return false;
  return true;
}

struct Counts {
  long straight = 0;
  long anti = 0;
};

inline Counts group_counts(const antihom::FiniteGroup& a, const antihom::FiniteGroup& b) {
  Counts c;
  for_each_table(a.order(), b.order(), [&](const std::vector<int>& f) {
    c.straight += group_straight(a, b, f);
    c.anti += group_anti(a, b, f);
  });
  return c;
}

/// Unital ring maps; `anti` reverses products.
inline bool ring_map(const antihom::FiniteRing& a, const antihom::FiniteRing& b, const std::vector<int>& f, bool anti,
                     bool unital = true) {
  auto at = [&](int x) { return f[static_cast<std::size_t>(x)]; };
  if (unital && at(a.one()) != b.one()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y) {
      if (at(a.add(x, y)) != b.add(at(x), at(y))) return false;
      if (at(a.mul(x, y)) != (anti ? b.mul(at(y), at(x)) : b.mul(at(x), at(y)))) return false;
    }
  return true;
}

inline Counts ring_counts(const antihom::FiniteRing& a, const antihom::FiniteRing& b, bool unital = true) {
  Counts c;
  for_each_table(a.order(), b.order(), [&](const std::vector<int>& f) {
    c.straight += ring_map(a, b, f, false, unital);
    c.anti += ring_map(a, b, f, true, unital);
  });
  return c;
}

/// Functors by scanning every object map and every arrow map.
inline long functor_count(const antihom::FiniteCategory& c, const antihom::FiniteCategory& d) {
  long count = 0;
  for_each_table(c.object_count(), d.object_count(), [&](const std::vector<int>& obj) {
    for_each_table(c.size(), d.size(), [&](const std::vector<int>& arr) {
      auto F = [&](int f) { return arr[static_cast<std::size_t>(f)]; };
      for (int f = 0; f < c.size(); ++f)
        if (d.src(F(f)) != obj[static_cast<std::size_t>(c.src(f))] || d.dst(F(f)) != obj[static_cast<std::size_t>(c.dst(f))])
          return;
      for (int x = 0; x < c.object_count(); ++x)
        if (F(c.id(x)) != d.id(obj[static_cast<std::size_t>(x)])) return;
      for (int g = 0; g < c.size(); ++g)
        for (int f = 0; f < c.size(); ++f)
          if (c.dst(f) == c.src(g) && F(c.compose(g, f)) != d.compose(F(g), F(f))) return;
      ++count;
    });
  });
  return count;
}

/// Greatest lower bound of i and j in a thin category, or -1.
inline int poset_meet(const antihom::FiniteCategory& c, int i, int j) {
  auto leq = [&](int a, int b) { return !c.hom(a, b).empty(); };
  for (int m = 0; m < c.object_count(); ++m) {
    if (!leq(m, i) || !leq(m, j)) continue;
    bool greatest = true;
    for (int z = 0; z < c.object_count(); ++z)
      if (leq(z, i) && leq(z, j) && !leq(z, m)) greatest = false;
    if (greatest) return m;
  }
  return -1;
}

}  // namespace oracle
