#pragma once

#include <compare>
#include <string>
#include <vector>

namespace antihom {

enum class Variance { straight, anti };

inline Variance operator^(Variance a, Variance b) {
  return a == b ? Variance::straight : Variance::anti;
}

inline const char* to_string(Variance v) { return v == Variance::straight ? "straight" : "anti"; }

enum class Classification { HomOnly, AntiOnly, Both, Neither };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::HomOnly: return "HomOnly";
    case Classification::AntiOnly: return "AntiOnly";
    case Classification::Both: return "Both";
    case Classification::Neither: return "Neither";
  }
  return "?";
}

inline bool satisfies(Classification c, Variance v) {
  if (c == Classification::Both) return true;
  return v == Variance::straight ? c == Classification::HomOnly : c == Classification::AntiOnly;
}

/// A total map between two finite structures of the same kind, carried as an
/// image table over element indices, together with the composition law it is
/// declared to obey. The variance is stored rather than inferred so that a map
/// obeying both laws still has a definite role in a composition chain.
///
/// The constructor does not check the law; use `make_morphism` (morphism.hpp)
/// for checked construction.
template <class Structure>
struct Morphism {
  Structure source;
  Structure target;
  std::vector<int> images;
  Variance variance = Variance::straight;

  int operator()(int x) const { return images[static_cast<std::size_t>(x)]; }

  bool same_table(const Morphism& o) const { return images == o.images; }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.variance == b.variance && a.images == b.images && a.source == b.source &&
           a.target == b.target;
  }

  /// Canonical order: lexicographic on image tables, straight before anti.
  friend bool operator<(const Morphism& a, const Morphism& b) {
    if (a.images != b.images) return a.images < b.images;
    return a.variance < b.variance;
  }
};

}  // namespace antihom
