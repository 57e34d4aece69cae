#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "group.hpp"
#include "morphism.hpp"
#include "report.hpp"
#include "ring.hpp"

namespace antihom {

// Uniform access to quotients and substructures of groups and rings so that
// the verifiers below are written once.
inline const FiniteGroup& carrier(const GroupQuotient& q) { return q.group; }
inline const FiniteRing& carrier(const RingQuotient& q) { return q.ring; }
inline GroupQuotient quotient_by(const FiniteGroup& g, const Subgroup& n) { return quotient(g, n); }
inline RingQuotient quotient_by(const FiniteRing& r, const RingIdeal& i) { return quotient_ring(r, i); }
inline int neutral(const FiniteGroup& g) { return g.identity(); }
inline int neutral(const FiniteRing& r) { return r.zero(); }

struct InducedGroupView {
  FiniteGroup structure;
  GroupMorphism inclusion;
};
struct InducedRingView {
  FiniteRing structure;
  RingMorphism inclusion;
};
inline InducedGroupView induced(const FiniteGroup& g, const std::vector<int>& members, std::string name) {
  auto i = induced_group(Subgroup{g, members}, std::move(name));
  return {i.group, i.inclusion};
}
inline InducedRingView induced(const FiniteRing& r, const std::vector<int>& members, std::string name) {
  auto i = induced_ring(r, members, std::move(name));
  return {i.ring, i.inclusion};
}

namespace detail {

// Image of each coset under `f`, checking that `f` is constant on it.
template <class S>
std::vector<int> descend(const std::vector<std::vector<int>>& cosets, const std::vector<int>& f, std::string& bad) {
  std::vector<int> out;
  for (const auto& c : cosets) {
    int v = f[static_cast<std::size_t>(c[0])];
    for (int x : c)
      if (f[static_cast<std::size_t>(x)] != v && bad.empty())
        bad = cat("elements ", c[0], " and ", x, " share a coset but map to ", v, " and ", f[static_cast<std::size_t>(x)]);
    out.push_back(v);
  }
  return out;
}

inline std::vector<int> compose_tables(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[static_cast<std::size_t>(f[i])];
  return out;
}

inline int local_index(const std::vector<int>& members, int x) {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  return it != members.end() && *it == x ? static_cast<int>(it - members.begin()) : -1;
}

inline std::vector<int> localize(const std::vector<int>& members, const std::vector<int>& xs) {
  std::vector<int> out;
  for (int x : xs) out.push_back(local_index(members, x));
  return out;
}

// Number of anti maps `src -> dst` whose composite with `pre` equals `want`.
template <class S>
int count_anti_solutions(const S& src, const S& dst, const std::vector<int>& pre, const std::vector<int>& want,
                         long bound) {
  int n = 0;
  for (const auto& l : enumerate_antihoms(src, dst, bound))
    if (compose_tables(l.images, pre) == want) ++n;
  return n;
}

}  // namespace detail

/// Anti-factorization through G/N: psi(xN) := phi(x).
template <class S, class Sub>
TheoremReport verify_anti_factorization(const S& g, const Sub& n, const Morphism<S>& phi, long bound = kDefaultBound) {
  TheoremReport r;
  r.theorem = "anti-factorization";
  r.inputs = {g.name(), cat("normal ", format_list(n.members)), describe(phi, "phi")};
  r.uniqueness = Uniqueness::enumeration;
  if (phi.variance != Variance::anti) fail(ErrorKind::PreconditionFailed, "phi must be anti");
  if (!(phi.source == g)) fail(ErrorKind::PreconditionFailed, "phi does not start at the given structure");
  for (int x : n.members)
    if (phi(x) != neutral(phi.target))
      fail(ErrorKind::PreconditionFailed, cat("element ", x, " of the normal part maps to ", phi(x)));

  auto q = quotient_by(g, n);
  std::string bad;
  auto psi = detail::descend<S>(q.cosets, phi.images, bad);
  r.check("well-defined", bad.empty(), bad);
  auto law = law_violation(carrier(q), phi.target, psi, Variance::anti);
  r.check("psi-anti", !law, law.value_or(""));
  r.check("psi-after-projection-is-phi", detail::compose_tables(psi, q.projection.images) == phi.images);
  int sols = detail::count_anti_solutions(carrier(q), phi.target, q.projection.images, phi.images, bound);
  r.check("unique", sols == 1, cat(sols, " solutions"));
  r.witnesses.push_back(describe(Morphism<S>{carrier(q), phi.target, psi, Variance::anti}, "psi"));
  return r;
}

/// x Ker -> phi(x) as an anti-isomorphism onto the image, plus the
/// injective/surjective corollaries where they apply.
template <class S>
TheoremReport verify_anti_hom_theorem(const Morphism<S>& phi, long bound = kDefaultBound) {
  TheoremReport r;
  r.theorem = "anti-homomorphism";
  r.inputs = {describe(phi, "phi")};
  r.uniqueness = Uniqueness::enumeration;
  if (phi.variance != Variance::anti) fail(ErrorKind::PreconditionFailed, "phi must be anti");

  auto ker = kernel(phi);
  auto q = quotient_by(phi.source, ker);
  auto img = image_set(phi);
  auto im = induced(phi.target, img, "Im");
  auto psi = detail::localize(img, phi.images);  // phi with codomain Im
  std::string bad;
  auto xi = detail::descend<S>(q.cosets, psi, bad);
  r.check("well-defined", bad.empty(), bad);
  auto law = law_violation(carrier(q), im.structure, xi, Variance::anti);
  r.check("xi-anti", !law, law.value_or(""));
  Morphism<S> xim{carrier(q), im.structure, xi, Variance::anti};
  r.check("xi-bijective", is_bijective(xim));
  r.check("inclusion-xi-projection-is-phi",
          detail::compose_tables(im.inclusion.images, detail::compose_tables(xi, q.projection.images)) == phi.images);
  int sols = detail::count_anti_solutions(carrier(q), im.structure, q.projection.images, psi, bound);
  r.check("unique", sols == 1, cat(sols, " solutions"));
  if (is_injective(phi)) {
    r.check("injective-kernel-trivial", ker.members.size() == 1);
    r.check("injective-source-onto-image", is_bijective(Morphism<S>{phi.source, im.structure, psi, Variance::anti}));
  }
  if (is_surjective(phi))
    r.check("surjective-quotient-onto-target",
            is_bijective(Morphism<S>{carrier(q), phi.target, detail::compose_tables(im.inclusion.images, xi),
                                     Variance::anti}));
  r.witnesses.push_back(describe(xim, "xi"));
  r.witnesses.push_back(cat("kernel ", format_list(ker.members)));
  return r;
}

/// For C in B, both normal in A: xi(aB) := (a^-1 C)(B/C), the unique anti
/// map with xi after rho* = tau after pi where rho* = rho after inversion.
inline TheoremReport verify_second_anti_iso(const FiniteGroup& a, const Subgroup& b, const Subgroup& c,
                                            long bound = kDefaultBound) {
  TheoremReport r;
  r.theorem = "second-anti-iso";
  r.inputs = {a.name(), cat("B ", format_list(b.members)), cat("C ", format_list(c.members))};
  r.uniqueness = Uniqueness::surjectivity;
  for (int x : c.members)
    if (!b.contains(x)) fail(ErrorKind::PreconditionFailed, cat("element ", x, " of C is not in B"));
  if (auto w = normality_witness(a, b)) fail(ErrorKind::PreconditionFailed, cat("B not normal: conjugator ", w->first));
  if (auto w = normality_witness(a, c)) fail(ErrorKind::PreconditionFailed, cat("C not normal: conjugator ", w->first));

  auto ib = induced_group(b, "B");
  Subgroup c_in_b{ib.group, detail::localize(b.members, c.members)};
  auto w1 = normality_witness(ib.group, c_in_b);
  r.check("C-normal-in-B", !w1, w1 ? cat("conjugator ", w1->first) : "");

  GroupQuotient qc = quotient(a, c);  // pi
  GroupQuotient qb = quotient(a, b);  // rho
  std::vector<int> bc_members;
  for (int x : b.members) bc_members.push_back(qc.projection(x));
  std::sort(bc_members.begin(), bc_members.end());
  bc_members.erase(std::unique(bc_members.begin(), bc_members.end()), bc_members.end());
  Subgroup bc{qc.group, bc_members};
  auto w2 = normality_witness(qc.group, bc);
  r.check("B/C-normal-in-A/C", !subgroup_violation(qc.group, bc_members) && !w2);
  if (w2) return r;
  GroupQuotient qq = quotient(qc.group, bc);  // tau

  GroupMorphism rho_star = compose(qb.projection, reverse_morphism(a));
  r.check("rho-star-surjective", is_surjective(rho_star));

  // sigma: A/C -> A/B with rho* = sigma after pi
  std::string bad;
  auto sigma = detail::descend<FiniteGroup>(qc.cosets, rho_star.images, bad);
  r.check("sigma-well-defined", bad.empty(), bad);
  auto ls = law_violation(qc.group, qb.group, sigma, Variance::anti);
  r.check("sigma-anti", !ls, ls.value_or(""));
  std::vector<int> ker_sigma;
  for (int i = 0; i < qc.group.order(); ++i)
    if (sigma[static_cast<std::size_t>(i)] == qb.group.identity()) ker_sigma.push_back(i);
  r.check("kernel-sigma-is-B/C", ker_sigma == bc_members, format_list(ker_sigma));

  // xi(rho*(a)) := tau(pi(a))
  std::vector<int> tau_pi = detail::compose_tables(qq.projection.images, qc.projection.images);
  std::vector<int> xi(static_cast<std::size_t>(qb.group.order()), -1);
  std::string xbad;
  for (int x = 0; x < a.order(); ++x) {
    int& slot = xi[static_cast<std::size_t>(rho_star(x))];
    if (slot < 0) slot = tau_pi[static_cast<std::size_t>(x)];
    else if (slot != tau_pi[static_cast<std::size_t>(x)] && xbad.empty()) xbad = cat("element ", x);
  }
  r.check("xi-well-defined", xbad.empty(), xbad);
  auto lx = law_violation(qb.group, qq.group, xi, Variance::anti);
  r.check("xi-anti", !lx, lx.value_or(""));
  r.check("xi-bijective", is_bijective(GroupMorphism{qb.group, qq.group, xi, Variance::anti}));
  r.check("xi-rho-star-is-tau-pi", detail::compose_tables(xi, rho_star.images) == tau_pi);
  r.check("xi-sigma-is-tau", detail::compose_tables(xi, sigma) == qq.projection.images);
  int sols = detail::count_anti_solutions(qb.group, qq.group, rho_star.images, tau_pi, bound);
  r.check("unique", sols == 1, cat(sols, " solutions"));
  r.witnesses.push_back(describe(GroupMorphism{qb.group, qq.group, xi, Variance::anti}, "xi"));
  r.witnesses.push_back(cat("|A/B| = ", qb.group.order(), ", |(A/C)/(B/C)| = ", qq.group.order()));
  return r;
}

/// A/(A n N) -> AN/N built from pi* after inclusion, with its inverse
/// checked as the map in the opposite direction.
inline TheoremReport verify_third_anti_iso(const FiniteGroup& g, const Subgroup& a, const Subgroup& n,
                                           long bound = kDefaultBound) {
  TheoremReport r;
  r.theorem = "third-anti-iso";
  r.inputs = {g.name(), cat("A ", format_list(a.members)), cat("N ", format_list(n.members))};
  r.uniqueness = Uniqueness::enumeration;
  if (auto v = subgroup_violation(g, a.members)) fail(ErrorKind::PreconditionFailed, "A is not a subgroup: " + *v);
  if (auto w = normality_witness(g, n)) fail(ErrorKind::PreconditionFailed, cat("N not normal: conjugator ", w->first));

  Subgroup an = subgroup_product(g, a, n);
  r.check("AN-subgroup", !subgroup_violation(g, an.members));
  auto ian = induced_group(an, "AN");
  auto ia = induced_group(a, "A");
  Subgroup n_local{ian.group, detail::localize(an.members, n.members)};
  auto w1 = normality_witness(ian.group, n_local);
  r.check("N-normal-in-AN", !w1);
  Subgroup cap = intersect(a, n);
  Subgroup cap_local{ia.group, detail::localize(a.members, cap.members)};
  auto w2 = normality_witness(ia.group, cap_local);
  r.check("intersection-normal-in-A", !w2);
  if (w1 || w2) return r;

  GroupQuotient q_an = quotient(ian.group, n_local);   // AN/N
  GroupQuotient q_a = quotient(ia.group, cap_local);   // A/(A n N), rho
  GroupMorphism incl{ia.group, ian.group, detail::localize(an.members, a.members), Variance::straight};
  GroupMorphism pi_star = compose(q_an.projection, reverse_morphism(ian.group));
  GroupMorphism phi = compose(pi_star, incl);
  r.check("phi-surjective", is_surjective(phi));
  r.check("kernel-phi-is-intersection", kernel(phi).members == cap_local.members);

  std::string bad;
  auto xi = detail::descend<FiniteGroup>(q_a.cosets, phi.images, bad);
  r.check("xi-well-defined", bad.empty(), bad);
  auto lx = law_violation(q_a.group, q_an.group, xi, Variance::anti);
  r.check("xi-anti", !lx, lx.value_or(""));
  GroupMorphism xim{q_a.group, q_an.group, xi, Variance::anti};
  r.check("xi-bijective", is_bijective(xim));
  r.check("xi-rho-is-pi-star-inclusion", detail::compose_tables(xi, q_a.projection.images) == phi.images);
  int sols = detail::count_anti_solutions(q_a.group, q_an.group, q_a.projection.images, phi.images, bound);
  r.check("unique", sols == 1, cat(sols, " solutions"));
  if (is_bijective(xim)) {
    GroupMorphism back = inverse_morphism(xim);
    r.check("inverse-anti", !law_violation(back.source, back.target, back.images, Variance::anti));
    r.check("inverse-phi-is-rho", detail::compose_tables(back.images, phi.images) == q_a.projection.images);
    int back_sols = detail::count_anti_solutions(q_an.group, q_a.group, phi.images, q_a.projection.images, bound);
    r.check("inverse-unique", back_sols == 1, cat(back_sols, " solutions"));
    r.witnesses.push_back(describe(back, "xi-inverse"));
  }
  r.witnesses.push_back(describe(xim, "xi"));
  r.witnesses.push_back(cat("AN ", format_list(an.members), ", A n N ", format_list(cap.members)));
  r.notes.push_back("the statement orients the map from AN/N, the construction from A/(A n N); both directions checked");
  return r;
}

/// Commutativity consequences for a single anti map.
inline TheoremReport verify_abelian_collapse(const GroupMorphism& phi) {
  TheoremReport r;
  r.theorem = "abelian-collapse";
  r.inputs = {describe(phi, "phi")};
  Classification c = classify(phi);
  bool hom = c == Classification::Both || c == Classification::HomOnly;
  bool src_ab = is_abelian(phi.source), dst_ab = is_abelian(phi.target);
  r.witnesses.push_back(std::string("classification ") + to_string(c));
  r.check("anti-law", satisfies(c, Variance::anti));
  if (src_ab || dst_ab) r.check("abelian-side-forces-hom", hom);
  if (is_injective(phi)) r.check("injective:hom-iff-source-abelian", hom == src_ab);
  if (is_surjective(phi)) r.check("surjective:hom-iff-target-abelian", hom == dst_ab);
  if (is_bijective(phi) && hom) {
    r.check("bijective-hom:both-abelian", src_ab && dst_ab);
    if (phi.source.order() <= kMaxIsomorphismOrder)
      r.check("bijective-hom:isomorphic", find_isomorphism(phi.source, phi.target).has_value());
  }
  return r;
}

/// Sweeps every anti map A -> B through `verify_abelian_collapse`; for a
/// non-abelian A also asserts that no bijective anti self-map obeys both laws.
inline TheoremReport verify_abelian_collapse_all(const FiniteGroup& a, const FiniteGroup& b,
                                                 long bound = kDefaultBound) {
  TheoremReport r;
  r.theorem = "abelian-collapse";
  r.inputs = {a.name(), b.name()};
  r.uniqueness = Uniqueness::enumeration;
  auto an = enumerate_antihoms(a, b, bound);
  int both_bij = 0;
  for (const auto& f : an) {
    auto sub = verify_abelian_collapse(f);
    if (!sub.pass()) r.check("map " + format_list(f.images), false, sub.first_failure());
    if (is_bijective(f) && classify(f) == Classification::Both) ++both_bij;
  }
  r.check("all-maps-consistent", r.pass());
  if (!is_abelian(a) || !is_abelian(b)) r.check("no-bijective-map-obeys-both", both_bij == 0, cat(both_bij, " found"));
  r.witnesses.push_back(cat(an.size(), " anti maps checked"));
  return r;
}

/// Bitmask scan of subsets; usable up to order 16.
inline std::vector<std::vector<int>> subsets_where(int n, const std::function<bool(const std::vector<int>&)>& keep) {
  if (n > 16) fail(ErrorKind::BoundExceeded, cat("subset scan limited to order 16, got ", n));
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (keep(s)) out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<std::vector<int>> all_subrings(const FiniteRing& r) {
  return subsets_where(r.order(), [&](const std::vector<int>& s) { return is_subring(r, s); });
}

inline std::vector<std::vector<int>> all_ideals(const FiniteRing& r, Side side) {
  return subsets_where(r.order(), [&](const std::vector<int>& s) { return is_ideal(r, s, side); });
}

/// Subrings and one-sided ideals under an anti ring map: images and
/// preimages of subrings are subrings, and left and right swap.
inline TheoremReport verify_subring_and_transport(const RingMorphism& phi) {
  TheoremReport r;
  r.theorem = "subring-transport";
  r.inputs = {describe(phi, "phi")};
  r.uniqueness = Uniqueness::enumeration;
  if (phi.variance != Variance::anti) fail(ErrorKind::PreconditionFailed, "phi must be anti");
  const FiniteRing& a = phi.source;
  const FiniteRing& b = phi.target;
  auto first_bad = [](const std::vector<std::vector<int>>& sets, auto&& map, auto&& ok) -> std::string {
    for (const auto& s : sets) {
      auto t = map(s);
      if (!ok(t)) return format_list(s) + " -> " + format_list(t);
    }
    return "";
  };
  auto img = [&](const std::vector<int>& s) {
    std::vector<int> t;
    for (int x : s) t.push_back(phi(x));
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
  };
  auto pre = [&](const std::vector<int>& s) { return preimage_set(phi, s); };

  auto sa = all_subrings(a), sb = all_subrings(b);
  std::string w = first_bad(sa, img, [&](const std::vector<int>& t) { return is_subring(b, t); });
  r.check("image-of-subring", w.empty(), w);
  w = first_bad(sb, pre, [&](const std::vector<int>& t) { return is_subring(a, t); });
  r.check("preimage-of-subring", w.empty(), w);

  for (Side side : {Side::left, Side::right}) {
    Side other = side == Side::left ? Side::right : Side::left;
    std::string tag = std::string(to_string(side)) + "-to-" + to_string(other);
    auto ib = all_ideals(b, side);
    w = first_bad(ib, pre, [&](const std::vector<int>& t) { return is_ideal(a, t, other); });
    r.check("preimage-" + tag, w.empty(), w);
    if (is_surjective(phi)) {
      auto ia = all_ideals(a, side);
      w = first_bad(ia, img, [&](const std::vector<int>& t) { return is_ideal(b, t, other); });
      r.check("image-" + tag, w.empty(), w);
    }
  }
  r.witnesses.push_back(cat(sa.size(), " subrings in source, ", sb.size(), " in target"));
  return r;
}

}  // namespace antihom
