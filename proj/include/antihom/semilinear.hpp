#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "morphism_type.hpp"
#include "report.hpp"

namespace antihom {

/// v -> M frob^t(v) from F^cols to F^rows, t = 0 for straight and 1 for anti.
struct SemilinearMap {
  Matrix matrix;
  Variance twist = Variance::straight;

  int source_dim() const { return matrix.cols; }
  int target_dim() const { return matrix.rows; }
  friend bool operator==(const SemilinearMap&, const SemilinearMap&) = default;
};

inline std::vector<int> apply(const FieldFq2& f, const SemilinearMap& m, const std::vector<int>& v) {
  return mat_vec(f, m.matrix, m.twist == Variance::anti ? frobenius(f, v) : v);
}

/// g after f: M_g frob^{t_g}(M_f), twists XOR.
inline SemilinearMap compose(const FieldFq2& f, const SemilinearMap& g, const SemilinearMap& h) {
  if (h.target_dim() != g.source_dim())
    fail(ErrorKind::NotComposable, cat("inner map lands in dimension ", h.target_dim(), ", outer map starts at ",
                                       g.source_dim()));
  Matrix right = g.twist == Variance::anti ? frobenius(f, h.matrix) : h.matrix;
  return SemilinearMap{mat_mul(f, g.matrix, right), g.twist ^ h.twist};
}

/// Identity matrix with the anti twist: coordinatewise Frobenius in the
/// standard basis.
inline SemilinearMap reverse_map(int n) { return SemilinearMap{Matrix::identity(n), Variance::anti}; }

inline SemilinearMap identity_map(int n) { return SemilinearMap{Matrix::identity(n), Variance::straight}; }

inline SemilinearMap zero_map(int rows, int cols, Variance t) { return SemilinearMap{Matrix(rows, cols), t}; }

/// f after the reverse map of its source: same matrix, flipped twist.
inline SemilinearMap corresponding(const FieldFq2& f, const SemilinearMap& m) {
  return compose(f, m, reverse_map(m.source_dim()));
}

/// Transported star product g* . f* := g* after 1* after f*. Associative with
/// unit 1* on the nose.
inline SemilinearMap star_compose(const FieldFq2& f, const SemilinearMap& g, const SemilinearMap& h) {
  if (g.twist != Variance::anti || h.twist != Variance::anti)
    fail(ErrorKind::PreconditionFailed, "star composition takes two anti maps");
  return compose(f, compose(f, g, reverse_map(g.source_dim())), h);
}

/// The literal (g* after f*) after 1*, which agrees with `star_compose`
/// exactly when 1* commutes with f*.
inline SemilinearMap star_compose_literal(const FieldFq2& f, const SemilinearMap& g, const SemilinearMap& h) {
  return compose(f, compose(f, g, h), reverse_map(h.source_dim()));
}

inline SemilinearMap add_maps(const FieldFq2& f, const SemilinearMap& a, const SemilinearMap& b) {
  if (a.twist != b.twist) fail(ErrorKind::PreconditionFailed, "sum of maps with different twists");
  return SemilinearMap{mat_add(f, a.matrix, b.matrix), a.twist};
}

/// Set-theoretic kernel: frob^t(ker M), spanned by the Frobenius images of a
/// null-space basis.
inline std::vector<std::vector<int>> kernel_basis(const FieldFq2& f, const SemilinearMap& m) {
  auto basis = null_space(f, m.matrix);
  if (m.twist == Variance::anti)
    for (auto& v : basis) v = frobenius(f, v);
  return basis;
}

/// Image = column space of M (frob is onto).
inline std::vector<std::vector<int>> image_basis(const FieldFq2& f, const SemilinearMap& m) {
  return column_basis(f, m.matrix);
}

/// A quotient V -> V/W as a surjective straight map whose kernel is W.
struct QuotientSpace {
  int dim = 0;
  SemilinearMap projection;
};

inline QuotientSpace quotient_space(const FieldFq2& f, int n, const std::vector<std::vector<int>>& sub) {
  Matrix q = quotient_map(f, n, sub);
  return QuotientSpace{q.rows, SemilinearMap{q, Variance::straight}};
}

inline QuotientSpace coimage(const FieldFq2& f, const SemilinearMap& m) {
  return quotient_space(f, m.source_dim(), kernel_basis(f, m));
}

inline QuotientSpace cokernel(const FieldFq2& f, const SemilinearMap& m) {
  return quotient_space(f, m.target_dim(), image_basis(f, m));
}

inline bool is_injective(const FieldFq2& f, const SemilinearMap& m) { return rank(f, m.matrix) == m.source_dim(); }
inline bool is_surjective(const FieldFq2& f, const SemilinearMap& m) { return rank(f, m.matrix) == m.target_dim(); }

/// x -> Coim -> Im -> y: a straight surjection, a bijective map of the same
/// twist as the input, and a straight injection.
struct FactorSequence {
  SemilinearMap onto_coimage;
  SemilinearMap middle;
  SemilinearMap into_target;
  bool middle_unique = false;
};

inline FactorSequence factor_sequence(const FieldFq2& f, const SemilinearMap& m) {
  // Kernel of the set map is ker(frob^t(M)); its nonzero reduced rows give a
  // surjection with exactly that kernel.
  Matrix twisted = m.twist == Variance::anti ? frobenius(f, m.matrix) : m.matrix;
  Matrix p = row_basis(f, twisted);
  Matrix b = Matrix::from_columns(m.target_dim(), image_basis(f, m));
  Matrix right = m.twist == Variance::anti ? frobenius(f, p) : p;
  // Solve B C R = M in two steps: B Y = M, then R^T C^T = Y^T.
  FactorSequence out;
  out.onto_coimage = SemilinearMap{p, Variance::straight};
  out.into_target = SemilinearMap{b, Variance::straight};
  auto y = solve(f, b, m.matrix);
  if (!y.x) fail(ErrorKind::LawViolation, "image basis does not span the columns");
  auto c = solve(f, transpose(right), transpose(*y.x));
  if (!c.x) fail(ErrorKind::LawViolation, "coimage rows do not span the row space");
  out.middle = SemilinearMap{transpose(*c.x), m.twist};
  out.middle_unique = y.unique && c.unique;
  return out;
}

/// Uniform random matrix of the given shape.
inline Matrix random_matrix(const FieldFq2& f, int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, f.size() - 1);
  Matrix m(rows, cols);
  for (int& x : m.data) x = d(rng);
  return m;
}

/// Random matrix of exactly the requested rank (rank <= min(rows, cols)).
inline Matrix random_matrix_of_rank(const FieldFq2& f, int rows, int cols, int r, std::mt19937_64& rng) {
  while (true) {
    Matrix m = mat_mul(f, random_matrix(f, rows, r, rng), random_matrix(f, r, cols, rng));
    if (rank(f, m) == r) return m;
  }
}

/// All maps F^cols -> F^rows of the given twist (small shapes only).
inline std::vector<SemilinearMap> all_maps(const FieldFq2& f, int rows, int cols, Variance t) {
  std::vector<SemilinearMap> out;
  for (auto& entries : all_vectors(f, rows * cols)) {
    Matrix m(rows, cols);
    m.data = entries;
    out.push_back(SemilinearMap{std::move(m), t});
  }
  return out;
}

/// Whether the set map given on all of F^n by `values` (in `all_vectors`
/// order) is straight or anti semilinear.
inline bool table_has_twist(const FieldFq2& f, int n, int m, const std::vector<std::vector<int>>& values, Variance t) {
  auto vs = all_vectors(f, n);
  std::vector<std::vector<int>> cols;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    cols.push_back(values[static_cast<std::size_t>(std::find(vs.begin(), vs.end(), e) - vs.begin())]);
  }
  SemilinearMap cand{Matrix::from_columns(m, cols), t};
  for (std::size_t k = 0; k < vs.size(); ++k)
    if (apply(f, cand, vs[k]) != values[k]) return false;
  return true;
}

inline std::string render(const FieldFq2& f, const SemilinearMap& m) {
  std::string s = std::string(to_string(m.twist)) + " " + std::to_string(m.matrix.rows) + "x" +
                  std::to_string(m.matrix.cols) + " [";
  for (int i = 0; i < m.matrix.rows; ++i) {
    if (i) s += ";";
    for (int j = 0; j < m.matrix.cols; ++j) s += (j ? " " : "") + f.symbol(m.matrix.at(i, j));
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Verifiers

/// Twist law, factor sequence and rank-nullity for one map.
inline TheoremReport verify_semilinear_basics(const FieldFq2& f, const SemilinearMap& m) {
  TheoremReport r;
  r.theorem = "semilinear-basics";
  r.inputs = {render(f, m)};
  r.uniqueness = Uniqueness::surjectivity;
  auto ker = kernel_basis(f, m);
  int rk = rank(f, m.matrix);
  r.check("rank-nullity", static_cast<int>(ker.size()) + rk == m.source_dim(),
          cat(ker.size(), " + ", rk, " != ", m.source_dim()));
  std::string bad;
  for (const auto& v : ker)
    if (apply(f, m, v) != std::vector<int>(static_cast<std::size_t>(m.target_dim()), 0)) bad = "kernel vector not sent to 0";
  r.check("kernel-vectors-vanish", bad.empty(), bad);

  auto fs = factor_sequence(f, m);
  SemilinearMap comp = compose(f, fs.into_target, compose(f, fs.middle, fs.onto_coimage));
  r.check("factor-sequence-composite", comp == m, render(f, comp));
  r.check("middle-square", fs.middle.matrix.rows == fs.middle.matrix.cols && fs.middle.matrix.rows == rk);
  r.check("middle-bijective", rank(f, fs.middle.matrix) == rk);
  r.check("middle-twist", fs.middle.twist == m.twist);
  r.check("middle-unique", fs.middle_unique);
  r.check("onto-coimage-surjective", is_surjective(f, fs.onto_coimage));
  r.check("into-target-injective", is_injective(f, fs.into_target));
  r.witnesses.push_back("middle " + render(f, fs.middle));
  return r;
}

/// g after h for two anti maps: matrix is M_g frob(M_h), straight twist, and
/// agrees with applying both maps to every vector when the source is small.
inline TheoremReport verify_twist_law(const FieldFq2& f, const SemilinearMap& g, const SemilinearMap& h) {
  TheoremReport r;
  r.theorem = "twist-law";
  r.inputs = {render(f, g), render(f, h)};
  SemilinearMap c = compose(f, g, h);
  r.check("twist-xor", c.twist == (g.twist ^ h.twist));
  Matrix expect = mat_mul(f, g.matrix, g.twist == Variance::anti ? frobenius(f, h.matrix) : h.matrix);
  r.check("matrix-law", c.matrix == expect);
  if (h.source_dim() <= 4) {
    std::string bad;
    for (const auto& v : all_vectors(f, h.source_dim()))
      if (apply(f, c, v) != apply(f, g, apply(f, h, v))) {
        bad = "vector " + format_list(v);
        break;
      }
    r.check("pointwise", bad.empty(), bad);
  }
  return r;
}

/// x/Ker f* -> Im f*: the middle of the factor sequence, with the injective
/// and surjective special cases.
inline TheoremReport verify_generalized_anti_hom(const FieldFq2& f, const SemilinearMap& m) {
  TheoremReport r;
  r.theorem = "generalized-anti-hom";
  r.inputs = {render(f, m)};
  r.uniqueness = Uniqueness::surjectivity;
  auto co = coimage(f, m);
  int im = static_cast<int>(image_basis(f, m).size());
  r.check("dimensions-agree", co.dim == im, cat(co.dim, " vs ", im));
  auto fs = factor_sequence(f, m);
  r.check("anti-iso", fs.middle.twist == m.twist && rank(f, fs.middle.matrix) == im);
  r.check("unique", fs.middle_unique);
  if (is_injective(f, m)) r.check("injective:source-iso-image", m.source_dim() == im);
  if (is_surjective(f, m)) r.check("surjective:quotient-iso-target", co.dim == m.target_dim());
  return r;
}

/// For an injective straight mu: z -> x with f* after mu = 0, the unique
/// psi* : x/z -> y with psi* after pi = f*.
inline TheoremReport verify_generalized_anti_factorization(const FieldFq2& f, const SemilinearMap& m,
                                                           const SemilinearMap& mu) {
  TheoremReport r;
  r.theorem = "generalized-anti-factorization";
  r.inputs = {render(f, m), render(f, mu)};
  r.uniqueness = Uniqueness::surjectivity;
  if (mu.twist != Variance::straight || !is_injective(f, mu))
    fail(ErrorKind::PreconditionFailed, "mu must be an injective straight map");
  if (mu.target_dim() != m.source_dim()) fail(ErrorKind::PreconditionFailed, "mu does not land in the source");
  SemilinearMap fm = compose(f, m, mu);
  if (rank(f, fm.matrix) != 0) fail(ErrorKind::PreconditionFailed, "f* after mu is not zero");

  std::vector<std::vector<int>> sub;
  for (int j = 0; j < mu.matrix.cols; ++j) sub.push_back(mu.matrix.column(j));
  auto q = quotient_space(f, m.source_dim(), sub);
  // psi frob(P) = M  <=>  frob(P)^T psi^T = M^T
  Matrix twisted_p = m.twist == Variance::anti ? frobenius(f, q.projection.matrix) : q.projection.matrix;
  auto sol = solve(f, transpose(twisted_p), transpose(m.matrix));
  r.check("exists", sol.x.has_value());
  if (!sol.x) return r;
  SemilinearMap psi{transpose(*sol.x), m.twist};
  r.check("psi-after-pi-is-f", compose(f, psi, q.projection) == m);
  r.check("unique", sol.unique);
  r.check("pi-kernel-is-z", rank(f, q.projection.matrix) == m.source_dim() - mu.source_dim());
  r.witnesses.push_back("psi " + render(f, psi));
  return r;
}

/// C in B in F^n: xi* = theta after 1*, where theta: A/B -> (A/C)/(B/C) is
/// the straight comparison map and rho* = 1* after rho.
inline TheoremReport verify_generalized_second_iso(const FieldFq2& f, int n, const std::vector<std::vector<int>>& b,
                                                   const std::vector<std::vector<int>>& c) {
  TheoremReport r;
  r.theorem = "generalized-second-anti-iso";
  r.inputs = {cat("dim ", n), cat("B dim ", b.size()), cat("C dim ", c.size())};
  r.uniqueness = Uniqueness::surjectivity;
  auto span_rank = [&](const std::vector<std::vector<int>>& vs) {
    return vs.empty() ? 0 : rank(f, Matrix::from_columns(n, vs));
  };
  std::vector<std::vector<int>> bc = b;
  bc.insert(bc.end(), c.begin(), c.end());
  if (span_rank(bc) != span_rank(b)) fail(ErrorKind::PreconditionFailed, "C is not contained in B");

  auto pc = quotient_space(f, n, c);  // pi: A -> A/C
  auto pb = quotient_space(f, n, b);  // rho: A -> A/B
  std::vector<std::vector<int>> b_mod_c;
  for (const auto& v : b) b_mod_c.push_back(mat_vec(f, pc.projection.matrix, v));
  auto tq = quotient_space(f, pc.dim, b_mod_c);  // tau: A/C -> (A/C)/(B/C)
  SemilinearMap tau_pi = compose(f, tq.projection, pc.projection);

  // theta rho = tau pi  <=>  rho^T theta^T = (tau pi)^T
  auto sol = solve(f, transpose(pb.projection.matrix), transpose(tau_pi.matrix));
  r.check("theta-exists", sol.x.has_value());
  if (!sol.x) return r;
  SemilinearMap theta{transpose(*sol.x), Variance::straight};
  SemilinearMap rho_star = compose(f, reverse_map(pb.dim), pb.projection);
  SemilinearMap xi = compose(f, theta, reverse_map(pb.dim));
  r.check("xi-anti", xi.twist == Variance::anti);
  r.check("xi-bijective", xi.matrix.rows == xi.matrix.cols && rank(f, xi.matrix) == xi.matrix.rows,
          cat("dims ", pb.dim, " and ", tq.dim));
  r.check("xi-rho-star-is-tau-pi", compose(f, xi, rho_star) == tau_pi);
  r.check("rho-star-surjective", is_surjective(f, rho_star));
  r.check("unique", sol.unique);
  if (span_rank(b) == span_rank(c)) r.check("equal-subspaces:B/C-zero", tq.dim == pc.dim);
  r.witnesses.push_back("xi " + render(f, xi));
  return r;
}

/// Post-composition with f* is injective on Hom(z, x) for z of dimension
/// 0..2 iff f* is injective; pre-composition on Hom(y, z) iff surjective.
inline TheoremReport verify_anti_mono_epi(const FieldFq2& f, const SemilinearMap& m) {
  TheoremReport r;
  r.theorem = "anti-mono-epi";
  r.inputs = {render(f, m)};
  r.uniqueness = Uniqueness::enumeration;
  if (m.source_dim() > 2 || m.target_dim() > 2 || f.size() != 4)
    fail(ErrorKind::BoundExceeded, "anti-mono/epi check runs on F4 with dimensions <= 2");
  bool mono = true, epi = true;
  std::string mono_w, epi_w;
  for (int z = 0; z <= 2; ++z) {
    auto homs = all_maps(f, m.source_dim(), z, Variance::straight);
    for (std::size_t i = 0; i < homs.size() && mono; ++i)
      for (std::size_t j = i + 1; j < homs.size() && mono; ++j)
        if (compose(f, m, homs[i]) == compose(f, m, homs[j])) {
          mono = false;
          mono_w = "v=" + render(f, homs[i]) + " w=" + render(f, homs[j]);
        }
    auto outs = all_maps(f, z, m.target_dim(), Variance::straight);
    for (std::size_t i = 0; i < outs.size() && epi; ++i)
      for (std::size_t j = i + 1; j < outs.size() && epi; ++j)
        if (compose(f, outs[i], m) == compose(f, outs[j], m)) {
          epi = false;
          epi_w = "v=" + render(f, outs[i]) + " w=" + render(f, outs[j]);
        }
  }
  bool inj = is_injective(f, m), surj = is_surjective(f, m);
  r.check("mono-iff-injective", mono == inj, mono_w);
  r.check("epi-iff-surjective", epi == surj, epi_w);
  if (!inj) {
    auto vs = all_vectors(f, m.source_dim());
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (apply(f, m, vs[i]) == apply(f, m, vs[j])) {
          r.witnesses.push_back("collision " + format_list(vs[i]) + " " + format_list(vs[j]));
          i = j = vs.size();
        }
  }
  r.witnesses.push_back(std::string("anti-mono ") + (mono ? "yes" : "no") + ", anti-epi " + (epi ? "yes" : "no"));
  return r;
}

/// Hom and An between spaces of dimension 1 and 2: counts, functoriality of
/// An(-, -) under the star product, naturality of g -> g after 1*, and the
/// additive structure. Seeded maps index the naturality squares.
inline TheoremReport an_bifunctor_check(const FieldFq2& f, std::uint64_t seed, const std::vector<int>& dims = {1, 2}) {
  TheoremReport r;
  r.theorem = "an-bifunctor";
  r.inputs = {f.name(), cat("seed ", seed)};
  r.uniqueness = Uniqueness::enumeration;
  for (int d : dims)
    if (d > 2) fail(ErrorKind::BoundExceeded, "grid dimensions are limited to 2");
  std::mt19937_64 rng(seed);
  auto rnd = [&](int rows, int cols, Variance t) { return SemilinearMap{random_matrix(f, rows, cols, rng), t}; };
  long literal_disagree = 0, literal_total = 0;

  for (int x : dims)
    for (int y : dims) {
      auto homs = all_maps(f, y, x, Variance::straight);
      auto ans = all_maps(f, y, x, Variance::anti);
      long expect = 1;
      for (int k = 0; k < x * y; ++k) expect *= f.size();
      std::string cell = cat("(", x, ",", y, ")");
      r.check("count" + cell, static_cast<long>(homs.size()) == expect && homs.size() == ans.size());

      // The correspondence is a bijection respecting sums.
      std::vector<SemilinearMap> image;
      for (const auto& g : homs) image.push_back(corresponding(f, g));
      std::sort(image.begin(), image.end(), [](const auto& a, const auto& b) { return a.matrix.data < b.matrix.data; });
      bool bij = std::adjacent_find(image.begin(), image.end()) == image.end();
      r.check("correspondence-bijective" + cell, bij);
      SemilinearMap g1 = rnd(y, x, Variance::straight), g2 = rnd(y, x, Variance::straight);
      r.check("correspondence-additive" + cell,
              corresponding(f, add_maps(f, g1, g2)) == add_maps(f, corresponding(f, g1), corresponding(f, g2)));
      SemilinearMap a1 = corresponding(f, g1), a2 = corresponding(f, g2);
      if (x <= 2) {
        std::vector<std::vector<int>> values;
        for (const auto& v : all_vectors(f, x)) {
          auto s = apply(f, a1, v), t = apply(f, a2, v);
          for (std::size_t i = 0; i < s.size(); ++i) s[i] = f.add(s[i], t[i]);
          values.push_back(s);
        }
        r.check("sum-of-anti-is-anti" + cell, table_has_twist(f, x, y, values, Variance::anti));
      }

      for (int w : dims)
        for (int z : dims) {
          // naturality: Phi(h g k) = h* . Phi(g) . k*  for k: w -> x, h: y -> z
          SemilinearMap k = rnd(x, w, Variance::straight), h = rnd(z, y, Variance::straight);
          std::string sq = cat("(", w, ",", x, ",", y, ",", z, ")");
          bool nat = true;
          for (const auto& g : homs) {
            SemilinearMap lhs = corresponding(f, compose(f, h, compose(f, g, k)));
            SemilinearMap rhs = star_compose(f, corresponding(f, h), star_compose(f, corresponding(f, g), corresponding(f, k)));
            if (!(lhs == rhs)) nat = false;
            ++literal_total;
            SemilinearMap lit = star_compose_literal(
                f, corresponding(f, h), star_compose_literal(f, corresponding(f, g), corresponding(f, k)));
            if (!(lit == lhs)) ++literal_disagree;
          }
          r.check("naturality" + sq, nat);

          // functoriality of An(-, z) and An(x, -) under the star product
          SemilinearMap k2 = rnd(x, w, Variance::anti);
          SemilinearMap k1 = rnd(w, w, Variance::anti);
          SemilinearMap h1 = rnd(z, y, Variance::anti);
          SemilinearMap h2 = rnd(z, z, Variance::anti);
          bool fun = true, unit = true;
          for (const auto& g : ans) {
            // contravariant: An(k2 . k1, z) = An(k1, z) o An(k2, z)
            fun = fun && star_compose(f, g, star_compose(f, k2, k1)) == star_compose(f, star_compose(f, g, k2), k1);
            // covariant: An(x, h2 . h1) = An(x, h2) o An(x, h1)
            fun = fun && star_compose(f, star_compose(f, h2, h1), g) == star_compose(f, h2, star_compose(f, h1, g));
            unit = unit && star_compose(f, g, reverse_map(x)) == g && star_compose(f, reverse_map(y), g) == g;
          }
          r.check("functoriality" + sq, fun);
          r.check("identities" + sq, unit);
        }
    }
  r.notes.push_back(cat("literal (g f) 1* product disagrees with the transported product on ", literal_disagree, " of ",
                        literal_total, " naturality instances"));
  return r;
}

/// Hom(x,y) u An(x,y) is not closed under pointwise sums once x, y are
/// nonzero: identity plus reverse map on F^1 is neither straight nor anti.
inline TheoremReport hom_union_not_group(const FieldFq2& f) {
  TheoremReport r;
  r.theorem = "hom-union-not-group";
  r.inputs = {f.name()};
  SemilinearMap id = identity_map(1), rev = reverse_map(1);
  std::vector<std::vector<int>> values;
  for (const auto& v : all_vectors(f, 1)) {
    auto a = apply(f, id, v), b = apply(f, rev, v);
    values.push_back({f.add(a[0], b[0])});
  }
  bool lin = table_has_twist(f, 1, 1, values, Variance::straight);
  bool anti = table_has_twist(f, 1, 1, values, Variance::anti);
  r.check("sum-escapes-union", !lin && !anti);
  std::string table;
  for (const auto& v : values) table += f.symbol(v[0]) + " ";
  r.witnesses.push_back("id + 1* sends 0,1,w,w2 (F4) to " + table);
  return r;
}

}  // namespace antihom
