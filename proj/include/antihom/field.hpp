#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace antihom {

/// F_{p^2} for p in {2, 3}: element a + b t at index a + p b, with
/// t^2 = t + 1 for p = 2 and t^2 = -1 for p = 3. Arithmetic is tabulated.
class FieldFq2 {
 public:
  explicit FieldFq2(int p = 2) : p_(p), n_(p * p) {
    if (p != 2 && p != 3) fail(ErrorKind::PreconditionFailed, cat("unsupported characteristic ", p));
    const int c1 = p == 2 ? 1 : 0;  // t^2 = c1 t + c0
    const int c0 = p == 2 ? 1 : p - 1;
    add_.resize(static_cast<std::size_t>(n_ * n_));
    mul_.resize(static_cast<std::size_t>(n_ * n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        int a = x % p, b = x / p, c = y % p, d = y / p;
        add_[idx(x, y)] = (a + c) % p + p * ((b + d) % p);
        int k0 = a * c + b * d * c0;
        int k1 = a * d + b * c + b * d * c1;
        mul_[idx(x, y)] = k0 % p + p * (k1 % p);
      }
    neg_.resize(static_cast<std::size_t>(n_));
    inv_.assign(static_cast<std::size_t>(n_), 0);
    frob_.resize(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        if (add(x, y) == 0) neg_[static_cast<std::size_t>(x)] = y;
        if (mul(x, y) == 1) inv_[static_cast<std::size_t>(x)] = y;
      }
      int f = 1;
      for (int k = 0; k < p; ++k) f = mul(f, x);
      frob_[static_cast<std::size_t>(x)] = f;
    }
  }

  int p() const { return p_; }
  int size() const { return n_; }
  int add(int x, int y) const { return add_[idx(x, y)]; }
  int sub(int x, int y) const { return add(x, neg(y)); }
  int mul(int x, int y) const { return mul_[idx(x, y)]; }
  int neg(int x) const { return neg_[static_cast<std::size_t>(x)]; }
  int inv(int x) const {
    if (x == 0) fail(ErrorKind::PreconditionFailed, "inverse of zero");
    return inv_[static_cast<std::size_t>(x)];
  }
  int frobenius(int x) const { return frob_[static_cast<std::size_t>(x)]; }
  std::string name() const { return p_ == 2 ? "F4" : "F9"; }

  std::string symbol(int x) const {
    if (p_ == 2) {
      static const char* s[] = {"0", "1", "w", "w2"};
      return s[x];
    }
    return std::to_string(x);
  }

  std::optional<int> parse_symbol(const std::string& s) const {
    for (int x = 0; x < n_; ++x)
      if (symbol(x) == s) return x;
    return std::nullopt;
  }

  friend bool operator==(const FieldFq2& a, const FieldFq2& b) { return a.p_ == b.p_; }

 private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x * n_ + y); }
  int p_, n_;
  std::vector<int> add_, mul_, neg_, inv_, frob_;
};

/// Dense matrix of field-element indices, row-major.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r * c), 0) {}

  int& at(int i, int j) { return data[static_cast<std::size_t>(i * cols + j)]; }
  int at(int i, int j) const { return data[static_cast<std::size_t>(i * cols + j)]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors (each of length `rows`).
  static Matrix from_columns(int rows, const std::vector<std::vector<int>>& columns) {
    Matrix m(rows, static_cast<int>(columns.size()));
    for (int j = 0; j < m.cols; ++j)
      for (int i = 0; i < rows; ++i) m.at(i, j) = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return m;
  }

  std::vector<int> column(int j) const {
    std::vector<int> v(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
    return v;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

inline Matrix mat_mul(const FieldFq2& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) fail(ErrorKind::NotComposable, cat(a.rows, "x", a.cols, " times ", b.rows, "x", b.cols));
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      int s = 0;
      for (int k = 0; k < a.cols; ++k) s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = s;
    }
  return c;
}

inline Matrix mat_add(const FieldFq2& f, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = f.add(a.data[i], b.data[i]);
  return c;
}

inline Matrix frobenius(const FieldFq2& f, Matrix m) {
  for (int& x : m.data) x = f.frobenius(x);
  return m;
}

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

inline std::vector<int> mat_vec(const FieldFq2& f, const Matrix& m, const std::vector<int>& v) {
  std::vector<int> out(static_cast<std::size_t>(m.rows), 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      out[static_cast<std::size_t>(i)] = f.add(out[static_cast<std::size_t>(i)], f.mul(m.at(i, j), v[static_cast<std::size_t>(j)]));
  return out;
}

inline std::vector<int> frobenius(const FieldFq2& f, std::vector<int> v) {
  for (int& x : v) x = f.frobenius(x);
  return v;
}

struct RowEchelon {
  Matrix reduced;            // reduced row echelon form
  std::vector<int> pivots;   // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

inline RowEchelon rref(const FieldFq2& f, Matrix m) {
  RowEchelon out;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(piv, j));
    int s = f.inv(m.at(row, col));
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = f.mul(s, m.at(row, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      int c = m.at(i, col);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

inline int rank(const FieldFq2& f, const Matrix& m) { return rref(f, m).rank(); }

/// Nonzero rows of the reduced form, as a matrix.
inline Matrix row_basis(const FieldFq2& f, const Matrix& m) {
  auto e = rref(f, m);
  Matrix out(e.rank(), m.cols);
  for (int i = 0; i < e.rank(); ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = e.reduced.at(i, j);
  return out;
}

/// Basis of {v : m v = 0}, one vector per free column, in column order.
inline std::vector<std::vector<int>> null_space(const FieldFq2& f, const Matrix& m) {
  auto e = rref(f, m);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols), 0);
  for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<int> v(static_cast<std::size_t>(m.cols), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int r = 0; r < e.rank(); ++r) v[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(r)])] = f.neg(e.reduced.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Pivot columns of m: a basis of its column space drawn from its columns.
inline std::vector<std::vector<int>> column_basis(const FieldFq2& f, const Matrix& m) {
  std::vector<std::vector<int>> out;
  for (int c : rref(f, m).pivots) out.push_back(m.column(c));
  return out;
}

/// A matrix with kernel exactly span(basis) in dimension n; its rows span
/// the annihilator of the subspace.
inline Matrix quotient_map(const FieldFq2& f, int n, const std::vector<std::vector<int>>& basis) {
  Matrix w(static_cast<int>(basis.size()), n);
  for (int i = 0; i < w.rows; ++i)
    for (int j = 0; j < n; ++j) w.at(i, j) = basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  auto ann = null_space(f, w);
  Matrix q(static_cast<int>(ann.size()), n);
  for (int i = 0; i < q.rows; ++i)
    for (int j = 0; j < n; ++j) q.at(i, j) = ann[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return q;
}

/// Solutions X of A X = B: one particular solution and whether it is unique.
struct LinearSolution {
  std::optional<Matrix> x;
  bool unique = false;
};

inline LinearSolution solve(const FieldFq2& f, const Matrix& a, const Matrix& b) {
  Matrix aug(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) aug.at(i, a.cols + j) = b.at(i, j);
  }
  auto e = rref(f, aug);
  LinearSolution out;
  for (int c : e.pivots)
    if (c >= a.cols) return out;  // inconsistent
  Matrix x(a.cols, b.cols);
  for (int r = 0; r < e.rank(); ++r)
    for (int j = 0; j < b.cols; ++j) x.at(e.pivots[static_cast<std::size_t>(r)], j) = e.reduced.at(r, a.cols + j);
  out.x = std::move(x);
  out.unique = e.rank() == a.cols;
  return out;
}

/// All vectors of F^n in lexicographic index order (n small).
inline std::vector<std::vector<int>> all_vectors(const FieldFq2& f, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(v);
    int i = 0;
    while (i < n && ++v[static_cast<std::size_t>(i)] == f.size()) v[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace antihom
