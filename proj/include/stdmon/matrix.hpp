#ifndef STDMON_MATRIX_HPP
#define STDMON_MATRIX_HPP

#include <map>
#include <utility>
#include <vector>

#include "stdmon/rational.hpp"
#include "stdmon/shapes.hpp"

namespace stdmon {

// Dense matrix of exact rationals, 1-based accessors.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols, Rat(0))) {
    if (rows < 1 || cols < 1) throw error("matrix needs positive dimensions");
  }

  explicit RationalMatrix(std::vector<std::vector<Rat>> grid)
      : rows_((int)grid.size()), cols_(grid.empty() ? 0 : (int)grid[0].size()), a_(std::move(grid)) {
    if (rows_ < 1 || cols_ < 1) throw error("matrix needs positive dimensions");
    for (const auto& row : a_)
      if ((int)row.size() != cols_) throw error("ragged matrix rows");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.set(i, i, Rat(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rat& at(int r, int c) const { return a_[r - 1][c - 1]; }
  void set(int r, int c, const Rat& v) { a_[r - 1][c - 1] = v; }

  RationalMatrix multiply(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw error("matrix product dimension mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (int i = 1; i <= rows_; ++i)
      for (int k = 1; k <= cols_; ++k) {
        const Rat& x = at(i, k);
        if (x == 0) continue;
        for (int j = 1; j <= other.cols_; ++j)
          out.a_[i - 1][j - 1] += x * other.at(k, j);
      }
    return out;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

 private:
  int rows_, cols_;
  std::vector<std::vector<Rat>> a_;
};

namespace detail {

// Clears denominators row by row; returns the integer grid and the product
// of the row scale factors.
inline std::pair<std::vector<std::vector<Int>>, Int> to_integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Int>> grid(m.rows(), std::vector<Int>(m.cols()));
  Int scale = 1;
  for (int i = 1; i <= m.rows(); ++i) {
    Int l = 1;
    for (int j = 1; j <= m.cols(); ++j) {
      Int d = rat_den(m.at(i, j));
      l = lcm(l, d);
    }
    for (int j = 1; j <= m.cols(); ++j) {
      Rat v = m.at(i, j) * Rat(l);
      grid[i - 1][j - 1] = rat_num(v);
    }
    scale *= l;
  }
  return {std::move(grid), std::move(scale)};
}

}  // namespace detail

// Exact determinant via Bareiss fraction-free elimination on the
// denominator-cleared integer matrix.
inline Rat determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw error("determinant needs a square matrix");
  int n = m.rows();
  auto [a, scale] = detail::to_integer_rows(m);
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_with = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_with = i;
          break;
        }
      if (swap_with < 0) return Rat(0);
      std::swap(a[k], a[swap_with]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rat det(a[n - 1][n - 1]);
  if (sign < 0) det = -det;
  return det / Rat(scale);
}

// Cofactor expansion along the first row; slow, used to cross-check the
// elimination determinant on small matrices.
inline Rat determinant_laplace(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw error("determinant needs a square matrix");
  int n = m.rows();
  if (n == 1) return m.at(1, 1);
  Rat sum(0);
  for (int c = 1; c <= n; ++c) {
    if (m.at(1, c) == 0) continue;
    RationalMatrix sub(n - 1, n - 1);
    for (int i = 2; i <= n; ++i) {
      int jj = 1;
      for (int j = 1; j <= n; ++j) {
        if (j == c) continue;
        sub.set(i - 1, jj, m.at(i, j));
        ++jj;
      }
    }
    Rat term = m.at(1, c) * determinant_laplace(sub);
    if (c % 2 == 0) term = -term;
    sum += term;
  }
  return sum;
}

// Exact rank via fraction-free elimination with column skipping.
inline int rank(const RationalMatrix& m) {
  auto [a, scale] = detail::to_integer_rows(m);
  (void)scale;
  int rows = m.rows(), cols = m.cols();
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Determinant of the submatrix on the listed rows (ascending) and the first
// q = |rows| columns.
inline Rat initial_minor(const RationalMatrix& f, int q, const std::vector<int>& rows) {
  if ((int)rows.size() != q) throw error("initial minor needs exactly q rows");
  if (q < 1 || q > f.rows() || q > f.cols()) throw error("initial minor order out of range");
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1 || rows[i] > f.rows()) throw error("initial minor row out of range");
    if (i > 0 && rows[i] <= rows[i - 1]) throw error("initial minor rows must strictly ascend");
  }
  RationalMatrix sub(q, q);
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j) sub.set(i, j, f.at(rows[i - 1], j));
  return determinant(sub);
}

// Tabloid monomial: the product over columns c of the zeta_c-initial minor
// whose rows are the values of column c. Empty shape gives 1.
inline Rat eval_monomial(const Tabloid& t, const RationalMatrix& f) {
  if (f.rows() != t.n() || f.cols() != t.n()) throw error("matrix size must match tabloid n");
  Rat out(1);
  for (int c = 1; c <= t.shape().num_cols(); ++c)
    out *= initial_minor(f, t.shape().col_len(c), t.column(c));
  return out;
}

// Memoizes initial minors of one fixed matrix across many monomial
// evaluations; the key is the ascending row list.
class MonomialEvaluator {
 public:
  explicit MonomialEvaluator(RationalMatrix f) : f_(std::move(f)) {
    if (f_.rows() != f_.cols()) throw error("monomial evaluation needs a square matrix");
  }

  const RationalMatrix& matrix() const { return f_; }

  const Rat& minor_of(const std::vector<int>& rows) {
    auto it = cache_.find(rows);
    if (it != cache_.end()) return it->second;
    Rat v = initial_minor(f_, (int)rows.size(), rows);
    return cache_.emplace(rows, std::move(v)).first->second;
  }

  Rat eval(const Tabloid& t) {
    if (t.n() != f_.rows()) throw error("matrix size must match tabloid n");
    Rat out(1);
    for (int c = 1; c <= t.shape().num_cols(); ++c) {
      const Rat& mv = minor_of(t.column(c));
      if (mv == 0) return Rat(0);
      out *= mv;
    }
    return out;
  }

 private:
  RationalMatrix f_;
  std::map<std::vector<int>, Rat> cache_;
};

}  // namespace stdmon

#endif
