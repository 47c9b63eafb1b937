#ifndef STDMON_SHAPES_HPP
#define STDMON_SHAPES_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "stdmon/rational.hpp"

namespace stdmon {

// Location (r,c) in a shape: row r, column c, both 1-based.
using Location = std::pair<int, int>;
using Region = std::vector<Location>;

// An n-partition lambda_1 >= ... >= lambda_n >= 0 together with its n.
class Partition {
 public:
  Partition(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) {
    if (n_ < 2) throw error("partition needs n >= 2");
    if ((int)parts_.size() != n_) throw error("partition needs exactly n parts");
    for (int r = 0; r < n_; ++r) {
      if (parts_[r] < 0) throw error("negative partition part");
      if (r > 0 && parts_[r] > parts_[r - 1]) throw error("partition parts must weakly decrease");
    }
  }

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int num_cols() const { return parts_[0]; }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  // zeta_c = number of rows with at least c boxes, c 1-based.
  int col_len(int c) const {
    int z = 0;
    for (int p : parts_) z += (p >= c);
    return z;
  }

  // Distinct column lengths that are < n, ascending.
  std::vector<int> q_of_shape() const {
    std::vector<int> q;
    for (int c = 1; c <= num_cols(); ++c) {
      int z = col_len(c);
      if (z < n_) q.push_back(z);
    }
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    return q;
  }

  bool contains(Location loc) const {
    auto [r, c] = loc;
    return c >= 1 && c <= num_cols() && r >= 1 && r <= col_len(c);
  }

  // Shape with the rightmost column removed.
  Partition drop_last_column() const {
    if (num_cols() == 0) throw error("empty shape has no column to drop");
    std::vector<int> parts = parts_;
    int z = col_len(num_cols());
    for (int r = 0; r < z; ++r) parts[r] -= 1;
    return Partition(n_, parts);
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  int n_;
  std::vector<int> parts_;
};

// Column-strict filling of a shape with values from [n], stored column-major.
class Tabloid {
 public:
  Tabloid(Partition shape, std::vector<std::vector<int>> cols)
      : shape_(std::move(shape)), cols_(std::move(cols)) {
    if ((int)cols_.size() != shape_.num_cols()) throw error("tabloid has wrong number of columns");
    for (int c = 1; c <= shape_.num_cols(); ++c) {
      const auto& col = cols_[c - 1];
      if ((int)col.size() != shape_.col_len(c)) throw error("tabloid column has wrong length");
      for (size_t i = 0; i < col.size(); ++i) {
        if (col[i] < 1 || col[i] > shape_.n()) throw error("tabloid value out of [n]");
        if (i > 0 && col[i] <= col[i - 1]) throw error("tabloid column not strictly increasing");
      }
    }
  }

  static Tabloid empty(int n) {
    return Tabloid(Partition(n, std::vector<int>(n, 0)), {});
  }

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  const std::vector<std::vector<int>>& columns() const { return cols_; }
  const std::vector<int>& column(int c) const { return cols_[c - 1]; }
  int at(int r, int c) const { return cols_[c - 1][r - 1]; }

  Tabloid drop_last_column() const {
    Partition shorter = shape_.drop_last_column();
    auto cols = cols_;
    cols.pop_back();
    return Tabloid(std::move(shorter), std::move(cols));
  }

  friend bool operator==(const Tabloid& a, const Tabloid& b) {
    return a.shape_ == b.shape_ && a.cols_ == b.cols_;
  }
  friend bool operator!=(const Tabloid& a, const Tabloid& b) { return !(a == b); }

 private:
  Partition shape_;
  std::vector<std::vector<int>> cols_;
};

inline bool is_tableau(const Tabloid& t) {
  const auto& sh = t.shape();
  for (int c = 1; c < sh.num_cols(); ++c)
    for (int r = 1; r <= sh.col_len(c + 1); ++r)
      if (t.at(r, c) > t.at(r, c + 1)) return false;
  return true;
}

inline void require_same_shape(const Tabloid& a, const Tabloid& b) {
  if (a.shape() != b.shape()) throw error("tabloid shape mismatch");
}

// Entrywise partial order.
inline bool dominance_leq(const Tabloid& a, const Tabloid& b) {
  require_same_shape(a, b);
  for (int c = 1; c <= a.shape().num_cols(); ++c)
    for (int r = 1; r <= a.shape().col_len(c); ++r)
      if (a.at(r, c) > b.at(r, c)) return false;
  return true;
}

// Total order: columns compared left to right, each column by its value
// string top to bottom, lexicographically. Extends dominance.
inline bool total_less(const Tabloid& a, const Tabloid& b) {
  require_same_shape(a, b);
  return a.columns() < b.columns();
}

struct TotalLess {
  bool operator()(const Tabloid& a, const Tabloid& b) const { return total_less(a, b); }
};

inline void require_region_in_shape(const Partition& shape, const Region& mu) {
  for (auto loc : mu)
    if (!shape.contains(loc)) throw error("region location outside shape");
}

namespace detail {

// Fills columns left to right, each top to bottom; `row_weak` additionally
// imposes the tableau row condition against the previous column.
inline void fill_columns(const Partition& shape, bool row_weak, std::vector<std::vector<int>>& cols,
                         int c, std::vector<Tabloid>& out) {
  if (c > shape.num_cols()) {
    out.emplace_back(shape, cols);
    return;
  }
  int len = shape.col_len(c);
  std::vector<int>& col = cols[c - 1];
  col.assign(len, 0);
  auto rec = [&](auto&& self, int r) -> void {
    if (r > len) {
      fill_columns(shape, row_weak, cols, c + 1, out);
      return;
    }
    int lo = (r == 1) ? 1 : col[r - 2] + 1;
    if (row_weak && c > 1 && shape.col_len(c - 1) >= r) lo = std::max(lo, cols[c - 2][r - 1]);
    for (int v = lo; v <= shape.n() - (len - r); ++v) {
      col[r - 1] = v;
      self(self, r + 1);
    }
  };
  rec(rec, 1);
}

inline std::vector<Tabloid> enumerate_fillings(const Partition& shape, bool row_weak) {
  std::vector<Tabloid> out;
  std::vector<std::vector<int>> cols(shape.num_cols());
  fill_columns(shape, row_weak, cols, 1, out);
  std::sort(out.begin(), out.end(), TotalLess{});
  return out;
}

}  // namespace detail

// All semistandard tableaux of the shape, sorted by the total order.
inline std::vector<Tabloid> enumerate_tableaux(const Partition& shape) {
  return detail::enumerate_fillings(shape, true);
}

// All tabloids of the shape (no row condition), sorted by the total order.
inline std::vector<Tabloid> enumerate_tabloids(const Partition& shape) {
  return detail::enumerate_fillings(shape, false);
}

}  // namespace stdmon

#endif
