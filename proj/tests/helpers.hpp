#ifndef STDMON_TEST_HELPERS_HPP
#define STDMON_TEST_HELPERS_HPP

#include <algorithm>
#include <vector>

#include "stdmon/chains.hpp"
#include "stdmon/flags.hpp"
#include "stdmon/matrix.hpp"
#include "stdmon/shapes.hpp"

namespace testutil {

using namespace stdmon;

// Tabloid from column lists; the shape is read off the column lengths.
inline Tabloid tab(int n, const std::vector<std::vector<int>>& cols) {
  std::vector<int> parts(n, 0);
  for (int r = 0; r < n; ++r)
    for (const auto& col : cols) parts[r] += ((int)col.size() >= r + 1);
  return Tabloid(Partition(n, parts), cols);
}

// Chain from its set list; the boundaries are the set sizes.
inline QChain chain(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<int> q;
  for (const auto& s : sets) q.push_back((int)s.size());
  return QChain(QSet(n, q), sets);
}

inline RationalMatrix rmat(const std::vector<std::vector<int>>& grid) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : grid) {
    std::vector<Rat> row;
    for (int v : r) row.emplace_back(v);
    rows.push_back(std::move(row));
  }
  return RationalMatrix(std::move(rows));
}

inline RationalMatrix random_matrix(Rng& rng, int n) {
  RationalMatrix f(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) f.set(i, j, Rat(rng.uniform_int(-9, 9), rng.uniform_int(1, 4)));
  return f;
}

inline RationalMatrix random_invertible(Rng& rng, int n) {
  for (;;) {
    RationalMatrix f = random_matrix(rng, n);
    if (determinant(f) != 0) return f;
  }
}

// All n-part shapes with at most maxsz boxes, the empty shape included.
inline std::vector<Partition> shapes_up_to(int n, int maxsz) {
  std::vector<Partition> out;
  std::vector<int> parts(n, 0);
  auto rec = [&](auto&& self, int r, int cap, int left) -> void {
    if (r == n) {
      out.emplace_back(n, parts);
      return;
    }
    for (int v = std::min(cap, left); v >= 0; --v) {
      parts[r] = v;
      self(self, r + 1, v, left - v);
    }
  };
  rec(rec, 0, maxsz, maxsz);
  return out;
}

// Whether every column length of the shape is covered by the qset (full
// columns of height n are always allowed).
inline bool shape_fits_qset(const Partition& sh, const QSet& q) {
  std::vector<int> need = sh.q_of_shape();
  return std::includes(q.q().begin(), q.q().end(), need.begin(), need.end());
}

}  // namespace testutil

#endif
