#ifndef STDMON_FLAGS_HPP
#define STDMON_FLAGS_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "stdmon/chains.hpp"
#include "stdmon/matrix.hpp"

namespace stdmon {

// Deterministic RNG: the mt19937_64 stream is fixed by the standard, and
// values are reduced by plain modulo so results are identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform_int(int lo, int hi) {
    std::uint64_t span = (std::uint64_t)(hi - lo) + 1;
    return lo + (int)(eng_() % span);
  }

  int nonzero_int(int lo, int hi) {
    for (;;) {
      int v = uniform_int(lo, hi);
      if (v != 0) return v;
    }
  }

 private:
  std::mt19937_64 eng_;
};

struct QPreferredBasis {
  RationalMatrix matrix;
  std::vector<int> pivots;
  QChain chain;
};

namespace detail {

// Bottom-most nonzero coordinate of a column, 0 if the column is zero.
inline int pivot_row(const RationalMatrix& m, int col) {
  for (int r = m.rows(); r >= 1; --r)
    if (m.at(r, col) != 0) return r;
  return 0;
}

inline void swap_columns(RationalMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 1; r <= m.rows(); ++r) {
    Rat t = m.at(r, a);
    m.set(r, a, m.at(r, b));
    m.set(r, b, t);
  }
}

inline void clear_pivot_row_rightward(RationalMatrix& m, int pr, int slot) {
  const Rat& pv = m.at(pr, slot);
  for (int c = slot + 1; c <= m.cols(); ++c) {
    Rat coef = m.at(pr, c) / pv;
    if (coef == 0) continue;
    for (int r = 1; r <= m.rows(); ++r) m.set(r, c, m.at(r, c) - coef * m.at(r, slot));
  }
}

// Shared elimination skeleton using only carrel swaps, column scalings, and
// rightward column additions. Each carrel is first eliminated bottom-up (the
// remaining column with the lowest pivot goes leftmost, its pivot row is
// cleared rightward), which leaves the carrel's pivots in descending row
// order; the carrel is then reversed into the ascending order the preferred
// form requires and its pivot rows are cleared rightward once more. The two
// policies differ in tie-breaking and in when columns are rescaled; the
// preferred representative of a flag is unique, so they must produce the
// same output.
inline QPreferredBasis reduce_with_policy(const RationalMatrix& f, const QSet& q,
                                          bool rightmost_ties, bool lazy_normalize) {
  int n = q.n();
  if (f.rows() != n || f.cols() != n) throw error("matrix size must match the qset");
  RationalMatrix m = f;
  for (int j = 1; j <= q.k() + 1; ++j) {
    auto [lo, hi] = q.carrel(j);
    for (int slot = lo; slot <= hi; ++slot) {
      int best = 0, best_row = 0;
      for (int c = slot; c <= hi; ++c) {
        int pr = pivot_row(m, c);
        if (pr == 0) throw error("singular matrix");
        if (pr > best_row || (pr == best_row && rightmost_ties)) {
          best_row = pr;
          best = c;
        }
      }
      swap_columns(m, slot, best);
      if (!lazy_normalize) {
        Rat pv = m.at(best_row, slot);
        for (int r = 1; r <= n; ++r) m.set(r, slot, m.at(r, slot) / pv);
      }
      clear_pivot_row_rightward(m, best_row, slot);
    }
    for (int a = lo, b = hi; a < b; ++a, --b) swap_columns(m, a, b);
    for (int slot = lo; slot <= hi; ++slot)
      clear_pivot_row_rightward(m, pivot_row(m, slot), slot);
  }
  std::vector<int> pivots(n, 0);
  for (int c = 1; c <= n; ++c) {
    pivots[c - 1] = pivot_row(m, c);
    Rat pv = m.at(pivots[c - 1], c);
    if (pv != 1)
      for (int r = 1; r <= n; ++r) m.set(r, c, m.at(r, c) / pv);
  }
  std::vector<std::vector<int>> sets;
  for (int j = 1; j <= q.k(); ++j)
    sets.emplace_back(pivots.begin(), pivots.begin() + q.q_at(j));
  return QPreferredBasis{std::move(m), std::move(pivots), QChain(q, std::move(sets))};
}

}  // namespace detail

// Gaussian elimination to the unique Q-preferred basis of the flag of f,
// using only carrel swaps, column scalings, and rightward column additions.
inline QPreferredBasis q_preferred_reduce(const RationalMatrix& f, const QSet& q) {
  return detail::reduce_with_policy(f, q, false, false);
}

// Same output as q_preferred_reduce via a different pivot policy; the two
// must agree because the Q-preferred representative of a flag is unique.
inline QPreferredBasis q_preferred_reduce_alt(const RationalMatrix& f, const QSet& q) {
  return detail::reduce_with_policy(f, q, true, true);
}

inline QChain cell_of(const RationalMatrix& f, const QSet& q) {
  return q_preferred_reduce(f, q).chain;
}

// Permutation matrix with a 1 in row qperm_j of column j.
inline RationalMatrix perm_matrix(const QChain& chain) {
  std::vector<int> qperm = chain_to_qperm(chain);
  int n = chain.n();
  RationalMatrix m(n, n);
  for (int j = 1; j <= n; ++j) m.set(qperm[j - 1], j, Rat(1));
  return m;
}

namespace detail {

// Random invertible upper triangular matrix, entries in [-9, 9], filled row
// by row so the draw order is reproducible.
inline RationalMatrix random_upper_triangular(int n, Rng& rng) {
  RationalMatrix b(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      b.set(i, j, Rat(i == j ? rng.nonzero_int(-9, 9) : rng.uniform_int(-9, 9)));
  return b;
}

inline RationalMatrix sample_cell_with_rng(const QChain& chain, Rng& rng) {
  return random_upper_triangular(chain.n(), rng).multiply(perm_matrix(chain));
}

}  // namespace detail

// Random point of the cell C(pi): b * s_pi for random upper-triangular b.
inline RationalMatrix sample_cell(const QChain& chain, std::uint64_t seed) {
  Rng rng(seed);
  return detail::sample_cell_with_rng(chain, rng);
}

// Random point of the union of cells C(rho) over rho <= pi: the cell is
// chosen uniformly by enumeration, then sampled.
inline RationalMatrix sample_schubert(const QChain& chain, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<QChain> below;
  for (const QChain& rho : enumerate_chains(chain.qset()))
    if (bruhat_leq(rho, chain)) below.push_back(rho);
  int pick = rng.uniform_int(0, (int)below.size() - 1);
  return detail::sample_cell_with_rng(below[pick], rng);
}

// Degeneration path: s_pi with the 2x2 block at rows (i,j), columns
// (c_j,c_i) replaced by [[1-t, t],[t, 1-t]], where column c_i of s_pi holds
// the 1 in row i. Lands in C(pi) for 0 < t < 1/2 and in C(reflect(pi,i,j))
// at t = 0.
inline RationalMatrix gamma_path(const QChain& chain, int i, int j, const Rat& t) {
  QChain lower = reflect(chain, i, j);
  if (!(bruhat_leq(lower, chain) && lower != chain))
    throw error("gamma path needs the reflection to lower the chain");
  if (t < 0 || t >= Rat(1, 2)) throw error("gamma path needs 0 <= t < 1/2");
  std::vector<int> qperm = chain_to_qperm(chain);
  int ci = 0, cj = 0;
  for (int c = 1; c <= chain.n(); ++c) {
    if (qperm[c - 1] == i) ci = c;
    if (qperm[c - 1] == j) cj = c;
  }
  RationalMatrix m = perm_matrix(chain);
  m.set(i, cj, Rat(1) - t);
  m.set(i, ci, t);
  m.set(j, cj, t);
  m.set(j, ci, Rat(1) - t);
  return m;
}

}  // namespace stdmon

#endif
