#ifndef STDMON_STRAIGHTENING_HPP
#define STDMON_STRAIGHTENING_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "stdmon/chains.hpp"
#include "stdmon/combination.hpp"
#include "stdmon/matrix.hpp"
#include "stdmon/scanning.hpp"
#include "stdmon/shapes.hpp"

namespace stdmon {

struct ShuffleTerm {
  int sign;
  Tabloid result;
};

// All mu-shuffles of T: each shuffle redistributes the values sitting in the
// region among the region's columns (keeping the per-column count and the
// distinctness of each full column content), then every column is resorted.
// The shuffle's sign is the cycle parity of the induced permutation of the
// shape's locations, where each value lands at its sorted position. The
// identity shuffle is always the first term. Terms are not merged: distinct
// shuffles of a tabloid with repeated values may yield equal tabloids.
inline std::vector<ShuffleTerm> mu_shuffles(const Tabloid& t, const Region& mu) {
  const Partition& sh = t.shape();
  require_region_in_shape(sh, mu);
  std::vector<Location> locs(mu.begin(), mu.end());
  std::sort(locs.begin(), locs.end(),
            [](Location a, Location b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
  for (size_t i = 1; i < locs.size(); ++i)
    if (locs[i] == locs[i - 1]) throw error("region has a repeated location");

  int width = sh.num_cols();
  auto in_mu = [&](int r, int c) {
    return std::binary_search(locs.begin(), locs.end(), Location{r, c},
                              [](Location a, Location b) {
                                return std::pair(a.second, a.first) < std::pair(b.second, b.first);
                              });
  };

  // Values outside the region never change column.
  std::vector<std::vector<int>> base(width);
  for (int c = 1; c <= width; ++c)
    for (int r = 1; r <= sh.col_len(c); ++r)
      if (!in_mu(r, c)) base[c - 1].push_back(t.at(r, c));

  std::vector<int> values;
  std::vector<int> targets;
  for (auto [r, c] : locs) {
    values.push_back(t.at(r, c));
    targets.push_back(c);
  }

  // Index cells of the shape for the location permutation.
  std::map<Location, int> cell_index;
  int ncells = 0;
  for (int c = 1; c <= width; ++c)
    for (int r = 1; r <= sh.col_len(c); ++r) cell_index[{r, c}] = ncells++;

  std::vector<ShuffleTerm> out;
  std::vector<int> assign = targets;
  std::sort(assign.begin(), assign.end());
  do {
    std::vector<std::vector<int>> content = base;
    for (size_t i = 0; i < locs.size(); ++i) content[assign[i] - 1].push_back(values[i]);
    bool ok = true;
    std::vector<std::vector<int>> sorted_cols(width);
    for (int c = 0; c < width && ok; ++c) {
      sorted_cols[c] = content[c];
      std::sort(sorted_cols[c].begin(), sorted_cols[c].end());
      for (size_t i = 1; i < sorted_cols[c].size(); ++i)
        if (sorted_cols[c][i] == sorted_cols[c][i - 1]) ok = false;
    }
    if (!ok) continue;

    auto new_pos = [&](int v, int col) -> Location {
      const auto& sc = sorted_cols[col - 1];
      int row = (int)(std::lower_bound(sc.begin(), sc.end(), v) - sc.begin()) + 1;
      return {row, col};
    };

    std::vector<int> perm(ncells);
    for (int c = 1; c <= width; ++c)
      for (int r = 1; r <= sh.col_len(c); ++r)
        if (!in_mu(r, c)) perm[cell_index[{r, c}]] = cell_index[new_pos(t.at(r, c), c)];
    for (size_t i = 0; i < locs.size(); ++i)
      perm[cell_index[locs[i]]] = cell_index[new_pos(values[i], assign[i])];

    std::vector<bool> seen(ncells, false);
    int cycles = 0;
    for (int i = 0; i < ncells; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    int sign = ((ncells - cycles) % 2 == 0) ? 1 : -1;
    out.push_back(ShuffleTerm{sign, Tabloid(sh, std::move(sorted_cols))});
  } while (std::next_permutation(assign.begin(), assign.end()));
  return out;
}

struct MasterIdentityResult {
  bool holds;
  int resolved_sign;
  bool sign_determined;
};

// Compound matrix for the master identity, evaluated at f. The (i,j) block
// is zeta_i x zeta_j: its first |mu_j| columns transpose the zeta_i-initial
// submatrix on the region values of column j; the remaining columns hold the
// transposed zeta_j-initial submatrix on the non-region values when i = j
// and zeros otherwise.
inline RationalMatrix compound_matrix(const Tabloid& t, const Region& mu,
                                      const RationalMatrix& f) {
  const Partition& sh = t.shape();
  require_region_in_shape(sh, mu);
  if (f.rows() != t.n() || f.cols() != t.n()) throw error("matrix size must match tabloid n");
  int width = sh.num_cols();
  if (width == 0) throw error("compound matrix needs a nonempty shape");
  std::vector<std::vector<int>> mu_vals(width), bar_vals(width);
  for (int c = 1; c <= width; ++c)
    for (int r = 1; r <= sh.col_len(c); ++r) {
      bool inside = std::find(mu.begin(), mu.end(), Location{r, c}) != mu.end();
      (inside ? mu_vals[c - 1] : bar_vals[c - 1]).push_back(t.at(r, c));
    }
  std::vector<int> offset(width + 1, 0);
  for (int c = 1; c <= width; ++c) offset[c] = offset[c - 1] + sh.col_len(c);
  int total = offset[width];
  RationalMatrix m(total, total);
  for (int i = 1; i <= width; ++i)
    for (int j = 1; j <= width; ++j) {
      int zi = sh.col_len(i);
      for (int a = 1; a <= zi; ++a) {
        int col = 0;
        for (int v : mu_vals[j - 1]) m.set(offset[i - 1] + a, offset[j - 1] + ++col, f.at(v, a));
        if (i == j)
          for (int v : bar_vals[j - 1]) m.set(offset[i - 1] + a, offset[j - 1] + ++col, f.at(v, a));
      }
    }
  return m;
}

// Checks |compound_matrix| = ± sum of sign(shuffle) * monomial(shuffle) at f.
// When the shuffle sum is nonzero the global sign is pinned down; when both
// sides vanish the identity holds with the sign left undetermined.
inline MasterIdentityResult verify_master_identity(const Tabloid& t, const Region& mu,
                                                   const RationalMatrix& f) {
  Rat lhs = determinant(compound_matrix(t, mu, f));
  Rat rhs(0);
  for (const ShuffleTerm& s : mu_shuffles(t, mu))
    rhs += Rat(s.sign) * eval_monomial(s.result, f);
  if (rhs != 0) {
    if (lhs == rhs) return {true, 1, true};
    if (lhs == -rhs) return {true, -1, true};
    return {false, 0, false};
  }
  return {lhs == 0, 1, false};
}

// Region {(i,c) | r <= i <= zeta_c} together with {(j,c+1) | 1 <= j <= r}.
inline Region snake_region(const Tabloid& t, int r, int c) {
  const Partition& sh = t.shape();
  if (c < 1 || c > sh.num_cols() - 1) throw error("snake region column out of range");
  if (r < 1 || r > sh.col_len(c + 1)) throw error("snake region row out of range");
  Region mu;
  for (int i = r; i <= sh.col_len(c); ++i) mu.emplace_back(i, c);
  for (int j = 1; j <= r; ++j) mu.emplace_back(j, c + 1);
  return mu;
}

// Region used to rewrite a non-Demazure tableau: starting from the chosen
// violation (r,c) of S(T) against the lambda-key (the rightmost column with
// a violation, then its deepest row), walk down the scanning paths of column
// c picking in each the first location that stays weakly left of the
// previous pick and strictly exceeds its value.
inline Region demazure_region(const Tabloid& t, const QChain& chain) {
  ScanResult sc = scan(t);
  Tabloid bound = lambda_key(t.shape(), chain);
  const Partition& sh = t.shape();
  int vr = 0, vc = 0;
  for (int c = 1; c <= sh.num_cols(); ++c)
    for (int r = 1; r <= sh.col_len(c); ++r)
      if (sc.scan_tableau.at(r, c) > bound.at(r, c)) {
        vr = r;
        vc = c;
      }
  if (vc == 0) throw error("demazure region needs a non-Demazure tableau");

  Region mu;
  const Region& first_path = sc.paths.at({vr, vc});
  Location prev{0, 0};
  bool found = false;
  for (Location loc : first_path)
    if (t.at(loc.first, loc.second) > bound.at(vr, vc)) {
      prev = loc;
      found = true;
      break;
    }
  if (!found) throw error("scanning path has no value above the key bound");
  mu.push_back(prev);
  for (int tt = vr + 1; tt <= sh.col_len(vc); ++tt) {
    const Region& path = sc.paths.at({tt, vc});
    found = false;
    for (Location loc : path)
      if (loc.second <= prev.second && t.at(loc.first, loc.second) > t.at(prev.first, prev.second)) {
        prev = loc;
        found = true;
        break;
      }
    if (!found) throw error("scanning path chain broke off");
    mu.push_back(prev);
  }
  return mu;
}

namespace detail {

inline Tabloid sort_equal_length_columns(const Tabloid& t) {
  auto cols = t.columns();
  size_t start = 0;
  while (start < cols.size()) {
    size_t stop = start + 1;
    while (stop < cols.size() && cols[stop].size() == cols[start].size()) ++stop;
    std::sort(cols.begin() + start, cols.begin() + stop);
    start = stop;
  }
  return Tabloid(t.shape(), std::move(cols));
}

inline LinearCombination negated_nonidentity_sum(const Tabloid& t, const Region& mu) {
  std::vector<ShuffleTerm> terms = mu_shuffles(t, mu);
  if (terms.front().result != t || terms.front().sign != 1)
    throw error("identity shuffle missing from shuffle list");
  LinearCombination out(t.shape());
  for (size_t i = 1; i < terms.size(); ++i) out.add(terms[i].result, Rat(-terms[i].sign));
  return out;
}

}  // namespace detail

// One rewrite toward the tableau basis: resort equal-length columns if they
// are out of order, otherwise expand the snake relation at the first row
// violation (leftmost column, then topmost row). Every output term strictly
// precedes the input in the total order.
inline LinearCombination straighten_step(const Tabloid& t) {
  if (is_tableau(t)) throw error("straighten_step needs a non-tableau");
  Tabloid sorted = detail::sort_equal_length_columns(t);
  if (sorted != t) {
    LinearCombination out(t.shape());
    out.add(sorted, Rat(1));
    return out;
  }
  const Partition& sh = t.shape();
  for (int c = 1; c <= sh.num_cols() - 1; ++c)
    for (int r = 1; r <= sh.col_len(c + 1); ++r)
      if (t.at(r, c) > t.at(r, c + 1))
        return detail::negated_nonidentity_sum(t, snake_region(t, r, c));
  throw error("no row violation found in a non-tableau");
}

// Full reduction to the tableau basis: repeatedly rewrite the largest
// non-tableau term.
inline LinearCombination straighten(const LinearCombination& combo) {
  LinearCombination work = combo;
  for (;;) {
    const Tabloid* worst = nullptr;
    for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it)
      if (!is_tableau(it->first)) {
        worst = &it->first;
        break;
      }
    if (!worst) return work;
    Tabloid u = *worst;
    Rat a = work.coeff(u);
    work.add(u, -a);
    work.add(straighten_step(u), a);
  }
}

inline LinearCombination straighten(const Tabloid& t) {
  return straighten(LinearCombination::single(t));
}

// One rewrite toward the Demazure basis, valid modulo the span of the
// tabloids not dominated by the lambda-key: a singleton region (only the
// identity shuffle) rewrites the term to zero.
inline LinearCombination straighten_step_mod(const Tabloid& t, const QChain& chain) {
  if (!is_tableau(t)) throw error("straighten_step_mod needs a tableau");
  Region mu = demazure_region(t, chain);
  std::vector<ShuffleTerm> terms = mu_shuffles(t, mu);
  if (terms.size() == 1) return LinearCombination(t.shape());
  return detail::negated_nonidentity_sum(t, mu);
}

// Reduction in the Demazure quotient: tabloid terms not dominated by the
// lambda-key are dropped outright; non-tableaux are straightened and
// non-Demazure tableaux rewritten, largest first, until only Demazure
// tableaux remain.
inline LinearCombination reduce_mod(const LinearCombination& combo, const QChain& chain) {
  Tabloid bound = lambda_key(combo.shape(), chain);
  std::map<Tabloid, bool, TotalLess> demazure_cache;
  auto is_dem = [&](const Tabloid& t) {
    auto it = demazure_cache.find(t);
    if (it != demazure_cache.end()) return it->second;
    bool v = is_demazure(t, chain);
    demazure_cache.emplace(t, v);
    return v;
  };

  LinearCombination work(combo.shape());
  for (const auto& [t, a] : combo.terms())
    if (dominance_leq(t, bound)) work.add(t, a);

  for (;;) {
    const Tabloid* next = nullptr;
    bool next_is_tableau = false;
    for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
      bool tab = is_tableau(it->first);
      if (!tab || !is_dem(it->first)) {
        next = &it->first;
        next_is_tableau = tab;
        break;
      }
    }
    if (!next) return work;
    Tabloid u = *next;
    Rat a = work.coeff(u);
    work.add(u, -a);
    LinearCombination step = next_is_tableau ? straighten_step_mod(u, chain) : straighten_step(u);
    for (const auto& [t, b] : step.terms())
      if (dominance_leq(t, bound)) work.add(t, a * b);
  }
}

}  // namespace stdmon

#endif
