#ifndef STDMON_CHAINS_HPP
#define STDMON_CHAINS_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "stdmon/shapes.hpp"

namespace stdmon {

// A nonempty set of carrel boundaries q_1 < ... < q_k inside [1, n-1].
class QSet {
 public:
  QSet(int n, std::vector<int> q) : n_(n), q_(std::move(q)) {
    if (n_ < 2) throw error("qset needs n >= 2");
    if (q_.empty()) throw error("qset needs at least one boundary");
    for (size_t j = 0; j < q_.size(); ++j) {
      if (q_[j] < 1 || q_[j] > n_ - 1) throw error("qset boundary out of [1, n-1]");
      if (j > 0 && q_[j] <= q_[j - 1]) throw error("qset boundaries must strictly increase");
    }
  }

  int n() const { return n_; }
  int k() const { return (int)q_.size(); }
  const std::vector<int>& q() const { return q_; }
  int q_at(int j) const { return q_[j - 1]; }

  // Position block of carrel j, 1 <= j <= k+1: [q_{j-1}+1, q_j], with q_0 = 0
  // and q_{k+1} = n.
  std::pair<int, int> carrel(int j) const {
    int lo = (j == 1) ? 1 : q_[j - 2] + 1;
    int hi = (j == k() + 1) ? n_ : q_[j - 1];
    return {lo, hi};
  }

  // Carrel index containing position p.
  int carrel_of(int p) const {
    for (int j = 1; j <= k() + 1; ++j) {
      auto [lo, hi] = carrel(j);
      if (p >= lo && p <= hi) return j;
    }
    throw error("position outside [n]");
  }

  friend bool operator==(const QSet& a, const QSet& b) { return a.n_ == b.n_ && a.q_ == b.q_; }
  friend bool operator!=(const QSet& a, const QSet& b) { return !(a == b); }

 private:
  int n_;
  std::vector<int> q_;
};

// Nested subsets P_1 c P_2 c ... c P_k of [n] with |P_j| = q_j, each stored
// as a sorted vector.
class QChain {
 public:
  QChain(QSet qset, std::vector<std::vector<int>> sets)
      : qset_(std::move(qset)), sets_(std::move(sets)) {
    if ((int)sets_.size() != qset_.k()) throw error("chain has wrong number of sets");
    for (int j = 1; j <= qset_.k(); ++j) {
      auto& s = sets_[j - 1];
      std::sort(s.begin(), s.end());
      if ((int)s.size() != qset_.q_at(j)) throw error("chain set has wrong cardinality");
      for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > qset_.n()) throw error("chain set value out of [n]");
        if (i > 0 && s[i] == s[i - 1]) throw error("chain set has repeated value");
      }
      if (j > 1 && !std::includes(s.begin(), s.end(), sets_[j - 2].begin(), sets_[j - 2].end()))
        throw error("chain sets must be nested");
    }
  }

  const QSet& qset() const { return qset_; }
  int n() const { return qset_.n(); }
  int k() const { return qset_.k(); }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  const std::vector<int>& set(int j) const { return sets_[j - 1]; }

  bool contains(int j, int v) const {
    const auto& s = sets_[j - 1];
    return std::binary_search(s.begin(), s.end(), v);
  }

  friend bool operator==(const QChain& a, const QChain& b) {
    return a.qset_ == b.qset_ && a.sets_ == b.sets_;
  }
  friend bool operator!=(const QChain& a, const QChain& b) { return !(a == b); }
  friend bool operator<(const QChain& a, const QChain& b) { return a.sets_ < b.sets_; }

 private:
  QSet qset_;
  std::vector<std::vector<int>> sets_;
};

// Key tabloid Y(pi): columns Y(P_k), ..., Y(P_1) left to right.
inline Tabloid key_of(const QChain& chain) {
  int n = chain.n();
  int k = chain.k();
  std::vector<int> parts(n, 0);
  for (int r = 1; r <= n; ++r)
    for (int j = 1; j <= k; ++j) parts[r - 1] += (chain.qset().q_at(j) >= r);
  std::vector<std::vector<int>> cols;
  for (int j = k; j >= 1; --j) cols.push_back(chain.set(j));
  return Tabloid(Partition(n, parts), std::move(cols));
}

// Lambda-key Y_lambda(pi): column of length zeta_c is Y(P_j) when
// zeta_c = q_j, and Y([n]) when zeta_c = n.
inline Tabloid lambda_key(const Partition& shape, const QChain& chain) {
  if (shape.n() != chain.n()) throw error("shape and chain have different n");
  std::vector<int> full(shape.n());
  for (int v = 1; v <= shape.n(); ++v) full[v - 1] = v;
  std::vector<std::vector<int>> cols;
  for (int c = 1; c <= shape.num_cols(); ++c) {
    int z = shape.col_len(c);
    if (z == shape.n()) {
      cols.push_back(full);
      continue;
    }
    int j = 0;
    for (int t = 1; t <= chain.k(); ++t)
      if (chain.qset().q_at(t) == z) j = t;
    if (j == 0) throw error("shape column length missing from qset");
    cols.push_back(chain.set(j));
  }
  return Tabloid(shape, std::move(cols));
}

// One-line Q-permutation: carrel j displays P_j \ P_{j-1} increasing, the
// final carrel displays [n] \ P_k increasing.
inline std::vector<int> chain_to_qperm(const QChain& chain) {
  std::vector<int> out;
  std::vector<int> prev;
  for (int j = 1; j <= chain.k(); ++j) {
    std::vector<int> diff;
    std::set_difference(chain.set(j).begin(), chain.set(j).end(), prev.begin(), prev.end(),
                        std::back_inserter(diff));
    out.insert(out.end(), diff.begin(), diff.end());
    prev = chain.set(j);
  }
  std::vector<int> full(chain.n());
  for (int v = 1; v <= chain.n(); ++v) full[v - 1] = v;
  std::vector<int> rest;
  std::set_difference(full.begin(), full.end(), prev.begin(), prev.end(),
                      std::back_inserter(rest));
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

inline QChain qperm_to_chain(const QSet& qset, const std::vector<int>& perm) {
  if ((int)perm.size() != qset.n()) throw error("q-permutation has wrong length");
  std::vector<bool> seen(qset.n() + 1, false);
  for (int v : perm) {
    if (v < 1 || v > qset.n() || seen[v]) throw error("not a permutation of [n]");
    seen[v] = true;
  }
  for (int j = 1; j <= qset.k() + 1; ++j) {
    auto [lo, hi] = qset.carrel(j);
    for (int p = lo; p < hi; ++p)
      if (perm[p - 1] > perm[p]) throw error("values must increase within each carrel");
  }
  std::vector<std::vector<int>> sets;
  for (int j = 1; j <= qset.k(); ++j)
    sets.emplace_back(perm.begin(), perm.begin() + qset.q_at(j));
  return QChain(qset, std::move(sets));
}

// Reflection sigma_ij: in each set swap i for j or j for i when exactly one
// of the two is present.
inline QChain reflect(const QChain& chain, int i, int j) {
  if (!(1 <= i && i < j && j <= chain.n())) throw error("reflection needs 1 <= i < j <= n");
  std::vector<std::vector<int>> sets;
  for (int l = 1; l <= chain.k(); ++l) {
    std::vector<int> s = chain.set(l);
    bool has_i = chain.contains(l, i);
    bool has_j = chain.contains(l, j);
    if (has_i != has_j) {
      std::replace(s.begin(), s.end(), has_i ? i : j, has_i ? j : i);
    }
    sets.push_back(std::move(s));
  }
  return QChain(chain.qset(), std::move(sets));
}

inline bool bruhat_leq(const QChain& a, const QChain& b) {
  if (a.qset() != b.qset()) throw error("bruhat comparison needs matching qsets");
  return dominance_leq(key_of(a), key_of(b));
}

// Witness (i,j) with target <= reflect(from,i,j) < from.  Candidates come
// from the differing levels h, scanned rightmost key column first (smallest
// h): i is the least element of target's set missing from from's, j the
// least of from's missing from target's.  The first candidate that keeps
// target below the reflection wins; a lone differing level can fail the
// bound when a larger level has already drifted, so the scan continues
// upward until a level validates.
inline std::pair<int, int> step_down(const QChain& target, const QChain& from) {
  if (!bruhat_leq(target, from) || target == from)
    throw error("step_down needs target strictly below from");
  for (int h = 1; h <= target.k(); ++h) {
    if (target.set(h) == from.set(h)) continue;
    std::vector<int> ri, pj;
    std::set_difference(target.set(h).begin(), target.set(h).end(), from.set(h).begin(),
                        from.set(h).end(), std::back_inserter(ri));
    std::set_difference(from.set(h).begin(), from.set(h).end(), target.set(h).begin(),
                        target.set(h).end(), std::back_inserter(pj));
    int i = ri.front(), j = pj.front();
    QChain low = reflect(from, i, j);
    if (bruhat_leq(target, low)) return {i, j};
  }
  throw error("step_down found no valid reflection");
}

inline QChain minimal_chain(const QSet& qset) {
  std::vector<std::vector<int>> sets;
  for (int j = 1; j <= qset.k(); ++j) {
    std::vector<int> s(qset.q_at(j));
    for (int v = 1; v <= qset.q_at(j); ++v) s[v - 1] = v;
    sets.push_back(std::move(s));
  }
  return QChain(qset, std::move(sets));
}

inline QChain maximal_chain(const QSet& qset) {
  std::vector<std::vector<int>> sets;
  for (int j = 1; j <= qset.k(); ++j) {
    std::vector<int> s;
    for (int v = qset.n() - qset.q_at(j) + 1; v <= qset.n(); ++v) s.push_back(v);
    sets.push_back(std::move(s));
  }
  return QChain(qset, std::move(sets));
}

// All chains on the qset, ordered by their set lists.
inline std::vector<QChain> enumerate_chains(const QSet& qset) {
  std::vector<QChain> out;
  std::vector<std::vector<int>> sets;
  auto rec = [&](auto&& self, int j) -> void {
    if (j > qset.k()) {
      out.emplace_back(qset, sets);
      return;
    }
    std::vector<int> base = (j == 1) ? std::vector<int>{} : sets[j - 2];
    std::vector<int> pool;
    for (int v = 1; v <= qset.n(); ++v)
      if (!std::binary_search(base.begin(), base.end(), v)) pool.push_back(v);
    int need = qset.q_at(j) - (int)base.size();
    std::vector<int> pick(need);
    auto choose = [&](auto&& ch, int start, int got) -> void {
      if (got == need) {
        std::vector<int> s = base;
        s.insert(s.end(), pick.begin(), pick.end());
        std::sort(s.begin(), s.end());
        sets.push_back(std::move(s));
        self(self, j + 1);
        sets.pop_back();
        return;
      }
      for (int t = start; t < (int)pool.size(); ++t) {
        pick[got] = pool[t];
        ch(ch, t + 1, got + 1);
      }
    };
    choose(choose, 0, 0);
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

// All nonempty subsets of [1, n-1], each sorted, listed in a fixed order.
inline std::vector<QSet> all_qsets(int n) {
  std::vector<QSet> out;
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> q;
    for (int b = 0; b < n - 1; ++b)
      if (mask & (1u << b)) q.push_back(b + 1);
    out.emplace_back(n, std::move(q));
  }
  return out;
}

}  // namespace stdmon

#endif
