#ifndef STDMON_SCANNING_HPP
#define STDMON_SCANNING_HPP

#include <map>
#include <utility>
#include <vector>

#include "stdmon/chains.hpp"
#include "stdmon/shapes.hpp"

namespace stdmon {

// Indices (1-based) of the earliest weakly increasing subsequence: start at
// the first entry, then greedily take each later entry that is >= the last
// one taken.
inline std::vector<int> ewis(const std::vector<int>& seq) {
  if (seq.empty()) throw error("ewis needs a nonempty sequence");
  std::vector<int> idx{1};
  int last = seq[0];
  for (int i = 2; i <= (int)seq.size(); ++i) {
    if (seq[i - 1] >= last) {
      idx.push_back(i);
      last = seq[i - 1];
    }
  }
  return idx;
}

struct ScanResult {
  Tabloid scan_tableau;
  std::map<Location, Region> paths;
};

// Willis's scanning tableau S(T) with every scanning path P(T;r,c) kept.
// Column c of S(T) is produced bottom-up by repeated EWIS passes over the
// bottom-most unmarked values of columns c..lambda_1.
inline ScanResult scan(const Tabloid& t) {
  if (!is_tableau(t)) throw error("scan is defined for tableaux only");
  const Partition& sh = t.shape();
  int width = sh.num_cols();
  std::vector<std::vector<int>> scols(width);
  std::map<Location, Region> paths;
  for (int c = 1; c <= width; ++c) {
    int zc = sh.col_len(c);
    scols[c - 1].assign(zc, 0);
    // unmarked cells of column b form the prefix of rows 1..height[b]
    std::vector<int> height(width + 1, 0);
    for (int b = c; b <= width; ++b) height[b] = sh.col_len(b);
    for (int fill = zc; fill >= 1; --fill) {
      Region path;
      int last = 0;
      for (int b = c; b <= width; ++b) {
        if (height[b] == 0) continue;
        int v = t.at(height[b], b);
        if (path.empty() || v >= last) {
          path.emplace_back(height[b], b);
          last = v;
          height[b] -= 1;
        }
      }
      scols[c - 1][fill - 1] = last;
      paths[{fill, c}] = std::move(path);
    }
  }
  return ScanResult{Tabloid(sh, std::move(scols)), std::move(paths)};
}

inline bool is_demazure(const Tabloid& t, const QChain& chain) {
  return dominance_leq(scan(t).scan_tableau, lambda_key(t.shape(), chain));
}

// All tableaux of the shape whose scanning tableau is dominated by the
// lambda-key of the chain, in total order.
inline std::vector<Tabloid> enumerate_demazure(const Partition& shape, const QChain& chain) {
  Tabloid bound = lambda_key(shape, chain);
  std::vector<Tabloid> out;
  for (const Tabloid& t : enumerate_tableaux(shape))
    if (dominance_leq(scan(t).scan_tableau, bound)) out.push_back(t);
  return out;
}

}  // namespace stdmon

#endif
