#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "helpers.hpp"
#include "stdmon/flags.hpp"
#include "stdmon/scanning.hpp"

using namespace stdmon;
using testutil::chain;
using testutil::shape_fits_qset;
using testutil::shapes_up_to;
using testutil::tab;

TEST_CASE("ewis examples") {
  CHECK(ewis({2, 1}) == std::vector<int>{1});
  CHECK(ewis({3, 1, 2, 5}) == std::vector<int>{1, 4});
  CHECK(ewis({1, 2, 2, 1}) == std::vector<int>{1, 2, 3});
  CHECK(ewis({5}) == std::vector<int>{1});
  CHECK_THROWS_AS(ewis({}), error);
}

TEST_CASE("ewis greedy characterization") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int len = rng.uniform_int(1, 12);
    std::vector<int> seq(len);
    for (int& v : seq) v = rng.uniform_int(1, 6);
    auto idx = ewis(seq);
    REQUIRE_FALSE(idx.empty());
    CHECK(idx.front() == 1);
    for (size_t t = 1; t < idx.size(); ++t) {
      CHECK(idx[t - 1] < idx[t]);
      CHECK(seq[idx[t] - 1] >= seq[idx[t - 1] - 1]);
    }
    // Everything skipped was too small to extend the subsequence.
    size_t t = 0;
    int last = seq[0];
    for (int i = 1; i <= len; ++i) {
      if (t < idx.size() && idx[t] == i) {
        last = seq[i - 1];
        ++t;
      } else {
        CHECK(seq[i - 1] < last);
      }
    }
  }
}

TEST_CASE("scan example with paths") {
  auto res = scan(tab(3, {{1, 3}, {2}}));
  CHECK(res.scan_tableau == tab(3, {{2, 3}, {2}}));
  REQUIRE(res.paths.size() == 3);
  CHECK(res.paths.at({1, 1}) == Region{{1, 1}, {1, 2}});
  CHECK(res.paths.at({2, 1}) == Region{{2, 1}});
  CHECK(res.paths.at({1, 2}) == Region{{1, 2}});
}

TEST_CASE("scan domain") {
  CHECK_THROWS_AS(scan(tab(3, {{2, 3}, {1}})), error);
  CHECK(scan(Tabloid::empty(3)).scan_tableau == Tabloid::empty(3));

  Tabloid col = tab(4, {{1, 3}});
  auto res = scan(col);
  CHECK(res.scan_tableau == col);
  CHECK(res.paths.at({1, 1}) == Region{{1, 1}});
  CHECK(res.paths.at({2, 1}) == Region{{2, 1}});
}

TEST_CASE("scan fixes keys") {
  for (const auto& q : all_qsets(3))
    for (const auto& c : enumerate_chains(q)) {
      Tabloid key = key_of(c);
      CHECK(scan(key).scan_tableau == key);
      for (const auto& sh : shapes_up_to(3, 5)) {
        if (sh.size() == 0 || !shape_fits_qset(sh, q)) continue;
        Tabloid lk = lambda_key(sh, c);
        CHECK(scan(lk).scan_tableau == lk);
      }
    }
}

TEST_CASE("scanning paths link downward") {
  for (const auto& sh : shapes_up_to(3, 4)) {
    if (sh.size() == 0) continue;
    for (const auto& t : enumerate_tableaux(sh)) {
      auto res = scan(t);
      for (int c = 1; c <= sh.num_cols(); ++c)
        for (int r = 1; r < sh.col_len(c); ++r) {
          const Region& cur = res.paths.at({r, c});
          const Region& below = res.paths.at({r + 1, c});
          for (auto [p, b] : cur) {
            bool linked = false;
            for (auto [u, v] : below)
              if (v <= b && t.at(u, v) > t.at(p, b)) linked = true;
            CHECK(linked);
          }
        }
    }
  }
}

TEST_CASE("rightmost column survives scanning") {
  for (const auto& sh : shapes_up_to(3, 5)) {
    if (sh.size() == 0) continue;
    int w = sh.num_cols();
    for (const auto& t : enumerate_tableaux(sh)) {
      Tabloid s = scan(t).scan_tableau;
      CHECK(s.column(w) == t.column(w));
      for (int v : t.column(w)) {
        for (int c = 1; c <= w; ++c) {
          const auto& col = s.column(c);
          CHECK(std::find(col.begin(), col.end(), v) != col.end());
        }
      }
    }
  }
}

TEST_CASE("scan after dropping a column is dominated") {
  for (const auto& sh : shapes_up_to(3, 5)) {
    if (sh.size() == 0) continue;
    for (const auto& t : enumerate_tableaux(sh)) {
      Tabloid inner = scan(t.drop_last_column()).scan_tableau;
      Tabloid outer = scan(t).scan_tableau.drop_last_column();
      CHECK(dominance_leq(inner, outer));
    }
  }
}

TEST_CASE("demazure membership") {
  QChain pi = chain(3, {{1}, {1, 3}});
  CHECK_FALSE(is_demazure(tab(3, {{1, 3}, {2}}), pi));
  CHECK(is_demazure(tab(3, {{1, 2}, {1}}), pi));
  CHECK(is_demazure(tab(3, {{1, 3}, {1}}), pi));

  Partition sh(3, {2, 1, 0});
  auto basis = enumerate_demazure(sh, pi);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == tab(3, {{1, 2}, {1}}));
  CHECK(basis[1] == tab(3, {{1, 3}, {1}}));

  QSet q(3, {1, 2});
  CHECK(enumerate_demazure(sh, minimal_chain(q)) ==
        std::vector<Tabloid>{lambda_key(sh, minimal_chain(q))});
  CHECK(enumerate_demazure(sh, maximal_chain(q)).size() == 8);
}

TEST_CASE("demazure sets nest along bruhat order") {
  Partition sh(3, {2, 1, 0});
  auto chains = enumerate_chains(QSet(3, {1, 2}));
  for (const auto& lo : chains)
    for (const auto& hi : chains) {
      if (!bruhat_leq(lo, hi)) continue;
      auto small = enumerate_demazure(sh, lo);
      auto big = enumerate_demazure(sh, hi);
      for (const auto& t : small)
        CHECK(std::find(big.begin(), big.end(), t) != big.end());
    }
}
