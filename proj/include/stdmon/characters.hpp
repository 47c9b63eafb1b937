#ifndef STDMON_CHARACTERS_HPP
#define STDMON_CHARACTERS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stdmon/chains.hpp"
#include "stdmon/rational.hpp"
#include "stdmon/scanning.hpp"
#include "stdmon/shapes.hpp"

namespace stdmon {

// Polynomial in y_1..y_n with arbitrary-precision integer coefficients.
class Polynomial {
 public:
  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars_ < 1) throw error("polynomial needs at least one variable");
  }

  static Polynomial monomial(std::vector<int> exps, Int coeff = 1) {
    Polynomial p((int)exps.size());
    p.add_term(std::move(exps), std::move(coeff));
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<int> exps, Int coeff) {
    if ((int)exps.size() != nvars_) throw error("exponent vector has wrong length");
    for (int e : exps)
      if (e < 0) throw error("negative exponent");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(std::move(exps), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const Polynomial& other, const Int& scale = 1) {
    if (other.nvars_ != nvars_) throw error("polynomial variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c * scale);
  }

  Int at_ones() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  // Same polynomial with variables i and i+1 exchanged in every term.
  Polynomial swap_adjacent(int i) const {
    if (i < 1 || i >= nvars_) throw error("variable index out of range");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      std::vector<int> f = e;
      std::swap(f[i - 1], f[i]);
      out.add_term(std::move(f), c);
    }
    return out;
  }

  // Terms printed from the largest exponent vector down, e.g.
  // "y1*y2 + y1*y3 + y2*y3"; the zero polynomial prints "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Int& c = it->second;
      bool negative = c < 0;
      Int mag = negative ? Int(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string vars;
      for (int v = 1; v <= nvars_; ++v) {
        int e = it->first[v - 1];
        if (e == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += "y" + std::to_string(v);
        if (e > 1) vars += "^" + std::to_string(e);
      }
      if (vars.empty()) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + "*";
        out += vars;
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  int nvars_;
  std::map<std::vector<int>, Int> terms_;
};

// Content vector: entry i counts the values of T equal to i.
inline std::vector<int> weight(const Tabloid& t) {
  std::vector<int> w(t.n(), 0);
  for (const auto& col : t.columns())
    for (int v : col) ++w[v - 1];
  return w;
}

// Sum of y^T over the pi-Demazure tableaux of the shape.
inline Polynomial key_polynomial(const Partition& shape, const QChain& chain) {
  Polynomial p(shape.n());
  for (const Tabloid& t : enumerate_demazure(shape, chain)) p.add_term(weight(t), 1);
  return p;
}

// Isobaric divided difference pi_i: p -> (y_i p - y_{i+1} s_i p)/(y_i - y_{i+1}),
// computed termwise as a telescoping sum so the division is never performed.
inline Polynomial divided_difference(int i, const Polynomial& p) {
  if (i < 1 || i >= p.nvars()) throw error("operator index out of range");
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    int a = e[i - 1], b = e[i];
    std::vector<int> f = e;
    if (a >= b) {
      for (int t = b; t <= a; ++t) {
        f[i - 1] = t;
        f[i] = a + b - t;
        out.add_term(f, c);
      }
    } else {
      for (int t = a + 1; t <= b - 1; ++t) {
        f[i - 1] = t;
        f[i] = a + b - t;
        out.add_term(f, -c);
      }
    }
  }
  return out;
}

namespace detail {

inline bool is_identity_perm(const std::vector<int>& w) {
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] != (int)i + 1) return false;
  return true;
}

inline std::vector<int> positions_of(const std::vector<int>& w) {
  std::vector<int> pos(w.size() + 1, 0);
  for (size_t i = 0; i < w.size(); ++i) pos[w[i]] = (int)i + 1;
  return pos;
}

}  // namespace detail

// Reduced word j_1..j_l with w = s_{j_1} ... s_{j_l}, peeling the smallest
// left descent first; this yields the lexicographically smallest word.
// With `largest_first` the largest left descent is peeled instead, giving an
// independent second word for cross-checks.
inline std::vector<int> reduced_word(std::vector<int> w, bool largest_first = false) {
  int n = (int)w.size();
  for (int v = 1; v <= n; ++v) {
    bool found = false;
    for (int x : w) found = found || (x == v);
    if (!found) throw error("not a permutation of [n]");
  }
  std::vector<int> word;
  while (!detail::is_identity_perm(w)) {
    std::vector<int> pos = detail::positions_of(w);
    int chosen = 0;
    for (int i = 1; i <= n - 1; ++i)
      if (pos[i] > pos[i + 1]) {
        chosen = i;
        if (!largest_first) break;
      }
    if (chosen == 0) throw error("descent search failed");
    word.push_back(chosen);
    for (int& x : w) {
      if (x == chosen)
        x = chosen + 1;
      else if (x == chosen + 1)
        x = chosen;
    }
  }
  return word;
}

// Demazure polynomial by divided differences: the operators of a reduced
// word of w act on y^shape, rightmost letter first.
inline Polynomial demazure_oracle(const Partition& shape, const std::vector<int>& w) {
  if ((int)w.size() != shape.n()) throw error("permutation length must equal n");
  Polynomial p = Polynomial::monomial(shape.parts());
  std::vector<int> word = reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = divided_difference(*it, p);
  return p;
}

inline Polynomial demazure_oracle_word(const Partition& shape, const std::vector<int>& word) {
  Polynomial p = Polynomial::monomial(shape.parts());
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = divided_difference(*it, p);
  return p;
}

inline int demazure_dimension(const Partition& shape, const QChain& chain) {
  return (int)enumerate_demazure(shape, chain).size();
}

}  // namespace stdmon

#endif
