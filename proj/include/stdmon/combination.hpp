#ifndef STDMON_COMBINATION_HPP
#define STDMON_COMBINATION_HPP

#include <map>
#include <utility>

#include "stdmon/matrix.hpp"
#include "stdmon/shapes.hpp"

namespace stdmon {

// Formal rational combination of tabloid monomials of one fixed shape.
// Zero coefficients are never stored; iteration follows the total order.
class LinearCombination {
 public:
  explicit LinearCombination(Partition shape) : shape_(std::move(shape)) {}

  static LinearCombination single(const Tabloid& t) {
    LinearCombination c(t.shape());
    c.add(t, Rat(1));
    return c;
  }

  const Partition& shape() const { return shape_; }
  const std::map<Tabloid, Rat, TotalLess>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const Tabloid& t, const Rat& coeff) {
    if (t.shape() != shape_) throw error("combination term has wrong shape");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(t, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, const Rat& scale = Rat(1)) {
    if (other.shape_ != shape_) throw error("combination shape mismatch");
    for (const auto& [t, a] : other.terms_) add(t, a * scale);
  }

  Rat coeff(const Tabloid& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Rat evaluate(MonomialEvaluator& ev) const {
    Rat out(0);
    for (const auto& [t, a] : terms_) out += a * ev.eval(t);
    return out;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LinearCombination& a, const LinearCombination& b) {
    return !(a == b);
  }

 private:
  Partition shape_;
  std::map<Tabloid, Rat, TotalLess> terms_;
};

}  // namespace stdmon

#endif
