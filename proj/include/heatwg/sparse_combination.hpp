// Finite linear combinations of basis objects with no stored zeros.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heatwg/rational.hpp"

namespace heatwg {

template <class Basis, class Coeff, class Hash>
class SparseCombination {
 public:
  using basis_type = Basis;
  using coeff_type = Coeff;
  using Map = std::unordered_map<Basis, Coeff, Hash>;

  void add_term(const Basis& b, const Coeff& c) {
    if (CoeffTraits<Coeff>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (CoeffTraits<Coeff>::is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }

  std::vector<std::pair<Basis, Coeff>> sorted_terms() const {
    std::vector<std::pair<Basis, Coeff>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  // Largest coefficient magnitude; a cheap norm for comparisons in double tests.
  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [b, c] : terms_) m = std::max(m, CoeffTraits<Coeff>::magnitude(c));
    return m;
  }

  double l1_norm() const {
    double s = 0.0;
    for (const auto& [b, c] : terms_) s += CoeffTraits<Coeff>::magnitude(c);
    return s;
  }

 protected:
  void accumulate(const SparseCombination& other, const Coeff& factor) {
    for (const auto& [b, c] : other.terms_) {
      Coeff v = c;
      v *= factor;
      add_term(b, v);
    }
  }
  void scale_in_place(const Coeff& factor) {
    if (CoeffTraits<Coeff>::is_zero(factor)) {
      terms_.clear();
      return;
    }
    for (auto& [b, c] : terms_) c *= factor;
  }
  bool same_terms(const SparseCombination& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (const auto& [b, c] : terms_) {
      auto it = other.terms_.find(b);
      if (it == other.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

  Map terms_;
};

}  // namespace heatwg
