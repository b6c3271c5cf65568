// The group algebra of S_n over exact rationals (or doubles), with the
// Jucys-Murphy elements, the hyperoctahedral projector, the signature twist
// and averages over conjugation.
#pragma once

#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "heatwg/exact_linalg.hpp"
#include "heatwg/permutation.hpp"
#include "heatwg/rational.hpp"
#include "heatwg/sparse_combination.hpp"

namespace heatwg {

template <class Coeff = Rational>
class GroupAlgebraElement : public SparseCombination<Permutation, Coeff, PermutationHash> {
  using Base = SparseCombination<Permutation, Coeff, PermutationHash>;

 public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(int n) : n_(n) {
    if (n < 0 || n > kMaxPoints) throw std::invalid_argument("group algebra degree out of range");
  }

  static GroupAlgebraElement identity(int n, const Coeff& c = Coeff(1)) {
    return basis(Permutation::identity(n), c);
  }
  static GroupAlgebraElement basis(const Permutation& p, const Coeff& c = Coeff(1)) {
    GroupAlgebraElement e(p.degree());
    e.add_term(p, c);
    return e;
  }

  int degree() const { return n_; }

  void add_term(const Permutation& p, const Coeff& c) {
    if (p.degree() != n_) throw std::invalid_argument("group algebra term has the wrong degree");
    Base::add_term(p, c);
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    check_same(o);
    this->accumulate(o, Coeff(1));
    return *this;
  }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
    check_same(o);
    this->accumulate(o, Coeff(-1));
    return *this;
  }
  GroupAlgebraElement& operator*=(const Coeff& c) {
    this->scale_in_place(c);
    return *this;
  }
  // Adds c times the identity.
  GroupAlgebraElement& add_scalar(const Coeff& c) {
    add_term(Permutation::identity(n_), c);
    return *this;
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a) { return a *= Coeff(-1); }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Coeff& c) { return a *= c; }
  friend GroupAlgebraElement operator*(const Coeff& c, GroupAlgebraElement a) { return a *= c; }

  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check_same(b);
    GroupAlgebraElement out(a.n_);
    out.terms_.reserve(a.size() * b.size());
    for (const auto& [pa, ca] : a.terms_)
      for (const auto& [pb, cb] : b.terms_) {
        Coeff v = ca;
        v *= cb;
        out.Base::add_term(compose(pa, pb), v);
      }
    return out;
  }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.same_terms(b);
  }

  // s a s^{-1} for s in S_n.
  GroupAlgebraElement conjugated(const Permutation& s) const {
    if (s.degree() != n_) throw std::invalid_argument("conjugation by a permutation of the wrong degree");
    const Permutation s_inv = s.inverse();
    GroupAlgebraElement out(n_);
    for (const auto& [p, c] : this->terms_) out.Base::add_term(compose(compose(s, p), s_inv), c);
    return out;
  }

  // Image under S_n -> S_total acting on offset+1..offset+n.
  GroupAlgebraElement shifted(int offset, int total) const {
    GroupAlgebraElement out(total);
    for (const auto& [p, c] : this->terms_) out.Base::add_term(p.shifted(offset, total), c);
    return out;
  }

  template <class Other>
  GroupAlgebraElement<Other> cast() const {
    GroupAlgebraElement<Other> out(n_);
    for (const auto& [p, c] : this->terms_) {
      if constexpr (std::is_same_v<Coeff, Rational> && std::is_same_v<Other, double>)
        out.add_term(p, c.get_d());
      else
        out.add_term(p, Other(c));
    }
    return out;
  }

  std::string str() const {
    std::string s;
    for (const auto& [p, c] : this->sorted_terms()) {
      if (!s.empty()) s += " + ";
      if constexpr (std::is_same_v<Coeff, Rational>)
        s += "(" + c.get_str() + ")" + p.str();
      else
        s += "(" + std::to_string(c) + ")" + p.str();
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check_same(const GroupAlgebraElement& o) const {
    if (o.n_ != n_) throw std::invalid_argument("group algebra degree mismatch");
  }

  int n_ = 0;
};

using GroupAlgebra = GroupAlgebraElement<Rational>;

// X_i = (1 i) + ... + (i-1 i); X_1 = 0.
inline GroupAlgebra jucys_murphy(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("Jucys-Murphy index out of range");
  GroupAlgebra x(n);
  for (int j = 1; j < i; ++j) x.add_term(Permutation::transposition(n, j, i), Rational(1));
  return x;
}

// Stabiliser of {{1,2},...,{2p-1,2p}} in S_{2p}: block permutations and flips.
inline std::vector<Permutation> hyperoctahedral_group(int p) {
  std::vector<Permutation> out;
  for (const auto& beta : symmetric_group(p))
    for (int mask = 0; mask < (1 << p); ++mask) {
      std::vector<int> line(2 * p);
      for (int k = 0; k < p; ++k) {
        const int target = beta.image0(k);
        const bool flip = (mask >> k) & 1;
        line[2 * k] = 2 * target + (flip ? 2 : 1);
        line[2 * k + 1] = 2 * target + (flip ? 1 : 2);
      }
      out.push_back(Permutation::from_one_line(line));
    }
  return out;
}

inline GroupAlgebra hyperoctahedral_projector(int p) {
  const auto group = hyperoctahedral_group(p);
  GroupAlgebra proj(2 * p);
  const Rational w(1, static_cast<unsigned long>(group.size()));
  for (const auto& h : group) proj.add_term(h, w);
  return proj;
}

template <class Coeff>
GroupAlgebraElement<Coeff> epsilon_twist(const GroupAlgebraElement<Coeff>& a) {
  GroupAlgebraElement<Coeff> out(a.degree());
  for (const auto& [p, c] : a.terms()) {
    Coeff v = c;
    if (p.signature() < 0) v = -v;
    out.add_term(p, v);
  }
  return out;
}

// normalizer * sum_{s in subgroup} s a s^{-1}; works for any element type
// exposing conjugated(const Permutation&).
template <class Elem, class Scalar>
Elem conjugation_average(const Elem& a, const std::vector<Permutation>& subgroup, const Scalar& normalizer) {
  if (subgroup.empty()) throw std::invalid_argument("conjugation average over an empty set");
  Elem out = a.conjugated(subgroup.front());
  for (std::size_t i = 1; i < subgroup.size(); ++i) out += a.conjugated(subgroup[i]);
  out *= normalizer;
  return out;
}

// Exact inverse through the left regular representation; throws if a is a
// zero divisor.
inline GroupAlgebra invert(const GroupAlgebra& a) {
  const int n = a.degree();
  const auto group = symmetric_group(n);
  std::unordered_map<Permutation, int, PermutationHash> index;
  for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i], static_cast<int>(i));
  const int size = static_cast<int>(group.size());
  RationalMatrix left(size, size);
  for (int col = 0; col < size; ++col)
    for (const auto& [p, c] : a.terms()) left(index.at(compose(p, group[col])), col) += c;
  std::vector<Rational> rhs(size);
  rhs[index.at(Permutation::identity(n))] = 1;
  const auto x = solve(left, rhs);
  if (!x) throw std::domain_error("group algebra element is not invertible");
  GroupAlgebra inv(n);
  for (int i = 0; i < size; ++i) inv.add_term(group[i], (*x)[i]);
  return inv;
}

inline bool commute(const GroupAlgebra& a, const GroupAlgebra& b) { return a * b == b * a; }

}  // namespace heatwg
