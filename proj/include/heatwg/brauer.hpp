// Brauer diagrams on 2n points, the Brauer algebra B_n(z) at a rational
// parameter, the walled subalgebra B_{n,m}(z) and the distinguished
// elements built from generators (Casimir elements, Z and Y families).
//
// Points 1..n form the top row and n+1..2n the bottom row. A diagram acts on
// V^{⊗n} with the top row as input and the bottom row as output, so a·b
// stacks b first: b's bottom row is glued to a's top row.
#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "heatwg/group_algebra.hpp"
#include "heatwg/permutation.hpp"
#include "heatwg/rational.hpp"
#include "heatwg/sparse_combination.hpp"

namespace heatwg {

inline constexpr int kMaxBrauerDegree = kMaxPoints / 2;

class BrauerDiagram {
 public:
  BrauerDiagram() = default;

  static BrauerDiagram identity(int n) { return from_permutation(Permutation::identity(n)); }

  // Blocks {k, n + σ(k)}.
  static BrauerDiagram from_permutation(const Permutation& s) {
    BrauerDiagram d = empty(s.degree());
    for (int k = 0; k < d.n_; ++k) d.link(k, d.n_ + s.image0(k));
    return d;
  }

  // 1-based pairs covering 1..2n exactly once.
  static BrauerDiagram from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    BrauerDiagram d = empty(n);
    std::array<bool, kMaxPoints> used{};
    if (static_cast<int>(pairs.size()) != n) throw std::invalid_argument("a Brauer diagram of degree n has n blocks");
    for (auto [a, b] : pairs) {
      if (a < 1 || b < 1 || a > 2 * n || b > 2 * n || a == b || used[a - 1] || used[b - 1])
        throw std::invalid_argument("pairs do not form a perfect matching");
      used[a - 1] = used[b - 1] = true;
      d.link(a - 1, b - 1);
    }
    return d;
  }

  // {{a,b},{n+a,n+b}} plus vertical strands.
  static BrauerDiagram tau(int n, int a, int b) {
    check_generator(n, a, b);
    BrauerDiagram d = empty(n);
    for (int k = 0; k < n; ++k)
      if (k != a - 1 && k != b - 1) d.link(k, n + k);
    d.link(a - 1, b - 1);
    d.link(n + a - 1, n + b - 1);
    return d;
  }

  static BrauerDiagram s(int n, int a, int b) {
    check_generator(n, a, b);
    return from_permutation(Permutation::transposition(n, a, b));
  }

  int degree() const { return n_; }
  int points() const { return 2 * n_; }
  // 1-based partner of a 1-based point.
  int partner(int point) const {
    if (point < 1 || point > 2 * n_) throw std::out_of_range("diagram point out of range");
    return match_[point - 1] + 1;
  }
  int partner0(int point) const { return match_[point]; }

  bool is_permutation() const {
    for (int k = 0; k < n_; ++k)
      if (match_[k] < n_) return false;
    return true;
  }

  Permutation to_permutation() const {
    if (!is_permutation()) throw std::invalid_argument("diagram is not a permutation");
    std::vector<int> line(n_);
    for (int k = 0; k < n_; ++k) line[k] = match_[k] - n_ + 1;
    return Permutation::from_one_line(line);
  }

  // 1-based blocks (smaller point first), sorted.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < 2 * n_; ++x)
      if (match_[x] > x) out.emplace_back(x + 1, match_[x] + 1);
    return out;
  }

  // Wall after strand n of n+m: horizontal blocks must cross it, vertical
  // blocks must not.
  bool is_walled(int n, int m) const {
    if (n + m != n_) throw std::invalid_argument("walled degrees do not add up to the diagram degree");
    auto side = [&](int x) { return (x % n_) < n ? 0 : 1; };
    auto top = [&](int x) { return x < n_; };
    for (int x = 0; x < 2 * n_; ++x) {
      const int y = match_[x];
      const bool same_row = top(x) == top(y);
      const bool same_side = side(x) == side(y);
      if (same_row == same_side) return false;
    }
    return true;
  }

  // Relabels strand k as σ(k) in both rows: the diagram of σ d σ^{-1}.
  BrauerDiagram conjugated(const Permutation& s) const {
    if (s.degree() != n_) throw std::invalid_argument("conjugation by a permutation of the wrong degree");
    BrauerDiagram d = empty(n_);
    auto relabel = [&](int x) { return x < n_ ? s.image0(x) : n_ + s.image0(x - n_); };
    for (int x = 0; x < 2 * n_; ++x) d.match_[relabel(x)] = static_cast<std::uint8_t>(relabel(match_[x]));
    return d;
  }

  std::size_t hash() const {
    std::uint64_t lo = 0, hi = 0;
    std::memcpy(&lo, match_.data(), 8);
    std::memcpy(&hi, match_.data() + 8, 8);
    std::uint64_t h = lo * 0xD6E8FEB86659FD93ULL ^ (hi * 0x9E3779B97F4A7C15ULL + (lo >> 7));
    return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(n_));
  }

  friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) {
    return a.n_ == b.n_ && a.match_ == b.match_;
  }
  friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.match_ < b.match_;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (auto [a, b] : pairs()) {
      if (!first) s += ',';
      first = false;
      s += "{" + std::to_string(a) + "," + std::to_string(b) + "}";
    }
    return s + "}";
  }

 private:
  static BrauerDiagram empty(int n) {
    if (n < 0 || n > kMaxBrauerDegree) throw std::invalid_argument("Brauer degree out of range (2n must be at most 16)");
    BrauerDiagram d;
    d.n_ = static_cast<std::uint8_t>(n);
    return d;
  }
  static void check_generator(int n, int a, int b) {
    if (a < 1 || b > n || a >= b) throw std::invalid_argument("generator indices must satisfy 1 <= a < b <= n");
  }
  void link(int x, int y) {
    match_[x] = static_cast<std::uint8_t>(y);
    match_[y] = static_cast<std::uint8_t>(x);
  }

  std::array<std::uint8_t, kMaxPoints> match_{};
  std::uint8_t n_ = 0;

  friend std::pair<BrauerDiagram, int> compose_diagrams(const BrauerDiagram&, const BrauerDiagram&);
};

struct BrauerDiagramHash {
  std::size_t operator()(const BrauerDiagram& d) const { return d.hash(); }
};

// Concatenation a∘b (b first) together with the number of closed loops.
inline std::pair<BrauerDiagram, int> compose_diagrams(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("diagram product: degree mismatch");
  const int n = a.n_;
  BrauerDiagram out = BrauerDiagram::empty(n);
  std::array<bool, kMaxBrauerDegree> middle_seen{};
  // Walks from an exterior point until it exits; exterior points are b's top
  // row (result top) and a's bottom row (result bottom).
  auto walk = [&](bool in_a, int q) {
    while (true) {
      const int p = in_a ? a.match_[q] : b.match_[q];
      if (in_a) {
        if (p >= n) return p;
        middle_seen[p] = true;
        in_a = false;
        q = n + p;
      } else {
        if (p < n) return p;
        middle_seen[p - n] = true;
        in_a = true;
        q = p - n;
      }
    }
  };
  for (int x = 0; x < n; ++x) {
    const int end = walk(false, x);
    out.link(x, end);
  }
  for (int y = n; y < 2 * n; ++y) {
    const int end = walk(true, y);
    out.link(y, end);
  }
  int loops = 0;
  for (int k = 0; k < n; ++k) {
    if (middle_seen[k]) continue;
    ++loops;
    int cur = k;
    do {
      middle_seen[cur] = true;
      const int p = a.match_[cur];
      middle_seen[p] = true;
      cur = b.match_[n + p] - n;
    } while (cur != k);
  }
  return {out, loops};
}

template <class Coeff = Rational>
class BrauerElement : public SparseCombination<BrauerDiagram, Coeff, BrauerDiagramHash> {
  using Base = SparseCombination<BrauerDiagram, Coeff, BrauerDiagramHash>;

 public:
  BrauerElement() = default;
  BrauerElement(int n, Rational z) : n_(n), z_(std::move(z)) {
    if (n < 0 || n > kMaxBrauerDegree) throw std::invalid_argument("Brauer degree out of range (2n must be at most 16)");
  }

  static BrauerElement identity(int n, const Rational& z, const Coeff& c = Coeff(1)) {
    return basis(BrauerDiagram::identity(n), z, c);
  }
  static BrauerElement basis(const BrauerDiagram& d, const Rational& z, const Coeff& c = Coeff(1)) {
    BrauerElement e(d.degree(), z);
    e.add_term(d, c);
    return e;
  }
  static BrauerElement from_group_algebra(const GroupAlgebraElement<Coeff>& g, const Rational& z) {
    BrauerElement e(g.degree(), z);
    for (const auto& [p, c] : g.terms()) e.add_term(BrauerDiagram::from_permutation(p), c);
    return e;
  }

  int degree() const { return n_; }
  const Rational& z() const { return z_; }

  void add_term(const BrauerDiagram& d, const Coeff& c) {
    if (d.degree() != n_) throw std::invalid_argument("Brauer term has the wrong degree");
    Base::add_term(d, c);
  }

  BrauerElement& operator+=(const BrauerElement& o) {
    check_same(o);
    this->accumulate(o, Coeff(1));
    return *this;
  }
  BrauerElement& operator-=(const BrauerElement& o) {
    check_same(o);
    this->accumulate(o, Coeff(-1));
    return *this;
  }
  BrauerElement& operator*=(const Coeff& c) {
    this->scale_in_place(c);
    return *this;
  }
  BrauerElement& add_scalar(const Coeff& c) {
    add_term(BrauerDiagram::identity(n_), c);
    return *this;
  }

  friend BrauerElement operator+(BrauerElement a, const BrauerElement& b) { return a += b; }
  friend BrauerElement operator-(BrauerElement a, const BrauerElement& b) { return a -= b; }
  friend BrauerElement operator-(BrauerElement a) { return a *= Coeff(-1); }
  friend BrauerElement operator*(BrauerElement a, const Coeff& c) { return a *= c; }
  friend BrauerElement operator*(const Coeff& c, BrauerElement a) { return a *= c; }

  friend BrauerElement operator*(const BrauerElement& a, const BrauerElement& b) {
    a.check_same(b);
    BrauerElement out(a.n_, a.z_);
    std::vector<Coeff> zpow{Coeff(1)};
    const Coeff zc = CoeffTraits<Coeff>::from_rational(a.z_);
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) {
        auto [d, loops] = compose_diagrams(da, db);
        while (static_cast<int>(zpow.size()) <= loops) {
          Coeff next = zpow.back();
          next *= zc;
          zpow.push_back(next);
        }
        Coeff v = ca;
        v *= cb;
        v *= zpow[loops];
        out.Base::add_term(d, v);
      }
    return out;
  }

  friend bool operator==(const BrauerElement& a, const BrauerElement& b) {
    return a.n_ == b.n_ && a.z_ == b.z_ && a.same_terms(b);
  }

  BrauerElement conjugated(const Permutation& s) const {
    BrauerElement out(n_, z_);
    for (const auto& [d, c] : this->terms_) out.Base::add_term(d.conjugated(s), c);
    return out;
  }

  template <class Other>
  BrauerElement<Other> cast() const {
    BrauerElement<Other> out(n_, z_);
    for (const auto& [d, c] : this->terms_) {
      if constexpr (std::is_same_v<Coeff, Rational> && std::is_same_v<Other, double>)
        out.add_term(d, c.get_d());
      else
        out.add_term(d, Other(c));
    }
    return out;
  }

  bool is_walled(int n, int m) const {
    for (const auto& [d, c] : this->terms_)
      if (!d.is_walled(n, m)) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    for (const auto& [d, c] : this->sorted_terms()) {
      if (!s.empty()) s += " + ";
      if constexpr (std::is_same_v<Coeff, Rational>)
        s += "(" + c.get_str() + ")" + d.str();
      else
        s += "(" + std::to_string(c) + ")" + d.str();
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check_same(const BrauerElement& o) const {
    if (o.n_ != n_) throw std::invalid_argument("Brauer degree mismatch");
    if (o.z_ != z_) throw std::invalid_argument("Brauer parameter mismatch");
  }

  int n_ = 0;
  Rational z_ = 1;
};

using Brauer = BrauerElement<Rational>;

inline Brauer diagram_multiply(const BrauerDiagram& a, const BrauerDiagram& b, const Rational& z) {
  auto [d, loops] = compose_diagrams(a, b);
  return Brauer::basis(d, z, rational_pow(z, loops));
}

inline std::pair<BrauerDiagram, BrauerDiagram> generators(int n, int a, int b) {
  return {BrauerDiagram::tau(n, a, b), BrauerDiagram::s(n, a, b)};
}

template <class Coeff>
BrauerElement<Coeff> wall_project(const BrauerElement<Coeff>& a, int n, int m) {
  if (a.degree() != n + m) throw std::invalid_argument("wall projection: degree mismatch");
  BrauerElement<Coeff> out(a.degree(), a.z());
  for (const auto& [d, c] : a.terms())
    if (d.is_walled(n, m)) out.add_term(d, c);
  return out;
}

// A ⊆ {1..n}: bottom points n+a paired inside the bottom row.
inline std::set<int> classify_MA(const BrauerDiagram& d) {
  std::set<int> a;
  const int n = d.degree();
  for (int k = 0; k < n; ++k)
    if (d.partner0(n + k) >= n) a.insert(k + 1);
  return a;
}

template <class Coeff>
BrauerElement<Coeff> project_Mk(const BrauerElement<Coeff>& a, int k) {
  if (k < 0 || 2 * k > a.degree()) throw std::invalid_argument("project_Mk: need 0 <= 2k <= n");
  BrauerElement<Coeff> out(a.degree(), a.z());
  for (const auto& [d, c] : a.terms())
    if (static_cast<int>(classify_MA(d).size()) == 2 * k) out.add_term(d, c);
  return out;
}

// τ_{r,r+1} τ_{r+2,r+3} ⋯ τ_{s-1,s}, a single diagram.
inline BrauerDiagram tau_interval_diagram(int r, int s, int n) {
  if (r < 1 || s > n || r > s || (s - r) % 2 == 0)
    throw std::invalid_argument("tau interval needs 1 <= r < s <= n with s - r odd");
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= n; ++k)
    if (k < r || k > s) pairs.emplace_back(k, n + k);
  for (int k = r; k < s; k += 2) {
    pairs.emplace_back(k, k + 1);
    pairs.emplace_back(n + k, n + k + 1);
  }
  return BrauerDiagram::from_pairs(n, pairs);
}

inline Brauer tau_interval(int r, int s, int n, const Rational& z) {
  return Brauer::basis(tau_interval_diagram(r, s, n), z);
}

// ∏_{k=r..s} τ_{k,k+m} in B_{n+m}: strand k of V contracted with strand k+m
// of V̄. Needs n <= m so that every pair crosses the wall.
inline BrauerDiagram tau_tilde_interval_diagram(int r, int s, int n, int m) {
  if (n > m) throw std::invalid_argument("tau tilde interval needs n <= m");
  if (r < 1 || s > n || r > s) throw std::invalid_argument("tau tilde interval needs 1 <= r <= s <= n");
  const int total = n + m;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> contracted(total + 1, false);
  for (int k = r; k <= s; ++k) {
    contracted[k] = contracted[k + m] = true;
    pairs.emplace_back(k, k + m);
    pairs.emplace_back(total + k, total + k + m);
  }
  for (int k = 1; k <= total; ++k)
    if (!contracted[k]) pairs.emplace_back(k, total + k);
  return BrauerDiagram::from_pairs(total, pairs);
}

inline Brauer tau_tilde_interval(int r, int s, int n, int m, const Rational& z) {
  return Brauer::basis(tau_tilde_interval_diagram(r, s, n, m), z);
}

inline void require_nonzero(const Rational& z) {
  if (sgn(z) == 0) throw std::domain_error("the Brauer parameter z must be nonzero");
}

// Z_C(z) = (1 - 1/z)|C|/2 + (1/z) Σ_{a<b in C} s_{a,b}, in Q[S_n].
inline GroupAlgebra z_element_group(const std::vector<int>& c, const Rational& z, int n) {
  require_nonzero(z);
  std::set<int> set(c.begin(), c.end());
  if (set.size() != c.size()) throw std::invalid_argument("Z_C: repeated index");
  for (int a : set)
    if (a < 1 || a > n) throw std::invalid_argument("Z_C: index out of range");
  GroupAlgebra out(n);
  if (set.empty()) return out;
  const Rational inv = 1 / z;
  out.add_scalar((1 - inv) * static_cast<long>(set.size()) / 2);
  for (auto ia = set.begin(); ia != set.end(); ++ia)
    for (auto ib = std::next(ia); ib != set.end(); ++ib) out.add_term(Permutation::transposition(n, *ia, *ib), inv);
  return out;
}

inline Brauer z_element(const std::vector<int>& c, const Rational& z, int n) {
  return Brauer::from_group_algebra(z_element_group(c, z, n), z);
}

inline std::vector<int> initial_segment(int i) {
  std::vector<int> c;
  for (int k = 1; k <= i; ++k) c.push_back(k);
  return c;
}

// Index set {1..i} ∪ {n+1..m+i} of Y_i.
inline std::vector<int> y_index_set(int i, int n, int m) {
  if (i < 0 || i > n || n > m) throw std::invalid_argument("Y_i needs 0 <= i <= n <= m");
  std::vector<int> c = initial_segment(i);
  for (int k = n + 1; k <= m + i; ++k) c.push_back(k);
  return c;
}

// Y_C = p^w(Z_C) + |C|/(2z) = |C|/2 + (1/z) Σ over same-side transpositions.
inline GroupAlgebra y_element_group_set(const std::vector<int>& c, const Rational& z, int n, int m) {
  require_nonzero(z);
  const int total = n + m;
  GroupAlgebra out(total);
  if (c.empty()) return out;
  const Rational inv = 1 / z;
  out.add_scalar(make_rational(static_cast<long>(c.size()), 2));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const int a = std::min(c[i], c[j]), b = std::max(c[i], c[j]);
      if ((a <= n) == (b <= n)) out.add_term(Permutation::transposition(total, a, b), inv);
    }
  return out;
}

inline GroupAlgebra y_element_group(int i, const Rational& z, int n, int m) {
  return y_element_group_set(y_index_set(i, n, m), z, n, m);
}

inline Brauer y_element(int i, const Rational& z, int n, int m) {
  return Brauer::from_group_algebra(y_element_group(i, z, n, m), z);
}

// Δ_{B_n}(z) = -(1 - 1/z) n/2 + (1/z) Σ_{a<b} (τ_{a,b} - s_{a,b}).
inline Brauer casimir_delta(int n, const Rational& z) {
  require_nonzero(z);
  const Rational inv = 1 / z;
  Brauer out(n, z);
  out.add_scalar(-(1 - inv) * n / 2);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      out.add_term(BrauerDiagram::tau(n, a, b), inv);
      out.add_term(BrauerDiagram::s(n, a, b), -inv);
    }
  return out;
}

inline Brauer casimir_delta_walled(int n, int m, const Rational& z) {
  Brauer out = wall_project(casimir_delta(n + m, z), n, m);
  out.add_scalar(-Rational(n + m) / (2 * z));
  return out;
}

}  // namespace heatwg
