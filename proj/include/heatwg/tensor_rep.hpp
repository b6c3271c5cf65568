// Group descriptors, dense operators on tensor powers of the fundamental
// representation, and the realisations rho_O and rho_S of Brauer elements.
#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "heatwg/brauer.hpp"
#include "heatwg/permutation.hpp"
#include "heatwg/rational.hpp"

namespace heatwg {

enum class Family { Orthogonal, Symplectic, Unitary };

struct GroupSpec {
  Family family = Family::Orthogonal;
  int N = 1;

  static GroupSpec orthogonal(int n) { return checked({Family::Orthogonal, n}); }
  static GroupSpec symplectic(int n) { return checked({Family::Symplectic, n}); }
  static GroupSpec unitary(int n) { return checked({Family::Unitary, n}); }

  // "O", "Sp" or "U".
  static GroupSpec parse(const std::string& tag, int n) {
    if (tag == "O") return orthogonal(n);
    if (tag == "Sp") return symplectic(n);
    if (tag == "U") return unitary(n);
    throw std::invalid_argument("unknown group family '" + tag + "' (expected O, Sp or U)");
  }

  int dim_v() const { return family == Family::Symplectic ? 2 * N : N; }
  Rational brauer_z() const { return family == Family::Symplectic ? Rational(-2 * N) : Rational(N); }

  int dim_algebra() const {
    switch (family) {
      case Family::Orthogonal: return N * (N - 1) / 2;
      case Family::Symplectic: return N * (2 * N + 1);
      case Family::Unitary: return N * N;
    }
    return 0;
  }

  // Scalar by which the Casimir acts on V.
  Rational casimir_constant() const {
    switch (family) {
      case Family::Orthogonal: return -make_rational(N - 1, N);
      case Family::Symplectic: return -make_rational(2 * N + 1, 2 * N);
      case Family::Unitary: return Rational(-1);
    }
    return 0;
  }

  std::string tag() const {
    switch (family) {
      case Family::Orthogonal: return "O";
      case Family::Symplectic: return "Sp";
      case Family::Unitary: return "U";
    }
    return "?";
  }
  std::string name() const { return tag() + "(" + std::to_string(N) + ")"; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  static GroupSpec checked(GroupSpec g) {
    if (g.N < 1) throw std::invalid_argument("group rank N must be positive");
    return g;
  }
};

// J = [[0, I_N], [-I_N, 0]], 0-based.
inline int symplectic_form(int N, int i, int j) {
  if (i < N && j == i + N) return 1;
  if (i >= N && j == i - N) return -1;
  return 0;
}

inline constexpr long kMaxTensorSide = 4096;

inline int checked_side(int d, int order) {
  if (d < 1 || order < 0) throw std::invalid_argument("tensor dimension must be positive");
  long side = 1;
  for (int k = 0; k < order; ++k) {
    side *= d;
    if (side > kMaxTensorSide)
      throw std::length_error("tensor power too large: d^order exceeds " + std::to_string(kMaxTensorSide));
  }
  return static_cast<int>(side);
}

// Dense operator on V^{⊗order}, dim V = d. Factor 1 is the slowest index.
template <class T>
class MomentTensor {
 public:
  MomentTensor() = default;
  MomentTensor(int d, int order) : d_(d), order_(order), side_(checked_side(d, order)) {
    data_.assign(static_cast<std::size_t>(side_) * side_, T(0));
  }

  static MomentTensor identity(int d, int order) {
    MomentTensor m(d, order);
    for (int i = 0; i < m.side_; ++i) m.at(i, i) = T(1);
    return m;
  }

  int dim() const { return d_; }
  int order() const { return order_; }
  int side() const { return side_; }

  T& at(int row, int col) { return data_[static_cast<std::size_t>(row) * side_ + col]; }
  const T& at(int row, int col) const { return data_[static_cast<std::size_t>(row) * side_ + col]; }

  // 1-based multi-index to flat 0-based index.
  int flat_index(std::span<const int> multi) const {
    if (static_cast<int>(multi.size()) != order_) throw std::invalid_argument("multi-index length does not match the tensor order");
    int flat = 0;
    for (int v : multi) {
      if (v < 1 || v > d_) throw std::out_of_range("multi-index entry out of range");
      flat = flat * d_ + (v - 1);
    }
    return flat;
  }

  std::vector<int> multi_index(int flat) const {
    std::vector<int> out(order_);
    for (int k = order_ - 1; k >= 0; --k) {
      out[k] = flat % d_ + 1;
      flat /= d_;
    }
    return out;
  }

  const T& entry(std::span<const int> row, std::span<const int> col) const { return at(flat_index(row), flat_index(col)); }
  T& entry(std::span<const int> row, std::span<const int> col) { return at(flat_index(row), flat_index(col)); }

  MomentTensor& operator+=(const MomentTensor& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  MomentTensor& operator-=(const MomentTensor& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  MomentTensor& operator*=(const T& c) {
    for (auto& v : data_) v *= c;
    return *this;
  }
  friend MomentTensor operator+(MomentTensor a, const MomentTensor& b) { return a += b; }
  friend MomentTensor operator-(MomentTensor a, const MomentTensor& b) { return a -= b; }
  friend MomentTensor operator*(MomentTensor a, const T& c) { return a *= c; }
  friend MomentTensor operator*(const T& c, MomentTensor a) { return a *= c; }

  friend MomentTensor operator*(const MomentTensor& a, const MomentTensor& b) {
    a.check_same(b);
    MomentTensor c(a.d_, a.order_);
    const int s = a.side_;
    for (int i = 0; i < s; ++i)
      for (int k = 0; k < s; ++k) {
        const T& aik = a.at(i, k);
        if (aik == T(0)) continue;
        for (int j = 0; j < s; ++j)
          if (!(b.at(k, j) == T(0))) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend bool operator==(const MomentTensor& a, const MomentTensor& b) {
    return a.d_ == b.d_ && a.order_ == b.order_ && a.data_ == b.data_;
  }

  MomentTensor transpose() const {
    MomentTensor t(d_, order_);
    for (int i = 0; i < side_; ++i)
      for (int j = 0; j < side_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  T trace() const {
    T s(0);
    for (int i = 0; i < side_; ++i) s += at(i, i);
    return s;
  }

  MomentTensor<double> to_double() const {
    MomentTensor<double> out(d_, order_);
    for (int i = 0; i < side_; ++i)
      for (int j = 0; j < side_; ++j) out.at(i, j) = CoeffTraits<T>::to_double(at(i, j));
    return out;
  }

  Eigen::MatrixXd to_eigen() const {
    Eigen::MatrixXd m(side_, side_);
    for (int i = 0; i < side_; ++i)
      for (int j = 0; j < side_; ++j) m(i, j) = CoeffTraits<T>::to_double(at(i, j));
    return m;
  }

  static MomentTensor from_eigen(const Eigen::MatrixXd& m, int d, int order) {
    static_assert(std::is_same_v<T, double>, "from_eigen builds double tensors");
    MomentTensor out(d, order);
    if (m.rows() != out.side_ || m.cols() != out.side_) throw std::invalid_argument("matrix side does not match d^order");
    for (int i = 0; i < out.side_; ++i)
      for (int j = 0; j < out.side_; ++j) out.at(i, j) = m(i, j);
    return out;
  }

 private:
  void check_same(const MomentTensor& o) const {
    if (o.d_ != d_ || o.order_ != order_) throw std::invalid_argument("tensor shape mismatch");
  }

  int d_ = 1, order_ = 0, side_ = 1;
  std::vector<T> data_{T(0)};
};

template <class A, class B>
double max_abs_diff(const MomentTensor<A>& a, const MomentTensor<B>& b) {
  if (a.dim() != b.dim() || a.order() != b.order()) throw std::invalid_argument("tensor shape mismatch");
  double m = 0.0;
  for (int i = 0; i < a.side(); ++i)
    for (int j = 0; j < a.side(); ++j)
      m = std::max(m, std::fabs(CoeffTraits<A>::to_double(a.at(i, j)) - CoeffTraits<B>::to_double(b.at(i, j))));
  return m;
}

namespace detail {

// Sign c(π) = (-1)^k ε(α) ε(β) of the symplectic realisation, where
// π = α · τ_{1,2} ⋯ τ_{2k-1,2k} · β with β sending the sorted cups to
// (1,2),(3,4),... and the through strands, in input order, to 2k+1..n, and α
// sending those slots to the caps and to the outputs of the same strands.
inline int symplectic_diagram_sign(const BrauerDiagram& d) {
  const int n = d.degree();
  std::vector<int> beta(n), alpha(n);
  int slot = 0;
  for (int a = 0; a < n; ++a) {
    const int b = d.partner0(a);
    if (b < n && b > a) {
      beta[a] = slot;
      beta[b] = slot + 1;
      slot += 2;
    }
  }
  const int k = slot / 2;
  int cap_slot = 0;
  for (int c = n; c < 2 * n; ++c) {
    const int e = d.partner0(c);
    if (e >= n && e > c) {
      alpha[cap_slot] = c - n;
      alpha[cap_slot + 1] = e - n;
      cap_slot += 2;
    }
  }
  int through = 2 * k;
  for (int u = 0; u < n; ++u) {
    const int v = d.partner0(u);
    if (v >= n) {
      beta[u] = through;
      alpha[through] = v - n;
      ++through;
    }
  }
  auto to_perm = [](const std::vector<int>& zero_based) {
    std::vector<int> line(zero_based.size());
    for (std::size_t i = 0; i < line.size(); ++i) line[i] = zero_based[i] + 1;
    return Permutation::from_one_line(line);
  };
  const int sign = to_perm(alpha).signature() * to_perm(beta).signature();
  return (k % 2 == 0) ? sign : -sign;
}

enum class Realisation { Orthogonal, Symplectic };

template <class Coeff>
MomentTensor<Coeff> realise(const BrauerElement<Coeff>& a, int N, Realisation kind) {
  const int n = a.degree();
  const int d = kind == Realisation::Symplectic ? 2 * N : N;
  MomentTensor<Coeff> out(d, n);
  std::vector<int> label(2 * n);
  std::vector<int> leaders;
  for (const auto& [diag, coeff] : a.terms()) {
    leaders.clear();
    for (int x = 0; x < 2 * n; ++x)
      if (diag.partner0(x) > x) leaders.push_back(x);
    const int sign = kind == Realisation::Symplectic ? symplectic_diagram_sign(diag) : 1;
    const long count = static_cast<long>(std::pow(d, n) + 0.5);
    for (long code = 0; code < count; ++code) {
      long rest = code;
      int weight = sign;
      for (int leader : leaders) {
        const int x = static_cast<int>(rest % d);
        rest /= d;
        const int y = diag.partner0(leader);
        const bool horizontal = (leader < n) == (y < n);
        label[leader] = x;
        if (kind == Realisation::Symplectic && horizontal) {
          label[y] = x < N ? x + N : x - N;
          weight *= symplectic_form(N, x, label[y]);
        } else {
          label[y] = x;
        }
      }
      int row = 0, col = 0;
      for (int k = 0; k < n; ++k) {
        col = col * d + label[k];
        row = row * d + label[n + k];
      }
      Coeff v = coeff;
      if (weight < 0) v = -v;
      out.at(row, col) += v;
    }
  }
  return out;
}

}  // namespace detail

// Requires the element's parameter to be z = N.
template <class Coeff>
MomentTensor<Coeff> rho_O(const BrauerElement<Coeff>& a, int N) {
  if (a.z() != Rational(N)) throw std::invalid_argument("rho_O needs an element of B_n(N)");
  return detail::realise(a, N, detail::Realisation::Orthogonal);
}

// Requires the element's parameter to be z = -2N.
template <class Coeff>
MomentTensor<Coeff> rho_S(const BrauerElement<Coeff>& a, int N) {
  if (a.z() != Rational(-2 * N)) throw std::invalid_argument("rho_S needs an element of B_n(-2N)");
  return detail::realise(a, N, detail::Realisation::Symplectic);
}

// rho_S for symplectic groups, rho_O otherwise.
template <class Coeff>
MomentTensor<Coeff> represent(const GroupSpec& g, const BrauerElement<Coeff>& a) {
  return g.family == Family::Symplectic ? rho_S(a, g.N) : rho_O(a, g.N);
}

// w_π = ε(σ) ρ(σ) w_{π0} for a pairing π of 2p points and σ(π0) = π.
inline std::vector<long long> sp_invariant_vector(const BrauerDiagram& pi, const Permutation& sigma, int N) {
  const int points = pi.points();
  if (sigma.degree() != points) throw std::invalid_argument("sigma must permute the 2p points of the pairing");
  const int p = points / 2;
  for (int k = 0; k < p; ++k) {
    const int a = sigma.image0(2 * k), b = sigma.image0(2 * k + 1);
    if (pi.partner0(a) != b) throw std::invalid_argument("sigma does not carry the base pairing to pi");
  }
  const int d = 2 * N;
  const int side = checked_side(d, points);
  std::vector<long long> w(side, 0);
  std::vector<int> idx(points);
  const int eps = sigma.signature();
  for (int flat = 0; flat < side; ++flat) {
    int rest = flat;
    for (int k = points - 1; k >= 0; --k) {
      idx[k] = rest % d;
      rest /= d;
    }
    long long v = eps;
    for (int k = 0; k < p && v != 0; ++k) v *= symplectic_form(N, idx[sigma.image0(2 * k)], idx[sigma.image0(2 * k + 1)]);
    w[flat] = v;
  }
  return w;
}

// The Casimir operator Σ ρ(x_i)^2 = 2ρ(Δ) on V^{⊗n} (⊗ V̄^{⊗m} for U).
inline MomentTensor<Rational> casimir_matrix(const GroupSpec& g, int n, int m = 0) {
  if (m != 0 && g.family != Family::Unitary) throw std::invalid_argument("conjugate factors only apply to the unitary group");
  MomentTensor<Rational> out;
  switch (g.family) {
    case Family::Orthogonal: out = rho_O(casimir_delta(n, g.brauer_z()), g.N); break;
    case Family::Symplectic: out = rho_S(casimir_delta(n, g.brauer_z()), g.N); break;
    case Family::Unitary: out = rho_O(casimir_delta_walled(n, m, g.brauer_z()), g.N); break;
  }
  out *= Rational(2);
  return out;
}

// Oracle for the heat semigroup: exp((t/2) · casimir_matrix) by dense
// matrix exponential.
inline MomentTensor<double> casimir_exponential(const GroupSpec& g, int n, int m, double t) {
  const auto c = casimir_matrix(g, n, m);
  const Eigen::MatrixXd generator = 0.5 * t * c.to_eigen();
  const Eigen::MatrixXd e = generator.exp();
  return MomentTensor<double>::from_eigen(e, c.dim(), c.order());
}

}  // namespace heatwg
