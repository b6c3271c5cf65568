// Gram elements of invariant pairings, their Jucys-Murphy factorisations,
// Weingarten pseudo-inverses, and Haar moments of O(N), Sp(N) and U(N)
// through two independent routes: Brauer elements and entrywise sums over
// pairings with an exact Moore-Penrose inverse of the Gram matrix.
#pragma once

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "heatwg/brauer.hpp"
#include "heatwg/exact_linalg.hpp"
#include "heatwg/group_algebra.hpp"
#include "heatwg/tensor_rep.hpp"
#include "heatwg/young.hpp"

namespace heatwg {

namespace detail {

inline void pairings_rec(std::vector<int>& match, int points, std::vector<std::vector<int>>& out) {
  int first = -1;
  for (int x = 0; x < points; ++x)
    if (match[x] < 0) {
      first = x;
      break;
    }
  if (first < 0) {
    out.push_back(match);
    return;
  }
  for (int y = first + 1; y < points; ++y) {
    if (match[y] >= 0) continue;
    match[first] = y;
    match[y] = first;
    pairings_rec(match, points, out);
    match[first] = match[y] = -1;
  }
}

inline BrauerDiagram diagram_from_match(const std::vector<int>& match) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t x = 0; x < match.size(); ++x)
    if (match[x] > static_cast<int>(x)) pairs.emplace_back(static_cast<int>(x) + 1, match[x] + 1);
  return BrauerDiagram::from_pairs(static_cast<int>(match.size()) / 2, pairs);
}

}  // namespace detail

// M(2p): all pairings of 2p points, as diagrams of degree p.
inline std::vector<BrauerDiagram> all_pairings(int p) {
  if (p < 1 || p > kMaxBrauerDegree) throw std::invalid_argument("pairing size out of range");
  std::vector<std::vector<int>> raw;
  std::vector<int> match(2 * p, -1);
  detail::pairings_rec(match, 2 * p, raw);
  std::vector<BrauerDiagram> out;
  for (const auto& m : raw) out.push_back(detail::diagram_from_match(m));
  return out;
}

// M(p,p): pairings with no block inside {1..p}.
inline std::vector<BrauerDiagram> walled_pairings(int p) {
  std::vector<BrauerDiagram> out;
  for (const auto& s : symmetric_group(p)) out.push_back(BrauerDiagram::from_permutation(s));
  return out;
}

// Blocks of the join π ∨ η of two pairings on the same points.
inline int join_block_count(const BrauerDiagram& pi, const BrauerDiagram& eta) {
  if (pi.points() != eta.points()) throw std::invalid_argument("pairings on different point sets");
  const int points = pi.points();
  std::vector<int> parent(points);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int x = 0; x < points; ++x) {
    unite(x, pi.partner0(x));
    unite(x, eta.partner0(x));
  }
  int blocks = 0;
  for (int x = 0; x < points; ++x)
    if (find(x) == x) ++blocks;
  return blocks;
}

inline BrauerDiagram base_pairing(int p) {
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= p; ++k) pairs.emplace_back(2 * k - 1, 2 * k);
  return BrauerDiagram::from_pairs(p, pairs);
}

// σ(π0) for σ in S_{2p}.
inline BrauerDiagram act_on_pairing(const Permutation& sigma, const BrauerDiagram& pairing) {
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : pairing.pairs()) pairs.emplace_back(sigma(a), sigma(b));
  return BrauerDiagram::from_pairs(pairing.degree(), pairs);
}

// Sends (2k-1, 2k) to the k-th block of π (ordered by minimum) as (min, partner).
inline Permutation coset_representative(const BrauerDiagram& pi) {
  std::vector<int> line;
  for (auto [a, b] : pi.pairs()) {
    line.push_back(a);
    line.push_back(b);
  }
  return Permutation::from_one_line(line);
}

// G(z) = Σ_π z^{#(π ∨ π0)} σ_π with canonical representatives.
inline GroupAlgebra gram_element(int p, const Rational& z) {
  const BrauerDiagram base = base_pairing(p);
  GroupAlgebra out(2 * p);
  for (const auto& pi : all_pairings(p)) out.add_term(coset_representative(pi), rational_pow(z, join_block_count(pi, base)));
  return out;
}

// ∏_{k=1..p} (z + X_{2k-1}).
inline GroupAlgebra gram_element_product(int p, const Rational& z) {
  GroupAlgebra out = GroupAlgebra::identity(2 * p);
  for (int k = 1; k <= p; ++k) {
    GroupAlgebra factor = jucys_murphy(2 * k - 1, 2 * p);
    factor.add_scalar(z);
    out = out * factor;
  }
  return out;
}

// Ω(z) = Σ_σ z^{#σ} σ.
inline GroupAlgebra omega_element(int n, const Rational& z) {
  GroupAlgebra out(n);
  for (const auto& s : symmetric_group(n)) out.add_term(s, rational_pow(z, s.cycle_count()));
  return out;
}

// ∏_{i=1..n} (z + X_i).
inline GroupAlgebra omega_element_product(int n, const Rational& z) {
  GroupAlgebra out = GroupAlgebra::identity(n);
  for (int i = 1; i <= n; ++i) {
    GroupAlgebra factor = jucys_murphy(i, n);
    factor.add_scalar(z);
    out = out * factor;
  }
  return out;
}

// W(z) = Σ_{λ ⊢ p} R_{2,λ}^{-1} P_{2λ}, blocks with R_{2,λ} = 0 dropped.
inline GroupAlgebra pseudo_inverse_W(int p, const Rational& z) {
  GroupAlgebra out(2 * p);
  for (const auto& lambda : enumerate_partitions(p)) {
    const Rational r2 = r_factors(lambda, z).r2;
    if (sgn(r2) == 0) continue;
    GroupAlgebra block = isotypic_projector(lambda.doubled());
    block *= Rational(1 / r2);
    out += block;
  }
  return out;
}

// Wg(z) = Σ_{λ ⊢ n} R_λ^{-1} P_λ, blocks with R_λ = 0 dropped.
inline GroupAlgebra pseudo_inverse_Wg(int n, const Rational& z) {
  GroupAlgebra out(n);
  for (const auto& lambda : enumerate_partitions(n)) {
    const Rational r = r_factors(lambda, z).r;
    if (sgn(r) == 0) continue;
    GroupAlgebra block = isotypic_projector(lambda);
    block *= Rational(1 / r);
    out += block;
  }
  return out;
}

// Spectral pseudo-inverse of Z_i(z) inside Q[S_n].
inline GroupAlgebra z_pseudo_inverse(int i, const Rational& z, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("Z_i index out of range");
  GroupAlgebra out(n);
  for (const auto& mu : enumerate_partitions(i)) {
    const Rational zeta = z_eigenvalue(mu, z);
    if (sgn(zeta) == 0) continue;
    GroupAlgebra block = isotypic_projector(mu).shifted(0, n);
    block *= Rational(1 / zeta);
    out += block;
  }
  return out;
}

// Haar moment operators as Brauer elements: I_{2p}(z) for O and Sp,
// I_{n,n}(z) for U. Odd orders (O, Sp) and n != m (U) give zero.
inline Brauer haar_element(const GroupSpec& g, int n, int m = 0) {
  const Rational z = g.brauer_z();
  if (g.family == Family::Unitary) {
    if (n < 0 || m < 0 || n + m < 1) throw std::invalid_argument("unitary moment needs n + m >= 1");
    Brauer out(n + m, z);
    if (n != m) return out;
    Brauer core = Brauer::from_group_algebra(pseudo_inverse_Wg(n, z).shifted(0, 2 * n), z) *
                  tau_tilde_interval(1, n, n, n, z);
    Rational norm = 1;
    for (int k = 2; k <= n; ++k) norm *= k;
    return conjugation_average(core, young_subgroup(n, n), Rational(1 / norm));
  }
  if (m != 0) throw std::invalid_argument("conjugate factors only apply to the unitary group");
  if (n < 1) throw std::invalid_argument("moment order must be positive");
  Brauer out(n, z);
  if (n % 2 != 0) return out;
  const int p = n / 2;
  Brauer core = Brauer::from_group_algebra(pseudo_inverse_W(p, z), z) * tau_interval(1, n, n, z);
  Rational norm = 1;
  for (int k = 1; k <= p; ++k) norm *= 2 * k;
  return conjugation_average(core, symmetric_group(n), Rational(1 / norm));
}

inline MomentTensor<Rational> haar_moment(const GroupSpec& g, int n, int m = 0) {
  return represent(g, haar_element(g, n, m));
}

namespace detail {

struct GramKey {
  int family, N, p;
  auto operator<=>(const GramKey&) const = default;
};

struct PairingSystem {
  std::vector<BrauerDiagram> pairings;
  std::vector<Permutation> reps;
  RationalMatrix weingarten;
};

inline const PairingSystem& pairing_system(const GroupSpec& g, int p) {
  static std::mutex mutex;
  static std::map<GramKey, std::unique_ptr<PairingSystem>> memo;
  const GramKey key{static_cast<int>(g.family), g.N, p};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = memo.find(key);
  if (it != memo.end()) return *it->second;
  auto sys = std::make_unique<PairingSystem>();
  if (g.family == Family::Unitary) {
    // M(p,p) with the first p points as U factors and the rest as Ū factors.
    for (const auto& s : symmetric_group(p)) {
      std::vector<std::pair<int, int>> pairs;
      for (int k = 1; k <= p; ++k) pairs.emplace_back(k, p + s(k));
      sys->pairings.push_back(BrauerDiagram::from_pairs(p, pairs));
    }
  } else {
    sys->pairings = all_pairings(p);
  }
  for (const auto& pi : sys->pairings) sys->reps.push_back(coset_representative(pi));
  const int size = static_cast<int>(sys->pairings.size());
  const Rational z = g.brauer_z();
  RationalMatrix gram(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) gram(i, j) = rational_pow(z, join_block_count(sys->pairings[i], sys->pairings[j]));
  sys->weingarten = moore_penrose(gram);
  return *memo.emplace(key, std::move(sys)).first->second;
}

inline int inv2(const Permutation& sigma, const std::vector<int>& idx) {
  int count = 0;
  for (int k = 0; k < sigma.degree() / 2; ++k)
    if (idx[sigma.image0(2 * k + 1)] < idx[sigma.image0(2 * k)]) ++count;
  return count;
}

}  // namespace detail

// Gram matrix z^{#(π∨η)} over the given pairings.
inline RationalMatrix gram_matrix(const std::vector<BrauerDiagram>& pairings, const Rational& z) {
  const int size = static_cast<int>(pairings.size());
  RationalMatrix gram(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) gram(i, j) = rational_pow(z, join_block_count(pairings[i], pairings[j]));
  return gram;
}

// ∫ G_{i1 j1} ⋯ G_{in jn} dG (with the last m factors conjugated for U),
// summed over pairings with the exact Moore-Penrose inverse of the Gram
// matrix. Indices are 1-based.
inline Rational haar_entrywise(const GroupSpec& g, const std::vector<int>& I, const std::vector<int>& J, int m = 0) {
  if (I.size() != J.size()) throw std::invalid_argument("row and column index tuples differ in length");
  const int total = static_cast<int>(I.size());
  const int d = g.dim_v();
  for (int v : I)
    if (v < 1 || v > d) throw std::out_of_range("row index out of range");
  for (int v : J)
    if (v < 1 || v > d) throw std::out_of_range("column index out of range");
  if (total == 0) return 1;
  if (g.family != Family::Unitary && m != 0) throw std::invalid_argument("conjugate factors only apply to the unitary group");
  if (g.family == Family::Unitary) {
    if (m < 0 || m > total) throw std::invalid_argument("conjugate factor count out of range");
    if (2 * m != total) return 0;
  } else if (total % 2 != 0) {
    return 0;
  }
  const int p = total / 2;
  const auto& sys = detail::pairing_system(g, p);
  const int size = static_cast<int>(sys.pairings.size());
  auto admissible = [&](const BrauerDiagram& pi, const std::vector<int>& idx) {
    for (auto [a, b] : pi.pairs()) {
      const int x = idx[a - 1], y = idx[b - 1];
      if (g.family == Family::Symplectic) {
        if (std::abs(x - y) != g.N) return false;
      } else if (x != y) {
        return false;
      }
    }
    return true;
  };
  std::vector<int> rows_ok, cols_ok;
  for (int i = 0; i < size; ++i) {
    if (admissible(sys.pairings[i], I)) rows_ok.push_back(i);
    if (admissible(sys.pairings[i], J)) cols_ok.push_back(i);
  }
  Rational total_value = 0;
  for (int a : rows_ok)
    for (int b : cols_ok) {
      const Rational& w = sys.weingarten(a, b);
      if (sgn(w) == 0) continue;
      if (g.family == Family::Symplectic) {
        const int sign_eps = sys.reps[a].signature() * sys.reps[b].signature();
        const int parity = detail::inv2(sys.reps[a], I) + detail::inv2(sys.reps[b], J) + p;
        const int sign = (parity % 2 == 0) ? sign_eps : -sign_eps;
        total_value += sign * w;
      } else {
        total_value += w;
      }
    }
  return total_value;
}

// I'_n(N) = 1/((2N)^k N!^2) Σ_σ σ Z_{N+2}^{-1} Z_{N+4}^{-1} ⋯ Z_n^{-1} ε_N τ_{[N+1,n]} σ^{-1}
// with n = N + 2k; zero when n - N is negative or odd.
inline Brauer so_correction_element(int n, int N) {
  if (n < 1 || N < 1) throw std::invalid_argument("so_correction needs positive n and N");
  const Rational z(N);
  Brauer out(n, z);
  if (n < N || (n - N) % 2 != 0) return out;
  const int k = (n - N) / 2;
  GroupAlgebra core = GroupAlgebra::identity(n);
  for (int i = N + 2; i <= n; i += 2) core = core * z_pseudo_inverse(i, z, n);
  GroupAlgebra eps(n);
  for (const auto& s : symmetric_group(N)) eps.add_term(s.embed(n), Rational(s.signature()));
  core = core * eps;
  Brauer element = Brauer::from_group_algebra(core, z);
  if (k > 0) element = element * tau_interval(N + 1, n, n, z);
  Rational fact = 1;
  for (int i = 2; i <= N; ++i) fact *= i;
  const Rational norm = 1 / (rational_pow(Rational(2 * N), k) * fact * fact);
  return conjugation_average(element, symmetric_group(n), norm);
}

// ∫_{O(N)} O^{⊗n} det(O) dO.
inline MomentTensor<Rational> so_correction(int n, int N) { return rho_O(so_correction_element(n, N), N); }

}  // namespace heatwg
