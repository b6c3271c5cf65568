// The function s_t, complete symmetric polynomials of commuting algebra
// elements, the heat elements I^k_{n,t}(z), I^k_{n,m,t}(z), and the moment
// tensors of Brownian motion on O(N), Sp(N) and U(N).
//
// s_t(z_1..z_K) = (-1)^{K-1} f[z_1..z_K] for f(x) = e^{-tx}, where f[...] is
// the divided difference: the normalisation for which s_t(x, 0) -> 1/x.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "heatwg/brauer.hpp"
#include "heatwg/group_algebra.hpp"
#include "heatwg/tensor_rep.hpp"
#include "heatwg/young.hpp"

namespace heatwg {

struct HeatParams {
  double t = 0.0;
  double truncation_tol = 1e-15;
  // Upper bound on the norms of the arguments; 0 means estimate it.
  double series_bound = 0.0;
};

// Ratio det(1, z, ..., z^{K-2}, e^{-tz}) / det(1, z, ..., z^{K-1}) with the
// sign (-1)^{K-1}.
inline double s_t_scalar_determinant(double t, std::span<const double> args) {
  const int k = static_cast<int>(args.size());
  if (k == 0) throw std::invalid_argument("s_t needs at least one argument");
  if (k == 1) return std::exp(-t * args[0]);
  Eigen::MatrixXd top(k, k), vander(k, k);
  for (int i = 0; i < k; ++i) {
    double power = 1.0;
    for (int j = 0; j < k; ++j) {
      vander(i, j) = power;
      if (j < k - 1) top(i, j) = power;
      power *= args[i];
    }
    top(i, k - 1) = std::exp(-t * args[i]);
  }
  const double ratio = top.partialPivLu().determinant() / vander.partialPivLu().determinant();
  return (k % 2 == 1) ? ratio : -ratio;
}

namespace detail {

// Minimal operations shared by scalars and algebra elements.
template <class Elem>
struct AlgebraOps;

template <>
struct AlgebraOps<double> {
  static double one_like(double) { return 1.0; }
  static double zero_like(double) { return 0.0; }
  static double norm_bound(double x) { return std::fabs(x); }
};

template <class Coeff>
struct AlgebraOps<GroupAlgebraElement<Coeff>> {
  using E = GroupAlgebraElement<Coeff>;
  static E one_like(const E& e) { return E::identity(e.degree()); }
  static E zero_like(const E& e) { return E(e.degree()); }
  static double norm_bound(const E& e) { return e.l1_norm(); }
};

template <class Coeff>
struct AlgebraOps<BrauerElement<Coeff>> {
  using E = BrauerElement<Coeff>;
  static E one_like(const E& e) { return E::identity(e.degree(), e.z()); }
  static E zero_like(const E& e) { return E(e.degree(), e.z()); }
  // ‖ab‖_1 <= max(1,|z|)^n ‖a‖_1 ‖b‖_1, so this scaling is submultiplicative.
  static double norm_bound(const E& e) {
    const double zabs = std::max(1.0, std::fabs(e.z().get_d()));
    return e.l1_norm() * std::pow(zabs, e.degree());
  }
};

template <class Elem>
bool pairwise_commute(const std::vector<Elem>& elems) {
  if constexpr (std::is_same_v<Elem, double>) {
    return true;
  } else {
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        const Elem d = elems[i] * elems[j] - elems[j] * elems[i];
        if (d.max_abs_coefficient() > 1e-9 * (1.0 + elems[i].l1_norm() * elems[j].l1_norm())) return false;
      }
    return true;
  }
}

// Entry (0, K-1) of exp(-t B) with B upper bidiagonal, diagonal = args and
// superdiagonal = 1, by Taylor series on B / 2^s followed by s squarings.
template <class Elem>
Elem bidiagonal_exponential_corner(const HeatParams& params, const std::vector<Elem>& args) {
  using Ops = AlgebraOps<Elem>;
  const int k = static_cast<int>(args.size());
  const double t = params.t;
  double bound = params.series_bound;
  if (bound <= 0.0)
    for (const auto& a : args) bound = std::max(bound, Ops::norm_bound(a));
  const double theta = std::fabs(t) * (bound + 1.0);
  int squarings = 0;
  while (theta / std::ldexp(1.0, squarings) > 0.5) ++squarings;
  const double h = -t / std::ldexp(1.0, squarings);
  const double theta_s = theta / std::ldexp(1.0, squarings);
  // Remainder of the Taylor tail, bounded by a geometric series.
  int order = 1;
  double term = theta_s;
  while (term * 2.0 > params.truncation_tol && order < 200) {
    ++order;
    term *= theta_s / order;
  }
  const Elem one = Ops::one_like(args.front());
  const Elem zero = Ops::zero_like(args.front());
  using Block = std::vector<std::vector<Elem>>;  // upper triangular, [i][j - i]
  auto make = [&](const Elem& fill) {
    Block b(k);
    for (int i = 0; i < k; ++i) b[i].assign(k - i, fill);
    return b;
  };
  auto multiply = [&](const Block& a, const Block& b) {
    Block c = make(zero);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) {
        Elem acc = zero;
        for (int l = i; l <= j; ++l) acc += a[i][l - i] * b[l][j - l];
        c[i][j - i] = acc;
      }
    return c;
  };
  Block step = make(zero);
  for (int i = 0; i < k; ++i) {
    step[i][0] = args[i] * h;
    if (i + 1 < k) step[i][1] = one * h;
  }
  // Horner: I + A(I + A/2(I + A/3(...))).
  Block result = make(zero);
  for (int i = 0; i < k; ++i) result[i][0] = one;
  for (int j = order; j >= 1; --j) {
    Block prod = multiply(step, result);
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < k - i; ++c) {
        prod[i][c] *= 1.0 / j;
        if (c == 0) prod[i][c] += one;
      }
    result = std::move(prod);
  }
  for (int s = 0; s < squarings; ++s) result = multiply(result, result);
  return result[0][k - 1];
}

}  // namespace detail

// Same function through the scaled series; valid for coinciding arguments.
inline double s_t_scalar_series(double t, std::span<const double> args, double tol = 1e-16) {
  if (args.empty()) throw std::invalid_argument("s_t needs at least one argument");
  HeatParams params{t, tol, 0.0};
  const std::vector<double> v(args.begin(), args.end());
  const double corner = detail::bidiagonal_exponential_corner(params, v);
  return (args.size() % 2 == 1) ? corner : -corner;
}

// Determinant route when all pairwise gaps exceed 1e-6, series otherwise.
inline double s_t_scalar(double t, std::span<const double> args) {
  if (args.empty()) throw std::invalid_argument("s_t needs at least one argument");
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < args.size(); ++i)
    for (std::size_t j = i + 1; j < args.size(); ++j) gap = std::min(gap, std::fabs(args[i] - args[j]));
  return gap > 1e-6 ? s_t_scalar_determinant(t, args) : s_t_scalar_series(t, args);
}

inline double s_t_scalar(double t, std::initializer_list<double> args) {
  return s_t_scalar(t, std::span<const double>(args.begin(), args.size()));
}

// h_r of a commuting family, by h_r^{(k)} = h_r^{(k-1)} + e_k h_{r-1}^{(k)}.
template <class Elem>
Elem h_r_commuting(int r, const std::vector<Elem>& elems) {
  using Ops = detail::AlgebraOps<Elem>;
  if (elems.empty()) throw std::invalid_argument("h_r needs at least one element");
#ifndef NDEBUG
  if (!detail::pairwise_commute(elems)) throw std::invalid_argument("h_r needs a commuting family");
#endif
  if (r < 0) return Ops::zero_like(elems.front());
  std::vector<Elem> prev(r + 1, Ops::zero_like(elems.front()));
  prev[0] = Ops::one_like(elems.front());
  for (const auto& e : elems) {
    std::vector<Elem> cur(r + 1, Ops::zero_like(e));
    cur[0] = Ops::one_like(e);
    for (int j = 1; j <= r; ++j) cur[j] = prev[j] + e * cur[j - 1];
    prev = std::move(cur);
  }
  return prev[r];
}

// s_t of a commuting family of algebra elements through the scaled series.
template <class Elem>
Elem s_t_operator(const HeatParams& params, const std::vector<Elem>& elems) {
  if (elems.empty()) throw std::invalid_argument("s_t needs at least one element");
#ifndef NDEBUG
  if (!detail::pairwise_commute(elems)) throw std::invalid_argument("s_t needs a commuting family");
#endif
  Elem corner = detail::bidiagonal_exponential_corner(params, elems);
  if (elems.size() % 2 == 0) corner *= -1.0;
  return corner;
}

// Predicate on S_a isotypic labels: false marks components in the kernel of
// the target representation.
using SpectralFilter = std::function<bool(const IntegerPartition&)>;

inline SpectralFilter keep_all() {
  return [](const IntegerPartition&) { return true; };
}

// Kernel of the symmetric group action on V^{⊗a} for the given group.
inline SpectralFilter kernel_filter(const GroupSpec& g) {
  const int N = g.N;
  if (g.family == Family::Symplectic)
    return [N](const IntegerPartition& mu) { return mu.largest_part() <= 2 * N; };
  return [N](const IntegerPartition& mu) { return mu.length() <= N; };
}

namespace detail {

// One nested isotypic component: strands 1..a_j carry μ_j (and, in the
// walled case, V̄ strands n+1..n+b_j carry ν_j).
struct Chain {
  std::vector<IntegerPartition> left, right;
};

inline void nested_chains(const std::vector<int>& sizes, std::size_t pos, const SpectralFilter& keep,
                          std::vector<IntegerPartition>& cur, std::vector<std::vector<IntegerPartition>>& out) {
  if (pos == sizes.size()) {
    out.push_back(cur);
    return;
  }
  for (const auto& mu : enumerate_partitions(sizes[pos])) {
    if (!keep(mu)) continue;
    if (!cur.empty() && !mu.contains(cur.back())) continue;
    cur.push_back(mu);
    nested_chains(sizes, pos + 1, keep, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<IntegerPartition>> nested_chains(const std::vector<int>& sizes, const SpectralFilter& keep) {
  std::vector<std::vector<IntegerPartition>> out;
  std::vector<IntegerPartition> cur;
  nested_chains(sizes, 0, keep, cur, out);
  return out;
}

// Exact product of embedded projectors for a chain, memoised.
inline std::shared_ptr<const GroupAlgebra> chain_projector(int total, int right_offset, const Chain& chain) {
  using Key = std::tuple<int, int, std::vector<std::vector<int>>, std::vector<std::vector<int>>>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const GroupAlgebra>> memo;
  Key key{total, right_offset, {}, {}};
  for (const auto& mu : chain.left) std::get<2>(key).push_back(mu.parts());
  for (const auto& nu : chain.right) std::get<3>(key).push_back(nu.parts());
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  GroupAlgebra prod = GroupAlgebra::identity(total);
  for (const auto& mu : chain.left)
    if (mu.size() > 0) prod = prod * isotypic_projector_shared(mu)->shifted(0, total);
  for (const auto& nu : chain.right)
    if (nu.size() > 0) prod = prod * isotypic_projector_shared(nu)->shifted(right_offset, total);
  auto ptr = std::make_shared<const GroupAlgebra>(std::move(prod));
  std::lock_guard<std::mutex> lock(mutex);
  return memo.emplace(key, ptr).first->second;
}

inline Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Σ_σ σ (a · d) σ^{-1} for a permutation-supported a and a single diagram d.
inline BrauerElement<double> conjugation_sum_with_diagram(const GroupAlgebraElement<double>& a, const BrauerDiagram& d,
                                                          const Rational& z, const std::vector<Permutation>& group,
                                                          double normalizer) {
  BrauerElement<double> core(d.degree(), z);
  for (const auto& [p, c] : a.terms()) {
    auto [prod, loops] = compose_diagrams(BrauerDiagram::from_permutation(p), d);
    core.add_term(prod, c * std::pow(z.get_d(), loops));
  }
  return conjugation_average(core, group, normalizer);
}

}  // namespace detail

// Spectral evaluation of s_t(Z_{a_0}, ..., Z_{a_k}) in Q[S_n] ⊗ R (with
// Z_0 = 0), dropping isotypic components rejected by the filter.
inline GroupAlgebraElement<double> s_t_of_z_chain(double t, const Rational& z, int n, const std::vector<int>& indices,
                                                  const SpectralFilter& keep) {
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] < 0 || indices[j] > n) throw std::invalid_argument("Z index out of range");
    if (j > 0 && indices[j] <= indices[j - 1]) throw std::invalid_argument("Z indices must increase");
  }
  GroupAlgebraElement<double> out(n);
  std::vector<double> values(indices.size());
  for (const auto& chain : detail::nested_chains(indices, keep)) {
    for (std::size_t j = 0; j < chain.size(); ++j)
      values[j] = indices[j] == 0 ? 0.0 : z_eigenvalue(chain[j], z).get_d();
    const double s = s_t_scalar(t, values);
    if (s == 0.0) continue;
    const auto proj = detail::chain_projector(n, 0, detail::Chain{chain, {}});
    for (const auto& [p, c] : proj->terms()) out.add_term(p, s * c.get_d());
  }
  return out;
}

// Spectral evaluation of s_t(Y_{i_0}, ..., Y_{i_k}) in Q[S_n × S_m] ⊗ R.
inline GroupAlgebraElement<double> s_t_of_y_chain(double t, const Rational& z, int n, int m, const std::vector<int>& indices,
                                                  const SpectralFilter& keep) {
  if (n > m) throw std::invalid_argument("Y chain needs n <= m");
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] < 0 || indices[j] > n) throw std::invalid_argument("Y index out of range");
    if (j > 0 && indices[j] <= indices[j - 1]) throw std::invalid_argument("Y indices must increase");
  }
  std::vector<int> left_sizes, right_sizes;
  for (int i : indices) {
    left_sizes.push_back(i);
    right_sizes.push_back(m - n + i);
  }
  const auto lefts = detail::nested_chains(left_sizes, keep);
  const auto rights = detail::nested_chains(right_sizes, keep);
  GroupAlgebraElement<double> out(n + m);
  std::vector<double> values(indices.size());
  for (const auto& left : lefts)
    for (const auto& right : rights) {
      for (std::size_t j = 0; j < indices.size(); ++j) {
        const int size = left_sizes[j] + right_sizes[j];
        if (size == 0) {
          values[j] = 0.0;
          continue;
        }
        const Rational v = make_rational(size, 2) + Rational(left[j].content_sum() + right[j].content_sum()) / z;
        values[j] = v.get_d();
      }
      const double s = s_t_scalar(t, values);
      if (s == 0.0) continue;
      const auto proj = detail::chain_projector(n + m, n, detail::Chain{left, right});
      for (const auto& [p, c] : proj->terms()) out.add_term(p, s * c.get_d());
    }
  return out;
}

// I^k_{n,t}(z) = 1/(2^k z^k (n-2k)!) Σ_σ σ s_t(Z_{n-2k}, ..., Z_n) τ_{[n-2k+1,n]} σ^{-1}.
inline BrauerElement<double> bm_moment_term(int n, int k, const Rational& z, double t,
                                            const SpectralFilter& keep = keep_all()) {
  require_nonzero(z);
  if (n < 1 || k < 0 || 2 * k > n) throw std::invalid_argument("bm_moment_term needs 0 <= 2k <= n, n >= 1");
  if (t < 0) throw std::invalid_argument("time must be non-negative");
  std::vector<int> indices;
  for (int i = n - 2 * k; i <= n; i += 2) indices.push_back(i);
  const auto s = s_t_of_z_chain(t, z, n, indices, keep);
  const BrauerDiagram contraction = k == 0 ? BrauerDiagram::identity(n) : tau_interval_diagram(n - 2 * k + 1, n, n);
  const Rational norm = rational_pow(Rational(2) * z, k) * detail::factorial(n - 2 * k);
  return detail::conjugation_sum_with_diagram(s, contraction, z, symmetric_group(n), 1.0 / norm.get_d());
}

inline BrauerElement<double> bm_moment_element(int n, const Rational& z, double t, const SpectralFilter& keep = keep_all()) {
  BrauerElement<double> out(n, z);
  for (int k = 0; 2 * k <= n; ++k) out += bm_moment_term(n, k, z, t, keep);
  return out;
}

// I^k_{n,m,t}(z) = 1/(z^k (n-k)! (m-k)!) Σ_{S_n×S_m} σ s_t(Y_{n-k}, ..., Y_n) τ̃_{[n-k+1,n]} σ^{-1}, n <= m.
inline BrauerElement<double> bm_moment_term_walled(int n, int m, int k, const Rational& z, double t,
                                                   const SpectralFilter& keep = keep_all()) {
  require_nonzero(z);
  if (n > m) throw std::invalid_argument("the walled heat element is stated for n <= m; use the swapped form");
  if (n < 0 || m < 1 || k < 0 || k > n) throw std::invalid_argument("bm_moment_term_walled needs 0 <= k <= n <= m, m >= 1");
  if (t < 0) throw std::invalid_argument("time must be non-negative");
  std::vector<int> indices;
  for (int i = n - k; i <= n; ++i) indices.push_back(i);
  const auto s = s_t_of_y_chain(t, z, n, m, indices, keep);
  const BrauerDiagram contraction =
      k == 0 ? BrauerDiagram::identity(n + m) : tau_tilde_interval_diagram(n - k + 1, n, n, m);
  const Rational norm = rational_pow(z, k) * detail::factorial(n - k) * detail::factorial(m - k);
  return detail::conjugation_sum_with_diagram(s, contraction, z, young_subgroup(n, m), 1.0 / norm.get_d());
}

// Block swap β: strand j of the (m, n) layout goes to strand j + n (j <= m)
// or j - m (j > m) of the (n, m) layout.
inline Permutation wall_swap(int n, int m) {
  std::vector<int> line(n + m);
  for (int j = 1; j <= n + m; ++j) line[j - 1] = j <= m ? j + n : j - m;
  return Permutation::from_one_line(line);
}

// For n > m the element is β I_{m,n,t} β^{-1}: E[U^{⊗n} ⊗ Ū^{⊗m}] is the
// reordered complex conjugate of E[U^{⊗m} ⊗ Ū^{⊗n}], which is real.
inline BrauerElement<double> bm_moment_element_walled(int n, int m, const Rational& z, double t,
                                                      const SpectralFilter& keep = keep_all()) {
  if (n > m) return bm_moment_element_walled(m, n, z, t, keep).conjugated(wall_swap(n, m));
  BrauerElement<double> out(n + m, z);
  for (int k = 0; k <= n; ++k) out += bm_moment_term_walled(n, m, k, z, t, keep);
  return out;
}

// E[G_t^{⊗n}] (⊗ Ḡ_t^{⊗m} for U) from the heat elements.
inline MomentTensor<double> bm_moment_tensor(const GroupSpec& g, int n, int m, double t) {
  const Rational z = g.brauer_z();
  const auto keep = kernel_filter(g);
  if (g.family == Family::Unitary) {
    checked_side(g.dim_v(), n + m);
    return rho_O(bm_moment_element_walled(n, m, z, t, keep), g.N);
  }
  if (m != 0) throw std::invalid_argument("conjugate factors only apply to the unitary group");
  checked_side(g.dim_v(), n);
  return represent(g, bm_moment_element(n, z, t, keep));
}

inline MomentTensor<double> bm_moment_tensor(const GroupSpec& g, int n, double t) { return bm_moment_tensor(g, n, 0, t); }

// E[(G_t)_{i1 j1} ⋯ (G_t)_{in jn}], 1-based, the last m factors conjugated for U.
inline double entrywise_bm_moment(const GroupSpec& g, const std::vector<int>& I, const std::vector<int>& J, double t,
                                  int m = 0) {
  if (I.size() != J.size()) throw std::invalid_argument("row and column index tuples differ in length");
  const int total = static_cast<int>(I.size());
  if (m < 0 || m > total) throw std::invalid_argument("conjugate factor count out of range");
  const auto tensor = bm_moment_tensor(g, total - m, m, t);
  return tensor.entry(I, J);
}

// The pair (z^k P_{M_k}(Δ^r), closed form through h_{r-k} of Z's).
inline std::pair<Brauer, Brauer> power_projection_check(int n, int k, int r, const Rational& z) {
  if (n < 1 || k < 0 || 2 * k > n || r < 0) throw std::invalid_argument("power_projection_check needs 0 <= 2k <= n");
  const Brauer delta = casimir_delta(n, z);
  Brauer power = Brauer::identity(n, z);
  for (int i = 0; i < r; ++i) power = power * delta;
  Brauer direct = project_Mk(power, k);
  direct *= rational_pow(z, k);
  Brauer closed(n, z);
  if (r >= k) {
    std::vector<GroupAlgebra> zs;
    for (int i = n - 2 * k; i <= n; i += 2) zs.push_back(i == 0 ? GroupAlgebra(n) : z_element_group(initial_segment(i), z, n));
    const GroupAlgebra h = h_r_commuting(r - k, zs);
    Brauer core = Brauer::from_group_algebra(h, z);
    if (k > 0) core = core * tau_interval(n - 2 * k + 1, n, n, z);
    Rational norm = rational_pow(Rational(2), k) * detail::factorial(n - 2 * k);
    Rational coeff = ((r - k) % 2 == 0 ? Rational(1) : Rational(-1)) / norm;
    closed = conjugation_average(core, symmetric_group(n), coeff);
  }
  return {direct, closed};
}

inline std::pair<Brauer, Brauer> power_projection_check_walled(int n, int m, int k, int r, const Rational& z) {
  if (n > m || k < 0 || k > n || r < 0 || m < 1) throw std::invalid_argument("walled power check needs 0 <= k <= n <= m");
  const Brauer delta = casimir_delta_walled(n, m, z);
  Brauer power = Brauer::identity(n + m, z);
  for (int i = 0; i < r; ++i) power = power * delta;
  Brauer direct = project_Mk(power, k);
  direct *= rational_pow(z, k);
  Brauer closed(n + m, z);
  if (r >= k) {
    std::vector<GroupAlgebra> ys;
    for (int i = n - k; i <= n; ++i) ys.push_back(y_element_group(i, z, n, m));
    const GroupAlgebra h = h_r_commuting(r - k, ys);
    Brauer core = Brauer::from_group_algebra(h, z);
    if (k > 0) core = core * tau_tilde_interval(n - k + 1, n, n, m, z);
    Rational norm = detail::factorial(n - k) * detail::factorial(m - k);
    Rational coeff = ((r - k) % 2 == 0 ? Rational(1) : Rational(-1)) / norm;
    closed = conjugation_average(core, young_subgroup(n, m), coeff);
  }
  return {direct, closed};
}

}  // namespace heatwg
