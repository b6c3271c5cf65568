// Cross-checks shared by the acceptance binary and `heatwg verify`. Each
// suite returns named checks with the measured deviation and the tolerance
// it was held to; exact checks use tolerance 0.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "heatwg/heat.hpp"
#include "heatwg/mc_oracle.hpp"
#include "heatwg/weingarten.hpp"

namespace heatwg::verify {

struct Check {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
  int failures() const {
    int f = 0;
    for (const auto& c : checks) f += c.passed ? 0 : 1;
    return f;
  }
  double max_deviation() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.deviation);
    return m;
  }
};

struct Options {
  std::uint64_t seed = 20240601;
  int threads = 1;
  double theorem_tol = 1e-9;
  double haar_tol = 1e-6;
  double haar_time = 40.0;
  double so_tol = 1e-10;
  double spectral_slack = 1e-9;
  long mc_paths = 200000;
  double mc_step = 1.0 / 512;
  double mc_sigmas = 4.0;
  double mc_abs_tol = 0.01;
};

struct GridCell {
  GroupSpec group;
  int n = 1;
  int m = 0;

  std::string label() const {
    std::ostringstream os;
    os << group.name() << " n=" << n;
    if (group.family == Family::Unitary) os << " m=" << m;
    return os.str();
  }
};

inline std::vector<GridCell> acceptance_grid() {
  std::vector<GridCell> grid;
  for (int N : {2, 3})
    for (int n = 1; n <= 4; ++n) grid.push_back({GroupSpec::orthogonal(N), n, 0});
  for (int N : {1, 2})
    for (int n = 1; n <= 3; ++n) grid.push_back({GroupSpec::symplectic(N), n, 0});
  for (int N : {2, 3})
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) grid.push_back({GroupSpec::unitary(N), n, m});
  return grid;
}

namespace detail {

inline Check tolerance_check(std::string name, double deviation, double tolerance, std::string note = {}) {
  return Check{std::move(name), deviation, tolerance, deviation <= tolerance, std::move(note)};
}

template <class Elem>
Check exact_check(std::string name, const Elem& lhs, const Elem& rhs, std::string note = {}) {
  const bool equal = lhs == rhs;
  const double deviation = (lhs - rhs).max_abs_coefficient();
  return Check{std::move(name), equal ? 0.0 : std::max(deviation, 1e-300), 0.0, equal, std::move(note)};
}

// Folds many exact comparisons into one check, remembering the first failure.
class ExactTally {
 public:
  explicit ExactTally(std::string name) : name_(std::move(name)) {}

  template <class Elem>
  void compare(const Elem& lhs, const Elem& rhs, const std::string& where) {
    ++cases_;
    if (lhs == rhs) return;
    deviation_ = std::max(deviation_, std::max((lhs - rhs).max_abs_coefficient(), 1e-300));
    if (failures_++ == 0) first_failure_ = where;
  }

  Check finish() const {
    std::string note = std::to_string(cases_) + " cases";
    if (failures_ > 0) note += ", " + std::to_string(failures_) + " failing, first: " + first_failure_;
    return Check{name_, deviation_, 0.0, failures_ == 0 && cases_ > 0, note};
  }

 private:
  std::string name_;
  long cases_ = 0, failures_ = 0;
  double deviation_ = 0.0;
  std::string first_failure_;
};

template <class Body>
SuiteReport timed(std::string suite, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{std::move(suite), {}, 0.0};
  body(report.checks);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline Brauer tau_gen(int n, int a, int b, const Rational& z) {
  return Brauer::basis(BrauerDiagram::tau(n, std::min(a, b), std::max(a, b)), z);
}

inline Brauer s_gen(int n, int a, int b, const Rational& z) {
  return Brauer::basis(BrauerDiagram::s(n, std::min(a, b), std::max(a, b)), z);
}

inline std::vector<Rational> sample_points() { return {Rational(3), Rational(-4), make_rational(7, 2)}; }

inline std::string where(int n, const Rational& z) { return "n=" + std::to_string(n) + " z=" + to_string(z); }

// Diagonal of A^{⊗n} with A = diag(-1, 1, ..., 1).
inline MomentTensor<double> reflect_average(const MomentTensor<double>& t) {
  const int d = t.dim();
  const int side = t.side();
  MomentTensor<double> out = t;
  for (int r = 0; r < side; ++r) {
    int sign = 1;
    for (int rest = r, k = 0; k < t.order(); ++k, rest /= d)
      if (rest % d == 0) sign = -sign;
    for (int c = 0; c < side; ++c) out.at(r, c) = 0.5 * (t.at(r, c) + sign * t.at(r, c));
  }
  return out;
}

inline double min_eigenvalue(const MomentTensor<Rational>& t) {
  const Eigen::MatrixXd m = t.to_eigen();
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace detail

// Criterion 1: ρ(I_{n,t}) against the dense exponential of the Casimir.
inline SuiteReport theorem_suite(const Options& opt = {}) {
  return detail::timed("theorem", [&](std::vector<Check>& out) {
    for (const auto& cell : acceptance_grid())
      for (double t : {0.25, 1.0}) {
        const auto formula = bm_moment_tensor(cell.group, cell.n, cell.m, t);
        const auto oracle = casimir_exponential(cell.group, cell.n, cell.m, t);
        std::ostringstream name;
        name << cell.label() << " t=" << t;
        out.push_back(detail::tolerance_check(name.str(), max_abs_diff(formula, oracle), opt.theorem_tol));
      }
  });
}

// Criterion 2: exact identities in B_n(z), Q[S_n] and B_{n,m}(z).
inline SuiteReport algebra_suite(const Options& = {}) {
  return detail::timed("algebra", [&](std::vector<Check>& out) {
    using detail::s_gen;
    using detail::tau_gen;
    using detail::where;
    const char* labels[9] = {"tau^2 = z tau",     "s^2 = 1",          "s tau = tau",      "tau_ab tau_cd commute", "s_ab s_cd commute",
                             "s_ab tau_cd commute", "s_ab tau_bc s_ab = tau_ac", "braid relation", "tau_ab tau_bc = s_ac tau_bc"};
    std::vector<detail::ExactTally> rel;
    for (const char* l : labels) rel.emplace_back(std::string("Brauer relation: ") + l);
    for (const auto& z : detail::sample_points())
      for (int n = 2; n <= 4; ++n) {
        const Brauer one = Brauer::identity(n, z);
        for (int a = 1; a <= n; ++a)
          for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            const Brauer tab = tau_gen(n, a, b, z), sab = s_gen(n, a, b, z);
            const std::string w = where(n, z) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
            rel[0].compare(tab * tab, tab * z, w);
            rel[1].compare(sab * sab, one, w);
            rel[2].compare(sab * tab, tab, w);
            for (int c = 1; c <= n; ++c) {
              if (c == a || c == b) continue;
              const Brauer tbc = tau_gen(n, b, c, z), sbc = s_gen(n, b, c, z);
              const std::string w3 = w + " c=" + std::to_string(c);
              rel[6].compare(sab * tbc * sab, tau_gen(n, a, c, z), w3);
              rel[7].compare(sab * sbc * sab, sbc * sab * sbc, w3);
              rel[8].compare(tab * tbc, s_gen(n, a, c, z) * tbc, w3);
              for (int d = 1; d <= n; ++d) {
                if (d == a || d == b || d == c) continue;
                const Brauer tcd = tau_gen(n, c, d, z), scd = s_gen(n, c, d, z);
                const std::string w4 = w3 + " d=" + std::to_string(d);
                rel[3].compare(tab * tcd, tcd * tab, w4);
                rel[4].compare(sab * scd, scd * sab, w4);
                rel[5].compare(sab * tcd, tcd * sab, w4);
              }
            }
          }
      }
    for (const auto& r : rel) out.push_back(r.finish());

    const std::vector<Rational> zs = {Rational(2), Rational(-3), make_rational(5, 2), Rational(7)};
    detail::ExactTally gram("G(z) = prod (z + X_{2k-1}) as operators on P_H");
    detail::ExactTally gram_commute("P_H G(z) = G(z) P_H");
    for (int p = 1; p <= 3; ++p) {
      const GroupAlgebra ph = hyperoctahedral_projector(p);
      for (const auto& z : zs) {
        const GroupAlgebra coset = gram_element(p, z), product = gram_element_product(p, z);
        gram.compare(coset * ph, product * ph, "p=" + std::to_string(p) + " z=" + to_string(z));
        gram_commute.compare(ph * product, product * ph, "p=" + std::to_string(p) + " z=" + to_string(z));
      }
    }
    out.push_back(gram.finish());
    out.push_back(gram_commute.finish());

    detail::ExactTally omega("Omega(z) = prod (z + X_i)");
    for (int n = 1; n <= 5; ++n)
      for (const auto& z : zs) omega.compare(omega_element(n, z), omega_element_product(n, z), where(n, z));
    out.push_back(omega.finish());

    detail::ExactTally jm_h("(X_1+...+X_2i) P_H = P_H i(1+X_{2i-1}) P_H");
    detail::ExactTally jm_d("same-side transpositions P_D = P_D i X_i P_D");
    detail::ExactTally inv_g("z^p G^{-1} P_H = p! P_H Z_2^{-1}...Z_2p^{-1} P_H");
    detail::ExactTally inv_o("z^p Omega^{-1} P_D = p! P_D Y_1^{-1}...Y_p^{-1} P_D");
    const Rational z100(100);
    for (int i = 1; i <= 2; ++i) {
      const int n = 2 * i;
      const GroupAlgebra ph = hyperoctahedral_projector(i);
      GroupAlgebra xsum(n);
      for (int k = 1; k <= n; ++k) xsum += jucys_murphy(k, n);
      GroupAlgebra rhs = jucys_murphy(n - 1, n);
      rhs.add_scalar(Rational(1));
      rhs *= Rational(i);
      jm_h.compare(xsum * ph, ph * rhs * ph, "i=" + std::to_string(i));

      GroupAlgebra pd(n);
      const auto group = symmetric_group(i);
      for (const auto& s : group) pd.add_term(compose(s.embed(n), s.shifted(i, n)), Rational(1, static_cast<unsigned long>(group.size())));
      GroupAlgebra same(n);
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          if ((a <= i) == (b <= i)) same.add_term(Permutation::transposition(n, a, b), Rational(1));
      GroupAlgebra xi = jucys_murphy(i, n);
      xi *= Rational(i);
      jm_d.compare(same * pd, pd * xi * pd, "i=" + std::to_string(i));

      const int p = i;
      GroupAlgebra lhs_g = invert(gram_element_product(p, z100)) * ph;
      lhs_g *= rational_pow(z100, p);
      GroupAlgebra chain = GroupAlgebra::identity(n);
      for (int k = 1; k <= p; ++k) chain = chain * invert(z_element_group(initial_segment(2 * k), z100, n));
      Rational pfact = 1;
      for (int k = 2; k <= p; ++k) pfact *= k;
      GroupAlgebra rhs_g = ph * chain * ph;
      rhs_g *= pfact;
      inv_g.compare(lhs_g, rhs_g, "p=" + std::to_string(p));

      GroupAlgebra lhs_o = invert(omega_element(p, z100)).shifted(0, n) * pd;
      lhs_o *= rational_pow(z100, p);
      GroupAlgebra ychain = GroupAlgebra::identity(n);
      for (int k = 1; k <= p; ++k) ychain = ychain * invert(y_element_group(k, z100, p, p));
      GroupAlgebra rhs_o = pd * ychain * pd;
      rhs_o *= pfact;
      inv_o.compare(lhs_o, rhs_o, "p=" + std::to_string(p));
    }
    out.push_back(jm_h.finish());
    out.push_back(jm_d.finish());
    out.push_back(inv_g.finish());
    out.push_back(inv_o.finish());

    detail::ExactTally power("z^k P_{M_k} Delta^r closed form");
    detail::ExactTally power_w("walled z^k P_{M_k} Delta^r closed form");
    for (const auto& z : detail::sample_points()) {
      for (int n = 1; n <= 4; ++n)
        for (int k = 0; 2 * k <= n; ++k)
          for (int r = 0; r <= 4; ++r) {
            const auto [direct, closed] = power_projection_check(n, k, r, z);
            power.compare(direct, closed, where(n, z) + " k=" + std::to_string(k) + " r=" + std::to_string(r));
          }
      for (int n = 0; n <= 2; ++n)
        for (int m = std::max(n, 1); n + m <= 4; ++m)
          for (int k = 0; k <= n; ++k)
            for (int r = 0; r <= 4; ++r) {
              const auto [direct, closed] = power_projection_check_walled(n, m, k, r, z);
              power_w.compare(direct, closed,
                              "n=" + std::to_string(n) + " m=" + std::to_string(m) + " z=" + to_string(z) + " k=" + std::to_string(k) +
                                  " r=" + std::to_string(r));
            }
    }
    out.push_back(power.finish());
    out.push_back(power_w.finish());
  });
}

// Criterion 3: at large t the heat moments reach the Haar moments.
inline SuiteReport haar_limit_suite(const Options& opt = {}) {
  return detail::timed("haar-limit", [&](std::vector<Check>& out) {
    const double t = opt.haar_time;
    for (const auto& cell : acceptance_grid()) {
      const auto heat = bm_moment_tensor(cell.group, cell.n, cell.m, t);
      const auto haar = haar_moment(cell.group, cell.n, cell.m);
      std::ostringstream name;
      name << cell.label() << " t=" << t;
      if (cell.group.family == Family::Orthogonal) {
        out.push_back(detail::tolerance_check(name.str() + " reflection average vs Haar",
                                              max_abs_diff(detail::reflect_average(heat), haar), opt.haar_tol));
        Brauer target = haar_element(cell.group, cell.n);
        target += so_correction_element(cell.n, cell.group.N);
        out.push_back(detail::tolerance_check(name.str() + " vs Haar + SO correction",
                                              max_abs_diff(heat, rho_O(target, cell.group.N)), opt.haar_tol));
      } else {
        out.push_back(detail::tolerance_check(name.str() + " vs Haar", max_abs_diff(heat, haar), opt.haar_tol));
      }
    }
  });
}

// Criterion 4: closed-form Haar integrals, the moment operators and the
// brute-force entrywise sums agree exactly.
inline SuiteReport haar_values_suite(const Options& = {}) {
  return detail::timed("haar-values", [&](std::vector<Check>& out) {
    auto exact = [&](const std::string& name, const Rational& expected, const Rational& from_operator, const Rational& brute) {
      const bool ok = expected == from_operator && expected == brute;
      const double dev = std::max(std::fabs(Rational(expected - from_operator).get_d()), std::fabs(Rational(expected - brute).get_d()));
      out.push_back(Check{name, ok ? 0.0 : std::max(dev, 1e-300), 0.0, ok,
                          "expected " + to_string(expected) + ", operator " + to_string(from_operator) + ", entrywise " + to_string(brute)});
    };
    for (int N = 1; N <= 3; ++N) {
      const std::string tag = "N=" + std::to_string(N);
      const auto u = GroupSpec::unitary(N);
      exact("U " + tag + " |U11|^2", make_rational(1, N), haar_moment(u, 1, 1).entry(std::vector{1, 1}, std::vector{1, 1}),
            haar_entrywise(u, {1, 1}, {1, 1}, 1));
      exact("U " + tag + " |U11|^4", make_rational(2, N * (N + 1)),
            haar_moment(u, 2, 2).entry(std::vector{1, 1, 1, 1}, std::vector{1, 1, 1, 1}), haar_entrywise(u, {1, 1, 1, 1}, {1, 1, 1, 1}, 2));
      const auto o = GroupSpec::orthogonal(N);
      exact("O " + tag + " O11^2", make_rational(1, N), haar_moment(o, 2).entry(std::vector{1, 1}, std::vector{1, 1}),
            haar_entrywise(o, {1, 1}, {1, 1}));
      exact("O " + tag + " O11^4", make_rational(3, N * (N + 2)),
            haar_moment(o, 4).entry(std::vector{1, 1, 1, 1}, std::vector{1, 1, 1, 1}), haar_entrywise(o, {1, 1, 1, 1}, {1, 1, 1, 1}));
    }
    for (int N = 1; N <= 2; ++N) {
      const auto sp = GroupSpec::symplectic(N);
      const auto table = haar_moment(sp, 2);
      long entries = 0, mismatches = 0;
      std::string first;
      const int d = sp.dim_v();
      for (int i1 = 1; i1 <= d; ++i1)
        for (int i2 = 1; i2 <= d; ++i2)
          for (int j1 = 1; j1 <= d; ++j1)
            for (int j2 = 1; j2 <= d; ++j2) {
              ++entries;
              const Rational a = table.entry(std::vector{i1, i2}, std::vector{j1, j2});
              const Rational b = haar_entrywise(sp, {i1, i2}, {j1, j2});
              if (a != b && mismatches++ == 0)
                first = std::to_string(i1) + "." + std::to_string(i2) + "|" + std::to_string(j1) + "." + std::to_string(j2);
            }
      out.push_back(Check{"Sp N=" + std::to_string(N) + " p=1 entry table", mismatches == 0 ? 0.0 : 1.0, 0.0, mismatches == 0,
                          std::to_string(entries) + " entries" + (mismatches ? ", first mismatch " + first : std::string())});
      exact("Sp N=" + std::to_string(N) + " S_11 S_{N+1,N+1}", make_rational(1, 2 * N),
            table.entry(std::vector{1, N + 1}, std::vector{1, N + 1}), haar_entrywise(sp, {1, N + 1}, {1, N + 1}));
    }
  });
}

// ∫_{O(2)} O^{⊗n} det(O) dO by the trapezoidal rule on both components,
// exact for these trigonometric polynomials. The entry is a product over
// tensor positions, so the digit order of the flat index is irrelevant.
inline MomentTensor<double> so2_det_moment_quadrature(int n, int nodes = 64) {
  MomentTensor<double> out(2, n);
  const int side = out.side();
  for (int q = 0; q < nodes; ++q) {
    const double theta = 2.0 * std::numbers::pi * q / nodes;
    const double c = std::cos(theta), s = std::sin(theta);
    for (int component = 0; component < 2; ++component) {
      Eigen::Matrix2d o;
      o << c, -s, s, c;
      double det = 1.0;
      if (component == 1) {
        o.col(0) = -o.col(0);
        det = -1.0;
      }
      const double w = det / (2.0 * nodes);
      for (int r = 0; r < side; ++r)
        for (int col = 0; col < side; ++col) {
          double prod = w;
          for (int k = 0, rr = r, cc = col; k < n; ++k, rr /= 2, cc /= 2) prod *= o(rr % 2, cc % 2);
          out.at(r, col) += prod;
        }
    }
  }
  return out;
}

// Criterion 5: the SO correction against quadrature over O(2).
inline SuiteReport so_correction_suite(const Options& opt = {}) {
  return detail::timed("so-correction", [&](std::vector<Check>& out) {
    for (int n = 1; n <= 4; ++n) {
      const auto formula = so_correction(n, 2);
      const auto quad = so2_det_moment_quadrature(n);
      out.push_back(detail::tolerance_check("O(2) n=" + std::to_string(n) + " I'_n(2) vs quadrature", max_abs_diff(formula, quad), opt.so_tol));
    }
  });
}

// Criterion 6: Monte Carlo against the formula at t = 1.
inline SuiteReport mc_suite(const Options& opt = {}) {
  return detail::timed("mc", [&](std::vector<Check>& out) {
    struct Case {
      GroupSpec g;
      int n, m;
    };
    for (const auto& c : {Case{GroupSpec::unitary(2), 1, 1}, Case{GroupSpec::orthogonal(2), 2, 0}}) {
      SimConfig cfg;
      cfg.paths = opt.mc_paths;
      cfg.step = opt.mc_step;
      cfg.t_end = 1.0;
      cfg.seed = opt.seed;
      cfg.threads = opt.threads;
      const auto mc = empirical_moment(c.g, c.n, c.m, cfg);
      const auto formula = bm_moment_tensor(c.g, c.n, c.m, 1.0);
      double worst_sigma = 0.0, worst_abs = 0.0;
      for (int r = 0; r < formula.side(); ++r)
        for (int col = 0; col < formula.side(); ++col) {
          const double dev = std::fabs(formula.at(r, col) - mc.mean.at(r, col));
          const double se = mc.standard_error.at(r, col);
          worst_abs = std::max(worst_abs, dev);
          worst_sigma = std::max(worst_sigma, se > 0.0 ? dev / se : (dev > 1e-12 ? INFINITY : 0.0));
        }
      std::string label = c.g.name() + " n=" + std::to_string(c.n) + (c.m ? " m=" + std::to_string(c.m) : std::string());
      out.push_back(detail::tolerance_check(label + " standard errors", worst_sigma, opt.mc_sigmas,
                                            std::to_string(cfg.paths) + " paths, seed " + std::to_string(cfg.seed)));
      out.push_back(detail::tolerance_check(label + " absolute", worst_abs, opt.mc_abs_tol));
    }
  });
}

// Criterion 7: spectral floors of the Z and Y families.
inline SuiteReport spectral_suite(const Options& opt = {}) {
  return detail::timed("spectral", [&](std::vector<Check>& out) {
    const double slack = opt.spectral_slack;
    for (int N : {2, 3}) {
      const std::string tag = "N=" + std::to_string(N);
      const Rational zo(N), zs(-2 * N);
      double o_floor = INFINITY, s_floor = INFINITY, s_exact = 0.0, y_floor = INFINITY, kernel = 0.0, split = INFINITY;
      std::string s_where;
      const double o_bound = (N - 1.0) / (2.0 * N);
      for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i) {
          const auto zi_o = rho_O(z_element(initial_segment(i), zo, n), N);
          const double mo = detail::min_eigenvalue(zi_o);
          if (i != N) {
            o_floor = std::min(o_floor, mo - o_bound);
          } else {
            kernel = std::max(kernel, std::fabs(mo));
            GroupAlgebra eps(n);
            for (const auto& s : symmetric_group(N)) eps.add_term(s.embed(n), Rational(s.signature()));
            Rational nf = 1;
            for (int k = 2; k <= N; ++k) nf *= k;
            Brauer lower = Brauer::identity(n, zo) - Brauer::from_group_algebra(eps, zo) * Rational(1 / nf);
            const auto gap = zi_o - rho_O(lower, N);
            split = std::min(split, detail::min_eigenvalue(gap));
          }
          const auto zi_s = rho_S(z_element(initial_segment(i), zs, n), N);
          const double ms = detail::min_eigenvalue(zi_s);
          if (ms - 1.0 < s_floor) {
            s_floor = ms - 1.0;
            s_where = "n=" + std::to_string(n) + " i=" + std::to_string(i) + " min " + std::to_string(ms);
          }
          const int d = i / (2 * N), r = i % (2 * N);
          const double predicted = d * (d + 1) / 2.0 + (2.0 * N + 2 + 2 * d - r) * r / (4.0 * N);
          s_exact = std::max(s_exact, std::fabs(ms - predicted));
        }
      for (int n = 1; n <= 2; ++n)
        for (int m = n; n + m <= 4; ++m)
          for (int i = 1; i <= n; ++i) y_floor = std::min(y_floor, detail::min_eigenvalue(rho_O(y_element(i, zo, n, m), N)) - 1.0);
      out.push_back(Check{"rho_O(Z_i(N)) >= (N-1)/(2N), i != N, " + tag, std::max(0.0, -o_floor), slack, o_floor >= -slack, ""});
      out.push_back(Check{"rho_S(Z_i(-2N)) >= Id, " + tag, std::max(0.0, -s_floor), slack, s_floor >= -slack, "lowest: " + s_where});
      out.push_back(detail::tolerance_check("rho_S(Z_i(-2N)) minimum eigenvalue formula, " + tag, s_exact, slack));
      out.push_back(Check{"rho_O(Y_i(N)) >= Id, " + tag, std::max(0.0, -y_floor), slack, y_floor >= -slack, ""});
      out.push_back(detail::tolerance_check("rho_O(Z_N(N)) has a kernel, " + tag, kernel, slack));
      out.push_back(Check{"rho_O(Z_N(N)) >= rho_O(1 - eps_N/N!), " + tag, std::max(0.0, -split), slack, split >= -slack, ""});
      detail::ExactTally annihilate("eps_N Z_N(N) = 0, " + tag);
      for (int n = N; n <= 4; ++n) {
        GroupAlgebra eps(n);
        for (const auto& s : symmetric_group(N)) eps.add_term(s.embed(n), Rational(s.signature()));
        annihilate.compare(eps * z_element_group(initial_segment(N), zo, n), GroupAlgebra(n), "n=" + std::to_string(n));
      }
      out.push_back(annihilate.finish());
    }
  });
}

inline std::vector<std::string> suite_names() {
  return {"algebra", "theorem", "haar-limit", "haar-values", "so-correction", "mc", "spectral"};
}

inline SuiteReport run_suite(const std::string& name, const Options& opt = {}) {
  if (name == "algebra") return algebra_suite(opt);
  if (name == "theorem") return theorem_suite(opt);
  if (name == "haar-limit") return haar_limit_suite(opt);
  if (name == "haar-values") return haar_values_suite(opt);
  if (name == "so-correction") return so_correction_suite(opt);
  if (name == "mc") return mc_suite(opt);
  if (name == "spectral") return spectral_suite(opt);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace heatwg::verify
