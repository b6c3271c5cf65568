// Monte Carlo simulation of Brownian motion on O(N), Sp(N) and U(N), used
// as a statistically independent check of the heat moments.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "heatwg/tensor_rep.hpp"

namespace heatwg {

using ComplexMatrix = Eigen::MatrixXcd;

// Orthonormal basis of the Lie algebra for ⟨x, y⟩ = -κ Re Tr(xy), where
// κ = N/2 for o(N) and κ = N for sp(N) and u(N).
struct AlgebraBasis {
  GroupSpec group;
  double kappa = 1.0;
  std::vector<ComplexMatrix> elements;

  int size() const { return static_cast<int>(elements.size()); }
  double inner(const ComplexMatrix& x, const ComplexMatrix& y) const { return -kappa * (x * y).trace().real(); }
};

inline double inner_product_scale(const GroupSpec& g) { return g.family == Family::Orthogonal ? g.N / 2.0 : g.N; }

inline AlgebraBasis basis(const GroupSpec& g) {
  const int N = g.N;
  if (N < 1) throw std::invalid_argument("group rank must be positive");
  const std::complex<double> i1(0.0, 1.0);
  auto unit = [](int d, int k, int l) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    m(k, l) = 1.0;
    return m;
  };
  std::vector<ComplexMatrix> raw;
  switch (g.family) {
    case Family::Orthogonal:
      for (int k = 0; k < N; ++k)
        for (int l = k + 1; l < N; ++l) raw.push_back(unit(N, k, l) - unit(N, l, k));
      break;
    case Family::Unitary:
      for (int k = 0; k < N; ++k) {
        raw.push_back(i1 * unit(N, k, k));
        for (int l = k + 1; l < N; ++l) {
          raw.push_back(unit(N, k, l) - unit(N, l, k));
          raw.push_back(i1 * (unit(N, k, l) + unit(N, l, k)));
        }
      }
      break;
    case Family::Symplectic: {
      // ι(A, B) = [[A, -B̄], [B, Ā]] with A anti-Hermitian and B symmetric.
      auto iota = [N](const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix m(2 * N, 2 * N);
        m << a, -b.conjugate(), b, a.conjugate();
        return m;
      };
      const ComplexMatrix zero = ComplexMatrix::Zero(N, N);
      for (int a = 0; a < N; ++a) {
        for (int b = a + 1; b < N; ++b) {
          const ComplexMatrix anti = unit(N, a, b) - unit(N, b, a);
          const ComplexMatrix sym = unit(N, a, b) + unit(N, b, a);
          raw.push_back(iota(anti, zero));
          raw.push_back(iota(zero, sym));
          raw.push_back(iota(i1 * sym, zero));
          raw.push_back(iota(zero, i1 * sym));
        }
        raw.push_back(iota(i1 * unit(N, a, a), zero));
        raw.push_back(iota(zero, unit(N, a, a)));
        raw.push_back(iota(zero, i1 * unit(N, a, a)));
      }
      break;
    }
  }
  AlgebraBasis out{g, inner_product_scale(g), {}};
  for (auto& x : raw) {
    const double norm = out.inner(x, x);
    out.elements.push_back(x / std::sqrt(norm));
  }
  return out;
}

// Σ x_i², which equals C_g · Id on the defining representation.
inline ComplexMatrix casimir_sum(const AlgebraBasis& b) {
  const int d = b.group.dim_v();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& x : b.elements) sum += x * x;
  return sum;
}

// Largest violation of the defining relations of the Lie algebra.
inline double algebra_defect(const GroupSpec& g, const ComplexMatrix& x) {
  double defect = (x + x.adjoint()).cwiseAbs().maxCoeff();
  if (g.family == Family::Orthogonal) defect = std::max(defect, x.imag().cwiseAbs().maxCoeff());
  if (g.family == Family::Symplectic) {
    const int d = g.dim_v();
    Eigen::MatrixXd j(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) j(r, c) = symplectic_form(g.N, r, c);
    defect = std::max(defect, (x.transpose() * j + j * x).cwiseAbs().maxCoeff());
  }
  return defect;
}

// Largest violation of the defining relations of the group (including
// det = 1 for the orthogonal family, where paths stay in SO(N)).
inline double membership_defect(const GroupSpec& g, const ComplexMatrix& m) {
  const int d = g.dim_v();
  double defect = (m.adjoint() * m - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (g.family == Family::Orthogonal) {
    defect = std::max(defect, m.imag().cwiseAbs().maxCoeff());
    defect = std::max(defect, std::abs(m.determinant() - 1.0));
  }
  if (g.family == Family::Symplectic) {
    Eigen::MatrixXd j(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) j(r, c) = symplectic_form(g.N, r, c);
    defect = std::max(defect, (m.transpose() * j * m - j).cwiseAbs().maxCoeff());
  }
  return defect;
}

// Counter-based normal generator: the stream for (seed, path, step) does not
// depend on how many other paths were drawn or in which order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t path, std::uint64_t step)
      : key_(mix(mix(seed ^ 0x6a09e667f3bcc909ULL) ^ mix(path + 0x3c6ef372fe94f82bULL) ^ (step * 0x9e3779b97f4a7c15ULL))) {}

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform on (0, 1).
  double uniform() { return (static_cast<double>(mix(key_ + counter_++) >> 11) + 0.5) * 0x1.0p-53; }

  double normal() {
    if (spare_) {
      const double v = *spare_;
      spare_.reset();
      return v;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    return radius * std::cos(angle);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::optional<double> spare_;
};

// √dt Σ g_i x_i with independent standard normals g_i.
inline ComplexMatrix sample_increment(const AlgebraBasis& b, double dt, CounterRng& rng) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const int d = b.group.dim_v();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  const double scale = std::sqrt(dt);
  for (const auto& x : b.elements) out += (scale * rng.normal()) * x;
  return out;
}

// Diagonal Padé [6/6] approximant with scaling and squaring; the
// truncation error for ‖A/2^s‖ ≤ 1/2 is below 1e-15.
template <class Matrix>
Matrix expm_small(const Matrix& a) {
  static constexpr double c[] = {1.0, 1.0 / 2, 5.0 / 44, 1.0 / 66, 1.0 / 792, 1.0 / 15840, 1.0 / 665280};
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix x = a / std::ldexp(1.0, squarings);
  const Matrix x2 = x * x;
  const Matrix x4 = x2 * x2;
  const Matrix x6 = x4 * x2;
  const Matrix id = Matrix::Identity(a.rows(), a.cols());
  const Matrix even = c[0] * id + c[2] * x2 + c[4] * x4 + c[6] * x6;
  const Matrix odd = x * (c[1] * id + c[3] * x2 + c[5] * x4);
  Matrix result = (even - odd).partialPivLu().solve(even + odd);
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

struct SimConfig {
  long paths = 1000;
  double step = 1.0 / 256;
  double t_end = 1.0;
  std::uint64_t seed = 1;
  // 0 selects the hardware concurrency.
  int threads = 1;
  // Starting point S of the motion; identity when absent.
  std::optional<ComplexMatrix> start;

  long steps() const {
    if (paths < 1) throw std::invalid_argument("need at least one path");
    if (!(step > 0.0)) throw std::invalid_argument("time step must be positive");
    if (t_end < 0.0) throw std::invalid_argument("end time must be non-negative");
    const double ratio = t_end / step;
    const long count = std::lround(ratio);
    if (std::fabs(ratio - count) > 1e-9 * std::max(1.0, ratio))
      throw std::invalid_argument("time step must divide the end time");
    return count;
  }
};

namespace detail {

inline constexpr long kPathChunk = 512;

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Runs body(chunk_index, first_path, last_path) over fixed-size chunks.
template <class Body>
void for_each_chunk(long paths, int threads, Body&& body) {
  const long chunks = (paths + kPathChunk - 1) / kPathChunk;
  auto run = [&](long worker, long workers) {
    for (long c = worker; c < chunks; c += workers) body(c, c * kPathChunk, std::min(paths, (c + 1) * kPathChunk));
  };
  const long workers = std::min<long>(resolve_threads(threads), chunks);
  if (workers <= 1) {
    run(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (long w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
  for (auto& th : pool) th.join();
}

template <class Matrix>
Matrix simulate_one(const std::vector<Matrix>& elements, int d, double scale, long steps, std::uint64_t seed,
                    std::uint64_t path) {
  Matrix g = Matrix::Identity(d, d);
  for (long k = 0; k < steps; ++k) {
    CounterRng rng(seed, path, static_cast<std::uint64_t>(k));
    Matrix xi = Matrix::Zero(d, d);
    for (const auto& x : elements) xi += (scale * rng.normal()) * x;
    g = g * expm_small(xi);
  }
  return g;
}

template <class Scalar, int D>
using FixedMatrix = Eigen::Matrix<Scalar, D, D, 0, (D == Eigen::Dynamic ? 8 : D), (D == Eigen::Dynamic ? 8 : D)>;

// Endpoint of a single path. Orthogonal paths run in real arithmetic, and
// the matrix type is fixed at compile time for the common small sizes.
class PathSimulator {
 public:
  PathSimulator(const GroupSpec& g, const SimConfig& cfg)
      : d_(g.dim_v()), steps_(cfg.steps()), scale_(std::sqrt(cfg.step)), seed_(cfg.seed), start_(cfg.start) {
    if (start_ && (start_->rows() != d_ || start_->cols() != d_)) throw std::invalid_argument("starting point has the wrong size");
    const AlgebraBasis b = basis(g);
    if (g.family == Family::Orthogonal)
      select<double>(b);
    else
      select<std::complex<double>>(b);
  }

  ComplexMatrix endpoint(long path) const {
    ComplexMatrix m = kernel_(static_cast<std::uint64_t>(path));
    if (start_) return *start_ * m;
    return m;
  }

 private:
  template <class Scalar>
  void select(const AlgebraBasis& b) {
    switch (d_) {
      case 1: build<Scalar, 1>(b); break;
      case 2: build<Scalar, 2>(b); break;
      case 3: build<Scalar, 3>(b); break;
      case 4: build<Scalar, 4>(b); break;
      default:
        if (d_ <= 8) build<Scalar, Eigen::Dynamic>(b);
        else build_large(b);
    }
  }

  template <class Scalar, int D>
  void build(const AlgebraBasis& b) {
    using M = FixedMatrix<Scalar, D>;
    std::vector<M> elems;
    for (const auto& x : b.elements) {
      if constexpr (std::is_same_v<Scalar, double>) elems.push_back(M(x.real()));
      else elems.push_back(M(x));
    }
    kernel_ = [elems = std::move(elems), d = d_, scale = scale_, steps = steps_, seed = seed_](std::uint64_t p) {
      return ComplexMatrix(simulate_one(elems, d, scale, steps, seed, p).template cast<std::complex<double>>());
    };
  }

  void build_large(const AlgebraBasis& b) {
    kernel_ = [elems = b.elements, d = d_, scale = scale_, steps = steps_, seed = seed_](std::uint64_t p) {
      return simulate_one(elems, d, scale, steps, seed, p);
    };
  }

  int d_;
  long steps_;
  double scale_;
  std::uint64_t seed_;
  std::optional<ComplexMatrix> start_;
  std::function<ComplexMatrix(std::uint64_t)> kernel_;
};

}  // namespace detail

// Endpoints G_T of every path, in path order.
inline std::vector<ComplexMatrix> simulate_paths(const GroupSpec& g, const SimConfig& cfg) {
  const detail::PathSimulator sim(g, cfg);
  std::vector<ComplexMatrix> out(static_cast<std::size_t>(cfg.paths));
  detail::for_each_chunk(cfg.paths, cfg.threads, [&](long, long first, long last) {
    for (long p = first; p < last; ++p) out[static_cast<std::size_t>(p)] = sim.endpoint(p);
  });
  return out;
}

struct EmpiricalMoment {
  MomentTensor<double> mean;
  MomentTensor<double> standard_error;
  // Largest |mean of the imaginary part|; the exact moments are real.
  double max_imaginary = 0.0;
  long paths = 0;
};

// Sample mean of G^{⊗n} ⊗ Ḡ^{⊗m} with per-entry standard errors. The
// result is bit-identical for a given seed whatever the thread count.
inline EmpiricalMoment empirical_moment(const GroupSpec& g, int n, int m, const SimConfig& cfg) {
  if (n < 0 || m < 0) throw std::invalid_argument("tensor orders must be non-negative");
  if (m != 0 && g.family != Family::Unitary) throw std::invalid_argument("conjugate factors only apply to the unitary group");
  const int d = g.dim_v();
  const int order = n + m;
  const int side = checked_side(d, order);
  const long chunks = (cfg.paths + detail::kPathChunk - 1) / detail::kPathChunk;
  struct Accum {
    std::vector<double> sum, sq, imag;
  };
  const std::size_t cells = static_cast<std::size_t>(side) * side;
  std::vector<Accum> acc(static_cast<std::size_t>(chunks), Accum{std::vector<double>(cells, 0.0), std::vector<double>(cells, 0.0),
                                                                  std::vector<double>(cells, 0.0)});
  const detail::PathSimulator sim(g, cfg);

  auto accumulate = [&](Accum& a, const ComplexMatrix& gm) {
    ComplexMatrix kron = ComplexMatrix::Identity(1, 1);
    for (int f = 0; f < order; ++f) {
      const ComplexMatrix factor = f < n ? gm : ComplexMatrix(gm.conjugate());
      ComplexMatrix next(kron.rows() * d, kron.cols() * d);
      for (int r = 0; r < kron.rows(); ++r)
        for (int c = 0; c < kron.cols(); ++c) next.block(r * d, c * d, d, d) = kron(r, c) * factor;
      kron = std::move(next);
    }
    for (int r = 0; r < side; ++r)
      for (int c = 0; c < side; ++c) {
        const std::size_t idx = static_cast<std::size_t>(r) * side + c;
        const double v = kron(r, c).real();
        a.sum[idx] += v;
        a.sq[idx] += v * v;
        a.imag[idx] += kron(r, c).imag();
      }
  };

  detail::for_each_chunk(cfg.paths, cfg.threads, [&](long chunk, long first, long last) {
    Accum& a = acc[static_cast<std::size_t>(chunk)];
    for (long p = first; p < last; ++p) accumulate(a, sim.endpoint(p));
  });

  EmpiricalMoment out{MomentTensor<double>(d, order), MomentTensor<double>(d, order), 0.0, cfg.paths};
  const double count = static_cast<double>(cfg.paths);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * side + c;
      double sum = 0.0, sq = 0.0, imag = 0.0;
      for (const auto& a : acc) {
        sum += a.sum[idx];
        sq += a.sq[idx];
        imag += a.imag[idx];
      }
      const double mean = sum / count;
      const double var = count > 1 ? std::max(0.0, (sq - count * mean * mean) / (count - 1)) : 0.0;
      out.mean.at(r, c) = mean;
      out.standard_error.at(r, c) = std::sqrt(var / count);
      out.max_imaginary = std::max(out.max_imaginary, std::fabs(imag / count));
    }
  return out;
}

inline EmpiricalMoment empirical_moment(const GroupSpec& g, int n, const SimConfig& cfg) {
  return empirical_moment(g, n, 0, cfg);
}

// Probabilists' Gauss–Hermite rule (nodes, weights summing to 1) from the
// Jacobi matrix of the Hermite recurrence.
inline std::pair<std::vector<double>, std::vector<double>> gauss_hermite(int points) {
  if (points < 1) throw std::invalid_argument("quadrature needs at least one node");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(points, points);
  for (int i = 1; i < points; ++i) jacobi(i, i - 1) = jacobi(i - 1, i) = std::sqrt(static_cast<double>(i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  std::vector<double> nodes(points), weights(points);
  for (int i = 0; i < points; ++i) {
    nodes[i] = solver.eigenvalues()(i);
    weights[i] = solver.eigenvectors()(0, i) * solver.eigenvectors()(0, i);
  }
  return {nodes, weights};
}

// E[exp(√dt ξ)] for one step of the scheme, by tensor-product Gauss–Hermite
// quadrature over the algebra coordinates (small algebras only).
inline ComplexMatrix one_step_mean(const GroupSpec& g, double dt, int points = 20) {
  const AlgebraBasis b = basis(g);
  const int dims = b.size();
  double total = 1.0;
  for (int i = 0; i < dims; ++i) total *= points;
  if (total > 5e6) throw std::length_error("quadrature grid too large for this algebra");
  const auto [nodes, weights] = gauss_hermite(points);
  const int d = g.dim_v();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  std::vector<int> idx(dims, 0);
  const double scale = std::sqrt(dt);
  while (true) {
    ComplexMatrix xi = ComplexMatrix::Zero(d, d);
    double w = 1.0;
    for (int i = 0; i < dims; ++i) {
      xi += (scale * nodes[idx[i]]) * b.elements[i];
      w *= weights[idx[i]];
    }
    sum += w * expm_small(xi);
    int pos = 0;
    while (pos < dims && ++idx[pos] == points) idx[pos++] = 0;
    if (pos == dims) break;
  }
  return sum;
}

// Weak error of the scheme for E[G_T]_{11}, computed without sampling noise:
// the mean of a product of independent steps is the product of the means.
inline double weak_bias(const GroupSpec& g, double t_end, double dt, int points = 20) {
  SimConfig cfg;
  cfg.step = dt;
  cfg.t_end = t_end;
  const long steps = cfg.steps();
  const ComplexMatrix step_mean = one_step_mean(g, dt, points);
  ComplexMatrix power = ComplexMatrix::Identity(step_mean.rows(), step_mean.cols());
  for (long k = 0; k < steps; ++k) power = power * step_mean;
  const double exact = std::exp(0.5 * t_end * g.casimir_constant().get_d());
  return power(0, 0).real() - exact;
}

}  // namespace heatwg
