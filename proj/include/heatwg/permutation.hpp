// Permutations of at most kMaxPoints points in one-line notation.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace heatwg {

inline constexpr int kMaxPoints = 16;

// Public indices are 1-based; storage is 0-based.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    check_degree(n);
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  static Permutation from_one_line(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    check_degree(n);
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    std::array<bool, kMaxPoints> seen{};
    for (int i = 0; i < n; ++i) {
      const int v = images[i];
      if (v < 1 || v > n || seen[v - 1])
        throw std::invalid_argument("one-line notation is not a bijection of 1..n");
      seen[v - 1] = true;
      p.img_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
  }

  static Permutation from_one_line(std::initializer_list<int> images) {
    return from_one_line(std::span<const int>(images.begin(), images.size()));
  }

  static Permutation transposition(int n, int a, int b) {
    Permutation p = identity(n);
    if (a < 1 || b < 1 || a > n || b > n || a == b)
      throw std::invalid_argument("transposition indices out of range");
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
  }

  // Cyclic permutation a1 -> a2 -> ... -> ak -> a1 of S_n.
  static Permutation cycle(int n, std::initializer_list<int> points) {
    Permutation p = identity(n);
    std::vector<int> pts(points);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int from = pts[i], to = pts[(i + 1) % pts.size()];
      if (from < 1 || from > n || to < 1 || to > n) throw std::invalid_argument("cycle point out of range");
      p.img_[from - 1] = static_cast<std::uint8_t>(to - 1);
    }
    return from_one_line(p.one_line());
  }

  int degree() const { return n_; }
  int operator()(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("permutation point out of range");
    return img_[i - 1] + 1;
  }
  int image0(int i) const { return img_[i]; }

  std::vector<int> one_line() const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = img_[i] + 1;
    return out;
  }

  Permutation inverse() const {
    Permutation p;
    p.n_ = n_;
    for (int i = 0; i < n_; ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return p;
  }

  std::vector<int> cycle_type() const {
    std::vector<int> lengths;
    std::array<bool, kMaxPoints> seen{};
    for (int i = 0; i < n_; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
  }

  int cycle_count() const { return static_cast<int>(cycle_type().size()); }
  int signature() const { return ((n_ - cycle_count()) % 2 == 0) ? 1 : -1; }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // S_k -> S_n, fixing k+1..n.
  Permutation embed(int n) const { return shifted(0, n); }

  // Acts on offset+1..offset+k inside S_n, fixing the other points.
  Permutation shifted(int offset, int n) const {
    if (offset < 0 || offset + n_ > n) throw std::invalid_argument("embedding does not fit");
    Permutation p = identity(n);
    for (int i = 0; i < n_; ++i) p.img_[offset + i] = static_cast<std::uint8_t>(offset + img_[i]);
    return p;
  }

  std::size_t hash() const {
    std::uint64_t lo = 0, hi = 0;
    std::memcpy(&lo, img_.data(), 8);
    std::memcpy(&hi, img_.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2));
    return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(n_) << 59));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.img_ < b.img_;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ',';
      s += std::to_string(img_[i] + 1);
    }
    return s + "]";
  }

 private:
  static void check_degree(int n) {
    if (n < 0 || n > kMaxPoints) throw std::invalid_argument("permutation degree out of range");
  }

  std::array<std::uint8_t, kMaxPoints> img_{};
  std::uint8_t n_ = 0;

  friend Permutation compose(const Permutation& a, const Permutation& b);
};

// (a∘b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("compose: degree mismatch");
  Permutation p;
  p.n_ = a.n_;
  for (int i = 0; i < a.n_; ++i) p.img_[i] = a.img_[b.img_[i]];
  return p;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// All of S_n in lexicographic order of one-line notation.
inline std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

// S_n x S_m acting on 1..n+m, preserving the blocks {1..n} and {n+1..n+m}.
inline std::vector<Permutation> young_subgroup(int n, int m) {
  std::vector<Permutation> out;
  const auto left = symmetric_group(n);
  const auto right = symmetric_group(m);
  for (const auto& a : left)
    for (const auto& b : right) out.push_back(compose(a.embed(n + m), b.shifted(n, n + m)));
  return out;
}

}  // namespace heatwg
