// Integer partitions, standard Young tableaux, irreducible characters of
// S_n, central isotypic projectors and the Jucys-Murphy spectral data.
#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heatwg/cache.hpp"
#include "heatwg/group_algebra.hpp"
#include "heatwg/rational.hpp"

namespace heatwg {

class IntegerPartition {
 public:
  IntegerPartition() = default;
  explicit IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
  }
  IntegerPartition(std::initializer_list<int> parts) : IntegerPartition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
  // Row length, zero past the last row (0-based row index).
  int row(int i) const { return i < length() ? parts_[i] : 0; }

  IntegerPartition conjugate() const {
    std::vector<int> out;
    for (int j = 0; j < largest_part(); ++j) {
      int len = 0;
      while (len < length() && parts_[len] > j) ++len;
      out.push_back(len);
    }
    return IntegerPartition(std::move(out));
  }

  IntegerPartition doubled() const {
    std::vector<int> out(parts_);
    for (int& v : out) v *= 2;
    return IntegerPartition(std::move(out));
  }

  // Cells as 0-based (row, column) pairs, row by row.
  std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < length(); ++i)
      for (int j = 0; j < parts_[i]; ++j) out.emplace_back(i, j);
    return out;
  }

  long content_sum() const {
    long s = 0;
    for (auto [i, j] : cells()) s += j - i;
    return s;
  }

  bool contains(const IntegerPartition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
      if (other.parts_[i] > parts_[i]) return false;
    return true;
  }

  // Number of standard tableaux, by the hook length formula.
  Rational dimension() const {
    Rational d = 1;
    const auto conj = conjugate();
    int k = 0;
    for (auto [i, j] : cells()) {
      ++k;
      const int hook = (parts_[i] - j - 1) + (conj.parts_[j] - i - 1) + 1;
      d *= k;
      d /= hook;
    }
    return d;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition& a, const IntegerPartition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                           std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, max_length, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// Reverse lexicographic order: (n), (n-1,1), ...; max_length < 0 means no bound.
inline std::vector<IntegerPartition> enumerate_partitions(int n, int max_length = -1) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, max_length, cur, out);
  return out;
}

class StandardTableau {
 public:
  StandardTableau(IntegerPartition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    const int n = shape_.size();
    if (static_cast<int>(rows_.size()) != shape_.length()) throw std::invalid_argument("tableau rows do not match shape");
    std::vector<bool> seen(n + 1, false);
    for (int i = 0; i < shape_.length(); ++i) {
      if (static_cast<int>(rows_[i].size()) != shape_.parts()[i]) throw std::invalid_argument("tableau row length mismatch");
      for (int j = 0; j < shape_.parts()[i]; ++j) {
        const int v = rows_[i][j];
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("tableau entries must be 1..n once each");
        seen[v] = true;
        if (j > 0 && rows_[i][j - 1] >= v) throw std::invalid_argument("tableau rows must increase");
        if (i > 0 && rows_[i - 1][j] >= v) throw std::invalid_argument("tableau columns must increase");
      }
    }
  }

  const IntegerPartition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  // Entry k-1 is the content j - i of the cell holding k.
  std::vector<int> content_vector() const {
    std::vector<int> out(size());
    for (int i = 0; i < shape_.length(); ++i)
      for (int j = 0; j < shape_.parts()[i]; ++j) out[rows_[i][j] - 1] = j - i;
    return out;
  }

 private:
  IntegerPartition shape_;
  std::vector<std::vector<int>> rows_;
};

namespace detail {

inline void tableaux_rec(std::vector<int>& rowlens, int k, std::vector<std::vector<int>>& grid,
                         const IntegerPartition& shape, std::vector<StandardTableau>& out) {
  if (k == 0) {
    out.emplace_back(shape, grid);
    return;
  }
  for (std::size_t i = 0; i < rowlens.size(); ++i) {
    const int len = rowlens[i];
    if (len == 0) continue;
    const bool corner = (i + 1 == rowlens.size()) || rowlens[i + 1] < len;
    if (!corner) continue;
    grid[i][len - 1] = k;
    --rowlens[i];
    tableaux_rec(rowlens, k - 1, grid, shape, out);
    ++rowlens[i];
  }
}

}  // namespace detail

inline std::vector<StandardTableau> enumerate_tableaux(const IntegerPartition& shape) {
  std::vector<int> rowlens = shape.parts();
  std::vector<std::vector<int>> grid;
  for (int len : rowlens) grid.emplace_back(len, 0);
  std::vector<StandardTableau> out;
  detail::tableaux_rec(rowlens, shape.size(), grid, shape, out);
  return out;
}

namespace detail {

struct CharacterMemo {
  std::mutex mutex;
  std::map<std::pair<std::vector<int>, std::vector<int>>, long> values;
};

inline CharacterMemo& character_memo() {
  static CharacterMemo memo;
  return memo;
}

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves one
// bead from b to b-r; the sign counts beads jumped over.
inline long mn_beta(std::vector<int> beta, const std::vector<int>& cls, std::size_t pos) {
  if (pos == cls.size()) return 1;
  const int r = cls[pos];
  long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i], target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int other : beta)
      if (other > target && other < b) ++jumped;
    std::vector<int> next = beta;
    next[i] = target;
    const long sub = mn_beta(std::move(next), cls, pos + 1);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace detail

// Irreducible character chi^shape on the class with the given cycle type.
inline long character(const IntegerPartition& shape, std::vector<int> cycle_type) {
  std::sort(cycle_type.begin(), cycle_type.end(), std::greater<>());
  int cls_size = 0;
  for (int c : cycle_type) {
    if (c <= 0) throw std::invalid_argument("cycle lengths must be positive");
    cls_size += c;
  }
  if (cls_size != shape.size()) throw std::invalid_argument("character: shape and class sizes differ");
  auto& memo = detail::character_memo();
  const auto key = std::make_pair(shape.parts(), cycle_type);
  {
    std::lock_guard<std::mutex> lock(memo.mutex);
    auto it = memo.values.find(key);
    if (it != memo.values.end()) return it->second;
  }
  const int len = shape.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = shape.parts()[i] + (len - 1 - i);
  const long value = detail::mn_beta(beta, cycle_type, 0);
  std::lock_guard<std::mutex> lock(memo.mutex);
  memo.values.emplace(key, value);
  return value;
}

namespace detail {

struct ProjectorMemo {
  std::mutex mutex;
  std::map<std::vector<int>, std::shared_ptr<const GroupAlgebra>> values;
};

inline ProjectorMemo& projector_memo() {
  static ProjectorMemo memo;
  return memo;
}

inline std::string projector_key(const IntegerPartition& shape) {
  std::string key = "isotypic";
  for (int p : shape.parts()) key += "_" + std::to_string(p);
  return key;
}

}  // namespace detail

// (d_λ / n!) Σ_σ χ^λ(σ) σ, shared and memoised.
inline std::shared_ptr<const GroupAlgebra> isotypic_projector_shared(const IntegerPartition& shape) {
  auto& memo = detail::projector_memo();
  {
    std::lock_guard<std::mutex> lock(memo.mutex);
    auto it = memo.values.find(shape.parts());
    if (it != memo.values.end()) return it->second;
  }
  const std::string key = detail::projector_key(shape);
  std::shared_ptr<const GroupAlgebra> result;
  if (auto loaded = cache::load(key); loaded && loaded->degree() == shape.size()) {
    result = std::make_shared<const GroupAlgebra>(std::move(*loaded));
  } else {
    const int n = shape.size();
    const auto group = symmetric_group(n);
    const Rational scale = shape.dimension() / Rational(static_cast<unsigned long>(group.size()));
    GroupAlgebra proj(n);
    for (const auto& s : group) {
      const long chi = character(shape, s.cycle_type());
      if (chi != 0) proj.add_term(s, scale * chi);
    }
    cache::store(key, proj);
    result = std::make_shared<const GroupAlgebra>(std::move(proj));
  }
  std::lock_guard<std::mutex> lock(memo.mutex);
  return memo.values.emplace(shape.parts(), result).first->second;
}

inline GroupAlgebra isotypic_projector(const IntegerPartition& shape) { return *isotypic_projector_shared(shape); }

// Content sum of a single tableau prefix, giving the eigenvalue of Z_i(z).
inline Rational jm_eigenvalue_zi(const StandardTableau& tableau, int i, const Rational& z) {
  if (i < 1 || i > tableau.size()) throw std::invalid_argument("Z_i index out of range");
  if (sgn(z) == 0) throw std::domain_error("Z_i(z) is undefined at z = 0");
  const auto contents = tableau.content_vector();
  long csum = 0;
  for (int k = 0; k < i; ++k) csum += contents[k];
  Rational num = Rational(i) * (z - 1) / 2 + csum;
  return num / z;
}

// Eigenvalue of Z_{|shape|}(z) on the isotypic component of shape.
inline Rational z_eigenvalue(const IntegerPartition& shape, const Rational& z) {
  if (sgn(z) == 0) throw std::domain_error("Z(z) is undefined at z = 0");
  Rational num = Rational(shape.size()) * (z - 1) / 2 + shape.content_sum();
  return num / z;
}

struct RFactors {
  Rational r;   // ∏ (z + j - i)
  Rational r2;  // ∏ (z + 2j - i), 0-based cell coordinates
};

inline RFactors r_factors(const IntegerPartition& shape, const Rational& z) {
  RFactors out{Rational(1), Rational(1)};
  for (auto [i, j] : shape.cells()) {
    out.r *= z + (j - i);
    out.r2 *= z + (2 * j - i);
  }
  return out;
}

}  // namespace heatwg
