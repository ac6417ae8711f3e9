#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace zerolen {

/// Finite nonempty set of nonnegative integers, kept sorted.
class LengthSet {
 public:
  LengthSet() : values_{0} {}
  LengthSet(std::initializer_list<int> v) : LengthSet(std::vector<int>(v)) {}
  explicit LengthSet(std::vector<int> v) : values_(std::move(v)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (values_.empty()) throw DomainError("length set must be nonempty");
    if (values_.front() < 0) throw DomainError("lengths must be nonnegative");
  }

  /// [lo, hi]
  static LengthSet interval(int lo, int hi) {
    if (lo > hi) throw DomainError("empty interval");
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return LengthSet(std::move(v));
  }

  /// Bit i set <=> i + offset in L.
  static LengthSet from_mask(std::uint64_t mask, int offset = 0) {
    std::vector<int> v;
    while (mask) {
      v.push_back(std::countr_zero(mask) + offset);
      mask &= mask - 1;
    }
    return LengthSet(std::move(v));
  }

  const std::vector<int>& values() const { return values_; }
  int min() const { return values_.front(); }
  int max() const { return values_.back(); }
  std::size_t size() const { return values_.size(); }
  bool contains(int k) const { return std::binary_search(values_.begin(), values_.end(), k); }
  bool is_interval() const { return max() - min() + 1 == static_cast<int>(size()); }

  LengthSet shifted(int y) const {
    std::vector<int> v = values_;
    for (int& x : v) x += y;
    return LengthSet(std::move(v));
  }

  /// A + B
  friend LengthSet sumset(const LengthSet& a, const LengthSet& b) {
    std::vector<int> v;
    v.reserve(a.size() * b.size());
    for (int x : a.values_)
      for (int y : b.values_) v.push_back(x + y);
    return LengthSet(std::move(v));
  }

  bool is_subset_of(const LengthSet& o) const {
    return std::includes(o.values_.begin(), o.values_.end(), values_.begin(), values_.end());
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(values_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const LengthSet&, const LengthSet&) = default;
  /// Orders by min, then max, then lexicographically; used for canonical listings.
  friend std::strong_ordering operator<=>(const LengthSet& a, const LengthSet& b) {
    if (auto c = a.min() <=> b.min(); c != 0) return c;
    if (auto c = a.max() <=> b.max(); c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

/// Delta(L): successive differences, sorted and deduplicated.
inline std::vector<int> delta(const LengthSet& l) {
  std::vector<int> d;
  for (std::size_t i = 1; i < l.size(); ++i) d.push_back(l.values()[i] - l.values()[i - 1]);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

/// rho(L) = max L / min L, with rho({0}) = 1.
inline Rational rho(const LengthSet& l) {
  if (l.min() == 0) {
    if (l.max() == 0) return Rational(1);
    throw DomainError("elasticity undefined for a set containing 0 and a positive length");
  }
  return Rational(l.max(), l.min());
}

/// L = y + (L' u L* u L'') with L* = (D + dZ) n [0, max L*], {0, d} in D in [0, d],
/// L' in [-M, -1], L'' in max L* + [1, M], and L in y + D + dZ.
struct AampWitness {
  int y = 0;
  int d = 1;
  std::vector<int> period;
  int bound = 0;
  std::vector<int> initial;  // L'
  std::vector<int> central;  // L*
  std::vector<int> final;    // L''
};

/// Searches shifts y in L, ends y + m in L and periods D for an AAMP
/// decomposition with difference d and bound M. Deterministic: smallest y,
/// then largest m, then the period with smallest bitmask.
inline std::optional<AampWitness> is_aamp(const LengthSet& l, int d, int M) {
  if (d < 1) throw DomainError("AAMP difference must be positive");
  if (M < 0) throw DomainError("AAMP bound must be nonnegative");
  if (d > 24) throw ResourceError("AAMP period search limited to d <= 24");
  const auto& v = l.values();
  auto residue = [d](int x) { return ((x % d) + d) % d; };
  for (int y : v) {
    if (y - l.min() > M) break;
    for (auto it = v.rbegin(); it != v.rend() && *it >= y; ++it) {
      const int m = *it - y;
      if (l.max() - (y + m) > M) break;
      // D is determined by its interior; 0 and d are always present.
      const int interior = d - 1;
      for (std::uint32_t mask = 0; mask < (1u << interior); ++mask) {
        std::vector<char> in_period(d, 0);  // residues mod d hit by D
        in_period[0] = 1;
        for (int j = 1; j < d; ++j)
          if (mask >> (j - 1) & 1) in_period[j] = 1;
        bool ok = true;
        for (int x : v)
          if (!in_period[residue(x - y)]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (int t = 0; t <= m && ok; ++t) ok = (in_period[residue(t)] != 0) == l.contains(y + t);
        if (!ok) continue;
        AampWitness w;
        w.y = y;
        w.d = d;
        w.bound = M;
        for (int j = 0; j <= d; ++j)
          if (j == 0 || j == d || in_period[j]) w.period.push_back(j);
        for (int x : v) {
          if (x < y)
            w.initial.push_back(x - y);
          else if (x <= y + m)
            w.central.push_back(x - y);
          else
            w.final.push_back(x - y);
        }
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace zerolen
