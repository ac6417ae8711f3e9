#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace zerolen {

/// Canonical index of a group element: the position of its invariant-factor
/// coordinate vector in lexicographic order (first coordinate most significant).
/// Index 0 is always the zero element.
using Element = std::int32_t;

/// Finite abelian group C_{n_1} + ... + C_{n_r} with n_1 | ... | n_r.
///
/// Immutable value with shared internals; copies are cheap and safe to share
/// across threads. Elements are addressed by their canonical index.
class FiniteAbelianGroup {
 public:
  static constexpr int kMaxOrder = 1 << 16;
  static constexpr int kTableOrder = 256;

  /// Trivial group.
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{}) {}

  /// Normalizes an arbitrary list of cyclic orders into a divisor chain.
  static FiniteAbelianGroup from_cyclic_orders(std::span<const long long> orders) {
    std::map<long long, std::vector<long long>> prime_powers;
    for (long long n : orders) {
      if (n <= 1) throw DomainError("cyclic factor must be > 1, got " + std::to_string(n));
      if (n > kMaxOrder) throw DomainError("cyclic factor too large: " + std::to_string(n));
      long long rest = n;
      for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        long long q = 1;
        while (rest % p == 0) {
          rest /= p;
          q *= p;
        }
        prime_powers[p].push_back(q);
      }
      if (rest > 1) prime_powers[rest].push_back(rest);
    }
    std::size_t rank = 0;
    for (auto& [p, qs] : prime_powers) {
      std::sort(qs.begin(), qs.end(), std::greater<>());
      rank = std::max(rank, qs.size());
    }
    // n_r collects the largest power of every prime, n_{r-1} the second largest, ...
    std::vector<long long> factors(rank, 1);
    for (const auto& [p, qs] : prime_powers)
      for (std::size_t i = 0; i < qs.size(); ++i) factors[rank - 1 - i] *= qs[i];
    long long order = 1;
    for (long long f : factors) {
      order *= f;
      if (order > kMaxOrder) throw DomainError("group order exceeds " + std::to_string(kMaxOrder));
    }
    return FiniteAbelianGroup(std::vector<int>(factors.begin(), factors.end()));
  }

  const std::vector<int>& invariant_factors() const { return impl_->factors; }
  int rank() const { return static_cast<int>(impl_->factors.size()); }
  int order() const { return impl_->order; }
  int exponent() const { return impl_->factors.empty() ? 1 : impl_->factors.back(); }
  bool is_cyclic() const { return rank() <= 1; }

  std::vector<int> coords(Element x) const {
    std::vector<int> c(impl_->factors.size());
    for (int i = rank() - 1; i >= 0; --i) {
      c[i] = x % impl_->factors[i];
      x /= impl_->factors[i];
    }
    return c;
  }

  /// Coordinates are reduced modulo the invariant factors (negative values allowed).
  Element element(std::span<const int> coords) const {
    if (static_cast<int>(coords.size()) != rank())
      throw DomainError("element has " + std::to_string(coords.size()) + " coordinates, group rank is " +
                        std::to_string(rank()));
    Element x = 0;
    for (int i = 0; i < rank(); ++i) {
      const int n = impl_->factors[i];
      x = x * n + ((coords[i] % n) + n) % n;
    }
    return x;
  }
  Element element(std::initializer_list<int> coords) const {
    return element(std::span<const int>(coords.begin(), coords.size()));
  }

  Element add(Element a, Element b) const {
    if (!impl_->add_table.empty()) return impl_->add_table[a * impl_->order + b];
    return combine(a, b, 1);
  }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const { return impl_->neg[a]; }
  Element multiple(long long k, Element a) const {
    auto c = coords(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const long long n = impl_->factors[i];
      c[i] = static_cast<int>(((k % n) * c[i] % n + n) % n);
    }
    return element(c);
  }

  /// Least k >= 1 with k*x = 0: lcm over coordinates of n_i / gcd(n_i, c_i).
  int element_order(Element x) const { return impl_->orders[x]; }

  bool contains(Element x) const { return x >= 0 && x < impl_->order; }

  std::string name() const {
    if (impl_->factors.empty()) return "C1";
    std::string s;
    for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
      if (i) s += "x";
      s += "C" + std::to_string(impl_->factors[i]);
    }
    return s;
  }

  std::string element_str(Element x) const {
    const auto c = coords(x);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.impl_ == b.impl_ || a.impl_->factors == b.impl_->factors;
  }

 private:
  struct Impl {
    std::vector<int> factors;
    int order = 1;
    std::vector<Element> neg;
    std::vector<int> orders;
    std::vector<Element> add_table;
  };

  explicit FiniteAbelianGroup(std::vector<int> factors) {
    auto owned = std::make_shared<Impl>();
    impl_ = owned;
    Impl& im = *owned;
    im.factors = std::move(factors);
    for (int n : im.factors) im.order *= n;
    im.neg.resize(im.order);
    im.orders.resize(im.order);
    for (Element x = 0; x < im.order; ++x) {
      const auto c = coords(x);
      std::vector<int> nc(c.size());
      long long ord = 1;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const int n = im.factors[i];
        nc[i] = (n - c[i]) % n;
        ord = std::lcm(ord, static_cast<long long>(n / std::gcd(n, c[i])));
      }
      im.neg[x] = element(nc);
      im.orders[x] = static_cast<int>(ord);
    }
    if (im.order <= kTableOrder) {
      im.add_table.resize(static_cast<std::size_t>(im.order) * im.order);
      for (Element a = 0; a < im.order; ++a)
        for (Element b = 0; b < im.order; ++b) im.add_table[a * im.order + b] = combine(a, b, 1);
    }
  }

  Element combine(Element a, Element b, int sign) const {
    Element out = 0;
    int radix = 1;
    for (int i = rank() - 1; i >= 0; --i) {
      const int n = impl_->factors[i];
      const int ca = a % n;
      const int cb = b % n;
      a /= n;
      b /= n;
      out += ((ca + sign * cb) % n + n) % n * radix;
      radix *= n;
    }
    return out;
  }

  std::shared_ptr<const Impl> impl_;
};

/// Builds a group from any list of cyclic orders, e.g. {4,2} -> C2xC4.
inline FiniteAbelianGroup make_group(std::span<const long long> factors) {
  return FiniteAbelianGroup::from_cyclic_orders(factors);
}
inline FiniteAbelianGroup make_group(std::initializer_list<long long> factors) {
  return make_group(std::span<const long long>(factors.begin(), factors.size()));
}

/// Parses "2x4", "3,3", "5", "C2xC4" (case-insensitive, optional C prefixes).
/// The empty string and "1"/"C1" denote the trivial group.
inline FiniteAbelianGroup parse_group(std::string_view text) {
  std::vector<long long> factors;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) return FiniteAbelianGroup();
  while (true) {
    skip_space();
    if (i < text.size() && (text[i] == 'c' || text[i] == 'C')) ++i;
    const std::size_t start = i;
    long long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > FiniteAbelianGroup::kMaxOrder) throw ParseError("cyclic order too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected a cyclic order in group spec '" + std::string(text) + "'", i);
    if (value < 1) throw ParseError("cyclic order must be positive", start);
    factors.push_back(value);
    skip_space();
    if (i == text.size()) break;
    if (text[i] == 'x' || text[i] == 'X' || text[i] == ',' || text[i] == '+') {
      ++i;
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in group spec", i);
  }
  if (factors.size() == 1 && factors[0] == 1) return FiniteAbelianGroup();
  for (std::size_t k = 0; k < factors.size(); ++k)
    if (factors[k] == 1) throw ParseError("cyclic factor 1 is not allowed in a product", 0);
  return make_group(std::span<const long long>(factors));
}

/// 1 + sum(n_i - 1); `exact` when the bound is known to equal D(G)
/// (p-groups and groups of rank at most two).
struct DavenportBound {
  int value = 1;
  bool exact = false;
};

inline DavenportBound davenport_lower_bound(const FiniteAbelianGroup& g) {
  DavenportBound out;
  for (int n : g.invariant_factors()) out.value += n - 1;
  int e = g.exponent();
  int p = 0;
  for (int q = 2; q <= e; ++q)
    if (e % q == 0) {
      p = q;
      break;
    }
  if (p != 0)
    while (e % p == 0) e /= p;
  out.exact = e == 1 || g.rank() <= 2;
  return out;
}

}  // namespace zerolen
