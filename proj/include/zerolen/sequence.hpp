#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "rational.hpp"

namespace zerolen {

/// A sequence over a finite abelian group in the multiset sense: an element of
/// the free abelian monoid over G, stored as a dense multiplicity vector
/// indexed by canonical element index.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(FiniteAbelianGroup g) : group_(std::move(g)), counts_(group_.order(), 0) {}
  Sequence(FiniteAbelianGroup g, std::vector<int> counts) : group_(std::move(g)), counts_(std::move(counts)) {
    if (static_cast<int>(counts_.size()) != group_.order())
      throw DomainError("multiplicity vector size does not match group order");
    for (int c : counts_) {
      if (c < 0) throw DomainError("negative multiplicity");
      size_ += c;
    }
  }

  /// Builds g_1^{m_1} * ... from (element, multiplicity) pairs.
  static Sequence of(const FiniteAbelianGroup& g, std::initializer_list<std::pair<Element, int>> terms) {
    Sequence s(g);
    for (auto [x, m] : terms) s.insert(x, m);
    return s;
  }

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<int>& counts() const { return counts_; }
  /// v_g(S)
  int count(Element x) const { return counts_.at(x); }
  /// |S|
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  std::vector<Element> support() const {
    std::vector<Element> out;
    for (Element x = 0; x < static_cast<Element>(counts_.size()); ++x)
      if (counts_[x]) out.push_back(x);
    return out;
  }

  /// Canonical key: sorted (element index, multiplicity) pairs.
  std::vector<std::pair<Element, int>> key() const {
    std::vector<std::pair<Element, int>> out;
    for (Element x = 0; x < static_cast<Element>(counts_.size()); ++x)
      if (counts_[x]) out.emplace_back(x, counts_[x]);
    return out;
  }

  Sequence& insert(Element x, int multiplicity = 1) {
    if (!group_.contains(x)) throw DomainError("element index out of range");
    if (multiplicity < 0) throw DomainError("negative multiplicity");
    if (counts_[x] > std::numeric_limits<int>::max() - multiplicity || size_ > std::numeric_limits<int>::max() - multiplicity)
      throw ResourceError("multiplicity overflow");
    counts_[x] += multiplicity;
    size_ += multiplicity;
    return *this;
  }

  /// S^k
  Sequence power(int k) const {
    if (k < 0) throw DomainError("negative sequence power");
    Sequence out(group_);
    for (Element x = 0; x < static_cast<Element>(counts_.size()); ++x)
      if (counts_[x]) out.insert(x, counts_[x] * k);
    return out;
  }

  std::string str() const {
    std::string s;
    for (Element x = 0; x < static_cast<Element>(counts_.size()); ++x) {
      if (!counts_[x]) continue;
      if (!s.empty()) s += "*";
      s += group_.element_str(x);
      if (counts_[x] > 1) s += "^" + std::to_string(counts_[x]);
    }
    return s;
  }

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.group_ == b.group_ && a.counts_ == b.counts_;
  }
  /// Orders by length first, then by multiplicity vector.
  friend std::strong_ordering operator<=>(const Sequence& a, const Sequence& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.counts_ <=> b.counts_;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<int> counts_ = std::vector<int>(1, 0);
  int size_ = 0;
};

namespace detail {
inline void require_same_group(const Sequence& a, const Sequence& b) {
  if (!(a.group() == b.group())) throw DomainError("sequences over different groups");
}
}  // namespace detail

/// sigma(S): the sum of all terms.
inline Element sigma(const Sequence& s) {
  const auto& g = s.group();
  Element acc = 0;
  for (Element x = 0; x < g.order(); ++x)
    if (int m = s.count(x)) acc = g.add(acc, g.multiple(m, x));
  return acc;
}

/// S * T (multiset union)
inline Sequence multiply(const Sequence& a, const Sequence& b) {
  detail::require_same_group(a, b);
  Sequence out = a;
  for (Element x = 0; x < a.group().order(); ++x)
    if (b.count(x)) out.insert(x, b.count(x));
  return out;
}
inline Sequence operator*(const Sequence& a, const Sequence& b) { return multiply(a, b); }

/// -S
inline Sequence negate(const Sequence& s) {
  Sequence out(s.group());
  for (Element x = 0; x < s.group().order(); ++x)
    if (s.count(x)) out.insert(s.group().neg(x), s.count(x));
  return out;
}

inline bool divides(const Sequence& t, const Sequence& s) {
  detail::require_same_group(s, t);
  for (Element x = 0; x < s.group().order(); ++x)
    if (t.count(x) > s.count(x)) return false;
  return true;
}

/// S * T^{-1}; requires T | S.
inline Sequence divide(const Sequence& s, const Sequence& t) {
  if (!divides(t, s)) throw DomainError("divide: " + t.str() + " does not divide " + s.str());
  std::vector<int> counts = s.counts();
  for (Element x = 0; x < s.group().order(); ++x) counts[x] -= t.count(x);
  return Sequence(s.group(), std::move(counts));
}

namespace detail {
/// Boolean table of subsequence sums, grown term by term: O(|S| * |G|).
inline std::vector<char> sum_table(const Sequence& s) {
  const auto& g = s.group();
  std::vector<char> reach(g.order(), 0), next;
  for (Element x = 0; x < g.order(); ++x) {
    for (int rep = 0; rep < s.count(x); ++rep) {
      next = reach;
      for (Element y = 0; y < g.order(); ++y)
        if (reach[y]) next[g.add(y, x)] = 1;
      next[x] = 1;
      if (next == reach) break;  // further copies of x add nothing
      reach.swap(next);
    }
  }
  return reach;
}
}  // namespace detail

struct SumsetOptions {
  int max_length = 24;
};

/// Sigma(S): all sums over nonempty sub-multisets, as sorted element indices.
inline std::vector<Element> subsequence_sums(const Sequence& s, SumsetOptions opts = {}) {
  if (s.size() > opts.max_length)
    throw ResourceError("subsequence_sums: |S| = " + std::to_string(s.size()) + " exceeds cap " +
                        std::to_string(opts.max_length));
  const auto reach = detail::sum_table(s);
  std::vector<Element> out;
  for (Element x = 0; x < static_cast<Element>(reach.size()); ++x)
    if (reach[x]) out.push_back(x);
  return out;
}

inline bool is_zero_sum_free(const Sequence& s) { return !detail::sum_table(s)[0]; }

/// Minimal zero-sum sequence test. With sigma(S) = 0, S is minimal iff S
/// with one term removed is zero-sum free.
inline bool is_atom(const Sequence& s) {
  if (s.empty() || sigma(s) != 0) return false;
  const auto supp = s.support();
  std::vector<int> counts = s.counts();
  counts[supp.front()] -= 1;
  return is_zero_sum_free(Sequence(s.group(), std::move(counts)));
}

/// k(S) = sum 1/ord(g_i)
inline Rational cross_number(const Sequence& s) {
  Rational acc;
  for (Element x = 0; x < s.group().order(); ++x)
    if (int m = s.count(x)) acc += Rational(m, s.group().element_order(x));
  return acc;
}

/// ||S||_g for a zero-sum sequence over a cyclic group generated by g: each
/// term written as n*g with n in [1, ord(g)], summed and divided by ord(g).
inline long long g_norm(const Sequence& s, Element generator) {
  const auto& grp = s.group();
  if (!grp.is_cyclic() || grp.element_order(generator) != grp.order())
    throw DomainError("g_norm: element is not a generator of a cyclic group");
  if (sigma(s) != 0) throw DomainError("g_norm: sequence is not zero-sum");
  const int n = grp.order();
  std::vector<int> log(n, 0);
  Element acc = 0;
  for (int k = 1; k <= n; ++k) {
    acc = grp.add(acc, generator);
    log[acc] = k;  // zero gets n
  }
  long long total = 0;
  for (Element x = 0; x < n; ++x) total += static_cast<long long>(s.count(x)) * log[x];
  return total / n;
}

/// Parses a sequence literal such as "(1,0)^2 * (0,1)^3" or "1^5*4^5" (bare
/// integers only for cyclic groups). Terms are separated by '*' or a middle
/// dot; the empty string is the empty sequence.
inline Sequence parse_sequence(const FiniteAbelianGroup& g, std::string_view text) {
  Sequence out(g);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](bool allow_sign) -> long long {
    skip_space();
    const std::size_t start = i;
    bool negative = false;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    const std::size_t digits = i;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (v > 1'000'000) throw ParseError("integer too large", start);
    }
    if (i == digits) throw ParseError("expected an integer", start);
    return negative ? -v : v;
  };
  skip_space();
  if (i == text.size()) return out;
  while (true) {
    skip_space();
    std::vector<int> coords;
    if (i < text.size() && text[i] == '(') {
      ++i;
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
      } else {
        while (true) {
          coords.push_back(static_cast<int>(read_int(true)));
          skip_space();
          if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
          }
          if (i < text.size() && text[i] == ')') {
            ++i;
            break;
          }
          throw ParseError("expected ',' or ')' in element tuple", i);
        }
      }
    } else {
      if (g.rank() != 1) throw ParseError("bare integer elements are only allowed for cyclic groups", i);
      coords.push_back(static_cast<int>(read_int(true)));
    }
    if (static_cast<int>(coords.size()) != g.rank())
      throw ParseError("element has " + std::to_string(coords.size()) + " coordinates, expected " +
                           std::to_string(g.rank()),
                       i);
    const Element x = g.element(coords);
    skip_space();
    long long mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      mult = read_int(false);
    }
    out.insert(x, static_cast<int>(mult));
    skip_space();
    if (i == text.size()) break;
    if (text[i] == '*' || text[i] == '.') {
      ++i;
      continue;
    }
    if (text.substr(i, 2) == "\xC2\xB7") {
      i += 2;
      continue;
    }
    throw ParseError("expected '*' between terms", i);
  }
  return out;
}

}  // namespace zerolen
