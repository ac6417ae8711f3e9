#pragma once

#include <algorithm>
#include <cctype>
#include <iterator>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "length_set.hpp"
#include "rational.hpp"

namespace zerolen {

/// Numerical monoid <n_1, ..., n_t> given by its minimal generating set.
/// Lengths come from a grow-only (value, count) reachability table, extended
/// under a mutex on demand and shared by copies.
class NumericalMonoid {
 public:
  static constexpr long long kMaxValue = 20000;

  explicit NumericalMonoid(std::vector<long long> gens) : cache_(std::make_shared<Cache>()) {
    if (gens.empty()) throw DomainError("numerical monoid needs at least one generator");
    long long g = 0;
    for (long long n : gens) {
      if (n <= 0) throw DomainError("generators must be positive");
      if (n > kMaxValue) throw DomainError("generator too large");
      g = std::gcd(g, n);
    }
    if (g != 1) throw DomainError("generators must have gcd 1 (co-finite monoid)");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Drop generators that are sums of smaller ones.
    std::vector<char> reach(gens.back() + 1, 0);
    reach[0] = 1;
    for (long long n : gens) {
      if (reach[n]) continue;
      gens_.push_back(n);
      for (long long v = n; v <= gens.back(); ++v)
        if (reach[v - n]) reach[v] = 1;
    }
    // Frobenius number: scan until n_1 consecutive members appear.
    std::vector<char> mem(1, 1);
    long long run = 0, v = 0;
    frobenius_ = -1;
    while (run < gens_.front()) {
      ++v;
      bool in = false;
      for (long long n : gens_)
        if (n <= v && mem[v - n]) {
          in = true;
          break;
        }
      mem.push_back(in);
      if (in) {
        ++run;
      } else {
        run = 0;
        frobenius_ = v;
      }
      if (v > kMaxValue) throw ResourceError("Frobenius number exceeds value cap");
    }
  }

  const std::vector<long long>& generators() const { return gens_; }
  long long frobenius() const { return frobenius_; }
  bool half_factorial() const { return gens_.size() == 1; }
  bool is_atom(long long a) const { return std::binary_search(gens_.begin(), gens_.end(), a); }

  bool contains(long long a) const {
    if (a < 0) return false;
    if (a > frobenius_) return true;
    return !lengths_bits(a).empty();
  }

  /// L(a); requires a in H.
  LengthSet length_set(long long a) const {
    if (!contains(a)) throw DomainError(std::to_string(a) + " is not in " + str());
    const auto bits = lengths_bits(a);
    std::vector<int> v;
    for (std::size_t w = 0; w < bits.size(); ++w)
      for (int b = 0; b < 64; ++b)
        if (bits[w] >> b & 1) v.push_back(static_cast<int>(w * 64 + b));
    return LengthSet(std::move(v));
  }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + std::to_string(gens_[i]);
    return s + ">";
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::vector<std::uint64_t>> bits;  // bits[a]: lengths of a (empty if a not in H)
  };

  /// Copy of the length bitset of a (empty vector when a is not in H).
  std::vector<std::uint64_t> lengths_bits(long long a) const {
    if (a < 0) return {};
    if (a > kMaxValue) throw ResourceError("value " + std::to_string(a) + " exceeds cap " + std::to_string(kMaxValue));
    std::lock_guard lock(cache_->mutex);
    auto& t = cache_->bits;
    if (t.empty()) t.push_back({1});  // L(0) = {0}
    while (static_cast<long long>(t.size()) <= a) {
      const long long v = static_cast<long long>(t.size());
      const std::size_t words = static_cast<std::size_t>(v / gens_.front()) / 64 + 1;
      std::vector<std::uint64_t> cur;
      for (long long n : gens_) {
        if (n > v || t[v - n].empty()) continue;
        const auto& prev = t[v - n];
        if (cur.empty()) cur.assign(words, 0);
        // cur |= prev << 1
        std::uint64_t carry = 0;
        for (std::size_t w = 0; w < prev.size(); ++w) {
          cur[w] |= (prev[w] << 1) | carry;
          carry = prev[w] >> 63;
        }
        if (carry && prev.size() < words) cur[prev.size()] |= carry;
      }
      t.push_back(std::move(cur));
    }
    return t[a];
  }

  std::vector<long long> gens_;
  long long frobenius_ = -1;
  std::shared_ptr<Cache> cache_;
};

inline NumericalMonoid nm_parse(const std::string& text) {
  std::vector<long long> g;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '<' || text[i] == '>')) ++i;
    if (i == text.size()) break;
    const std::size_t start = i;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (v > NumericalMonoid::kMaxValue) throw ParseError("generator too large", start);
    }
    if (i == start) throw ParseError("expected a generator", i);
    g.push_back(v);
    while (i < text.size() && (text[i] == ' ' || text[i] == '>')) ++i;
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError("expected ',' between generators", i);
      ++i;
    }
  }
  if (g.empty()) throw ParseError("empty generator list", 0);
  return NumericalMonoid(g);
}

inline LengthSet nm_length_set(const NumericalMonoid& h, long long a) { return h.length_set(a); }

/// rho(H) = n_t / n_1
inline Rational nm_elasticity(const NumericalMonoid& h) {
  return Rational(h.generators().back(), h.generators().front());
}

/// min Delta(H) = gcd of successive generator differences (0 for <1>).
inline long long nm_min_delta(const NumericalMonoid& h) {
  long long g = 0;
  const auto& n = h.generators();
  for (std::size_t i = 1; i < n.size(); ++i) g = std::gcd(g, n[i] - n[i - 1]);
  return g;
}

/// Invariants observed over all a in H with a <= bound.
struct NmObserved {
  long long bound = 0;
  Rational max_rho{1};
  long long max_rho_at = 0;
  std::vector<int> distances;
  long long distance_gcd = 0;
};

inline NmObserved nm_observed(const NumericalMonoid& h, long long bound) {
  NmObserved o;
  o.bound = bound;
  for (long long a = 1; a <= bound; ++a) {
    if (!h.contains(a)) continue;
    const auto l = h.length_set(a);
    if (const auto r = rho(l); r > o.max_rho) o.max_rho = r, o.max_rho_at = a;
    for (int d : delta(l)) o.distances.push_back(d);
  }
  std::sort(o.distances.begin(), o.distances.end());
  o.distances.erase(std::unique(o.distances.begin(), o.distances.end()), o.distances.end());
  for (int d : o.distances) o.distance_gcd = std::gcd(o.distance_gcd, static_cast<long long>(d));
  return o;
}

/// M(a): least n with m^n in a + H, i.e. every s with max L(s) >= n has
/// s - a in H. Only s <= a + F can fail.
inline int strongly_primary_M(const NumericalMonoid& h, long long a) {
  if (a == 0) throw DomainError("M(a) requires a != 0");
  if (!h.contains(a)) throw DomainError(std::to_string(a) + " is not in " + h.str());
  int worst = 0;
  for (long long s = 1; s <= a + h.frobenius(); ++s)
    if (h.contains(s) && !h.contains(s - a)) worst = std::max(worst, h.length_set(s).max());
  return worst + 1;
}

/// Smallest a in H with |L(a)| >= 2.
inline long long smallest_non_factorial(const NumericalMonoid& h) {
  if (h.half_factorial()) throw DomainError(h.str() + " is half-factorial");
  for (long long a = 1;; ++a)
    if (h.contains(a) && h.length_set(a).size() >= 2) return a;
}

struct BetaGap {
  long long b = 0, u = 0;
  int M_b = 0, M_u = 0;
  LengthSet L_power;  // L(M(b) * u)
  Rational beta1, beta2, beta;
};

inline BetaGap beta_gap(const NumericalMonoid& h, long long b, long long u) {
  if (!h.contains(b) || h.length_set(b).size() < 2) throw DomainError("beta_gap: |L(b)| must be at least 2");
  if (!h.is_atom(u)) throw DomainError("beta_gap: u must be a generator");
  BetaGap r;
  r.b = b;
  r.u = u;
  r.M_b = strongly_primary_M(h, b);
  r.M_u = strongly_primary_M(h, u);
  r.L_power = h.length_set(static_cast<long long>(r.M_b) * u);
  const int s = r.M_b + r.M_u;
  r.beta1 = Rational(s + 1, s);
  r.beta2 = Rational(r.L_power.max() + s, r.L_power.min() + s);
  r.beta = std::min(r.beta1, r.beta2);
  return r;
}

struct GapReport {
  BetaGap gap;
  long long bound = 0;
  long long checked = 0;
  std::vector<std::pair<long long, LengthSet>> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};

/// rho(L(a)) = 1 or rho(L(a)) >= beta for all a <= bound, with b the smallest
/// element having two lengths and u the smallest generator.
inline GapReport verify_elasticity_gap(const NumericalMonoid& h, long long bound) {
  if (h.half_factorial()) throw DomainError(h.str() + " is half-factorial; the gap statement needs two lengths");
  GapReport r;
  r.bound = bound;
  r.gap = beta_gap(h, smallest_non_factorial(h), h.generators().front());
  for (long long a = 1; a <= bound; ++a) {
    if (!h.contains(a)) continue;
    ++r.checked;
    const auto l = h.length_set(a);
    const auto q = rho(l);
    if (q != Rational(1) && q < r.gap.beta) r.counterexamples.emplace_back(a, l);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Products F(P) x D_1 x ... x D_n

struct ProductMonoid {
  int free_rank = 0;
  std::vector<NumericalMonoid> factors;
};

struct ProductElement {
  int free_count = 0;  // total multiplicity of primes
  std::vector<long long> components;
};

inline LengthSet product_length_set(const ProductMonoid& d, const ProductElement& x) {
  if (x.components.size() != d.factors.size()) throw DomainError("component count does not match factor count");
  if (x.free_count < 0) throw DomainError("negative free part");
  if (x.free_count > 0 && d.free_rank == 0) throw DomainError("free part given but the product has no free factor");
  LengthSet acc{x.free_count};
  for (std::size_t i = 0; i < d.factors.size(); ++i) acc = sumset(acc, d.factors[i].length_set(x.components[i]));
  return acc;
}

struct YLReport {
  std::vector<long long> witnesses;  // a_i
  std::vector<int> M;                // M(a_i)
  long long y_L = 0;
  long long search_bound = 0;
  long long window = 0;
  long long elements_checked = 0;
  std::vector<std::pair<std::vector<long long>, long long>> realizations;  // (components, y)
  bool pass() const { return realizations.empty(); }
};

/// y_L = |L| (M(a_1) + ... + M(a_n)) and a bounded check that no element with
/// components <= search_bound has length set y + L, y in [y_L, y_L + window].
inline YLReport y_L_bound(const ProductMonoid& d, const LengthSet& l, long long search_bound, long long window) {
  if (d.free_rank != 0) throw DomainError("y_L is stated for products without a free factor");
  if (d.factors.empty()) throw DomainError("product needs at least one factor");
  if (d.factors.size() > 3) throw ResourceError("products are limited to 3 factors");
  YLReport r;
  r.search_bound = search_bound;
  r.window = window;
  long long msum = 0;
  for (const auto& f : d.factors) {
    const long long a = smallest_non_factorial(f);  // throws on half-factorial factors
    r.witnesses.push_back(a);
    r.M.push_back(strongly_primary_M(f, a));
    msum += r.M.back();
  }
  r.y_L = static_cast<long long>(l.size()) * msum;
  const int target_size = static_cast<int>(l.size());
  const int offset = l.min();
  std::vector<long long> comp(d.factors.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == comp.size()) {
      ++r.elements_checked;
      const auto got = product_length_set(d, {0, comp});
      if (static_cast<int>(got.size()) != target_size) return;
      const long long y = got.min() - offset;
      if (y >= r.y_L && y <= r.y_L + window && got == l.shifted(static_cast<int>(y)))
        r.realizations.emplace_back(comp, y);
      return;
    }
    for (long long v = 0; v <= search_bound; ++v) {
      if (!d.factors[i].contains(v)) continue;
      comp[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return r;
}

// ---------------------------------------------------------------------------
// F(P) x D_1 against the small-group systems

enum class SmallGroupCase { b2, b3 };

struct SmallGroupReport {
  SmallGroupCase which = SmallGroupCase::b2;
  long long bound = 0;
  bool hypotheses_met = true;
  std::vector<std::string> hypothesis_failures;
  std::size_t system_size = 0;
  std::vector<LengthSet> only_in_monoid;
  std::vector<LengthSet> only_in_family;
  std::string status() const {
    if (!hypotheses_met) return "hypothesis-not-met";
    return only_in_monoid.empty() && only_in_family.empty() ? "pass" : "fail";
  }
};

/// Compares {y + L(a)} restricted to max <= bound with y+2k+[0,k] (b2) or
/// the C3^2 family (b3). Every a with max L(a) <= bound satisfies
/// a <= n_t * bound, so scanning a up to n_t * bound makes the window exact.
inline SmallGroupReport verify_small_group_case(const NumericalMonoid& d1, SmallGroupCase which, long long bound) {
  SmallGroupReport r;
  r.which = which;
  r.bound = bound;
  const int m = which == SmallGroupCase::b2 ? 3 : 5;
  const Rational want_rho(m, 2);
  const long long nt = d1.generators().back();
  const long long scan = nt * bound;
  if (nm_elasticity(d1) != want_rho)
    r.hypothesis_failures.push_back("rho(D1) = " + nm_elasticity(d1).str() + ", required " + want_rho.str());
  const auto obs = nm_observed(d1, scan);
  if (obs.distances != std::vector<int>{1}) {
    std::string s;
    for (int d : obs.distances) s += (s.empty() ? "" : ",") + std::to_string(d);
    r.hypothesis_failures.push_back("observed Delta(D1) up to " + std::to_string(scan) + " is {" + s + "}, required {1}");
  }
  bool interval = false;
  for (long long a = 1; a <= scan && !interval; ++a)
    if (d1.contains(a) && d1.length_set(a) == LengthSet::interval(2, m)) interval = true;
  if (!interval) r.hypothesis_failures.push_back("[2," + std::to_string(m) + "] not realized up to " + std::to_string(scan));
  r.hypotheses_met = r.hypothesis_failures.empty();
  if (!r.hypotheses_met) return r;

  std::vector<LengthSet> sys;
  for (long long a = 0; a <= scan; ++a) {
    if (!d1.contains(a)) continue;
    const auto l = d1.length_set(a);
    for (long long y = 0; y + l.max() <= bound; ++y) sys.push_back(l.shifted(static_cast<int>(y)));
  }
  std::vector<LengthSet> fam;
  if (which == SmallGroupCase::b2) {
    for (int y = 0; y <= bound; ++y)
      for (int k = 0; y + 3 * k <= bound; ++k) fam.push_back(LengthSet::interval(y + 2 * k, y + 3 * k));
  } else {
    // [2k, l] for l in [2k, 5k], [2k+1, l] for l in [2k+1, 5k+2] (k >= 1), and {1}
    fam.push_back(LengthSet{1});
    for (int k = 0; 2 * k <= bound; ++k) {
      for (int l = 2 * k; l <= std::min<long long>(5 * k, bound); ++l) fam.push_back(LengthSet::interval(2 * k, l));
      if (k >= 1)
        for (int l = 2 * k + 1; l <= std::min<long long>(5 * k + 2, bound); ++l)
          fam.push_back(LengthSet::interval(2 * k + 1, l));
    }
  }
  for (auto* v : {&sys, &fam}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  r.system_size = sys.size();
  std::set_difference(sys.begin(), sys.end(), fam.begin(), fam.end(), std::back_inserter(r.only_in_monoid));
  std::set_difference(fam.begin(), fam.end(), sys.begin(), sys.end(), std::back_inserter(r.only_in_family));
  return r;
}

}  // namespace zerolen
