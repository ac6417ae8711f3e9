#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atoms.hpp"
#include "errors.hpp"
#include "length_set.hpp"
#include "lengths.hpp"
#include "parallel.hpp"
#include "sequence.hpp"

namespace zerolen {

/// Default sweep bound by group order.
inline int default_bound(const FiniteAbelianGroup& g) {
  if (g.order() <= 5) return 20;
  if (g.order() <= 9) return 16;
  return 12;
}

struct SystemEntry {
  LengthSet set;
  Sequence witness;  // canonical minimal realizer: shortest, then smallest multiplicity vector
};

/// L(B) for every zero-sum B over G0 with |B| <= bound. A certificate about a
/// truncation, never a claim about the full system. Every L with
/// min L <= complete_min is present: |B without zeros| <= D(G0) * min L.
struct BoundedSystem {
  FiniteAbelianGroup group;
  std::vector<Element> subset;
  int bound = 0;
  int davenport = 0;  // D(G0 \ {0})
  int complete_min = 0;
  bool authoritative = true;
  std::vector<SystemEntry> entries;  // sorted by set

  const SystemEntry* find(const LengthSet& l) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), l,
                               [](const SystemEntry& e, const LengthSet& v) { return e.set < v; });
    return it != entries.end() && it->set == l ? &*it : nullptr;
  }
  bool contains(const LengthSet& l) const { return find(l) != nullptr; }
  std::vector<LengthSet> sets() const {
    std::vector<LengthSet> out;
    for (const auto& e : entries) out.push_back(e.set);
    return out;
  }
};

/// Raised when the engine's node cap stops a sweep; carries what was found.
class SystemResourceError : public ResourceError {
 public:
  SystemResourceError(const std::string& what, BoundedSystem partial)
      : ResourceError(what), partial_(std::move(partial)) {}
  const BoundedSystem& partial() const { return partial_; }

 private:
  BoundedSystem partial_;
};

namespace detail {

/// Visits every zero-sum multiset over `elems` (nonzero, sorted) with at most
/// `bound` terms. `visit(task, key, size)` gets the engine key (multiplicity of
/// x at key[x-1]). Tasks are the multiplicity pairs of the first two elements.
template <class Visit>
void sweep_zero_sum(const FiniteAbelianGroup& g, const std::vector<Element>& elems, int bound, int threads,
                    Visit&& visit) {
  struct Task {
    int m0, m1;
  };
  std::vector<Task> tasks;
  const int n = static_cast<int>(elems.size());
  if (n == 0) {
    tasks.push_back({0, 0});
  } else {
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; a + b <= bound && (n > 1 || b == 0); ++b) tasks.push_back({a, b});
  }
  parallel_for(tasks.size(), threads, [&](std::size_t t) {
    std::string key(g.order() - 1, '\0');
    Element total = 0;
    int size = 0;
    int start = 0;
    if (n >= 1) {
      key[elems[0] - 1] = static_cast<char>(tasks[t].m0);
      total = g.multiple(tasks[t].m0, elems[0]);
      size = tasks[t].m0;
      start = 1;
    }
    if (n >= 2) {
      key[elems[1] - 1] = static_cast<char>(tasks[t].m1);
      total = g.add(total, g.multiple(tasks[t].m1, elems[1]));
      size += tasks[t].m1;
      start = 2;
    }
    auto rec = [&](auto&& self, int i, Element sum, int sz) -> void {
      if (i == n) {
        if (sum == 0) visit(t, key, sz);
        return;
      }
      const Element x = elems[i];
      for (int m = 0; sz + m <= bound; ++m) {
        key[x - 1] = static_cast<char>(m);
        self(self, i + 1, sum, sz + m);
        sum = g.add(sum, x);
      }
      key[x - 1] = 0;
    };
    rec(rec, start, total, size);
  });
}

inline std::size_t sweep_task_count(std::size_t n, int bound) {
  if (n == 0) return 1;
  std::size_t c = 0;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound && (n > 1 || b == 0); ++b) ++c;
  return c;
}

inline std::vector<Element> without_zero(const std::vector<Element>& v) {
  std::vector<Element> out;
  for (Element x : v)
    if (x != 0) out.push_back(x);
  return out;
}

inline Sequence sequence_from_key(const FiniteAbelianGroup& g, const std::string& key, int zeros) {
  std::vector<int> counts(g.order(), 0);
  counts[0] = zeros;
  for (Element x = 1; x < g.order(); ++x) counts[x] = static_cast<unsigned char>(key[x - 1]);
  return Sequence(g, std::move(counts));
}

}  // namespace detail

/// Bounded system of G0. Zero, when in G0, is handled by the shift rule
/// L(0^y B) = y + L(B) instead of being enumerated.
inline BoundedSystem bounded_system(const LengthEngine& engine, std::span<const Element> g0, int bound,
                                    int threads = 1) {
  if (bound < 0) throw DomainError("bound must be nonnegative");
  const auto& g = engine.group();
  BoundedSystem sys;
  sys.group = g;
  sys.subset = normalize_subset(g, g0);
  sys.bound = bound;
  const auto core = detail::without_zero(sys.subset);
  const bool zeros = core.size() != sys.subset.size();
  sys.davenport = enumerate_atoms(g, core).davenport;
  if (bound > LengthEngine::kMaxCoreLength)
    throw ResourceError("bound exceeds " + std::to_string(LengthEngine::kMaxCoreLength));

  // Per task: core mask -> minimal witness (size, multiplicities).
  using Best = std::map<std::uint64_t, Sequence>;
  std::vector<Best> parts;
  std::atomic<bool> capped{false};
  std::string cap_message;
  std::mutex cap_mutex;
  const std::size_t n_tasks = detail::sweep_task_count(core.size(), bound);
  parts.resize(n_tasks);
  detail::sweep_zero_sum(g, core, bound, threads, [&](std::size_t task, std::string& key, int size) {
    if (capped.load(std::memory_order_relaxed)) return;
    std::uint64_t mask;
    try {
      mask = engine.mask_of(key);
    } catch (const ResourceError& e) {
      std::lock_guard lock(cap_mutex);
      if (!capped) cap_message = e.what();
      capped = true;
      return;
    }
    (void)size;
    auto& best = parts[task];
    Sequence s = detail::sequence_from_key(g, key, 0);
    auto it = best.find(mask);
    if (it == best.end())
      best.emplace(mask, std::move(s));
    else if (s < it->second)
      it->second = std::move(s);
  });

  Best merged;
  for (auto& p : parts)
    for (auto& [mask, s] : p) {
      auto it = merged.find(mask);
      if (it == merged.end())
        merged.emplace(mask, std::move(s));
      else if (s < it->second)
        it->second = std::move(s);
    }
  std::map<LengthSet, Sequence> sets;
  auto offer = [&](LengthSet l, Sequence w) {
    auto it = sets.find(l);
    if (it == sets.end())
      sets.emplace(std::move(l), std::move(w));
    else if (w < it->second)
      it->second = std::move(w);
  };
  for (const auto& [mask, w] : merged) {
    const int max_shift = zeros ? bound - w.size() : 0;
    for (int y = 0; y <= max_shift; ++y) {
      Sequence wy = w;
      wy.insert(0, y);
      offer(LengthSet::from_mask(mask, y), std::move(wy));
    }
  }
  for (auto& [l, w] : sets) sys.entries.push_back({l, std::move(w)});
  sys.complete_min = sys.davenport == 0 ? bound : bound / sys.davenport;
  if (capped) {
    sys.authoritative = false;
    throw SystemResourceError("bounded system incomplete: " + cap_message, std::move(sys));
  }
  return sys;
}

/// Bounded system of all of G (zero included).
inline BoundedSystem bounded_system(const LengthEngine& engine, int bound, int threads = 1) {
  std::vector<Element> all(engine.group().order());
  std::iota(all.begin(), all.end(), 0);
  return bounded_system(engine, all, bound, threads);
}

/// Union of Delta(L) over the system.
inline std::vector<int> observed_delta(const BoundedSystem& sys) {
  std::vector<int> out;
  for (const auto& e : sys.entries)
    for (int d : delta(e.set)) out.push_back(d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// rho_k

struct RhoKResult {
  int k = 0;
  int value = 0;
  Sequence witness;  // k in L(witness), max L(witness) = value
  int bound = 0;
  std::uint64_t products_checked = 0;
};

/// rho_k(G0) = max{max L : k in L}. Any B with k in L(B) is a product of k
/// atoms, so products of k catalog atoms cover every candidate; |B| <= k*D
/// makes the answer exact whenever bound >= k*D. Products are scanned by
/// decreasing |B| and stopped once |B|/2 cannot beat the current best.
inline RhoKResult rho_k(const LengthEngine& engine, int k, int bound) {
  if (k < 2) throw DomainError("rho_k requires k >= 2");
  const auto& cat = engine.catalog();
  const int d = std::max(1, cat.davenport);
  if (bound < k * d)
    throw DomainError("rho_k bound " + std::to_string(bound) + " is below k*D(G) = " + std::to_string(k * d));
  if (k * d > LengthEngine::kMaxCoreLength) throw ResourceError("rho_k: k*D(G) too large for the length engine");
  const auto& g = engine.group();
  std::vector<std::size_t> order(cat.atoms.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cat.atoms[a].size() > cat.atoms[b].size(); });

  RhoKResult res;
  res.k = k;
  res.bound = bound;
  res.value = k;  // A^k has k in L
  res.witness = cat.atoms.empty() ? Sequence(g) : cat.atoms[order.back()].power(k);
  std::string key(g.order() - 1, '\0');
  int cutoff = 0;  // |B| / 2 for the current total
  auto rec = [&](auto&& self, std::size_t from, int remaining, int target) -> void {
    if (remaining == 0) {
      if (target != 0) return;
      ++res.products_checked;
      const std::uint64_t mask = engine.mask_of(key);
      const int mx = 63 - std::countl_zero(mask);
      if (mx > res.value) {
        res.value = mx;
        res.witness = detail::sequence_from_key(g, key, 0);
      }
      return;
    }
    for (std::size_t i = from; i < order.size(); ++i) {
      const auto& a = cat.atoms[order[i]];
      if (a.size() * remaining < target) return;  // lengths only decrease from here
      if (a.size() > target) continue;
      for (auto [x, m] : a.key()) key[x - 1] = static_cast<char>(key[x - 1] + m);
      self(self, i, remaining - 1, target - a.size());
      for (auto [x, m] : a.key()) key[x - 1] = static_cast<char>(key[x - 1] - m);
      if (res.value >= cutoff) return;
    }
  };
  for (int total = k * d; total >= 2 * k; --total) {
    cutoff = total / 2;
    if (cutoff <= res.value) break;
    rec(rec, 0, k, total);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Delta*

struct DeltaStarResult {
  int bound = 0;
  std::vector<int> values;             // {min Delta(G0)} over subsets with observed distances
  std::vector<int> observed;           // Delta(G) at the bound
  std::vector<int> delta1_envelope;    // d in observed dividing some value
  std::map<int, std::vector<Element>> example_subset;  // value -> a smallest subset realizing it
};

/// One sweep of G \ {0} records, per support, the least min Delta(L(B)).
/// A subset-minimum transform over supports then gives min Delta(G0) for
/// every G0, since B(G0) consists of the B with supp(B) inside G0.
inline DeltaStarResult delta_star(const LengthEngine& engine, int bound, int threads = 1) {
  const auto& g = engine.group();
  if (g.order() > 16) throw ResourceError("delta_star is limited to |G| <= 16");
  const int n = g.order() - 1;
  const std::size_t subsets = std::size_t{1} << n;
  constexpr int kNone = 1 << 20;
  const auto elems = nonzero_elements(g);
  const std::size_t n_tasks = detail::sweep_task_count(elems.size(), bound);
  std::vector<std::map<std::uint32_t, int>> parts(n_tasks);
  std::vector<std::vector<int>> dist_parts(n_tasks);
  detail::sweep_zero_sum(g, elems, bound, threads, [&](std::size_t task, std::string& key, int) {
    const std::uint64_t mask = engine.mask_of(key);
    if (std::popcount(mask) < 2) return;
    std::uint32_t supp = 0;
    for (int i = 0; i < n; ++i)
      if (key[i]) supp |= 1u << i;
    const auto l = LengthSet::from_mask(mask);
    const auto ds = delta(l);
    auto [it, fresh] = parts[task].emplace(supp, ds.front());
    if (!fresh) it->second = std::min(it->second, ds.front());
    for (int d : ds) dist_parts[task].push_back(d);
  });
  std::vector<int> best(subsets, kNone);
  std::vector<int> observed;
  for (std::size_t t = 0; t < n_tasks; ++t) {
    for (auto [s, v] : parts[t]) best[s] = std::min(best[s], v);
    observed.insert(observed.end(), dist_parts[t].begin(), dist_parts[t].end());
  }
  for (int i = 0; i < n; ++i)
    for (std::size_t s = 0; s < subsets; ++s)
      if (s >> i & 1) best[s] = std::min(best[s], best[s ^ (std::size_t{1} << i)]);

  DeltaStarResult res;
  res.bound = bound;
  std::sort(observed.begin(), observed.end());
  observed.erase(std::unique(observed.begin(), observed.end()), observed.end());
  res.observed = observed;
  for (std::size_t s = 0; s < subsets; ++s) {
    if (best[s] == kNone) continue;
    std::vector<Element> sub;
    for (int i = 0; i < n; ++i)
      if (s >> i & 1) sub.push_back(elems[i]);
    auto it = res.example_subset.find(best[s]);
    if (it == res.example_subset.end() || sub.size() < it->second.size() ||
        (sub.size() == it->second.size() && sub < it->second))
      res.example_subset[best[s]] = sub;
  }
  for (const auto& [v, sub] : res.example_subset) res.values.push_back(v);
  for (int d1 : observed)
    if (std::any_of(res.values.begin(), res.values.end(), [d1](int d) { return d % d1 == 0; }))
      res.delta1_envelope.push_back(d1);
  return res;
}

// ---------------------------------------------------------------------------
// Comparisons

struct ComparisonResult {
  int window = 0;            // sets with min L <= window are compared
  bool a_in_b = true;
  bool b_in_a = true;
  std::vector<SystemEntry> a_not_b;  // witnesses from A
  std::vector<SystemEntry> b_not_a;  // witnesses from B
};

/// Bounded inclusion test. Both systems are complete for sets with
/// min L <= their complete_min, so within the common window a missing set is
/// a genuine non-inclusion, not a truncation artifact.
inline ComparisonResult compare_systems(const BoundedSystem& a, const BoundedSystem& b) {
  ComparisonResult r;
  r.window = std::min(a.complete_min, b.complete_min);
  for (const auto& e : a.entries)
    if (e.set.min() <= r.window && !b.contains(e.set)) r.a_not_b.push_back(e);
  for (const auto& e : b.entries)
    if (e.set.min() <= r.window && !a.contains(e.set)) r.b_not_a.push_back(e);
  r.a_in_b = r.a_not_b.empty();
  r.b_in_a = r.b_not_a.empty();
  return r;
}

/// A group's certificate: systems over subsets of the group, all of whose
/// sets lie in the group's system of sets of lengths.
struct GroupCertificate {
  std::vector<BoundedSystem> systems;

  bool contains(const LengthSet& l) const {
    return std::any_of(systems.begin(), systems.end(), [&](const BoundedSystem& s) { return s.contains(l); });
  }
  /// Complete for every L with max L <= m: some system over all of G covers it.
  bool complete_for_max(int m) const {
    return std::any_of(systems.begin(), systems.end(), [&](const BoundedSystem& s) {
      return s.authoritative && s.complete_min >= m && static_cast<int>(s.subset.size()) == s.group.order();
    });
  }
  std::vector<LengthSet> sets_with_max_at_most(int m) const {
    std::vector<LengthSet> out;
    for (const auto& s : systems)
      for (const auto& e : s.entries)
        if (e.set.max() <= m) out.push_back(e.set);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

struct IntersectionResult {
  int max_length = 0;
  std::vector<LengthSet> sets;
  /// True when some input is complete in the window and the result equals
  /// its window: then nothing in the true intersection can be missing.
  bool exact = false;
};

/// Sets with max L <= max_length lying in every certificate.
inline IntersectionResult bounded_intersection(const std::vector<GroupCertificate>& certs, int max_length) {
  IntersectionResult r;
  r.max_length = max_length;
  if (certs.empty()) return r;
  for (const auto& l : certs.front().sets_with_max_at_most(max_length))
    if (std::all_of(certs.begin() + 1, certs.end(), [&](const GroupCertificate& c) { return c.contains(l); }))
      r.sets.push_back(l);
  for (const auto& c : certs)
    if (c.complete_for_max(max_length) && c.sets_with_max_at_most(max_length) == r.sets) r.exact = true;
  return r;
}

}  // namespace zerolen
