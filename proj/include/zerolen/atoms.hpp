#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "parallel.hpp"
#include "sequence.hpp"

namespace zerolen {

/// All minimal zero-sum sequences over a subset G0, sorted by (length, multiplicities).
struct AtomCatalog {
  FiniteAbelianGroup group;
  std::vector<Element> subset;
  std::vector<Sequence> atoms;
  int davenport = 0;

  /// length -> number of atoms of that length
  std::map<int, int> counts_by_length() const {
    std::map<int, int> out;
    for (const auto& a : atoms) ++out[a.size()];
    return out;
  }
};

/// G0 = G \ {0}
inline std::vector<Element> nonzero_elements(const FiniteAbelianGroup& g) {
  std::vector<Element> out;
  for (Element x = 1; x < g.order(); ++x) out.push_back(x);
  return out;
}

inline std::vector<Element> normalize_subset(const FiniteAbelianGroup& g, std::span<const Element> g0) {
  std::vector<Element> out(g0.begin(), g0.end());
  for (Element x : out)
    if (!g.contains(x)) throw DomainError("subset element index " + std::to_string(x) + " out of range");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

using SumMask = std::uint64_t;

struct AtomSearch {
  const FiniteAbelianGroup& group;
  const std::vector<Element>& elems;
  std::vector<int> counts;
  std::vector<Sequence>& out;

  SumMask shift(SumMask m, Element g) const {
    SumMask r = 0;
    while (m) {
      const int x = std::countr_zero(m);
      m &= m - 1;
      r |= SumMask{1} << group.add(x, g);
    }
    return r;
  }

  // Invariant: the partial sequence is zero-sum free, `sums` is its Sigma.
  void run(std::size_t i, SumMask sums, Element total) {
    if (i == elems.size()) return;
    run(i + 1, sums, total);
    const Element g = elems[i];
    for (int m = 1;; ++m) {
      sums |= shift(sums, g) | (SumMask{1} << g);
      total = group.add(total, g);
      counts[g] = m;
      if (sums & 1) {
        // The previous partial sequence was zero-sum free, so a zero total
        // makes the current one minimal; otherwise every extension is dead.
        if (total == 0) out.emplace_back(group, counts);
        break;
      }
      run(i + 1, sums, total);
    }
    counts[g] = 0;
  }
};

}  // namespace detail

/// DFS over multiplicity vectors in canonical element order. Branches stop as
/// soon as the partial sequence stops being zero-sum free, so each atom is
/// produced exactly once. Root branches (multiplicity of the first element)
/// run as independent tasks.
inline AtomCatalog enumerate_atoms(const FiniteAbelianGroup& g, std::span<const Element> g0, int threads = 1) {
  if (g.order() > 64) throw ResourceError("atom enumeration is limited to |G| <= 64");
  AtomCatalog cat{g, normalize_subset(g, g0), {}, 0};
  const auto& elems = cat.subset;
  if (elems.empty()) return cat;

  const Element first = elems.front();
  const int roots = g.element_order(first);  // multiplicities 0 .. ord(first)
  std::vector<std::vector<Sequence>> parts(static_cast<std::size_t>(roots) + 1);
  parallel_for(parts.size(), threads, [&](std::size_t m) {
    detail::AtomSearch s{g, elems, std::vector<int>(g.order(), 0), parts[m]};
    detail::SumMask sums = 0;
    Element total = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      sums |= s.shift(sums, first) | (detail::SumMask{1} << first);
      total = g.add(total, first);
      if ((sums & 1) && j < m) return;
    }
    s.counts[first] = static_cast<int>(m);
    if (sums & 1) {
      if (total == 0) parts[m].emplace_back(g, s.counts);
      return;
    }
    s.run(1, sums, total);
  });
  for (auto& p : parts)
    for (auto& a : p) cat.atoms.push_back(std::move(a));
  std::sort(cat.atoms.begin(), cat.atoms.end());
  for (const auto& a : cat.atoms) cat.davenport = std::max(cat.davenport, a.size());
  return cat;
}

inline AtomCatalog enumerate_atoms(const FiniteAbelianGroup& g, int threads = 1) {
  const auto all = nonzero_elements(g);
  return enumerate_atoms(g, all, threads);
}

/// Davenport constant D(G) = max length over atoms of G \ {0}.
inline int davenport_constant(const FiniteAbelianGroup& g) { return std::max(1, enumerate_atoms(g).davenport); }

// ---------------------------------------------------------------------------
// C2 + C4 classification

struct ClassificationReport {
  Element e = 0;
  Element g = 0;
  std::vector<std::pair<std::string, int>> class_sizes;  // in listing order
  std::vector<Sequence> unclassified;                    // enumerated, in no class
  std::vector<Sequence> missing;                         // listed, not enumerated
  int total = 0;
  bool ok() const { return unclassified.empty() && missing.empty(); }
};

/// The explicit classes of atoms over C2+C4 for a basis (e, g), ord e = 2, ord g = 4.
inline std::vector<std::pair<std::string, std::vector<Sequence>>> c2c4_atom_classes(const FiniteAbelianGroup& grp,
                                                                                   Element e, Element g) {
  auto el = [&](int a, int b) { return grp.add(grp.multiple(a, e), grp.multiple(b, g)); };
  auto seq = [&](std::initializer_list<std::pair<Element, int>> t) { return Sequence::of(grp, t); };
  const Element E = el(1, 0), G = el(0, 1), mG = el(0, -1), G2 = el(0, 2), E2 = el(1, 2), EpG = el(1, 1),
                EmG = el(1, -1);
  return {
      {"S2^1", {seq({{E, 2}}), seq({{E2, 2}})}},
      {"S2^2", {seq({{G2, 2}})}},
      {"S2^3", {seq({{G, 1}, {mG, 1}}), seq({{EpG, 1}, {EmG, 1}})}},
      {"S3^1", {seq({{E, 1}, {G2, 1}, {E2, 1}})}},
      {"S3^2", {seq({{G, 2}, {G2, 1}}), seq({{mG, 2}, {G2, 1}}), seq({{EpG, 2}, {G2, 1}}), seq({{EmG, 2}, {G2, 1}})}},
      {"S3^3",
       {seq({{E, 1}, {G, 1}, {EmG, 1}}), seq({{E, 1}, {mG, 1}, {EpG, 1}}), seq({{E2, 1}, {G, 1}, {EpG, 1}}),
        seq({{E2, 1}, {mG, 1}, {EmG, 1}})}},
      {"S4^1", {seq({{G, 4}}), seq({{mG, 4}}), seq({{EpG, 4}}), seq({{EmG, 4}})}},
      {"S4^2",
       {seq({{G, 2}, {EpG, 2}}), seq({{mG, 2}, {EmG, 2}}), seq({{G, 2}, {EmG, 2}}), seq({{mG, 2}, {EpG, 2}})}},
      {"S4^3",
       {seq({{E, 1}, {G, 2}, {E2, 1}}), seq({{E, 1}, {EpG, 2}, {E2, 1}}), seq({{E, 1}, {mG, 2}, {E2, 1}}),
        seq({{E, 1}, {EmG, 2}, {E2, 1}})}},
      {"S4^4",
       {seq({{E, 1}, {G, 1}, {G2, 1}, {EpG, 1}}), seq({{E, 1}, {mG, 1}, {G2, 1}, {EmG, 1}}),
        seq({{E2, 1}, {G, 1}, {G2, 1}, {EmG, 1}}), seq({{E2, 1}, {mG, 1}, {G2, 1}, {EpG, 1}})}},
      {"S5",
       {seq({{E, 1}, {G, 3}, {EpG, 1}}), seq({{E, 1}, {mG, 3}, {EmG, 1}}), seq({{E, 1}, {EpG, 3}, {G, 1}}),
        seq({{E, 1}, {EmG, 3}, {mG, 1}}), seq({{E2, 1}, {G, 3}, {EmG, 1}}), seq({{E2, 1}, {mG, 3}, {EpG, 1}}),
        seq({{E2, 1}, {EpG, 3}, {mG, 1}}), seq({{E2, 1}, {EmG, 3}, {G, 1}})}},
  };
}

/// Partitions the catalog of G \ {0} over C2+C4 into the explicit classes.
/// The basis is the first order-2 element outside 2G and the first order-4 element.
inline ClassificationReport check_classification_c2c4(const AtomCatalog& cat) {
  const auto& grp = cat.group;
  if (grp.invariant_factors() != std::vector<int>{2, 4}) throw DomainError("classification requires C2xC4");
  ClassificationReport rep;
  bool have_e = false, have_g = false;
  for (Element x = 1; x < grp.order(); ++x) {
    const bool in_2g = x == grp.multiple(2, grp.element({0, 1}));
    if (!have_e && grp.element_order(x) == 2 && !in_2g) rep.e = x, have_e = true;
    if (!have_g && grp.element_order(x) == 4) rep.g = x, have_g = true;
  }
  std::vector<char> seen(cat.atoms.size(), 0);
  for (auto& [name, members] : c2c4_atom_classes(grp, rep.e, rep.g)) {
    int found = 0;
    for (const auto& s : members) {
      auto it = std::find(cat.atoms.begin(), cat.atoms.end(), s);
      if (it == cat.atoms.end()) {
        rep.missing.push_back(s);
        continue;
      }
      seen[it - cat.atoms.begin()] = 1;
      ++found;
    }
    rep.class_sizes.emplace_back(name, found);
    rep.total += found;
  }
  for (std::size_t i = 0; i < cat.atoms.size(); ++i)
    if (!seen[i]) rep.unclassified.push_back(cat.atoms[i]);
  return rep;
}

// ---------------------------------------------------------------------------
// Half-factoriality

/// G0 is half-factorial iff every atom over G0 has cross number 1.
inline bool is_half_factorial(const FiniteAbelianGroup& g, std::span<const Element> g0) {
  const auto cat = enumerate_atoms(g, g0);
  return std::all_of(cat.atoms.begin(), cat.atoms.end(),
                     [](const Sequence& a) { return cross_number(a) == Rational(1); });
}

/// A half-factorial G1 within a non-half-factorial G0 with B(G1) nontrivial.
/// Searches subsets by increasing size, lexicographically within a size.
inline std::vector<Element> extract_half_factorial_subset(const FiniteAbelianGroup& g, std::span<const Element> g0) {
  const auto elems = normalize_subset(g, g0);
  if (is_half_factorial(g, elems)) throw DomainError("subset is already half-factorial");
  const int n = static_cast<int>(elems.size());
  for (int size = 1; size <= n; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Element> sub;
      for (int i : idx) sub.push_back(elems[i]);
      if (!enumerate_atoms(g, sub).atoms.empty() && is_half_factorial(g, sub)) return sub;
      int p = size - 1;
      while (p >= 0 && idx[p] == n - size + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int i = p + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw DomainError("no half-factorial subset found");
}

}  // namespace zerolen
