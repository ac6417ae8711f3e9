#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "atoms.hpp"
#include "errors.hpp"
#include "length_set.hpp"
#include "sequence.hpp"

namespace zerolen {

struct EngineOptions {
  /// Cap on memo nodes; 0 reads ZEROLEN_MAX_NODES, and unset means unlimited.
  std::uint64_t max_nodes = 0;
  int threads = 1;
};

inline std::uint64_t max_nodes_from_env() {
  const char* s = std::getenv("ZEROLEN_MAX_NODES");
  if (!s || !*s) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw DomainError("ZEROLEN_MAX_NODES must be a nonnegative integer");
  return v;
}

/// Exact sets of lengths in B(G) with a shared memo.
///
/// Zeros are stripped first (each 0 is its own atom). For the rest, every
/// factorization of B contains an atom through a fixed pivot p in supp(B), so
///   L(B) = union over atoms A | B with p in supp(A) of 1 + L(B / A),
/// which depends on B alone and memoizes cleanly. The pivot is the support
/// element lying in the fewest atoms. Length sets in the recursion are 64-bit
/// masks, so |B without zeros| is limited to 127.
///
/// Thread-safe: the memo is sharded and inserts are idempotent.
class LengthEngine {
 public:
  static constexpr int kMaxCoreLength = 127;

  explicit LengthEngine(FiniteAbelianGroup g, EngineOptions opts = {})
      : group_(std::move(g)), catalog_(enumerate_atoms(group_, opts.threads)) {
    max_nodes_ = opts.max_nodes ? opts.max_nodes : max_nodes_from_env();
    atoms_with_.resize(group_.order());
    for (const auto& a : catalog_.atoms) {
      SparseAtom sa;
      for (auto [x, m] : a.key()) sa.terms.emplace_back(x, m);
      const std::size_t id = atoms_.size();
      atoms_.push_back(std::move(sa));
      for (auto [x, m] : a.key()) atoms_with_[x].push_back(id);
    }
  }

  const FiniteAbelianGroup& group() const { return group_; }
  const AtomCatalog& catalog() const { return catalog_; }

  LengthSet length_set(const Sequence& b) const {
    if (!(b.group() == group_)) throw DomainError("sequence is over a different group");
    if (sigma(b) != 0) throw DomainError("length_set: sequence " + b.str() + " is not zero-sum");
    const int zeros = b.count(0);
    if (b.size() - zeros > kMaxCoreLength)
      throw ResourceError("length_set: more than " + std::to_string(kMaxCoreLength) + " nonzero terms");
    std::string key(group_.order() - 1, '\0');
    for (Element x = 1; x < group_.order(); ++x) key[x - 1] = static_cast<char>(b.count(x));
    return LengthSet::from_mask(mask_of(key), zeros);
  }

  /// Core entry point for sweeps: `key[x-1]` is the multiplicity of x != 0,
  /// the sequence must be zero-sum. Bit k of the result <=> k in L.
  std::uint64_t mask_of(std::string& key) const {
    bool empty = true;
    for (char c : key)
      if (c) {
        empty = false;
        break;
      }
    if (empty) return 1;
    Shard& sh = shard(key);
    {
      std::lock_guard lock(sh.mutex);
      if (auto it = sh.map.find(key); it != sh.map.end()) return it->second;
    }
    if (max_nodes_ && nodes_.load(std::memory_order_relaxed) >= max_nodes_)
      throw ResourceError("length engine node cap reached (" + std::to_string(max_nodes_) + " nodes)");
    nodes_.fetch_add(1, std::memory_order_relaxed);

    Element pivot = -1;
    std::size_t best = SIZE_MAX;
    for (Element x = 1; x < group_.order(); ++x)
      if (key[x - 1] && atoms_with_[x].size() < best) best = atoms_with_[x].size(), pivot = x;

    std::uint64_t out = 0;
    for (std::size_t id : atoms_with_[pivot]) {
      const auto& terms = atoms_[id].terms;
      bool fits = true;
      for (auto [x, m] : terms)
        if (key[x - 1] < m) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (auto [x, m] : terms) key[x - 1] = static_cast<char>(key[x - 1] - m);
      const std::uint64_t sub = mask_of(key);
      for (auto [x, m] : terms) key[x - 1] = static_cast<char>(key[x - 1] + m);
      out |= sub << 1;
    }
    if (!out) throw std::logic_error("length engine: zero-sum sequence without an atom factor");
    std::lock_guard lock(sh.mutex);
    sh.map.emplace(key, out);
    return out;
  }

  /// Number of memo entries computed so far.
  std::uint64_t nodes() const { return nodes_.load(); }

  std::size_t memo_size() const {
    std::size_t n = 0;
    for (auto& s : shards_) {
      std::lock_guard lock(s.mutex);
      n += s.map.size();
    }
    return n;
  }

 private:
  struct SparseAtom {
    std::vector<std::pair<Element, int>> terms;
  };
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::string, std::uint64_t> map;
  };
  static constexpr std::size_t kShards = 32;

  Shard& shard(const std::string& key) const { return shards_[std::hash<std::string>{}(key) % kShards]; }

  FiniteAbelianGroup group_;
  AtomCatalog catalog_;
  std::vector<SparseAtom> atoms_;
  std::vector<std::vector<std::size_t>> atoms_with_;
  std::uint64_t max_nodes_ = 0;
  mutable std::atomic<std::uint64_t> nodes_{0};
  mutable std::array<Shard, kShards> shards_;
};

/// 1 + max L(B / A1) for a length-2 atom A1 | B; checked against max L(B).
inline int max_length_with_length2_atom(const LengthEngine& engine, const Sequence& b, const Sequence& a1) {
  if (a1.size() != 2 || !is_atom(a1)) throw DomainError("A1 must be an atom of length 2");
  if (!divides(a1, b)) throw DomainError("A1 does not divide B");
  const int via = 1 + engine.length_set(divide(b, a1)).max();
  const int direct = engine.length_set(b).max();
  if (via != direct)
    throw std::logic_error("max L(B) = " + std::to_string(direct) + " but 1 + max L(B/A1) = " + std::to_string(via));
  return via;
}

}  // namespace zerolen
