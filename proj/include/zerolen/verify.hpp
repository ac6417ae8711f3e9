#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "families.hpp"
#include "lengths.hpp"
#include "system.hpp"

namespace zerolen {

enum class VerifyStatus { pass, fail, hypothesis_not_met };

inline const char* status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass:
      return "pass";
    case VerifyStatus::fail:
      return "fail";
    default:
      return "hypothesis-not-met";
  }
}

struct Counterexample {
  std::string group;
  std::string sequence;  // literal accepted by parse_sequence
  LengthSet computed;
  std::string expected;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct VerificationReport {
  std::string target;
  std::map<std::string, long long> bounds;
  VerifyStatus status = VerifyStatus::pass;
  std::vector<CheckResult> checks;
  std::vector<Counterexample> counterexamples;
  std::uint64_t nodes = 0;
  std::size_t sets_checked = 0;
  double seconds = 0;

  void add(CheckResult c) {
    if (!c.pass) status = VerifyStatus::fail;
    checks.push_back(std::move(c));
  }
};

struct VerifyOptions {
  int bound = 0;  // 0: per-group default
  std::map<std::string, int> group_bounds;  // canonical group name -> sweep bound
  int threads = 1;
  std::uint64_t max_nodes = 0;
  std::size_t max_counterexamples = 20;
};

namespace detail {

struct GroupPlan {
  std::string group;
  int bound;                  // soundness sweep bound
  std::vector<int> expected_delta;
};

inline std::vector<GroupPlan> plans_for(const std::string& target) {
  if (target == "P33")
    return {{"C3", 18, {1}}, {"C2xC2", 18, {1}}, {"C4", 16, {1, 2}}, {"C2xC2xC2", 16, {1, 2}}};
  if (target == "T41") return {{"C3xC3", 16, {1}}};
  if (target == "T46") return {{"C5", 20, {1, 2, 3}}};
  if (target == "T47") return {{"C2xC4", 16, {1, 2}}};
  if (target == "T48") return {{"C2xC2xC2xC2", 12, {1, 2, 3}}};
  return {};
}

inline std::string set_list(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

/// Every set of the bounded system matches some family row of the group's target.
inline void soundness(VerificationReport& rep, const LengthEngine& eng, const BoundedSystem& sys,
                      const VerifyOptions& opt, const std::vector<int>& expected_delta) {
  const auto name = eng.group().name();
  std::size_t unmatched = 0;
  for (const auto& e : sys.entries) {
    ++rep.sets_checked;
    if (!match_family(eng.group(), e.set).empty()) continue;
    ++unmatched;
    if (rep.counterexamples.size() < opt.max_counterexamples)
      rep.counterexamples.push_back({name, e.witness.str(), e.set, "no family of " + target_for(eng.group())});
  }
  rep.add({"soundness " + name + " N=" + std::to_string(sys.bound), unmatched == 0,
           std::to_string(sys.entries.size()) + " sets, " + std::to_string(unmatched) + " unmatched"});
  const auto d = observed_delta(sys);
  rep.add({"distances " + name, d == expected_delta, "observed " + set_list(d) + ", expected " + set_list(expected_delta)});
}

/// Witness L equals the member for y <= 4, k <= 3 (endpoint rows: every
/// admissible endpoint for k <= 3).
inline void completeness(VerificationReport& rep, const LengthEngine& eng, const VerifyOptions& opt) {
  const auto& g = eng.group();
  for (const FamilyInfo* f : families_of(g)) {
    std::size_t checked = 0, bad = 0;
    const int ymax = f->uses_y ? (f->yk_ok ? 17 : 4) : 0;
    const int kmax = f->uses_k ? 3 : 0;
    for (int y = 0; y <= ymax; ++y)
      for (int k = 0; k <= kmax; ++k) {
        if (!in_domain(*f, y, k)) continue;
        const auto w = f->witness(g, y, k);
        const auto l = eng.length_set(w);
        const auto want = f->member(y, k);
        ++checked;
        if (l == want) continue;
        ++bad;
        if (rep.counterexamples.size() < opt.max_counterexamples)
          rep.counterexamples.push_back({g.name(), w.str(), l, FamilyDescriptor{f->id, y, k}.str() + " = " + want.str()});
      }
    rep.add({"completeness " + f->id + " over " + g.name(), bad == 0,
             std::to_string(checked) + " witnesses, " + std::to_string(bad) + " mismatched"});
  }
}

inline void presentation(VerificationReport& rep, const std::string& id, int bound) {
  const auto c = presentation_equivalence_check(presentation_pair(id), bound);
  rep.add({"presentations " + id + " max<=" + std::to_string(bound), c.equal,
           std::to_string(c.count) + " sets; " + std::to_string(c.only_first.size()) + " only in first, " +
               std::to_string(c.only_second.size()) + " only in second"});
}

}  // namespace detail

/// Positive-evidence certificates for the groups of order >= 3 with D <= 5.
/// C3, C2xC2 and C4 are complete up to max 9 on their own; the others get
/// small subsets with 0 at larger bounds so that long shifted intervals show up.
inline std::vector<GroupCertificate> intersection_certificates(int threads = 1, std::uint64_t max_nodes = 0) {
  std::vector<GroupCertificate> out;
  auto add = [&](const std::string& name, int full_bound, std::vector<std::vector<int>> extra, int extra_bound) {
    const auto g = parse_group(name);
    LengthEngine eng(g, {max_nodes, threads});
    GroupCertificate c;
    c.systems.push_back(bounded_system(eng, full_bound, threads));
    if (!extra.empty()) {
      std::vector<Element> sub;
      for (const auto& co : extra) sub.push_back(g.element(co));
      c.systems.push_back(bounded_system(eng, sub, extra_bound, threads));
    }
    out.push_back(std::move(c));
  };
  add("C3", 27, {}, 0);
  add("C2xC2", 27, {}, 0);
  add("C4", 36, {}, 0);
  add("C2xC2xC2", 16, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, 27);
  add("C5", 20, {{0}, {1}, {2}}, 30);
  add("C2xC4", 16, {{0, 0}, {1, 0}, {0, 2}, {1, 2}}, 27);
  add("C3xC3", 16, {{0, 0}, {1, 0}, {2, 0}}, 27);
  add("C2xC2xC2xC2", 12, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}}, 27);
  return out;
}

/// Targets: P33, T36, T41, T46, T47, T48, C24INT.
inline VerificationReport verify_target(const std::string& target, const VerifyOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.target = target;
  if (target == "P33" || target == "T41" || target == "T46" || target == "T47" || target == "T48") {
    for (const auto& p : detail::plans_for(target)) {
      const auto g = parse_group(p.group);
      LengthEngine eng(g, {opt.max_nodes, opt.threads});
      int n = p.bound;
      if (auto it = opt.group_bounds.find(p.group); it != opt.group_bounds.end()) n = it->second;
      if (opt.bound) n = opt.bound;
      rep.bounds["N " + p.group] = n;
      const auto sys = bounded_system(eng, n, opt.threads);
      detail::soundness(rep, eng, sys, opt, p.expected_delta);
      detail::completeness(rep, eng, opt);
      rep.nodes += eng.memo_size();
    }
    if (target == "T41") detail::presentation(rep, "T41", 30);
    if (target == "T47") detail::presentation(rep, "T47-L2", 30);
    if (target == "T48") detail::presentation(rep, "T48-L3", 30);
  } else if (target == "T36") {
    const int kmax = opt.bound ? opt.bound : 5;
    rep.bounds["k"] = kmax;
    for (int p : {3, 5}) {
      const auto g = make_group({p});
      LengthEngine eng(g, {opt.max_nodes, opt.threads});
      const auto base = Sequence::of(g, {{2, p}, {1, p}});
      bool ok = true;
      for (int k = 1; k <= kmax; ++k) {
        const auto l = eng.length_set(base.power(k));
        if (l != LengthSet::interval(2 * k, 3 * k)) {
          ok = false;
          rep.counterexamples.push_back({g.name(), base.power(k).str(), l, LengthSet::interval(2 * k, 3 * k).str()});
        }
      }
      rep.add({"((2g)^p g^p)^k over C" + std::to_string(p), ok, "k = 1.." + std::to_string(kmax)});
      rep.nodes += eng.memo_size();
    }
    const int m = 9;
    rep.bounds["max L"] = m;
    const auto certs = intersection_certificates(opt.threads, opt.max_nodes);
    const auto r = bounded_intersection(certs, m);
    std::vector<LengthSet> want;
    for (int y = 0; y <= m; ++y)
      for (int k = 0; y + 3 * k <= m; ++k) want.push_back(LengthSet::interval(y + 2 * k, y + 3 * k));
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    rep.sets_checked += r.sets.size();
    rep.add({"intersection of 8 groups, max<=9", r.sets == want && r.exact,
             std::to_string(r.sets.size()) + " sets (expected " + std::to_string(want.size()) + ")" +
                 (r.exact ? ", exact" : ", not certified exact")});
  } else if (target == "C24INT") {
    const int hi = opt.bound ? opt.bound : 10;
    rep.bounds["l2"] = hi;
    const auto g = make_group({2, 2, 2, 2});
    LengthEngine eng(g, {opt.max_nodes, opt.threads});
    std::size_t bad = 0, realized = 0;
    for (int l1 = 2; l1 <= hi; ++l1)
      for (int l2 = l1; l2 <= hi; ++l2) {
        const bool crit = interval_criterion_c24(l1, l2);
        const auto w = c24_interval_witness(l1, l2);
        const auto want = LengthSet::interval(l1, l2);
        ++rep.sets_checked;
        if (crit != w.has_value()) {
          ++bad;
          continue;
        }
        if (!w) continue;
        const auto l = eng.length_set(*w);
        if (l != want) {
          ++bad;
          if (rep.counterexamples.size() < opt.max_counterexamples)
            rep.counterexamples.push_back({g.name(), w->str(), l, want.str()});
        } else {
          ++realized;
        }
      }
    rep.add({"interval witnesses l1<=l2<=" + std::to_string(hi), bad == 0,
             std::to_string(realized) + " realized, " + std::to_string(bad) + " bad"});
    const auto sys = bounded_system(eng, 12, opt.threads);
    rep.bounds["N"] = 12;
    const auto l25 = LengthSet::interval(2, 5);
    rep.add({"[2,5] absent at N=12", !sys.contains(l25) && sys.complete_min >= 2,
             "complete for min L <= " + std::to_string(sys.complete_min)});
    rep.nodes += eng.memo_size();
  } else {
    throw DomainError("unknown verification target '" + target + "' (known: P33, T36, T41, T46, T47, T48, C24INT)");
  }
  if (!rep.counterexamples.empty()) rep.status = VerifyStatus::fail;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace zerolen
