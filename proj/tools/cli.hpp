#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zerolen/zerolen.hpp"

namespace zerolen::cli {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kResource = 3, kInternal = 4 };

/// "{2,4,5}", "2,4,5" or "[2,5]" (closed interval).
inline LengthSet parse_length_set(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
    const auto comma = t.find(',');
    if (comma == std::string::npos) throw ParseError("interval needs two endpoints", 0);
    try {
      return LengthSet::interval(std::stoi(t.substr(1, comma - 1)), std::stoi(t.substr(comma + 1, t.size() - comma - 2)));
    } catch (const std::logic_error&) {
      throw ParseError("bad interval '" + text + "'", 0);
    }
  }
  std::size_t i = 0;
  if (!t.empty() && t.front() == '{') {
    if (t.back() != '}') throw ParseError("missing '}'", t.size());
    t = t.substr(1, t.size() - 2);
    i = 0;
  }
  std::vector<int> v;
  while (i < t.size()) {
    const std::size_t start = i;
    int x = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
      x = x * 10 + (t[i++] - '0');
      if (x > 100000) throw ParseError("length too large", start);
    }
    if (i == start) throw ParseError("expected a nonnegative integer", start);
    v.push_back(x);
    if (i < t.size()) {
      if (t[i] != ',') throw ParseError("expected ','", i);
      ++i;
    }
  }
  if (v.empty()) throw ParseError("empty length set", 0);
  return LengthSet(std::move(v));
}

inline Json to_json(const LengthSet& l) { return Json(l.values()); }
inline Json to_json(const std::vector<int>& v) { return Json(v); }

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

/// key=value lines; '#' starts a comment.
struct Config {
  std::map<std::string, std::string> values;

  static Config load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file '" + path + "'");
    Config c;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError(path + ":" + std::to_string(n) + ": expected key=value", 0);
      c.values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return c;
  }

  std::optional<long long> integer(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("config key '" + key + "' needs an integer, got '" + it->second + "'", 0);
    }
  }
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Sets of lengths over finite abelian groups and numerical monoids", "zerolen"};
    app.require_subcommand(1);
    app.add_flag("--json", json_, "JSON on stdout");
    app.add_option("--threads", threads_, "worker threads (default: hardware concurrency)")->check(CLI::Range(1, 1024));
    app.add_option("--config", config_path_, "key=value file: threads, max_nodes, bound.<group>");
    app.add_option("--max-nodes", max_nodes_, "cap on length-engine memo entries (also ZEROLEN_MAX_NODES)");

    std::string group, seq, subset, group_b, id, text, gens, cse, lset;
    int bound = 0, bound_b = 0, y = 0, k = 0, window = 10, kk = 2;
    long long search = 120;
    bool counts = false, list = false, csv = false, emit_witness = false, check = false;
    std::vector<long long> values;
    std::vector<std::string> groups;

    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
      auto* s = parent->add_subcommand(name, desc);
      s->fallthrough();
      return s;
    };

    auto* atoms = sub(&app, "atoms", "enumerate minimal zero-sum sequences");
    atoms->add_option("group", group, "group, e.g. 2x4")->required();
    atoms->add_option("--subset", subset, "elements of G0 as a sequence literal, e.g. \"(1,0)*(0,1)\"");
    atoms->add_flag("--counts", counts, "print only atom counts by length");
    atoms->add_flag("--list", list, "list all atoms");

    auto* lengths = sub(&app, "lengths", "set of lengths of a zero-sum sequence");
    lengths->add_option("group", group)->required();
    lengths->add_option("sequence", seq, "e.g. \"1^5*4^5\" or \"(1,0)^2*(0,1)^2\"")->required();

    auto* system = sub(&app, "system", "bounded system of sets of lengths");
    system->add_option("group", group)->required();
    system->add_option("--max-len,-N", bound, "largest |B| enumerated (default per group)");
    system->add_option("--subset", subset, "restrict to a subset G0 (sequence literal)");
    system->add_flag("--csv", csv, "CSV output");
    system->add_flag("--emit-witness", emit_witness, "include a minimal realizing sequence per set");

    auto* dstar = sub(&app, "delta-star", "min Delta(G0) over subsets G0 (|G| <= 16)");
    dstar->add_option("group", group)->required();
    dstar->add_option("--max-len,-N", bound);

    auto* rhok = sub(&app, "rho-k", "rho_k(G) with a realizing sequence");
    rhok->add_option("group", group)->required();
    rhok->add_option("--k", kk)->check(CLI::Range(2, 64));
    rhok->add_option("--max-len,-N", bound, "default k*D(G)");

    auto* compare = sub(&app, "compare", "bounded inclusion between two systems");
    compare->add_option("group_a", group)->required();
    compare->add_option("group_b", group_b)->required();
    compare->add_option("--bound-a", bound);
    compare->add_option("--bound-b", bound_b);

    auto* intersect = sub(&app, "intersect", "bounded intersection of systems");
    intersect->add_option("groups", groups, "groups (default: the eight groups of order >= 3 with D <= 5)");
    intersect->add_option("--max-L", bound, "compare sets with max L at most this (default 9)");

    auto* family = sub(&app, "family", "closed-form families");
    family->require_subcommand(1);
    auto* flist = sub(family, "list", "all family rows");
    auto* fmember = sub(family, "member", "member set of a family");
    fmember->add_option("id", id)->required();
    fmember->add_option("--y", y);
    fmember->add_option("--k", k);
    auto* fwitness = sub(family, "witness", "witness sequence of a family member");
    fwitness->add_option("id", id)->required();
    fwitness->add_option("--y", y);
    fwitness->add_option("--k", k);
    fwitness->add_option("--group", group_b, "group (rows shared by several groups)");
    fwitness->add_flag("--check", check, "compute L of the witness and compare");
    auto* fmatch = sub(family, "match", "families containing a set");
    fmatch->add_option("group", group)->required();
    fmatch->add_option("set", lset, "e.g. {2,4,5} or [2,5]")->required();

    auto* verify = sub(&app, "verify", "soundness + completeness sweep of a closed form");
    verify->add_option("id", id, "P33, T36, T41, T46, T47, T48, C24INT")->required();
    verify->add_option("--bound", bound, "sweep bound (overrides config and defaults)");

    auto* nm = sub(&app, "nm", "numerical monoids");
    nm->require_subcommand(1);
    auto* nlen = sub(nm, "lengths", "L(a)");
    nlen->add_option("generators", gens, "e.g. 2,3")->required();
    nlen->add_option("values", values)->required();
    auto* ninv = sub(nm, "invariants", "elasticity and min distance: formula vs enumeration");
    ninv->add_option("generators", gens)->required();
    ninv->add_option("--bound", bound, "enumerate a up to this (default 200)");
    auto* nM = sub(nm, "M", "strongly primary exponent M(a)");
    nM->add_option("generators", gens)->required();
    nM->add_option("values", values)->required();
    auto* ngap = sub(nm, "verify-gap", "rho(L(a)) in {1} u [beta, oo) for a <= bound");
    ngap->add_option("generators", gens)->required();
    ngap->add_option("--bound", bound, "default 200");
    auto* n56 = sub(nm, "verify-56", "y_L and bounded non-realizability of y + L in a product");
    n56->add_option("factors", gens, "generator lists separated by ';', e.g. \"2,3;2,3\"")->required();
    n56->add_option("--L", lset, "length set, e.g. 2,3")->required();
    n56->add_option("--search", search, "component bound (default 120)");
    n56->add_option("--window", window, "y in [y_L, y_L + window] (default 10)");
    auto* n57 = sub(nm, "verify-57", "free factor times D1 against the small-group systems");
    n57->add_option("generators", gens)->required();
    n57->add_option("--case", cse, "b2 or b3")->required()->check(CLI::IsMember({"b2", "b3"}));
    n57->add_option("--bound", bound, "default 20");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsage;
    }

    try {
      settle_config(app);
      if (atoms->parsed()) return cmd_atoms(group, subset, counts, list);
      if (lengths->parsed()) return cmd_lengths(group, seq);
      if (system->parsed()) return cmd_system(group, bound, subset, csv, emit_witness);
      if (dstar->parsed()) return cmd_delta_star(group, bound);
      if (rhok->parsed()) return cmd_rho_k(group, kk, bound);
      if (compare->parsed()) return cmd_compare(group, group_b, bound, bound_b);
      if (intersect->parsed()) return cmd_intersect(groups, bound ? bound : 9);
      if (flist->parsed()) return cmd_family_list();
      if (fmember->parsed()) return cmd_family_member(id, y, k);
      if (fwitness->parsed()) return cmd_family_witness(id, y, k, group_b, check);
      if (fmatch->parsed()) return cmd_family_match(group, lset);
      if (verify->parsed()) return cmd_verify(id, bound);
      if (nlen->parsed()) return cmd_nm_lengths(gens, values);
      if (ninv->parsed()) return cmd_nm_invariants(gens, bound ? bound : 200);
      if (nM->parsed()) return cmd_nm_M(gens, values);
      if (ngap->parsed()) return cmd_nm_gap(gens, bound ? bound : 200);
      if (n56->parsed()) return cmd_nm_56(gens, lset, search, window);
      if (n57->parsed()) return cmd_nm_57(gens, cse, bound ? bound : 20);
    } catch (const ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const DomainError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const ResourceError& e) {
      err_ << "resource limit: " << e.what() << "\n";
      return kResource;
    } catch (const std::exception& e) {
      err_ << "internal error: " << e.what() << "\n";
      return kInternal;
    }
    return kUsage;
  }

 private:
  // ---------------------------------------------------------------- helpers

  void settle_config(const CLI::App& app) {
    if (!config_path_.empty()) config_ = Config::load(config_path_);
    if (!app.get_option("--threads")->count()) {
      if (auto t = config_.integer("threads")) {
        if (*t < 1 || *t > 1024) throw DomainError("config threads must be in [1,1024]");
        threads_ = static_cast<int>(*t);
      }
    }
    if (!app.get_option("--max-nodes")->count())
      if (auto n = config_.integer("max_nodes")) max_nodes_ = static_cast<std::uint64_t>(std::max(0LL, *n));
  }

  int group_bound(const FiniteAbelianGroup& g, int flag) const {
    if (flag > 0) return flag;
    if (auto b = config_.integer("bound." + g.name())) return static_cast<int>(*b);
    return default_bound(g);
  }

  EngineOptions engine_options() const { return {max_nodes_, threads_}; }

  std::vector<Element> subset_of(const FiniteAbelianGroup& g, const std::string& text) const {
    if (text.empty()) return nonzero_elements(g);
    return parse_sequence(g, text).support();
  }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  static Json entries_json(const std::vector<SystemEntry>& v, std::size_t limit) {
    Json a = Json::array();
    for (std::size_t i = 0; i < v.size() && i < limit; ++i)
      a.push_back({{"lengths", to_json(v[i].set)}, {"witness", v[i].witness.str()}});
    return a;
  }

  // --------------------------------------------------------------- commands

  int cmd_atoms(const std::string& gtext, const std::string& subset, bool counts, bool list) {
    const auto g = parse_group(gtext);
    const auto sub = subset_of(g, subset);
    const auto cat = enumerate_atoms(g, sub, threads_);
    const auto by_len = cat.counts_by_length();
    std::vector<int> cv;
    for (auto [len, n] : by_len) cv.push_back(n);
    if (json_) {
      Json j{{"group", g.name()}, {"subset_size", cat.subset.size()}, {"davenport", cat.davenport},
             {"atoms", cat.atoms.size()}};
      Json c = Json::object();
      for (auto [len, n] : by_len) c[std::to_string(len)] = n;
      j["counts"] = c;
      if (list) {
        Json a = Json::array();
        for (const auto& s : cat.atoms) a.push_back(s.str());
        j["list"] = a;
      }
      emit(j);
      return kOk;
    }
    if (counts) {
      out_ << join(cv) << "\n";
    } else {
      out_ << "group " << g.name() << ", |G0| = " << cat.subset.size() << "\n";
      out_ << "D(G0) = " << cat.davenport << ", atoms = " << cat.atoms.size() << "\n";
      out_ << "length  count\n";
      for (auto [len, n] : by_len) out_ << std::setw(6) << len << "  " << n << "\n";
    }
    if (list)
      for (const auto& s : cat.atoms) out_ << s.str() << "\n";
    return kOk;
  }

  int cmd_lengths(const std::string& gtext, const std::string& seq) {
    const auto g = parse_group(gtext);
    const auto b = parse_sequence(g, seq);
    LengthEngine eng(g, engine_options());
    const auto l = eng.length_set(b);
    if (json_) {
      emit({{"group", g.name()}, {"sequence", b.str()}, {"lengths", to_json(l)}, {"min", l.min()}, {"max", l.max()},
            {"delta", to_json(delta(l))}, {"rho", rho(l).str()}});
      return kOk;
    }
    out_ << l.str() << "\n";
    out_ << "min " << l.min() << ", max " << l.max() << ", |L| = " << l.size() << "\n";
    out_ << "Delta {" << join(delta(l)) << "}, rho " << rho(l).str() << "\n";
    return kOk;
  }

  int cmd_system(const std::string& gtext, int flag, const std::string& subset, bool csv, bool emit_witness) {
    const auto g = parse_group(gtext);
    const int n = group_bound(g, flag);
    LengthEngine eng(g, engine_options());
    BoundedSystem sys;
    if (subset.empty()) {
      sys = bounded_system(eng, n, threads_);
    } else {
      const auto s = parse_sequence(g, subset).support();
      sys = bounded_system(eng, s, n, threads_);
    }
    const auto d = observed_delta(sys);
    if (json_) {
      Json j{{"group", g.name()}, {"bound", n}, {"davenport", sys.davenport}, {"complete_min", sys.complete_min},
             {"count", sys.entries.size()}, {"delta", to_json(d)}, {"memo_entries", eng.memo_size()}};
      Json a = Json::array();
      for (const auto& e : sys.entries) {
        Json x{{"lengths", to_json(e.set)}};
        if (emit_witness) x["witness"] = e.witness.str();
        a.push_back(x);
      }
      j["sets"] = a;
      emit(j);
      return kOk;
    }
    if (csv) {
      out_ << (emit_witness ? "lengths,witness\n" : "lengths\n");
      for (const auto& e : sys.entries) {
        out_ << '"' << e.set.str() << '"';
        if (emit_witness) out_ << ",\"" << e.witness.str() << '"';
        out_ << "\n";
      }
      return kOk;
    }
    out_ << "system of " << g.name() << ", |B| <= " << n << ": " << sys.entries.size()
         << " sets (complete for min L <= " << sys.complete_min << ")\n";
    out_ << "observed Delta {" << join(d) << "}\n";
    for (const auto& e : sys.entries) {
      out_ << e.set.str();
      if (emit_witness) out_ << "  " << e.witness.str();
      out_ << "\n";
    }
    return kOk;
  }

  int cmd_delta_star(const std::string& gtext, int flag) {
    const auto g = parse_group(gtext);
    const int n = group_bound(g, flag);
    LengthEngine eng(g, engine_options());
    const auto r = delta_star(eng, n, threads_);
    if (json_) {
      Json ex = Json::object();
      for (const auto& [v, s] : r.example_subset) {
        Json a = Json::array();
        for (Element x : s) a.push_back(g.element_str(x));
        ex[std::to_string(v)] = a;
      }
      emit({{"group", g.name()}, {"bound", n}, {"values", to_json(r.values)}, {"observed_delta", to_json(r.observed)},
            {"delta1_envelope", to_json(r.delta1_envelope)}, {"examples", ex}});
      return kOk;
    }
    out_ << "Delta* (bounded, |B| <= " << n << ") of " << g.name() << ": {" << join(r.values) << "}\n";
    out_ << "observed Delta {" << join(r.observed) << "}, Delta_1 envelope {" << join(r.delta1_envelope) << "}\n";
    for (const auto& [v, s] : r.example_subset) {
      out_ << "  " << v << " from G0 = {";
      for (std::size_t i = 0; i < s.size(); ++i) out_ << (i ? "," : "") << g.element_str(s[i]);
      out_ << "}\n";
    }
    return kOk;
  }

  int cmd_rho_k(const std::string& gtext, int k, int flag) {
    const auto g = parse_group(gtext);
    LengthEngine eng(g, engine_options());
    const int n = flag > 0 ? flag : k * std::max(1, eng.catalog().davenport);
    const auto r = rho_k(eng, k, n);
    if (json_) {
      emit({{"group", g.name()}, {"k", k}, {"bound", n}, {"rho_k", r.value}, {"witness", r.witness.str()},
            {"products_checked", r.products_checked}});
      return kOk;
    }
    out_ << "rho_" << k << "(" << g.name() << ") = " << r.value << "\n";
    out_ << "witness " << r.witness.str() << "\n";
    return kOk;
  }

  int cmd_compare(const std::string& ga, const std::string& gb, int fa, int fb) {
    const auto a = parse_group(ga), b = parse_group(gb);
    LengthEngine ea(a, engine_options()), eb(b, engine_options());
    const auto sa = bounded_system(ea, group_bound(a, fa), threads_);
    const auto sb = bounded_system(eb, group_bound(b, fb), threads_);
    const auto r = compare_systems(sa, sb);
    if (json_) {
      emit({{"a", {{"group", a.name()}, {"bound", sa.bound}}},
            {"b", {{"group", b.name()}, {"bound", sb.bound}}},
            {"window_min_L", r.window},
            {"a_in_b", r.a_in_b},
            {"b_in_a", r.b_in_a},
            {"a_not_b", entries_json(r.a_not_b, 50)},
            {"b_not_a", entries_json(r.b_not_a, 50)}});
      return kOk;
    }
    out_ << "comparing sets with min L <= " << r.window << "\n";
    out_ << a.name() << " in " << b.name() << ": " << (r.a_in_b ? "yes" : "no") << "\n";
    out_ << b.name() << " in " << a.name() << ": " << (r.b_in_a ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < r.a_not_b.size() && i < 10; ++i)
      out_ << "  only " << a.name() << ": " << r.a_not_b[i].set.str() << "  " << r.a_not_b[i].witness.str() << "\n";
    for (std::size_t i = 0; i < r.b_not_a.size() && i < 10; ++i)
      out_ << "  only " << b.name() << ": " << r.b_not_a[i].set.str() << "  " << r.b_not_a[i].witness.str() << "\n";
    return kOk;
  }

  int cmd_intersect(const std::vector<std::string>& names, int m) {
    std::vector<GroupCertificate> certs;
    std::vector<std::string> labels;
    if (names.empty()) {
      certs = intersection_certificates(threads_, max_nodes_);
      labels = {"C3", "C2xC2", "C4", "C2xC2xC2", "C5", "C2xC4", "C3xC3", "C2xC2xC2xC2"};
    } else {
      for (const auto& nme : names) {
        const auto g = parse_group(nme);
        LengthEngine eng(g, engine_options());
        GroupCertificate c;
        c.systems.push_back(bounded_system(eng, group_bound(g, 0), threads_));
        certs.push_back(std::move(c));
        labels.push_back(g.name());
      }
    }
    const auto r = bounded_intersection(certs, m);
    if (json_) {
      Json a = Json::array();
      for (const auto& l : r.sets) a.push_back(to_json(l));
      emit({{"groups", labels}, {"max_L", m}, {"exact", r.exact}, {"count", r.sets.size()}, {"sets", a}});
      return kOk;
    }
    out_ << "intersection over " << labels.size() << " groups, max L <= " << m << ": " << r.sets.size() << " sets"
         << (r.exact ? " (exact)" : " (lower bound)") << "\n";
    for (const auto& l : r.sets) out_ << l.str() << "\n";
    return kOk;
  }

  int cmd_family_list() {
    if (json_) {
      Json a = Json::array();
      for (const auto& f : family_table())
        a.push_back({{"id", f.id}, {"target", f.target}, {"groups", f.groups}, {"formula", f.formula},
                     {"domain", f.domain}});
      emit(a);
      return kOk;
    }
    out_ << std::left << std::setw(16) << "id" << std::setw(14) << "groups" << std::setw(44) << "formula"
         << "domain\n";
    for (const auto& f : family_table()) {
      std::string gs;
      for (const auto& g : f.groups) gs += (gs.empty() ? "" : ",") + g;
      out_ << std::setw(16) << f.id << std::setw(14) << gs << std::setw(44) << f.formula << f.domain << "\n";
    }
    out_ << std::right;
    return kOk;
  }

  int cmd_family_member(const std::string& id, int y, int k) {
    const FamilyDescriptor d{id, y, k};
    const auto l = family_member(d);
    if (json_) {
      emit({{"family", d.str()}, {"lengths", to_json(l)}});
      return kOk;
    }
    out_ << l.str() << "\n";
    return kOk;
  }

  int cmd_family_witness(const std::string& id, int y, int k, const std::string& gtext, bool check) {
    const FamilyDescriptor d{id, y, k};
    std::optional<FiniteAbelianGroup> g;
    if (!gtext.empty()) g = parse_group(gtext);
    const auto w = witness_sequence(d, g);
    const auto want = family_member(d);
    Json j{{"family", d.str()}, {"group", w.group().name()}, {"witness", w.str()}, {"member", to_json(want)}};
    bool ok = true;
    std::optional<LengthSet> got;
    if (check) {
      LengthEngine eng(w.group(), engine_options());
      got = eng.length_set(w);
      ok = *got == want;
      j["computed"] = to_json(*got);
      j["match"] = ok;
    }
    if (json_) {
      emit(j);
    } else {
      out_ << w.str() << "\n";
      if (got) out_ << "L = " << got->str() << (ok ? " (matches " : " (MISMATCH, expected ") << want.str() << ")\n";
    }
    return ok ? kOk : kFail;
  }

  int cmd_family_match(const std::string& gtext, const std::string& text) {
    const auto g = parse_group(gtext);
    const auto l = parse_length_set(text);
    const auto m = match_family(g, l);
    if (json_) {
      Json a = Json::array();
      for (const auto& d : m) a.push_back(d.str());
      emit({{"group", g.name()}, {"lengths", to_json(l)}, {"matches", a}});
      return kOk;
    }
    if (m.empty()) out_ << "no family of " << target_for(g) << " contains " << l.str() << "\n";
    for (const auto& d : m) out_ << d.str() << "\n";
    return kOk;
  }

  int cmd_verify(const std::string& id, int flag) {
    VerifyOptions opt;
    opt.bound = flag;
    opt.threads = threads_;
    opt.max_nodes = max_nodes_;
    for (const auto& [key, v] : config_.values)
      if (key.rfind("bound.", 0) == 0) opt.group_bounds[parse_group(key.substr(6)).name()] = std::stoi(v);
    const auto r = verify_target(id, opt);
    if (json_) {
      Json checks = Json::array();
      for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      Json ce = Json::array();
      for (const auto& c : r.counterexamples)
        ce.push_back({{"group", c.group}, {"sequence", c.sequence}, {"lengths", to_json(c.computed)},
                      {"expected", c.expected}});
      emit({{"target", r.target}, {"bounds", r.bounds}, {"status", status_name(r.status)}, {"checks", checks},
            {"counterexamples", ce}, {"sets_checked", r.sets_checked}, {"memo_entries", r.nodes}});
    } else {
      out_ << "verify " << r.target << ": " << status_name(r.status) << "\n";
      for (const auto& [key, v] : r.bounds) out_ << "  bound " << key << " = " << v << "\n";
      for (const auto& c : r.checks) out_ << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name << ": " << c.detail << "\n";
      if (!r.counterexamples.empty()) out_ << "counterexamples:\n";
      for (const auto& c : r.counterexamples)
        out_ << "  " << c.group << "  " << c.sequence << "  L = " << c.computed.str() << "  expected " << c.expected
             << "\n";
      out_ << std::fixed << std::setprecision(2) << "time " << r.seconds << " s, memo entries " << r.nodes << "\n";
      out_.unsetf(std::ios::floatfield);
    }
    return r.status == VerifyStatus::pass ? kOk : kFail;
  }

  int cmd_nm_lengths(const std::string& gens, const std::vector<long long>& values) {
    const auto h = nm_parse(gens);
    Json a = Json::array();
    for (long long v : values) {
      const auto l = h.length_set(v);
      if (json_)
        a.push_back({{"a", v}, {"lengths", to_json(l)}, {"delta", to_json(delta(l))}, {"rho", rho(l).str()}});
      else
        out_ << "L(" << v << ") = " << l.str() << "\n";
    }
    if (json_) emit({{"monoid", h.str()}, {"values", a}});
    return kOk;
  }

  int cmd_nm_invariants(const std::string& gens, int bound) {
    const auto h = nm_parse(gens);
    const auto o = nm_observed(h, bound);
    const Rational rf = nm_elasticity(h);
    const long long df = nm_min_delta(h);
    const bool rho_ok = o.max_rho == rf;
    const bool delta_ok = o.distance_gcd == df && (o.distances.empty() || o.distances.front() == df);
    if (json_) {
      emit({{"monoid", h.str()}, {"frobenius", h.frobenius()}, {"rho", rf.str()}, {"min_delta", df}, {"bound", bound},
            {"observed_rho", o.max_rho.str()}, {"observed_rho_at", o.max_rho_at},
            {"observed_distances", to_json(o.distances)}, {"rho_agrees", rho_ok}, {"min_delta_agrees", delta_ok}});
    } else {
      out_ << h.str() << ": Frobenius " << h.frobenius() << "\n";
      out_ << "rho = " << rf.str() << " (observed up to " << bound << ": " << o.max_rho.str() << " at "
           << o.max_rho_at << ")\n";
      out_ << "min Delta = " << df << " (observed distances {" << join(o.distances) << "})\n";
    }
    return rho_ok && delta_ok ? kOk : kFail;
  }

  int cmd_nm_M(const std::string& gens, const std::vector<long long>& values) {
    const auto h = nm_parse(gens);
    Json a = Json::array();
    for (long long v : values) {
      const int m = strongly_primary_M(h, v);
      if (json_)
        a.push_back({{"a", v}, {"M", m}});
      else
        out_ << "M(" << v << ") = " << m << "\n";
    }
    if (json_) emit({{"monoid", h.str()}, {"values", a}});
    return kOk;
  }

  int cmd_nm_gap(const std::string& gens, int bound) {
    const auto h = nm_parse(gens);
    const auto r = verify_elasticity_gap(h, bound);
    const auto& b = r.gap;
    if (json_) {
      Json ce = Json::array();
      for (const auto& [a, l] : r.counterexamples) ce.push_back({{"a", a}, {"lengths", to_json(l)}});
      emit({{"monoid", h.str()}, {"b", b.b}, {"u", b.u}, {"M_b", b.M_b}, {"M_u", b.M_u},
            {"L_Mb_u", to_json(b.L_power)}, {"beta1", b.beta1.str()}, {"beta2", b.beta2.str()},
            {"beta", b.beta.str()}, {"bound", bound}, {"checked", r.checked},
            {"status", r.pass() ? "pass" : "fail"}, {"counterexamples", ce}});
    } else {
      out_ << h.str() << ": b = " << b.b << ", u = " << b.u << ", M(b) = " << b.M_b << ", M(u) = " << b.M_u << "\n";
      out_ << "beta1 = " << b.beta1.str() << ", beta2 = " << b.beta2.str() << ", beta = " << b.beta.str() << "\n";
      out_ << "a <= " << bound << ": " << r.checked << " checked, " << r.counterexamples.size()
           << " with 1 < rho < beta -> " << (r.pass() ? "pass" : "fail") << "\n";
      for (const auto& [a, l] : r.counterexamples) out_ << "  L(" << a << ") = " << l.str() << "\n";
    }
    return r.pass() ? kOk : kFail;
  }

  int cmd_nm_56(const std::string& factors, const std::string& ltext, long long search, int window) {
    ProductMonoid d;
    std::stringstream ss(factors);
    std::string part;
    while (std::getline(ss, part, ';')) d.factors.push_back(nm_parse(part));
    const auto l = parse_length_set(ltext);
    const auto r = y_L_bound(d, l, search, window);
    if (json_) {
      Json re = Json::array();
      for (const auto& [c, yv] : r.realizations) re.push_back({{"components", c}, {"y", yv}});
      emit({{"factors", factors}, {"L", to_json(l)}, {"a", r.witnesses}, {"M", r.M}, {"y_L", r.y_L},
            {"search", search}, {"window", window}, {"elements_checked", r.elements_checked},
            {"status", r.pass() ? "pass" : "fail"}, {"realizations", re}});
    } else {
      out_ << "y_L = " << r.y_L << " (M = " << join(r.M) << ")\n";
      out_ << "components <= " << search << ", y in [" << r.y_L << "," << r.y_L + window
           << "]: " << r.elements_checked << " elements, " << r.realizations.size() << " realizations -> "
           << (r.pass() ? "pass" : "fail") << "\n";
    }
    return r.pass() ? kOk : kFail;
  }

  int cmd_nm_57(const std::string& gens, const std::string& cse, int bound) {
    const auto h = nm_parse(gens);
    const auto r = verify_small_group_case(h, cse == "b2" ? SmallGroupCase::b2 : SmallGroupCase::b3, bound);
    if (json_) {
      Json a = Json::array(), b = Json::array();
      for (const auto& s : r.only_in_monoid) a.push_back(to_json(s));
      for (const auto& s : r.only_in_family) b.push_back(to_json(s));
      emit({{"monoid", h.str()}, {"case", cse}, {"bound", bound}, {"status", r.status()},
            {"hypothesis_failures", r.hypothesis_failures}, {"system_size", r.system_size},
            {"only_in_monoid", a}, {"only_in_family", b}});
    } else {
      out_ << h.str() << " case " << cse << ", max L <= " << bound << ": " << r.status() << "\n";
      for (const auto& s : r.hypothesis_failures) out_ << "  hypothesis: " << s << "\n";
      if (r.hypotheses_met) out_ << "  " << r.system_size << " sets\n";
      for (const auto& s : r.only_in_monoid) out_ << "  only in monoid: " << s.str() << "\n";
      for (const auto& s : r.only_in_family) out_ << "  only in family: " << s.str() << "\n";
    }
    return r.status() == "pass" ? kOk : kFail;
  }

  std::ostream& out_;
  std::ostream& err_;
  bool json_ = false;
  int threads_ = default_threads();
  std::string config_path_;
  std::uint64_t max_nodes_ = 0;
  Config config_;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Runner(out, err).run(argc, argv);
}

/// Convenience for tests: args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"zerolen"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace zerolen::cli
