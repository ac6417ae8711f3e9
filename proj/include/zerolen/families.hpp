#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "length_set.hpp"
#include "sequence.hpp"

namespace zerolen {

/// One closed-form family instance: a table id plus its parameters.
struct FamilyDescriptor {
  std::string id;
  int y = 0;
  int k = 0;

  std::string str() const {
    return id + "(y=" + std::to_string(y) + ",k=" + std::to_string(k) + ")";
  }
  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

/// A row of the family table. `k_ok` is the machine-readable parameter
/// domain; rows with `uses_k == false` accept only k = 0, rows with
/// `uses_y == false` only y = 0.
struct FamilyInfo {
  std::string id;
  std::string target;             // P33, T36, T41, T46, T47, T48
  std::vector<std::string> groups;  // canonical group names the row belongs to
  std::string formula;
  std::string domain;
  bool uses_y = true;
  bool uses_k = true;
  std::function<bool(int)> k_ok;
  std::function<LengthSet(int y, int k)> member;
  /// Witness over `group` (one of `groups`).
  std::function<Sequence(const FiniteAbelianGroup& group, int y, int k)> witness;
  /// Joint constraint on (y, k) for rows where y is not a free shift.
  std::function<bool(int y, int k)> yk_ok = {};
};

namespace detail {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// y + base + d*[0,k]
inline LengthSet progression(int y, std::vector<int> base, int d, int k) {
  std::vector<int> v;
  for (int b : base)
    for (int j = 0; j <= k; ++j) v.push_back(y + b + d * j);
  return LengthSet(std::move(v));
}

inline LengthSet with_point(const LengthSet& l, int x) {
  std::vector<int> v = l.values();
  v.push_back(x);
  return LengthSet(std::move(v));
}

inline Sequence zeros(const Sequence& s, int y) {
  Sequence out = s;
  out.insert(0, y);
  return out;
}

/// Sequence from an element-coordinate literal, used for the fixed bases.
inline Sequence lit(const FiniteAbelianGroup& g, const char* text) { return parse_sequence(g, text); }

inline Sequence one(const FiniteAbelianGroup& g, std::initializer_list<int> c, int m = 1) {
  return Sequence::of(g, {{g.element(c), m}});
}

// C2+C4 with e = (1,0), g = (0,1).
struct C2C4 {
  FiniteAbelianGroup G = make_group({2, 4});
  Element el(int a, int b) const { return G.element({a, b}); }
  Sequence s(std::initializer_list<std::pair<std::pair<int, int>, int>> t) const {
    Sequence out(G);
    for (auto [ab, m] : t) out.insert(el(ab.first, ab.second), m);
    return out;
  }
  Sequence U1() const { return s({{{1, 0}, 1}, {{0, 1}, 3}, {{1, 1}, 1}}); }            // e g^3 (e+g)
  Sequence U2() const { return s({{{1, 2}, 1}, {{1, 1}, 3}, {{0, 3}, 1}}); }            // (e+2g)(e+g)^3(-g)
  Sequence U3() const { return s({{{1, 0}, 1}, {{1, 3}, 3}, {{0, 3}, 1}}); }            // e(e-g)^3(-g)
  Sequence U4() const { return s({{{0, 3}, 2}, {{1, 1}, 2}}); }                         // (-g)^2(e+g)^2
  Sequence U5() const { return s({{{1, 0}, 1}, {{1, 2}, 1}, {{0, 1}, 2}}); }            // e(e+2g)g^2
  Sequence g_pow(int m) const { return s({{{0, 1}, m}}); }
  Sequence mg_pow(int m) const { return s({{{0, 3}, m}}); }
};

// C2^4 with unit vectors e1..e4 and e0 = e1+e2+e3+e4.
struct C24 {
  FiniteAbelianGroup G = make_group({2, 2, 2, 2});
  Element el(int a, int b, int c, int d) const { return G.element({a, b, c, d}); }
  Element e(int i) const {
    if (i == 0) return el(1, 1, 1, 1);
    int v[4] = {0, 0, 0, 0};
    v[i - 1] = 1;
    return el(v[0], v[1], v[2], v[3]);
  }
  Element sum(std::initializer_list<int> idx) const {
    Element x = 0;
    for (int i : idx) x = G.add(x, e(i));
    return x;
  }
  Sequence s(std::initializer_list<std::pair<Element, int>> t) const { return Sequence::of(G, t); }
  Sequence U() const { return s({{e(0), 1}, {e(1), 1}, {e(2), 1}, {e(3), 1}, {e(4), 1}}); }
  Sequence V() const { return s({{e(1), 1}, {e(2), 1}, {e(3), 1}, {sum({1, 2, 3}), 1}}); }
  // interval constructions
  Sequence P1() const { return U(); }
  Sequence P2() const {
    return s({{e(1), 1}, {e(2), 1}, {sum({1, 3}), 1}, {sum({2, 4}), 1}, {sum({3, 4}), 1}});
  }
  Sequence P3() const {
    return s({{sum({1, 3}), 1}, {sum({2, 4}), 1}, {e(3), 1}, {e(4), 1}, {sum({1, 2}), 1}});
  }
  Sequence P4() const { return s({{sum({1, 2}), 1}, {sum({1, 3}), 1}, {sum({2, 4}), 1}, {sum({3, 4}), 1}}); }
  Sequence e4e0_sq() const { return s({{e(4), 2}, {e(0), 2}}); }
};

/// [m_k, m_k + k] over C2^4 for k >= 1, from the interval constructions.
inline Sequence c24_interval_core(int k) {
  C24 c;
  switch (k) {
    case 1:
      return c.s({{c.e(1), 2}, {c.e(2), 2}, {c.sum({1, 2}), 2}});
    case 2:
      return c.P1() * c.P2();
    case 3:  // the C2^3 construction inside <e1, e2, e3>
      return lit(c.G, "(0,1,1,0)^2*(1,0,0,0)^2*(1,0,1,0)^2*(1,1,0,0)^2*(1,1,1,0)^2*(0,1,0,0)^2");
    case 4:
      return c.P1() * c.P2() * c.P3();
    case 5:
      return c.P1().power(2) * c.P2() * c.P4();
    case 6:
      return c.P1().power(2) * c.P2().power(2);
    case 7:
      return c.P1().power(3) * c.P2() * c.P3();
    case 8:
      return c.P1().power(4) * c.P2() * c.P4();
    default:
      if (k < 1) throw DomainError("interval construction needs k >= 1");
      return c24_interval_core(k - 3) * c.P1().power(2);
  }
}

/// Over C3^2: an interval [a, b] with 2 <= a and 2b <= 5a, as zeros times a
/// core realizing [a', a' + r], r = b - a, with a' minimal:
/// r = 1: [2,3]; r = 3m: (U(-U))^m; r = 3m+1: [3,7] (U(-U))^{m-1};
/// r = 3m-1: [2,4] (U(-U))^{m-1}, where U = e1^2 e2^2 (e1+e2).
inline Sequence c33_interval(int a, int b) {
  const auto G = make_group({3, 3});
  if (a < 0 || b < a) throw DomainError("c33_interval: need 0 <= a <= b");
  if (a == b) return zeros(Sequence(G), a);
  if (a < 2 || 2 * b > 5 * a) throw DomainError("c33_interval: need a >= 2 and 2b <= 5a");
  const auto U = lit(G, "(1,0)^2*(0,1)^2*(1,1)");
  const auto P = U * negate(U);
  const int r = b - a;
  int a0 = 0;
  Sequence core(G);
  if (r == 1) {
    a0 = 2;
    core = lit(G, "(1,2)^3*(2,1)^3");
  } else if (r % 3 == 0) {
    a0 = 2 * (r / 3);
    core = P.power(r / 3);
  } else if (r % 3 == 1) {
    const int m = r / 3;
    a0 = 2 * m + 1;
    core = lit(G, "(0,1)*(0,2)*(1,0)^2*(1,1)^2*(1,2)^2*(2,0)^2*(2,1)^2*(2,2)^2") * P.power(m - 1);
  } else {
    const int m = (r + 1) / 3;
    a0 = 2 * m;
    core = lit(G, "(1,0)*(1,1)*(1,2)^2*(2,0)*(2,1)^2*(2,2)") * P.power(m - 1);
  }
  return zeros(core, a - a0);
}

/// Over C2^3 with U = e1 e2 e3 (e1+e2+e3): intervals [k+1, 2k+1] for k <= 2
/// and [k, 2k] for k >= 3.
inline Sequence c23_interval_core(int k) {
  const auto G = make_group({2, 2, 2});
  const auto U = lit(G, "(1,0,0)*(0,1,0)*(0,0,1)*(1,1,1)");
  switch (k) {
    case 0:
      return lit(G, "(1,0,0)^2");
    case 1:
      return lit(G, "(1,0,0)^2*(0,1,0)^2*(1,1,0)^2");
    case 2:
      return lit(G, "(0,1,1)^2*(1,0,0)^2*(1,0,1)^2*(1,1,0)^2*(1,1,1)^2");
    case 3:
      return lit(G, "(0,1,0)^2*(0,1,1)^2*(1,0,0)^2*(1,0,1)^2*(1,1,0)^2*(1,1,1)^2");
    case 4:
      return lit(G, "(0,1,0)^2*(0,1,1)^2*(1,0,0)^2*(1,0,1)^2*(1,1,0)^4*(1,1,1)^4");
    default:
      if (k < 0) throw DomainError("interval construction needs k >= 0");
      return c23_interval_core(k - 2) * U.power(2);
  }
}

inline std::vector<FamilyInfo> build_family_table() {
  using detail::progression;
  auto any_k = [](int) { return true; };
  auto k_pos = [](int k) { return k >= 1; };
  const std::string c3 = "C3", c22 = "C2xC2", c4 = "C4", c23 = "C2xC2xC2", c33 = "C3xC3", c5 = "C5",
                    c2c4 = "C2xC4", c24 = "C2xC2xC2xC2";
  std::vector<FamilyInfo> t;

  auto singleton = [](const std::string& id, const std::string& tgt, std::vector<std::string> groups) {
    return FamilyInfo{id,      tgt,   std::move(groups),
                      "{y}",   "y >= 0", true, false, [](int k) { return k == 0; },
                      [](int y, int) { return LengthSet{y}; },
                      [](const FiniteAbelianGroup& g, int y, int) { return zeros(Sequence(g), y); }};
  };

  // --- small groups
  t.push_back({"P33-C3C22", "P33", {c3, c22}, "y+2k+[0,k]", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return LengthSet::interval(y + 2 * k, y + 3 * k); },
               [=](const FiniteAbelianGroup& g, int y, int k) {
                 if (g.name() == c3) return zeros(lit(g, "1^3*2^3").power(k), y);
                 return zeros(lit(g, "(1,0)*(0,1)*(1,1)").power(2 * k), y);
               }});
  t.push_back({"P33-C4a", "P33", {c4}, "y+k+1+[0,k]", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return LengthSet::interval(y + k + 1, y + 2 * k + 1); },
               [](const FiniteAbelianGroup& g, int y, int k) {
                 return zeros(lit(g, "1^2*3^2").power(k) * lit(g, "2^2"), y);
               }});
  t.push_back({"P33-C4b", "P33", {c4}, "y+2k+2*[0,k]", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return progression(y, {2 * k}, 2, k); },
               [](const FiniteAbelianGroup& g, int y, int k) { return zeros(lit(g, "1^4*3^4").power(k), y); }});
  t.push_back({"P33-C23a", "P33", {c23}, "y+(k+1)+[0,k]", "y >= 0, k in [0,2]", true, true,
               [](int k) { return k >= 0 && k <= 2; },
               [](int y, int k) { return LengthSet::interval(y + k + 1, y + 2 * k + 1); },
               [](const FiniteAbelianGroup&, int y, int k) { return zeros(c23_interval_core(k), y); }});
  t.push_back({"P33-C23b", "P33", {c23}, "y+k+[0,k]", "y >= 0, k >= 3", true, true, [](int k) { return k >= 3; },
               [](int y, int k) { return LengthSet::interval(y + k, y + 2 * k); },
               [](const FiniteAbelianGroup&, int y, int k) { return zeros(c23_interval_core(k), y); }});
  t.push_back({"P33-C23c", "P33", {c23}, "y+2k+2*[0,k]", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return progression(y, {2 * k}, 2, k); },
               [](const FiniteAbelianGroup& g, int y, int k) {
                 return zeros(lit(g, "(1,0,0)*(0,1,0)*(0,0,1)*(1,1,1)").power(2 * k), y);
               }});

  // --- intersection over all groups with |G| >= 3, realized over C3 with p = 3
  t.push_back({"T36-INTERSECT", "T36", {c3}, "y+2k+[0,k]", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return LengthSet::interval(y + 2 * k, y + 3 * k); },
               [](const FiniteAbelianGroup& g, int y, int k) { return zeros(lit(g, "2^3*1^3").power(k), y); }});

  // --- C3 + C3: y is the right endpoint, not a shift
  t.push_back({"T41a", "T41", {c33}, "[2k,y], y in [2k,5k]", "k >= 0, 2k <= y <= 5k", true, true, any_k,
               [](int y, int k) { return LengthSet::interval(2 * k, y); },
               [](const FiniteAbelianGroup&, int y, int k) { return c33_interval(2 * k, y); },
               [](int y, int k) { return y >= 2 * k && y <= 5 * k; }});
  t.push_back({"T41b", "T41", {c33}, "[2k+1,y], y in [2k+1,5k+2]", "k >= 1, 2k+1 <= y <= 5k+2", true, true, k_pos,
               [](int y, int k) { return LengthSet::interval(2 * k + 1, y); },
               [](const FiniteAbelianGroup&, int y, int k) { return c33_interval(2 * k + 1, y); },
               [](int y, int k) { return y >= 2 * k + 1 && y <= 5 * k + 2; }});
  t.push_back({"T41c", "T41", {c33}, "{1}", "no parameters", false, false, [](int k) { return k == 0; },
               [](int, int) { return LengthSet{1}; },
               [](const FiniteAbelianGroup& g, int, int) { return lit(g, "(1,0)^3"); }});

  // --- C5 with generator g = 1
  t.push_back(singleton("T46-L1", "T46", {c5}));
  t.push_back({"T46-L2", "T46", {c5}, "y+2+{0,2}", "y >= 0", true, false, [](int k) { return k == 0; },
               [](int y, int) { return LengthSet{y + 2, y + 4}; },
               [](const FiniteAbelianGroup& g, int y, int) { return zeros(lit(g, "1^5*4^3*3"), y); }});
  t.push_back({"T46-L3", "T46", {c5}, "y+3+{0,1,3}", "y >= 0", true, false, [](int k) { return k == 0; },
               [](int y, int) { return LengthSet{y + 3, y + 4, y + 6}; },
               [](const FiniteAbelianGroup& g, int y, int) { return zeros(lit(g, "1^5*4^5*1^2*3"), y); }});
  t.push_back({"T46-L4", "T46", {c5}, "y+2k+3*[0,k]", "y >= 0, k >= 1", true, true, k_pos,
               [](int y, int k) { return progression(y, {2 * k}, 3, k); },
               [](const FiniteAbelianGroup& g, int y, int k) { return zeros(lit(g, "1^5*4^5").power(k), y); }});
  t.push_back({"T46-L5a", "T46", {c5}, "y+2*ceil(k/3)+[0,k]", "y >= 0, k >= 1, k != 3", true, true,
               [](int k) { return k >= 1 && k != 3; },
               [](int y, int k) { return LengthSet::interval(y + 2 * ceil_div(k, 3), y + 2 * ceil_div(k, 3) + k); },
               [](const FiniteAbelianGroup& g, int y, int k) {
                 const auto gg = lit(g, "1^5*4^5");
                 if (k % 3 == 0) return zeros(lit(g, "2^5*3^5") * gg.power(k / 3 - 1), y);
                 if (k % 3 == 1) return zeros(lit(g, "2*4^2") * lit(g, "1^2*3") * gg.power(k / 3), y);
                 return zeros(lit(g, "1^3*2") * lit(g, "4^3*3") * gg.power(k / 3), y);
               }});
  t.push_back({"T46-L5b", "T46", {c5}, "y+[3,6]", "y >= 0", true, false, [](int k) { return k == 0; },
               [](int y, int) { return LengthSet::interval(y + 3, y + 6); },
               [](const FiniteAbelianGroup& g, int y, int) { return zeros(lit(g, "2*3*1^5*4^5"), y); }});
  t.push_back({"T46-L6", "T46", {c5}, "y+2k+3+{0,2,3}+3*[0,k]", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return progression(y + 2 * k + 3, {0, 2, 3}, 3, k); },
               [](const FiniteAbelianGroup& g, int y, int k) {
                 return zeros(lit(g, "1^5*4^5").power(k + 1) * lit(g, "2*1^3"), y);
               }});

  // --- C2 + C4, basis e = (1,0), g = (0,1)
  t.push_back(singleton("T47-L1", "T47", {c2c4}));
  t.push_back({"T47-L2a", "T47", {c2c4}, "y+2*ceil(k/3)+[0,k]", "y >= 0, k >= 1, k != 3", true, true,
               [](int k) { return k >= 1 && k != 3; },
               [](int y, int k) { return LengthSet::interval(y + 2 * ceil_div(k, 3), y + 2 * ceil_div(k, 3) + k); },
               [](const FiniteAbelianGroup&, int y, int k) {
                 C2C4 c;
                 if (k % 3 == 0) {
                   const int s = k / 3 - 1;
                   return zeros(c.U1() * negate(c.U1()) * (c.U2() * negate(c.U2())).power(s), y);
                 }
                 const int s = k / 3;
                 if (k % 3 == 1) return zeros(c.U1() * negate(c.U4()) * (c.U2() * negate(c.U2())).power(s), y);
                 return zeros(c.U1() * c.U3() * (c.U2() * negate(c.U2())).power(s), y);
               }});
  t.push_back({"T47-L2b", "T47", {c2c4}, "y+[3,6]", "y >= 0", true, false, [](int k) { return k == 0; },
               [](int y, int) { return LengthSet::interval(y + 3, y + 6); },
               [](const FiniteAbelianGroup&, int y, int) {
                 C2C4 c;
                 return zeros(c.U1() * negate(c.U1()) * c.s({{{1, 2}, 2}}), y);
               }});
  t.push_back({"T47-L2c", "T47", {c2c4}, "[2k+1,5k+2]", "y = 0, k >= 1", false, true, k_pos,
               [](int, int k) { return LengthSet::interval(2 * k + 1, 5 * k + 2); },
               [](const FiniteAbelianGroup&, int, int k) {
                 C2C4 c;
                 return c.U1() * c.U3() * c.U4() * (c.U2() * negate(c.U2())).power(k - 1);
               }});
  t.push_back({"T47-L3", "T47", {c2c4}, "y+2k+2*[0,k]", "y >= 0, k >= 1", true, true, k_pos,
               [](int y, int k) { return progression(y, {2 * k}, 2, k); },
               [](const FiniteAbelianGroup&, int y, int k) {
                 C2C4 c;
                 return zeros(c.g_pow(4 * k) * c.mg_pow(4 * k), y);
               }});
  t.push_back({"T47-L4", "T47", {c2c4}, "y+k+1+({0}u[2,k+2])", "y >= 0, k >= 1 odd", true, true,
               [](int k) { return k >= 1 && k % 2 == 1; },
               [](int y, int k) { return with_point(LengthSet::interval(y + k + 3, y + 2 * k + 3), y + k + 1); },
               [](const FiniteAbelianGroup&, int y, int k) {
                 C2C4 c;
                 const int s = (k - 1) / 2;
                 return zeros(c.U1() * negate(c.U1()) * c.g_pow(4 * s) * c.mg_pow(4 * s), y);
               }});
  t.push_back({"T47-L5", "T47", {c2c4}, "y+k+2+([0,k]u{k+2})", "y >= 0, k >= 1", true, true, k_pos,
               [](int y, int k) { return with_point(LengthSet::interval(y + k + 2, y + 2 * k + 2), y + 2 * k + 4); },
               [](const FiniteAbelianGroup&, int y, int k) {
                 C2C4 c;
                 const int kk = k + 2;
                 if (kk % 2 == 0) {
                   const int s = kk / 2;
                   return zeros(c.U5() * negate(c.U5()) * c.g_pow(4 * s - 4) * c.mg_pow(4 * s - 4), y);
                 }
                 const int s = (kk - 1) / 2;
                 return zeros(c.U5().power(2) * c.mg_pow(4) * c.g_pow(4 * s - 4) * c.mg_pow(4 * s - 4), y);
               }});

  // --- C2^4, basis e1..e4, e0 = e1+e2+e3+e4
  t.push_back(singleton("T48-L1", "T48", {c24}));
  t.push_back({"T48-L2", "T48", {c24}, "y+2k+3*[0,k]", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return progression(y, {2 * k}, 3, k); },
               [](const FiniteAbelianGroup&, int y, int k) { return zeros(C24().U().power(2 * k), y); }});
  t.push_back({"T48-L3a", "T48", {c24}, "y+[m,m+k], k in [1,5]: [2,3],[2,4],[3,6],[3,7],[4,9]", "y >= 0, k in [1,5]",
               true, true, [](int k) { return k >= 1 && k <= 5; },
               [](int y, int k) {
                 static const int m[] = {0, 2, 2, 3, 3, 4};
                 return LengthSet::interval(y + m[k], y + m[k] + k);
               },
               [](const FiniteAbelianGroup&, int y, int k) { return zeros(c24_interval_core(k), y); }});
  t.push_back({"T48-L3b", "T48", {c24}, "y+[m,m+k], m minimal with m+k <= 5m/2", "y >= 0, k >= 6", true, true,
               [](int k) { return k >= 6; },
               [](int y, int k) {
                 int m = 1;
                 while (2 * (m + k) > 5 * m) ++m;
                 return LengthSet::interval(y + m, y + m + k);
               },
               [](const FiniteAbelianGroup&, int y, int k) { return zeros(c24_interval_core(k), y); }});
  t.push_back({"T48-L4", "T48", {c24}, "y+2k+2*[0,k]", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return progression(y, {2 * k}, 2, k); },
               [](const FiniteAbelianGroup&, int y, int k) { return zeros(C24().V().power(2 * k), y); }});
  t.push_back({"T48-L5", "T48", {c24}, "y+k+2+([0,k]u{k+2})", "y >= 0, k >= 1", true, true, k_pos,
               [](int y, int k) { return with_point(LengthSet::interval(y + k + 2, y + 2 * k + 2), y + 2 * k + 4); },
               [](const FiniteAbelianGroup&, int y, int k) {
                 C24 c;
                 const int a = k % 2 == 0 ? k : k + 1;
                 const int b = k % 2 == 0 ? k : k - 1;
                 return zeros(c.V().power(2) * c.s({{c.sum({1, 4}), a}, {c.sum({2, 4}), a}, {c.sum({3, 4}), b},
                                                    {c.e(0), b}}),
                              y);
               }});
  t.push_back({"T48-L6", "T48", {c24}, "y+2*ceil(k/3)+2+({0}u[2,k+2])", "y >= 0, k >= 5 or k = 3", true, true,
               [](int k) { return k >= 5 || k == 3; },
               [](int y, int k) {
                 const int b = y + 2 * ceil_div(k, 3) + 2;
                 return with_point(LengthSet::interval(b + 2, b + k + 2), b);
               },
               [](const FiniteAbelianGroup&, int y, int k) {
                 C24 c;
                 if (k % 3 == 0) return zeros(c.U().power(2 * k / 3) * c.V().power(2), y);
                 if (k % 3 == 2) return zeros(c.U().power((2 * k - 4) / 3) * c.V().power(4), y);
                 return zeros(c.U().power((2 * k - 8) / 3) * c.V().power(6), y);
               }});
  t.push_back({"T48-L7a", "T48", {c24}, "y+2k+3+{0,1,3}+3*[0,k]", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return progression(y + 2 * k + 3, {0, 1, 3}, 3, k); },
               [](const FiniteAbelianGroup&, int y, int k) {
                 C24 c;
                 return zeros(c.U().power(2 * k + 1) * c.V() * c.e4e0_sq(), y);
               }});
  t.push_back({"T48-L7b", "T48", {c24}, "(y+2k+4+{0,1,3}+3*[0,k]) u {y+5k+8}", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return with_point(progression(y + 2 * k + 4, {0, 1, 3}, 3, k), y + 5 * k + 8); },
               [](const FiniteAbelianGroup&, int y, int k) {
                 C24 c;
                 return zeros(c.U().power(2 * k + 2) * c.V() * c.e4e0_sq(), y);
               }});
  t.push_back({"T48-L8a", "T48", {c24}, "y+2k+3+{0,2,3}+3*[0,k]", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return progression(y + 2 * k + 3, {0, 2, 3}, 3, k); },
               [](const FiniteAbelianGroup&, int y, int k) {
                 C24 c;
                 return zeros(c.U().power(2 * k + 2) * c.V(), y);
               }});
  // The printed construction for this branch appends e4^2 e0^2; U^(2k+3) V
  // is the one whose length set the U^r V formula gives (see tests).
  t.push_back({"T48-L8b", "T48", {c24}, "(y+2k+4+{0,2,3}+3*[0,k]) u {y+5k+9}", "y,k >= 0", true, true, any_k,
               [](int y, int k) { return with_point(progression(y + 2 * k + 4, {0, 2, 3}, 3, k), y + 5 * k + 9); },
               [](const FiniteAbelianGroup&, int y, int k) {
                 C24 c;
                 return zeros(c.U().power(2 * k + 3) * c.V(), y);
               }});
  return t;
}

}  // namespace detail

/// The family table, in the fixed order used by match_family.
inline const std::vector<FamilyInfo>& family_table() {
  static const std::vector<FamilyInfo> table = detail::build_family_table();
  return table;
}

inline const FamilyInfo& family_info(const std::string& id) {
  for (const auto& f : family_table())
    if (f.id == id) return f;
  throw DomainError("unknown family id '" + id + "'");
}

inline void check_domain(const FamilyInfo& f, int y, int k) {
  if (y < 0) throw DomainError(f.id + ": y must be >= 0");
  if (!f.uses_y && y != 0) throw DomainError(f.id + ": family has no shift parameter (y must be 0)");
  if (!f.uses_k && k != 0) throw DomainError(f.id + ": family has no k parameter (k must be 0)");
  if (!f.k_ok(k) || (f.yk_ok && !f.yk_ok(y, k)))
    throw DomainError(f.id + ": parameters y = " + std::to_string(y) + ", k = " + std::to_string(k) + " violate " +
                      f.domain);
}

inline bool in_domain(const FamilyInfo& f, int y, int k) {
  return y >= 0 && (f.uses_y || y == 0) && (f.uses_k || k == 0) && f.k_ok(k) && (!f.yk_ok || f.yk_ok(y, k));
}

inline LengthSet family_member(const FamilyDescriptor& d) {
  const auto& f = family_info(d.id);
  check_domain(f, d.y, d.k);
  return f.member(d.y, d.k);
}

/// Witness sequence for the descriptor over `group` (defaults to the row's first group).
inline Sequence witness_sequence(const FamilyDescriptor& d, std::optional<FiniteAbelianGroup> group = std::nullopt) {
  const auto& f = family_info(d.id);
  check_domain(f, d.y, d.k);
  const FiniteAbelianGroup g = group ? *group : parse_group(f.groups.front());
  if (std::find(f.groups.begin(), f.groups.end(), g.name()) == f.groups.end())
    throw DomainError(f.id + " has no witness over " + g.name());
  return f.witness(g, d.y, d.k);
}

/// Groups with a closed-form system in the table.
inline bool has_closed_form(const FiniteAbelianGroup& g) {
  static const std::vector<std::string> names = {"C3",   "C2xC2", "C4",   "C2xC2xC2",
                                                 "C3xC3", "C5",    "C2xC4", "C2xC2xC2xC2"};
  return std::find(names.begin(), names.end(), g.name()) != names.end();
}

/// Verification target whose families describe the system of the group.
inline std::string target_for(const FiniteAbelianGroup& g) {
  const auto n = g.name();
  if (n == "C3" || n == "C2xC2" || n == "C4" || n == "C2xC2xC2") return "P33";
  if (n == "C3xC3") return "T41";
  if (n == "C5") return "T46";
  if (n == "C2xC4") return "T47";
  if (n == "C2xC2xC2xC2") return "T48";
  throw DomainError("no closed form for " + n + " (supported: C3, C2xC2, C4, C2xC2xC2, C3xC3, C5, C2xC4, C2xC2xC2xC2)");
}

/// Families of the target that belong to `g` (all P33 rows of that group, say).
inline std::vector<const FamilyInfo*> families_of(const FiniteAbelianGroup& g) {
  const auto tgt = target_for(g);
  std::vector<const FamilyInfo*> out;
  for (const auto& f : family_table())
    if (f.target == tgt && std::find(f.groups.begin(), f.groups.end(), g.name()) != f.groups.end())
      out.push_back(&f);
  // Singletons {y}: the small-group rows already contain them at k = 0.
  return out;
}

/// Every (family, y, k) of the group's target whose member equals L, in table order.
inline std::vector<FamilyDescriptor> match_family(const FiniteAbelianGroup& g, const LengthSet& l) {
  std::vector<FamilyDescriptor> out;
  for (const FamilyInfo* f : families_of(g)) {
    const int ymax = f->uses_y ? l.max() : 0;
    const int kmax = f->uses_k ? l.max() : 0;
    for (int y = 0; y <= ymax; ++y)
      for (int k = 0; k <= kmax; ++k)
        if (in_domain(*f, y, k) && f->member(y, k) == l) out.push_back({f->id, y, k});
  }
  return out;
}

/// [l1, l2] is in the system of C2^4 iff l2/l1 <= 5/2 and (l1, l2) != (2, 5).
inline bool interval_criterion_c24(int l1, int l2) {
  if (l1 < 2 || l2 < l1) throw DomainError("interval criterion requires 2 <= l1 <= l2");
  return 2 * l2 <= 5 * l1 && !(l1 == 2 && l2 == 5);
}

/// m_k = max(2, ceil(2k/3)) for k != 3, m_3 = 3: the least left end of a
/// length-k interval in the system of C2^4.
inline int c24_interval_min_start(int k) { return k == 3 ? 3 : std::max(2, detail::ceil_div(2 * k, 3)); }

/// 0^(l1 - m_k) times the construction for [m_k, m_k + k]; nullopt when the
/// criterion fails. k = 0 gives 0^l1.
inline std::optional<Sequence> c24_interval_witness(int l1, int l2) {
  if (!interval_criterion_c24(l1, l2)) return std::nullopt;
  const int k = l2 - l1;
  const auto g = make_group({2, 2, 2, 2});
  if (k == 0) return detail::zeros(Sequence(g), l1);
  const int m = c24_interval_min_start(k);
  if (l1 < m) return std::nullopt;
  return detail::zeros(detail::c24_interval_core(k), l1 - m);
}

// ---------------------------------------------------------------------------
// Alternative presentations

/// A presentation is a list of branches (y, k) -> optional member.
using Branch = std::function<std::optional<LengthSet>(int y, int k)>;

struct Presentation {
  std::string name;
  std::vector<Branch> branches;

  /// All members with max <= bound.
  std::vector<LengthSet> members(int bound) const {
    std::vector<LengthSet> out;
    for (const auto& b : branches)
      for (int y = 0; y <= bound; ++y)
        for (int k = 0; k <= bound; ++k)
          if (auto l = b(y, k); l && l->max() <= bound) out.push_back(*l);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

namespace detail {
inline std::optional<LengthSet> iv(bool ok, int lo, int hi) {
  if (!ok) return std::nullopt;
  return LengthSet::interval(lo, hi);
}
/// y + ceil(2k/3) + [0,k] for k not in {1,3}, plus y + 3 + [0,3] and y + 2 + [0,1].
inline std::vector<Branch> ceil_two_thirds_form() {
  return {
      [](int y, int k) { return iv(k >= 1 && k != 1 && k != 3, y + ceil_div(2 * k, 3), y + ceil_div(2 * k, 3) + k); },
      [](int y, int k) { return iv(k == 0, y + 3, y + 6); },
      [](int y, int k) { return iv(k == 0, y + 2, y + 3); },
  };
}
}  // namespace detail

/// Named pairs of presentations that are stated to describe the same sets.
/// Ids: "T41" (statement vs. ceil(2k/3) form with singletons), "T47-L2",
/// "T48-L3", and "SELF" (T46-L5 against itself).
inline std::pair<Presentation, Presentation> presentation_pair(const std::string& id) {
  using detail::ceil_div;
  using detail::iv;
  if (id == "T41") {
    Presentation a{"[2k,y] (y in [2k,5k]) u [2k+1,y] (y in [2k+1,5k+2], k >= 1) u {1}",
                   {[](int y, int k) { return iv(y >= 2 * k && y <= 5 * k, 2 * k, y); },
                    [](int y, int k) { return iv(k >= 1 && y >= 2 * k + 1 && y <= 5 * k + 2, 2 * k + 1, y); },
                    [](int y, int k) { return iv(y == 1 && k == 0, 1, 1); }}};
    Presentation b{"y+ceil(2k/3)+[0,k] (k>=2) u {y} u y+2+[0,1]",
                   {[](int y, int k) { return iv(k >= 2, y + ceil_div(2 * k, 3), y + ceil_div(2 * k, 3) + k); },
                    [](int y, int k) { return iv(k == 0, y, y); },
                    [](int y, int k) { return iv(k == 0, y + 2, y + 3); }}};
    return {a, b};
  }
  if (id == "T47-L2") {
    Presentation a{"y+2ceil(k/3)+[0,k] (k!=3) u y+[3,6] u [2t+1,5t+2]",
                   {[](int y, int k) {
                      return iv(k >= 1 && k != 3, y + 2 * ceil_div(k, 3), y + 2 * ceil_div(k, 3) + k);
                    },
                    [](int y, int k) { return iv(k == 0, y + 3, y + 6); },
                    [](int y, int k) { return iv(y == 0 && k >= 1, 2 * k + 1, 5 * k + 2); }}};
    return {a, Presentation{"y+ceil(2k/3)+[0,k] (k!=1,3) u y+3+[0,3] u y+2+[0,1]", detail::ceil_two_thirds_form()}};
  }
  if (id == "T48-L3") {
    Presentation a{"listed intervals u y+[m,m+k] (k>=6, m minimal)",
                   {[](int y, int k) { return k >= 1 && k <= 5 ? std::optional(family_info("T48-L3a").member(y, k))
                                                               : std::nullopt; },
                    [](int y, int k) { return k >= 6 ? std::optional(family_info("T48-L3b").member(y, k))
                                                     : std::nullopt; }}};
    return {a, Presentation{"y+ceil(2k/3)+[0,k] (k!=1,3) u y+3+[0,3] u y+2+[0,1]", detail::ceil_two_thirds_form()}};
  }
  if (id == "SELF") {
    Presentation a{"T46-L5", {[](int y, int k) { return iv(k >= 1 && k != 3, y + 2 * ceil_div(k, 3),
                                                           y + 2 * ceil_div(k, 3) + k); },
                              [](int y, int k) { return iv(k == 0, y + 3, y + 6); }}};
    return {a, a};
  }
  throw DomainError("unknown presentation pair '" + id + "' (known: T41, T47-L2, T48-L3, SELF)");
}

struct PresentationCheck {
  bool equal = true;
  std::vector<LengthSet> only_first;
  std::vector<LengthSet> only_second;
  std::size_t count = 0;
};

/// Set-of-sets equality of the two presentations restricted to max <= bound.
inline PresentationCheck presentation_equivalence_check(const std::pair<Presentation, Presentation>& p, int bound) {
  const auto a = p.first.members(bound);
  const auto b = p.second.members(bound);
  PresentationCheck r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.only_first));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(r.only_second));
  r.equal = r.only_first.empty() && r.only_second.empty();
  r.count = a.size();
  return r;
}

}  // namespace zerolen
