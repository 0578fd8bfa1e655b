#pragma once

// Test-side reference computations.  Everything here works from the raw PD
// slots and shares no code with the library beyond the Diagram accessors.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "knotfib/conway.hpp"
#include "knotfib/diagram.hpp"

namespace oracle {

using Poly = std::vector<std::int64_t>;  // coefficient i belongs to t^i

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Exact division in Z[t]; throws if b does not divide a.
inline Poly divide(Poly a, const Poly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::domain_error("inexact division");
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t lead = a[k + b.size() - 1];
    if (lead % b.back() != 0) throw std::domain_error("inexact division");
    q[k] = lead / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  trim(a);
  if (!a.empty()) throw std::domain_error("inexact division");
  trim(q);
  return q;
}

// Fraction-free Gaussian elimination.
inline Poly bareiss_det(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  int sign = 1;
  Poly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
    prev = m[k][k];
  }
  Poly d = m[n - 1][n - 1];
  if (sign < 0)
    for (auto& c : d) c = -c;
  return d;
}

// Divides out powers of t and fixes the sign so the lowest coefficient is positive.
inline Poly normalize_unit(Poly p) {
  trim(p);
  auto first = std::find_if(p.begin(), p.end(), [](std::int64_t c) { return c != 0; });
  p.erase(p.begin(), first);
  if (!p.empty() && p.front() < 0)
    for (auto& c : p) c = -c;
  return p;
}

struct Oriented {
  // For each crossing, whether the over-strand enters at slot 1.
  std::vector<bool> over_enters_at_1;
  // Map edge -> (crossing, slot) of the end where it enters a crossing.
  std::map<int, std::pair<int, int>> head;
};

// Orientation from the under-strand rule, propagated along over-strands.
// Components that never pass under get the orientation entering at slot 1
// of their first crossing.
inline Oriented orient(const knotfib::Diagram& d) {
  const auto& xs = d.crossings();
  const int n = static_cast<int>(xs.size());
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < 4; ++s) ends[xs[x].slots[s]].push_back({x, s});
  // dir[x][s]: +1 edge enters here, -1 leaves, 0 unknown
  std::vector<std::array<int, 4>> dir(static_cast<std::size_t>(n), {0, 0, 0, 0});
  std::vector<std::pair<int, int>> stack;
  auto set = [&](int x, int s, int v) {
    if (dir[x][s] == v) return;
    if (dir[x][s] != 0) throw std::logic_error("inconsistent orientation");
    dir[x][s] = v;
    stack.push_back({x, s});
  };
  auto other_end = [&](int x, int s) {
    const auto& e = ends.at(xs[x].slots[s]);
    if (e.size() != 2) throw std::logic_error("edge without two ends");
    return e[0] == std::make_pair(x, s) ? e[1] : e[0];
  };
  auto drain = [&] {
    while (!stack.empty()) {
      auto [x, s] = stack.back();
      stack.pop_back();
      auto [y, t] = other_end(x, s);
      set(y, t, -dir[x][s]);
      set(x, (s + 2) % 4, -dir[x][s]);
    }
  };
  for (int x = 0; x < n; ++x) {
    set(x, 0, 1);
    set(x, 2, -1);
  }
  drain();
  for (int x = 0; x < n; ++x)
    if (dir[x][1] == 0) {
      set(x, 1, 1);
      drain();
    }
  Oriented o;
  for (int x = 0; x < n; ++x) {
    o.over_enters_at_1.push_back(dir[x][1] == 1);
    for (int s = 0; s < 4; ++s)
      if (dir[x][s] == 1) o.head[xs[x].slots[s]] = {x, s};
  }
  return o;
}

// Standard right-handed crossing sign: positive when the over-strand runs
// from slot 3 to slot 1 (slot 0 at the bottom, counterclockwise).
inline std::vector<int> standard_signs(const knotfib::Diagram& d) {
  Oriented o = orient(d);
  std::vector<int> out;
  for (bool b : o.over_enters_at_1) out.push_back(b ? -1 : 1);
  return out;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

inline std::map<int, int> label_index(const knotfib::Diagram& d) {
  std::map<int, int> idx;
  for (const auto& c : d.crossings())
    for (int l : c.slots) idx.emplace(l, static_cast<int>(idx.size()));
  return idx;
}

// Seifert circle count by oriented smoothing: the incoming under-strand
// continues along the outgoing over-strand and vice versa.
inline int seifert_circles(const knotfib::Diagram& d) {
  Oriented o = orient(d);
  auto idx = label_index(d);
  Dsu u(static_cast<int>(idx.size()));
  for (std::size_t x = 0; x < d.crossings().size(); ++x) {
    const auto& s = d.crossings()[x].slots;
    int over_in = o.over_enters_at_1[x] ? s[1] : s[3];
    int over_out = o.over_enters_at_1[x] ? s[3] : s[1];
    u.unite(idx[s[0]], idx[over_out]);
    u.unite(idx[over_in], idx[s[2]]);
  }
  int roots = 0;
  for (int i = 0; i < static_cast<int>(idx.size()); ++i) roots += u.find(i) == i;
  return roots + d.free_loops();
}

inline int projection_pieces(const knotfib::Diagram& d) {
  const int n = d.crossing_count();
  Dsu u(n);
  std::map<int, int> first;
  for (int x = 0; x < n; ++x)
    for (int l : d.crossings()[x].slots) {
      auto [it, fresh] = first.emplace(l, x);
      if (!fresh) u.unite(x, it->second);
    }
  int roots = 0;
  for (int x = 0; x < n; ++x) roots += u.find(x) == x;
  return roots + d.free_loops();
}

// beta1 of the Seifert surface: crossings - circles + pieces.
inline int beta1(const knotfib::Diagram& d) {
  return d.crossing_count() - seifert_circles(d) + projection_pieces(d);
}

// Alexander polynomial from the Fox matrix of the Wirtinger presentation,
// normalized by normalize_unit.
inline Poly fox_alexander(const knotfib::Diagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return d.free_loops() == 1 ? Poly{1} : Poly{};
  if (d.free_loops() > 0) return {};
  auto idx = label_index(d);
  Dsu arcs(static_cast<int>(idx.size()));
  for (const auto& c : d.crossings()) arcs.unite(idx[c.slots[1]], idx[c.slots[3]]);
  // an arc ends wherever an edge enters as under-strand; the under edges a
  // and c at the same crossing are different arcs
  std::map<int, int> arc_id;
  for (auto& [label, i] : idx) arc_id.emplace(arcs.find(i), static_cast<int>(arc_id.size()));
  if (static_cast<int>(arc_id.size()) != n) return {};  // a component never passes under: split
  const std::vector<int> sg = standard_signs(d);
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  auto add = [&](int row, int col, Poly v) {
    Poly& cell = m[row][col];
    if (cell.size() < v.size()) cell.resize(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) cell[i] += v[i];
    trim(cell);
  };
  for (int x = 0; x < n; ++x) {
    const auto& s = d.crossings()[x].slots;
    int k = arc_id[arcs.find(idx[s[1]])];
    int i = arc_id[arcs.find(idx[s[0]])];
    int j = arc_id[arcs.find(idx[s[2]])];
    if (sg[x] > 0) {
      add(x, k, {1, -1});
      add(x, i, {0, 1});
      add(x, j, {-1});
    } else {
      add(x, k, {-1, 1});
      add(x, i, {1});
      add(x, j, {0, -1});
    }
  }
  m.pop_back();
  for (auto& row : m) row.pop_back();
  return normalize_unit(bareiss_det(m));
}

// Delta(t) = Conway(t^1/2 - t^-1/2), normalized by normalize_unit.
inline Poly alexander_of_conway(const knotfib::ConwayPolynomial& c) {
  // work in s = t^1/2 with an offset of deg so exponents stay non-negative
  const int deg = c.degree();
  if (deg < 0) return {};
  Poly acc(static_cast<std::size_t>(2 * deg + 1), 0);
  Poly power{1};  // (s^2 - 1)^k, i.e. s^k (s - 1/s)^k
  for (int k = 0; k <= deg; ++k) {
    // s^-k * power, shifted by deg
    for (std::size_t i = 0; i < power.size(); ++i) acc[i + static_cast<std::size_t>(deg - k)] += c[k] * power[i];
    power = mul(power, Poly{-1, 0, 1});
  }
  // the nonzero exponents share one parity; halve them
  Poly t;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (i % 2 == 0)
      t.push_back(acc[i]);
    else if (acc[i] != 0)
      throw std::logic_error("mixed parity in Alexander substitution");
  }
  return normalize_unit(t);
}

// Conway polynomial of the standard (2,n) torus link diagram whose
// crossings all have standard sign `sign`, from the skein recurrence.
inline knotfib::ConwayPolynomial torus_conway(int n, int sign) {
  using knotfib::ConwayPolynomial;
  ConwayPolynomial a;                            // n = 0: two-component unlink
  ConwayPolynomial b = ConwayPolynomial::constant(1);  // n = 1: unknot
  if (n == 0) return a;
  for (int k = 2; k <= n; ++k) {
    // positive: C(k) = C(k-2) + z C(k-1); negative: C(k) = C(k-2) - z C(k-1)
    ConwayPolynomial zc = ConwayPolynomial::z() * b;
    ConwayPolynomial next = sign > 0 ? a + zc : a - zc;
    a = b;
    b = next;
  }
  return b;
}

}  // namespace oracle
