#include "knotfib/moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "union_find.hpp"

namespace knotfib {

namespace {

const std::pair<MoveKind, const char*> kNames[] = {
    {MoveKind::untwist, "Untwist"},
    {MoveKind::split_link_reject, "SplitLinkReject"},
    {MoveKind::nested_desum, "NestedDesum"},
    {MoveKind::conn_sum_split, "ConnSumSplit"},
    {MoveKind::parallel_cut, "ParallelCut"},
    {MoveKind::opposite_parallel_witness, "OppositeParallelWitness"},
    {MoveKind::pattern_a, "PatternA"},
    {MoveKind::pattern_b, "PatternB"},
    {MoveKind::terminal_disk, "TerminalDisk"},
    {MoveKind::terminal_hopf_annulus, "TerminalHopfAnnulus"},
    {MoveKind::terminal_pretzel, "TerminalPretzel"},
    {MoveKind::annulus_twist_mismatch, "AnnulusTwistMismatch"},
};

void require_params(const Move& mv, std::size_t n, bool exact = true) {
  if (mv.params.size() < n || (exact && mv.params.size() != n))
    throw StaleMove(to_string(mv.kind) + ": expected " + std::to_string(n) + " parameters");
}

}  // namespace

std::string to_string(MoveKind k) {
  for (auto [kind, name] : kNames)
    if (kind == k) return name;
  return "Unknown";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (auto [kind, name] : kNames)
    if (s == name) return kind;
  throw std::invalid_argument("unknown move kind '" + s + "'");
}

bool is_terminal(MoveKind k) {
  return k == MoveKind::terminal_disk || k == MoveKind::terminal_hopf_annulus || k == MoveKind::terminal_pretzel;
}

bool is_witness(MoveKind k) {
  return k == MoveKind::split_link_reject || k == MoveKind::opposite_parallel_witness ||
         k == MoveKind::annulus_twist_mismatch;
}

std::string Move::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  if (kind == MoveKind::pattern_b) os << "(B" << variant << ")";
  if (!params.empty()) {
    os << " [";
    for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
    os << "]";
  }
  if (sign != 0) os << " sign " << (sign > 0 ? '+' : '-');
  return os.str();
}

bool is_standard_torus_graph(const SeifertModel& m) {
  if (m.circle_count() != 2 || m.edges.size() < 2) return false;
  for (const auto& e : m.edges)
    if (e.sign != m.edges.front().sign) return false;
  return true;
}

// ---- terminals --------------------------------------------------------------

namespace {

std::vector<std::vector<int>> incidence(const SeifertModel& m) {
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(m.circle_count()));
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    inc[static_cast<std::size_t>(m.edges[i].u)].push_back(static_cast<int>(i));
    inc[static_cast<std::size_t>(m.edges[i].v)].push_back(static_cast<int>(i));
  }
  return inc;
}

int other_end(const SeifertEdge& e, CircleId c) { return e.u == c ? e.v : e.u; }

// Generalized theta with one direct edge of sign eps and all other paths of
// length three with sign -eps.  Returns (eps, n).
std::optional<std::pair<int, int>> pretzel_shape(const SeifertModel& m) {
  auto inc = incidence(m);
  std::vector<CircleId> poles;
  for (CircleId c = 0; c < m.circle_count(); ++c) {
    auto deg = inc[static_cast<std::size_t>(c)].size();
    if (deg != 2) poles.push_back(c);
  }
  if (poles.size() != 2) return std::nullopt;
  const CircleId north = poles[0], south = poles[1];
  const auto n = inc[static_cast<std::size_t>(north)].size();
  if (n < 3 || inc[static_cast<std::size_t>(south)].size() != n) return std::nullopt;

  std::vector<std::pair<int, int>> paths;  // length, sign (0 if mixed)
  std::set<int> used;
  for (int start : inc[static_cast<std::size_t>(north)]) {
    int len = 0;
    int sign = m.edges[static_cast<std::size_t>(start)].sign;
    int e = start;
    CircleId at = north;
    while (true) {
      used.insert(e);
      ++len;
      if (m.edges[static_cast<std::size_t>(e)].sign != sign) sign = 0;
      at = other_end(m.edges[static_cast<std::size_t>(e)], at);
      if (at == south) break;
      if (at == north) return std::nullopt;
      const auto& ie = inc[static_cast<std::size_t>(at)];
      e = ie[0] == e ? ie[1] : ie[0];
    }
    paths.push_back({len, sign});
  }
  if (used.size() != m.edges.size()) return std::nullopt;
  int direct = 0, eps = 0;
  for (auto [len, sign] : paths)
    if (len == 1) {
      ++direct;
      eps = sign;
    }
  if (direct != 1) return std::nullopt;
  for (auto [len, sign] : paths)
    if (len != 1 && (len != 3 || sign != -eps)) return std::nullopt;
  return std::make_pair(eps, static_cast<int>(n));
}

}  // namespace

std::optional<Move> terminal_check(const Diagram& d, const SeifertModel& m) {
  (void)d;
  if (m.stats.k != 1) return std::nullopt;
  if (m.stats.beta1 == 0) return Move{MoveKind::terminal_disk, {}, 0, 0};
  if (m.stats.beta1 == 1) {
    // strip leaves until only the cycle remains
    auto inc = incidence(m);
    std::vector<int> deg(static_cast<std::size_t>(m.circle_count()));
    std::vector<char> alive(m.edges.size(), 1);
    for (CircleId c = 0; c < m.circle_count(); ++c) deg[static_cast<std::size_t>(c)] = static_cast<int>(inc[static_cast<std::size_t>(c)].size());
    bool changed = true;
    while (changed) {
      changed = false;
      for (CircleId c = 0; c < m.circle_count(); ++c) {
        if (deg[static_cast<std::size_t>(c)] != 1) continue;
        for (int e : inc[static_cast<std::size_t>(c)]) {
          if (!alive[static_cast<std::size_t>(e)]) continue;
          alive[static_cast<std::size_t>(e)] = 0;
          --deg[static_cast<std::size_t>(m.edges[static_cast<std::size_t>(e)].u)];
          --deg[static_cast<std::size_t>(m.edges[static_cast<std::size_t>(e)].v)];
          changed = true;
        }
      }
    }
    int sum = 0;
    for (std::size_t e = 0; e < m.edges.size(); ++e)
      if (alive[e]) sum += m.edges[e].sign;
    if (sum == 2 || sum == -2) return Move{MoveKind::terminal_hopf_annulus, {}, sum / 2, 0};
    return Move{MoveKind::annulus_twist_mismatch, {sum}, 0, 0};
  }
  if (auto p = pretzel_shape(m)) return Move{MoveKind::terminal_pretzel, {p->second}, p->first, 0};
  return std::nullopt;
}

std::vector<int> terminal_hopf_signs(const Move& mv) {
  switch (mv.kind) {
    case MoveKind::terminal_hopf_annulus: return {mv.sign};
    case MoveKind::terminal_pretzel: return std::vector<int>(static_cast<std::size_t>(mv.params.at(0) - 1), -mv.sign);
    default: return {};
  }
}

// ---- parallel bands ---------------------------------------------------------

std::optional<Move> find_parallel_cut(const Diagram& d, const SeifertModel& m) {
  auto pairs = parallel_pairs(m, d);
  for (const auto& p : pairs)
    if (!p.same_sign) return Move{MoveKind::opposite_parallel_witness, {p.x, p.y}, 0, 0};
  for (const auto& p : pairs)
    if (p.adjacent) return Move{MoveKind::parallel_cut, {p.x, p.y}, d.sign(p.x), 0};
  return std::nullopt;
}

// ---- 2-sums along a band ----------------------------------------------------

std::vector<PatternCandidate> pattern_candidates(const Diagram& d, const SeifertModel& m, CrossingId dealternator) {
  std::vector<PatternCandidate> out;
  const auto nc = static_cast<std::size_t>(m.circle_count());
  for (CrossingId y = 0; y < d.crossing_count(); ++y) {
    const CircleId u = m.edges[static_cast<std::size_t>(y)].u;
    const CircleId v = m.edges[static_cast<std::size_t>(y)].v;

    // Components of the graph with u and v deleted.
    detail::UnionFind uf(nc);
    for (const auto& e : m.edges)
      if (e.u != u && e.u != v && e.v != u && e.v != v) uf.unite(e.u, e.v);
    std::map<int, std::pair<bool, bool>> touches;  // root -> (touches u, touches v)
    for (CircleId c = 0; c < m.circle_count(); ++c)
      if (c != u && c != v) touches[uf.find(c)];
    for (const auto& e : m.edges) {
      if ((e.u == u) != (e.v == u) && other_end(e, u) != v) touches[uf.find(other_end(e, u))].first = true;
      if ((e.u == v) != (e.v == v) && other_end(e, v) != u) touches[uf.find(other_end(e, v))].second = true;
    }
    bool ok = true;
    for (auto& [root, t] : touches)
      if (!t.first || !t.second) ok = false;
    if (!ok) continue;

    // Bridge of every crossing other than y: direct u-v edges are their own
    // bridge, the rest belong to a component.
    auto bridge_of = [&](CrossingId x) -> long {
      const auto& e = m.edges[static_cast<std::size_t>(x)];
      bool uv = std::minmax(e.u, e.v) == std::minmax(u, v);
      if (uv) return -1 - static_cast<long>(x);
      CircleId inner = (e.u == u || e.u == v) ? e.v : e.u;
      return uf.find(inner);
    };

    const auto& around = m.circle_crossings[static_cast<std::size_t>(u)];
    auto pos = std::find(around.begin(), around.end(), y);
    if (pos == around.end()) continue;
    std::vector<CrossingId> order(pos + 1, around.end());
    order.insert(order.end(), around.begin(), pos);
    std::vector<long> runs;
    for (CrossingId x : order) {
      long b = bridge_of(x);
      if (runs.empty() || runs.back() != b) runs.push_back(b);
    }
    std::set<long> distinct(runs.begin(), runs.end());
    if (distinct.size() != runs.size() || runs.size() < 2) continue;

    std::map<long, std::set<CrossingId>> members;
    for (CrossingId x = 0; x < d.crossing_count(); ++x)
      if (x != y) {
        const auto& e = m.edges[static_cast<std::size_t>(x)];
        // not touching u or v: belongs to the component of its endpoints
        long b = (e.u == u || e.u == v || e.v == u || e.v == v) ? bridge_of(x) : uf.find(e.u);
        members[b].insert(x);
      }
    if (members.size() != runs.size()) continue;

    std::set<CrossingId> first{y};
    for (std::size_t j = 0; j + 1 < runs.size(); ++j) {
      first.insert(members[runs[j]].begin(), members[runs[j]].end());
      std::set<CrossingId> second{y};
      for (std::size_t k = j + 1; k < runs.size(); ++k) second.insert(members[runs[k]].begin(), members[runs[k]].end());
      PatternCandidate cand;
      bool lens_edge = runs[j] < 0 && j >= 1;
      cand.move.kind = lens_edge ? MoveKind::pattern_a : MoveKind::pattern_b;
      cand.move.variant = lens_edge ? 0 : (y == dealternator ? 2 : 1);
      cand.move.params = {y, u, v};
      for (CrossingId x : first)
        if (x != y) cand.move.params.push_back(x);
      cand.first = first;
      cand.second = second;
      out.push_back(std::move(cand));
    }
  }
  auto rank = [](const Move& mv) { return mv.kind == MoveKind::pattern_a ? 0 : mv.variant; };
  std::stable_sort(out.begin(), out.end(), [&](const PatternCandidate& a, const PatternCandidate& b) {
    return rank(a.move) < rank(b.move);
  });
  return out;
}

namespace {

bool in_scope(const Diagram& d) {
  if (d.projection_component_count() != 1) return false;
  return classify_alternation(d).switches <= 1;
}

}  // namespace

std::optional<Move> find_pattern_move(const Diagram& d, const SeifertModel& m, const PatternOptions& opts) {
  AlternationClass cls = classify_alternation(d);
  if (cls.kind != AlternationKind::almost_alternating) return std::nullopt;
  if (d.crossing_count() > opts.conway.max_crossings) return std::nullopt;
  const ConwayPolynomial whole = conway(d, opts.conway);
  for (const auto& cand : pattern_candidates(d, m, cls.dealternator())) {
    Diagram a = restrict_to(d, cand.first);
    Diagram b = restrict_to(d, cand.second);
    if (!in_scope(a) || !in_scope(b)) continue;
    const int ba = build_seifert(a).stats.beta1, bb = build_seifert(b).stats.beta1;
    if (ba + bb != m.stats.beta1) continue;
    if (!conway_relation_holds(cand.move.kind, whole, m.stats.beta1, {conway(a, opts.conway), conway(b, opts.conway)},
                               {ba, bb}))
      continue;
    return cand.move;
  }
  return std::nullopt;
}

bool conway_relation_holds(MoveKind kind, const ConwayPolynomial& parent, int parent_beta1,
                           const std::vector<ConwayPolynomial>& children, const std::vector<int>& child_beta1) {
  switch (kind) {
    case MoveKind::untwist: return children.size() == 1 && parent == children[0];
    case MoveKind::conn_sum_split: return children.size() == 2 && parent == children[0] * children[1];
    case MoveKind::parallel_cut:
    case MoveKind::nested_desum:
    case MoveKind::pattern_a:
    case MoveKind::pattern_b: break;
    default: return children.empty();
  }
  if (children.size() != child_beta1.size() || children.empty()) return false;
  try {
    std::int64_t whole = seifert_determinant(parent, parent_beta1);
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < children.size(); ++i) prod *= seifert_determinant(children[i], child_beta1[i]);
    if (kind == MoveKind::parallel_cut) return children.size() == 1 && (whole == prod || whole == -prod);
    return children.size() == 2 && whole == prod;
  } catch (const std::logic_error&) {
    return false;
  }
}

// ---- application ------------------------------------------------------------

std::vector<Diagram> apply_move(const Diagram& d, const Move& mv) {
  auto check_crossing = [&](int x) {
    if (x < 0 || x >= d.crossing_count()) throw StaleMove(mv.describe() + ": no crossing " + std::to_string(x));
  };
  switch (mv.kind) {
    case MoveKind::untwist: {
      require_params(mv, 1);
      check_crossing(mv.params[0]);
      auto nug = nugatory_crossings(d);
      if (!std::binary_search(nug.begin(), nug.end(), mv.params[0])) throw StaleMove(mv.describe() + ": not nugatory");
      return {untwist(d, mv.params[0])};
    }
    case MoveKind::nested_desum: {
      require_params(mv, 1);
      auto nested = nested_circles(build_seifert(d));
      if (!std::binary_search(nested.begin(), nested.end(), mv.params[0]))
        throw StaleMove(mv.describe() + ": circle is not nested");
      auto [a, b] = split_nested(d, mv.params[0]);
      return {a, b};
    }
    case MoveKind::conn_sum_split: {
      require_params(mv, 2);
      auto s = connected_sum_cut(d, mv.params[0], mv.params[1]);
      if (!s) throw StaleMove(mv.describe() + ": edges do not bound a connected-sum sphere");
      return {s->first, s->second};
    }
    case MoveKind::parallel_cut: {
      require_params(mv, 2);
      check_crossing(mv.params[0]);
      check_crossing(mv.params[1]);
      auto m = build_seifert(d);
      auto pairs = parallel_pairs(m, d);
      // the partner must be the lowest-id adjacent partner of the cut band
      auto partner = std::find_if(pairs.begin(), pairs.end(), [&](const ParallelPair& p) {
        return p.adjacent && p.same_sign && (p.x == mv.params[0] || p.y == mv.params[0]);
      });
      if (partner == pairs.end()) throw StaleMove(mv.describe() + ": no adjacent same-sign parallel band");
      const CrossingId expect = partner->x == mv.params[0] ? partner->y : partner->x;
      if (mv.params[1] != expect) throw StaleMove(mv.describe() + ": partner is not the lowest adjacent band");
      if (mv.sign != d.sign(mv.params[0])) throw StaleMove(mv.describe() + ": band sign mismatch");
      return {smooth_crossing(d, mv.params[0])};
    }
    case MoveKind::pattern_a:
    case MoveKind::pattern_b: {
      require_params(mv, 3, false);
      const CrossingId y = mv.params[0];
      check_crossing(y);
      auto m = build_seifert(d);
      std::set<CrossingId> first{y};
      for (std::size_t i = 3; i < mv.params.size(); ++i) {
        check_crossing(mv.params[i]);
        first.insert(mv.params[i]);
      }
      for (const auto& cand : pattern_candidates(d, m, classify_alternation(d).dealternator()))
        if (cand.first == first && cand.move.params[0] == y) {
          if (cand.move.kind != mv.kind || cand.move.variant != mv.variant || cand.move.params != mv.params)
            throw StaleMove(mv.describe() + ": configuration type differs");
          return {restrict_to(d, cand.first), restrict_to(d, cand.second)};
        }
      throw StaleMove(mv.describe() + ": not a 2-sum along the band");
    }
    case MoveKind::opposite_parallel_witness: {
      require_params(mv, 2);
      check_crossing(mv.params[0]);
      check_crossing(mv.params[1]);
      auto m = build_seifert(d);
      const auto& a = m.edges[static_cast<std::size_t>(mv.params[0])];
      const auto& b = m.edges[static_cast<std::size_t>(mv.params[1])];
      if (mv.params[0] == mv.params[1] || std::minmax(a.u, a.v) != std::minmax(b.u, b.v) || a.sign == b.sign)
        throw StaleMove(mv.describe() + ": bands are not parallel with opposite signs");
      return {};
    }
    case MoveKind::split_link_reject:
      require_params(mv, 0);
      if (build_seifert(d).stats.k < 2) throw StaleMove(mv.describe() + ": surface is connected");
      return {};
    case MoveKind::terminal_disk:
    case MoveKind::terminal_hopf_annulus:
    case MoveKind::terminal_pretzel:
    case MoveKind::annulus_twist_mismatch: {
      auto t = terminal_check(d, build_seifert(d));
      if (!t || !(*t == mv)) throw StaleMove(mv.describe() + ": terminal shape differs");
      return {};
    }
  }
  throw StaleMove("unknown move");
}

}  // namespace knotfib
