#include "knotfib/seifert.hpp"

#include <algorithm>
#include <queue>

#include "union_find.hpp"

namespace knotfib {

namespace {

int smoothing_out(const Crossing& c, int in_slot) {
  if (c.over_forward) return in_slot == 0 ? 3 : 2;
  return in_slot == 0 ? 1 : 2;
}

int band_corner(const Crossing& c) { return c.over_forward ? 0 : 1; }

// Regions reachable from `start` without crossing circle `cut`.
std::vector<char> side_of(const SeifertModel& m, CircleId cut, int start) {
  std::vector<std::vector<std::pair<int, CircleId>>> adj(static_cast<std::size_t>(m.region_count));
  for (CircleId c = 0; c < m.circle_count(); ++c) {
    auto [l, r] = m.circle_regions[static_cast<std::size_t>(c)];
    if (c == cut || l < 0) continue;
    adj[static_cast<std::size_t>(l)].push_back({r, c});
    adj[static_cast<std::size_t>(r)].push_back({l, c});
  }
  std::vector<char> seen(static_cast<std::size_t>(m.region_count), 0);
  std::queue<int> q;
  q.push(start);
  seen[static_cast<std::size_t>(start)] = 1;
  while (!q.empty()) {
    int r = q.front();
    q.pop();
    for (auto [n, c] : adj[static_cast<std::size_t>(r)])
      if (!seen[static_cast<std::size_t>(n)]) {
        seen[static_cast<std::size_t>(n)] = 1;
        q.push(n);
      }
  }
  return seen;
}

}  // namespace

std::vector<int> SeifertModel::graph_components() const {
  detail::UnionFind uf(circles.size());
  for (const auto& e : edges) uf.unite(e.u, e.v);
  std::vector<int> out(circles.size());
  for (std::size_t c = 0; c < circles.size(); ++c) out[c] = uf.find(static_cast<int>(c));
  return out;
}

SeifertModel build_seifert(const Diagram& d) {
  SeifertModel m;
  for (EdgeLabel start : d.labels()) {
    if (m.circle_of_edge.count(start)) continue;
    const auto id = static_cast<CircleId>(m.circles.size());
    std::vector<EdgeLabel> edges;
    std::vector<CrossingId> passages;
    EdgeLabel e = start;
    while (!m.circle_of_edge.count(e)) {
      m.circle_of_edge[e] = id;
      edges.push_back(e);
      SlotRef h = d.head(e);
      passages.push_back(h.crossing);
      e = d.label_at({h.crossing, smoothing_out(d.crossing(h.crossing), h.slot)});
    }
    m.circles.push_back(std::move(edges));
    m.circle_crossings.push_back(std::move(passages));
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    m.circles.emplace_back();
    m.circle_crossings.emplace_back();
  }

  for (CrossingId x = 0; x < d.crossing_count(); ++x) {
    const Crossing& c = d.crossing(x);
    SeifertEdge e{x, m.circle_of_edge.at(c.slots[0]), m.circle_of_edge.at(c.slots[c.over_forward ? 1 : 3]), d.sign(x)};
    if (e.u == e.v) throw DiagramError("internal: Seifert graph has a loop at crossing " + std::to_string(x));
    m.edges.push_back(e);
  }

  // Gap regions: faces merged across each band.
  const auto nf = d.faces().size();
  detail::UnionFind uf(nf);
  for (CrossingId x = 0; x < d.crossing_count(); ++x) {
    int b = band_corner(d.crossing(x));
    uf.unite(d.face_of({x, b}), d.face_of({x, b + 2}));
  }
  std::map<int, int> region_id;
  auto region = [&](int face) {
    int root = uf.find(face);
    auto [it, inserted] = region_id.emplace(root, static_cast<int>(region_id.size()));
    return it->second;
  };
  for (std::size_t f = 0; f < nf; ++f) region(static_cast<int>(f));
  m.region_count = static_cast<int>(region_id.size());
  m.circle_regions.assign(m.circles.size(), {-1, -1});
  for (CircleId c = 0; c < m.circle_count(); ++c) {
    if (m.circles[static_cast<std::size_t>(c)].empty()) continue;
    SlotRef t = d.tail(m.circles[static_cast<std::size_t>(c)].front());
    m.circle_regions[static_cast<std::size_t>(c)] = {region(d.face_of({t.crossing, t.slot})),
                                                     region(d.face_of({t.crossing, (t.slot + 3) % 4}))};
  }
  for (CrossingId x = 0; x < d.crossing_count(); ++x)
    m.crossing_region.push_back(region(d.face_of({x, band_corner(d.crossing(x))})));

  auto comps = m.graph_components();
  std::set<int> distinct(comps.begin(), comps.end());
  m.stats.s = m.circle_count();
  m.stats.c = d.crossing_count();
  m.stats.k = static_cast<int>(distinct.size());
  m.stats.beta1 = m.stats.c - m.stats.s + m.stats.k;
  m.stats.chi = m.stats.s - m.stats.c;
  return m;
}

std::vector<CircleId> nested_circles(const SeifertModel& m) {
  std::vector<CircleId> out;
  for (CircleId c = 0; c < m.circle_count(); ++c) {
    auto [l, r] = m.circle_regions[static_cast<std::size_t>(c)];
    if (l < 0) continue;
    auto left = side_of(m, c, l);
    if (left[static_cast<std::size_t>(r)]) continue;  // not a tree edge; cannot happen on a sphere
    bool on_left = false, on_right = false;
    for (CircleId o = 0; o < m.circle_count(); ++o) {
      if (o == c) continue;
      int ol = m.circle_regions[static_cast<std::size_t>(o)][0];
      if (ol < 0) continue;
      (left[static_cast<std::size_t>(ol)] ? on_left : on_right) = true;
    }
    if (on_left && on_right) out.push_back(c);
  }
  return out;
}

std::set<CrossingId> crossings_left_of(const SeifertModel& m, CircleId c) {
  if (c < 0 || c >= m.circle_count() || m.circle_regions[static_cast<std::size_t>(c)][0] < 0)
    throw DiagramError("unknown Seifert circle " + std::to_string(c));
  auto left = side_of(m, c, m.circle_regions[static_cast<std::size_t>(c)][0]);
  std::set<CrossingId> out;
  for (CrossingId x = 0; x < static_cast<int>(m.crossing_region.size()); ++x)
    if (left[static_cast<std::size_t>(m.crossing_region[static_cast<std::size_t>(x)])]) out.insert(x);
  return out;
}

std::pair<Diagram, Diagram> split_nested(const Diagram& d, CircleId c) {
  SeifertModel m = build_seifert(d);
  auto nested = nested_circles(m);
  if (!std::binary_search(nested.begin(), nested.end(), c))
    throw DiagramError("Seifert circle " + std::to_string(c) + " is not nested");
  std::set<CrossingId> left = crossings_left_of(m, c);
  std::set<CrossingId> right;
  for (CrossingId x = 0; x < d.crossing_count(); ++x)
    if (!left.count(x)) right.insert(x);
  if (left.empty() || right.empty()) throw DiagramError("nested circle bounds no crossings on one side");
  if (*right.begin() < *left.begin()) std::swap(left, right);
  return {restrict_to(d, left), restrict_to(d, right)};
}

std::vector<ParallelPair> parallel_pairs(const SeifertModel& m, const Diagram& d) {
  // Faces that are bigons between two band corners.
  std::set<std::pair<CrossingId, CrossingId>> bigons;
  for (const auto& face : d.faces()) {
    if (face.size() != 2) continue;
    Corner p = face[0], q = face[1];
    if (p.crossing == q.crossing) continue;
    if (p.index % 2 != band_corner(d.crossing(p.crossing))) continue;
    if (q.index % 2 != band_corner(d.crossing(q.crossing))) continue;
    bigons.insert({std::min(p.crossing, q.crossing), std::max(p.crossing, q.crossing)});
  }
  std::vector<ParallelPair> out;
  for (std::size_t i = 0; i < m.edges.size(); ++i)
    for (std::size_t j = i + 1; j < m.edges.size(); ++j) {
      const auto& a = m.edges[i];
      const auto& b = m.edges[j];
      if (std::minmax(a.u, a.v) != std::minmax(b.u, b.v)) continue;
      ParallelPair p;
      p.x = a.crossing;
      p.y = b.crossing;
      p.adjacent = bigons.count({p.x, p.y}) > 0;
      p.same_sign = a.sign == b.sign;
      out.push_back(p);
    }
  return out;
}

}  // namespace knotfib
