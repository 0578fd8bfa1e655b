#include "knotfib/builders.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "union_find.hpp"

namespace knotfib {

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw DiagramError("a braid needs at least one strand");
  EdgeLabel next = 1;
  std::vector<EdgeLabel> initial(static_cast<std::size_t>(strands));
  for (auto& l : initial) l = next++;
  std::vector<EdgeLabel> current = initial;
  std::vector<Crossing> cs;
  for (int letter : word) {
    int i = std::abs(letter);
    if (letter == 0 || i >= strands) throw DiagramError("braid letter " + std::to_string(letter) + " out of range");
    auto left = static_cast<std::size_t>(i - 1);
    auto right = static_cast<std::size_t>(i);
    EdgeLabel out_left = next++;
    EdgeLabel out_right = next++;
    if (letter > 0) {
      // under-strand runs from the left input to the right output
      cs.push_back({{current[left], current[right], out_right, out_left}, true});
    } else {
      cs.push_back({{current[right], out_right, out_left, current[left]}, false});
    }
    current[left] = out_left;
    current[right] = out_right;
  }
  // Close: the final label at each position is identified with the initial one.
  std::map<EdgeLabel, EdgeLabel> rename;
  int loops = 0;
  for (std::size_t p = 0; p < initial.size(); ++p) {
    if (current[p] == initial[p]) {
      ++loops;
    } else {
      rename[current[p]] = initial[p];
    }
  }
  for (auto& c : cs)
    for (auto& l : c.slots) {
      auto it = rename.find(l);
      if (it != rename.end()) l = it->second;
    }
  return Diagram(std::move(cs), loops);
}

Diagram torus_2n(int n) {
  if (n == 0) return Diagram::unlink(2);
  return braid_closure(2, std::vector<int>(static_cast<std::size_t>(std::abs(n)), n > 0 ? 1 : -1));
}

// ---- plane graphs -----------------------------------------------------------

int PlaneGraph::add_vertex(bool is_black) {
  black.push_back(is_black);
  rotation.emplace_back();
  return vertex_count() - 1;
}

std::vector<std::vector<std::pair<int, int>>> PlaneGraph::faces() const {
  auto other = [&](int e, int v) { return edges[static_cast<std::size_t>(e)][0] == v ? edges[static_cast<std::size_t>(e)][1] : edges[static_cast<std::size_t>(e)][0]; };
  auto succ = [&](int v, int e) {
    const auto& r = rotation[static_cast<std::size_t>(v)];
    auto it = std::find(r.begin(), r.end(), e);
    ++it;
    return it == r.end() ? r.front() : *it;
  };
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    for (int v : edges[static_cast<std::size_t>(e)]) {
      std::pair<int, int> dart{e, v};
      if (seen.count(dart)) continue;
      std::vector<std::pair<int, int>> face;
      while (!seen.count(dart)) {
        seen.insert(dart);
        face.push_back(dart);
        int w = other(dart.first, dart.second);
        dart = {succ(w, dart.first), w};
      }
      out.push_back(std::move(face));
    }
  return out;
}

Diagram plane_graph_diagram(const PlaneGraph& g) {
  const auto ne = g.edges.size();
  if (g.signs.size() != ne) throw DiagramError("plane graph: one sign per edge required");
  for (std::size_t e = 0; e < ne; ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) throw DiagramError("plane graph: loops are not allowed");
    if (g.black[static_cast<std::size_t>(u)] == g.black[static_cast<std::size_t>(v)])
      throw DiagramError("plane graph: edge " + std::to_string(e) + " joins equal colours");
  }

  // in_label[e][side], out_label[e][side], side 0 = black endpoint.
  std::vector<std::array<EdgeLabel, 2>> in_label(ne), out_label(ne);
  EdgeLabel next = 1;
  int loops = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> order = g.rotation[static_cast<std::size_t>(v)];
    bool is_black = g.black[static_cast<std::size_t>(v)];
    if (order.empty()) {
      ++loops;
      continue;
    }
    if (!is_black) std::reverse(order.begin(), order.end());
    const int side = is_black ? 0 : 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto e = static_cast<std::size_t>(order[i]);
      out_label[e][static_cast<std::size_t>(side)] = next;
      in_label[static_cast<std::size_t>(order[(i + 1) % order.size()])][static_cast<std::size_t>(side)] = next;
      ++next;
    }
  }

  std::vector<Crossing> cs;
  cs.reserve(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    EdgeLabel ui = in_label[e][0], uo = out_label[e][0];
    EdgeLabel vi = in_label[e][1], vo = out_label[e][1];
    if (g.signs[e] > 0) {
      cs.push_back({{ui, vi, vo, uo}, true});
    } else {
      cs.push_back({{vi, vo, uo, ui}, false});
    }
  }
  return Diagram(std::move(cs), loops);
}

PlaneGraph theta_graph(const std::vector<std::pair<int, int>>& paths) {
  if (paths.size() < 2) throw DiagramError("theta graph needs at least two paths");
  PlaneGraph g;
  int north = g.add_vertex(true);
  int parity = paths.front().first % 2;
  for (auto [len, sign] : paths) {
    if (len < 1) throw DiagramError("theta path length must be positive");
    if (len % 2 != parity) throw DiagramError("theta path lengths must share parity");
  }
  int south = g.add_vertex(parity == 0);
  std::vector<int> south_order;
  for (auto [len, sign] : paths) {
    int prev = north;
    for (int k = 0; k < len; ++k) {
      int to = k + 1 == len ? south : g.add_vertex(!g.black[static_cast<std::size_t>(prev)]);
      int e = static_cast<int>(g.edges.size());
      g.edges.push_back({prev, to});
      g.signs.push_back(sign);
      if (k == 0) {
        g.rotation[static_cast<std::size_t>(north)].push_back(e);
      } else {
        g.rotation[static_cast<std::size_t>(prev)].push_back(e);
      }
      if (k + 1 == len) {
        south_order.push_back(e);
      } else {
        g.rotation[static_cast<std::size_t>(to)].push_back(e);
      }
      prev = to;
    }
  }
  std::reverse(south_order.begin(), south_order.end());
  g.rotation[static_cast<std::size_t>(south)] = south_order;
  return g;
}

Diagram theta_diagram(const std::vector<std::pair<int, int>>& paths) {
  return plane_graph_diagram(theta_graph(paths));
}

Diagram pretzel_2_m2_2p(int p) {
  if (p < 1) throw DiagramError("pretzel parameter p must be positive");
  return theta_diagram({{2, +1}, {2, -1}, {2 * p, +1}});
}

PlaneGraph random_plane_bipartite(std::mt19937_64& rng, int edges) {
  PlaneGraph g;
  int u = g.add_vertex(true);
  int v = g.add_vertex(false);
  g.edges = {{u, v}, {u, v}};
  g.signs = {1, 1};
  g.rotation[static_cast<std::size_t>(u)] = {0, 1};
  g.rotation[static_cast<std::size_t>(v)] = {1, 0};

  auto replace_in = [&](int vert, int old_e, int new_e) {
    auto& r = g.rotation[static_cast<std::size_t>(vert)];
    *std::find(r.begin(), r.end(), old_e) = new_e;
  };

  std::uniform_int_distribution<int> coin(0, 2);
  while (static_cast<int>(g.edges.size()) < edges) {
    int op = coin(rng);
    if (op == 0 && static_cast<int>(g.edges.size()) + 2 <= edges) {
      // subdivide an edge into a path of length three
      std::uniform_int_distribution<std::size_t> pick(0, g.edges.size() - 1);
      int e = static_cast<int>(pick(rng));
      auto [a, b] = g.edges[static_cast<std::size_t>(e)];
      int w1 = g.add_vertex(g.black[static_cast<std::size_t>(b)]);
      int w2 = g.add_vertex(g.black[static_cast<std::size_t>(a)]);
      int e2 = static_cast<int>(g.edges.size());
      int e3 = e2 + 1;
      g.edges[static_cast<std::size_t>(e)] = {a, w1};
      g.edges.push_back({w1, w2});
      g.edges.push_back({w2, b});
      g.signs.push_back(1);
      g.signs.push_back(1);
      replace_in(b, e, e3);
      g.rotation[static_cast<std::size_t>(w1)] = {e, e2};
      g.rotation[static_cast<std::size_t>(w2)] = {e2, e3};
      continue;
    }
    // add an edge across a face between opposite colours
    auto faces = g.faces();
    std::uniform_int_distribution<std::size_t> pick_face(0, faces.size() - 1);
    const auto& f = faces[pick_face(rng)];
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) {
        int oi = f[i].second, oj = f[j].second;
        if (oi < oj && g.black[static_cast<std::size_t>(oi)] != g.black[static_cast<std::size_t>(oj)]) options.push_back({i, j});
      }
    if (options.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    auto [i, j] = options[pick(rng)];
    int ne = static_cast<int>(g.edges.size());
    auto insert_after_prev = [&](std::size_t k) {
      int origin = f[k].second;
      int prev_edge = f[(k + f.size() - 1) % f.size()].first;
      auto& r = g.rotation[static_cast<std::size_t>(origin)];
      auto it = std::find(r.begin(), r.end(), prev_edge);
      r.insert(it + 1, ne);
    };
    insert_after_prev(i);
    insert_after_prev(j);
    g.edges.push_back({f[i].second, f[j].second});
    g.signs.push_back(1);
  }
  return g;
}

Diagram connected_sum(const Diagram& d1, EdgeLabel e1, const Diagram& d2, EdgeLabel e2) {
  d1.head(e1);
  d2.head(e2);
  EdgeLabel offset = 0;
  for (EdgeLabel l : d1.labels()) offset = std::max(offset, l);
  std::vector<Crossing> cs = d1.crossings();
  const EdgeLabel e2s = e2 + offset;
  SlotRef h1 = d1.head(e1);
  cs[static_cast<std::size_t>(h1.crossing)].slots[static_cast<std::size_t>(h1.slot)] = e2s;
  SlotRef h2 = d2.head(e2);
  const auto base = static_cast<CrossingId>(cs.size());
  for (Crossing c : d2.crossings()) {
    for (auto& l : c.slots) l += offset;
    cs.push_back(c);
  }
  cs[static_cast<std::size_t>(base + h2.crossing)].slots[static_cast<std::size_t>(h2.slot)] = e1;
  return Diagram(std::move(cs), d1.free_loops() + d2.free_loops());
}

Diagram add_kink(const Diagram& d, EdgeLabel e, int sign) {
  SlotRef h = d.head(e);
  EdgeLabel top = 0;
  for (EdgeLabel l : d.labels()) top = std::max(top, l);
  const EdgeLabel loop = top + 1;
  const EdgeLabel onward = top + 2;
  std::vector<Crossing> cs = d.crossings();
  cs[static_cast<std::size_t>(h.crossing)].slots[static_cast<std::size_t>(h.slot)] = onward;
  if (sign > 0) {
    cs.push_back({{e, loop, loop, onward}, true});
  } else {
    cs.push_back({{e, onward, loop, loop}, false});
  }
  return Diagram(std::move(cs), d.free_loops());
}

}  // namespace knotfib
