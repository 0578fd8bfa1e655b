#include "knotfib/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "union_find.hpp"

namespace knotfib {

ParseError::ParseError(const std::string& what, int line, int column)
    : DiagramError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

// Seifert smoothing partner of an incoming slot.
int smoothing_out(const Crossing& c, int in_slot) {
  if (c.over_forward) return in_slot == 0 ? 3 : 2;  // a->d, b->c
  return in_slot == 0 ? 1 : 2;                      // a->b, d->c
}

bool slot_incoming(const Crossing& c, int slot) {
  switch (slot) {
    case 0: return true;
    case 2: return false;
    case 1: return c.over_forward;
    default: return !c.over_forward;
  }
}

enum class Reconnect { seifert, pass_through };

// Removes a set of crossings, joining the loose edge ends either along the
// oriented smoothing or straight through.  Loops with no crossing left become
// free loops.
Diagram remove_crossings(const Diagram& d, const std::set<CrossingId>& removed, Reconnect mode,
                         bool keep_free_loops) {
  std::vector<EdgeLabel> labels = d.labels();
  std::map<EdgeLabel, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
  detail::UnionFind uf(labels.size());

  for (CrossingId x : removed) {
    const Crossing& c = d.crossing(x);
    for (int in : {0, c.over_forward ? 1 : 3}) {
      int out = mode == Reconnect::seifert ? smoothing_out(c, in) : (in + 2) % 4;
      uf.unite(index[c.slots[in]], index[c.slots[out]]);
    }
  }

  std::vector<Crossing> kept;
  std::set<int> touched_roots;
  for (CrossingId x = 0; x < d.crossing_count(); ++x) {
    if (removed.count(x)) continue;
    Crossing c = d.crossing(x);
    for (auto& l : c.slots) {
      int root = uf.find(index[l]);
      touched_roots.insert(root);
      l = labels[static_cast<std::size_t>(root)];
    }
    kept.push_back(c);
  }

  std::set<int> loose_roots;
  for (CrossingId x : removed)
    for (EdgeLabel l : d.crossing(x).slots) {
      int root = uf.find(index[l]);
      if (!touched_roots.count(root)) loose_roots.insert(root);
    }

  int loops = keep_free_loops ? d.free_loops() + static_cast<int>(loose_roots.size()) : 0;
  if (kept.empty() && loops == 0) loops = 1;
  return Diagram(std::move(kept), loops);
}

// Rotation by a half turn about an axis in the projection plane: the cyclic
// order reverses and over/under exchange.  The crossing sign is preserved.
Crossing flipped(const Crossing& c) {
  const auto& s = c.slots;
  Crossing out;
  if (c.over_forward) {
    out.slots = {s[1], s[0], s[3], s[2]};
    out.over_forward = true;
  } else {
    out.slots = {s[3], s[2], s[1], s[0]};
    out.over_forward = false;
  }
  return out;
}

}  // namespace

// ---- Diagram ----------------------------------------------------------------

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw DiagramError("negative free loop count");
  index();
  validate();
}

Diagram Diagram::unlink(int components) {
  if (components < 1) throw DiagramError("an unlink needs at least one component");
  return Diagram({}, components);
}

const Crossing& Diagram::crossing(CrossingId x) const {
  if (x < 0 || x >= crossing_count()) throw DiagramError("unknown crossing id " + std::to_string(x));
  return crossings_[static_cast<std::size_t>(x)];
}

std::vector<EdgeLabel> Diagram::labels() const {
  std::vector<EdgeLabel> out;
  out.reserve(edge_ends_.size());
  for (const auto& [l, ends] : edge_ends_) out.push_back(l);
  return out;
}

bool Diagram::is_incoming(SlotRef s) const { return slot_incoming(crossing(s.crossing), s.slot); }

SlotRef Diagram::head(EdgeLabel e) const {
  auto it = edge_ends_.find(e);
  if (it == edge_ends_.end()) throw DiagramError("unknown edge label " + std::to_string(e));
  return it->second[0];
}

SlotRef Diagram::tail(EdgeLabel e) const {
  auto it = edge_ends_.find(e);
  if (it == edge_ends_.end()) throw DiagramError("unknown edge label " + std::to_string(e));
  return it->second[1];
}

SlotRef Diagram::opposite_end(SlotRef s) const {
  const auto& ends = edge_ends_.at(label_at(s));
  return ends[0] == s ? ends[1] : ends[0];
}

int Diagram::sign(CrossingId x) const { return crossing(x).over_forward ? +1 : -1; }

void Diagram::index() {
  edge_ends_.clear();
  std::map<EdgeLabel, std::array<int, 2>> counts;  // heads, tails
  for (CrossingId x = 0; x < crossing_count(); ++x) {
    const Crossing& c = crossings_[static_cast<std::size_t>(x)];
    for (int s = 0; s < 4; ++s) {
      EdgeLabel l = c.slots[s];
      bool in = slot_incoming(c, s);
      auto& cnt = counts[l];
      auto& ends = edge_ends_[l];
      if (in) {
        if (cnt[0]++ == 0) ends[0] = {x, s};
      } else {
        if (cnt[1]++ == 0) ends[1] = {x, s};
      }
    }
  }
  for (const auto& [l, cnt] : counts) {
    int total = cnt[0] + cnt[1];
    if (total != 2)
      throw DiagramError("label " + std::to_string(l) + " occurs " +
                         (total == 1 ? std::string("once") : std::to_string(total) + " times"));
    if (cnt[0] != 1)
      throw DiagramError("label " + std::to_string(l) + " is not traversed consistently (" +
                         (cnt[0] == 2 ? "two heads" : "two tails") + ")");
  }

  // Faces: leaving corner (x,i) along slot i+1 arrives at (y,j); the face
  // continues at corner (y,j).
  const std::size_t corners = crossings_.size() * 4;
  corner_face_.assign(corners, -1);
  faces_.clear();
  for (std::size_t start = 0; start < corners; ++start) {
    if (corner_face_[start] >= 0) continue;
    std::vector<Corner> face;
    Corner cur{static_cast<int>(start / 4), static_cast<int>(start % 4)};
    while (corner_face_[static_cast<std::size_t>(cur.crossing) * 4 + cur.index] < 0) {
      corner_face_[static_cast<std::size_t>(cur.crossing) * 4 + cur.index] = static_cast<int>(faces_.size());
      face.push_back(cur);
      SlotRef next = opposite_end({cur.crossing, (cur.index + 1) % 4});
      cur = {next.crossing, next.slot};
    }
    faces_.push_back(std::move(face));
  }

  detail::UnionFind uf(crossings_.size());
  for (const auto& [l, ends] : edge_ends_) uf.unite(ends[0].crossing, ends[1].crossing);
  std::map<int, std::vector<CrossingId>> by_root;
  for (CrossingId x = 0; x < crossing_count(); ++x) by_root[uf.find(x)].push_back(x);
  pieces_.clear();
  for (auto& [r, xs] : by_root) pieces_.push_back(std::move(xs));

  // Strand components.
  link_components_ = 0;
  std::set<EdgeLabel> seen;
  for (const auto& [l, ends] : edge_ends_) {
    if (seen.count(l)) continue;
    ++link_components_;
    EdgeLabel e = l;
    while (!seen.count(e)) {
      seen.insert(e);
      SlotRef h = edge_ends_[e][0];
      e = label_at({h.crossing, (h.slot + 2) % 4});
    }
  }
}

void Diagram::validate() const {
  std::vector<int> piece_of(crossings_.size(), -1);
  for (std::size_t p = 0; p < pieces_.size(); ++p)
    for (CrossingId x : pieces_[p]) piece_of[static_cast<std::size_t>(x)] = static_cast<int>(p);
  std::vector<int> face_count(pieces_.size(), 0);
  for (const auto& f : faces_) ++face_count[static_cast<std::size_t>(piece_of[static_cast<std::size_t>(f.front().crossing)])];
  for (std::size_t p = 0; p < pieces_.size(); ++p) {
    int v = static_cast<int>(pieces_[p].size());
    int e = 2 * v;
    int f = face_count[p];
    if (v - e + f != 2)
      throw DiagramError("code is not realizable on the sphere (V - E + F = " + std::to_string(v - e + f) +
                         " on the piece containing crossing " + std::to_string(pieces_[p].front()) + ")");
  }
}

Diagram Diagram::from_pd(const std::vector<std::array<EdgeLabel, 4>>& quads, int free_loops) {
  std::map<EdgeLabel, std::vector<SlotRef>> occ;
  for (CrossingId x = 0; x < static_cast<int>(quads.size()); ++x)
    for (int s = 0; s < 4; ++s) occ[quads[static_cast<std::size_t>(x)][s]].push_back({x, s});
  for (const auto& [l, where] : occ) {
    if (where.size() != 2)
      throw DiagramError("label " + std::to_string(l) + " occurs " +
                         (where.size() == 1 ? std::string("once") : std::to_string(where.size()) + " times"));
    if (l <= 0) throw DiagramError("label " + std::to_string(l) + " is not a positive integer");
  }
  auto other = [&](SlotRef s) {
    const auto& w = occ[quads[static_cast<std::size_t>(s.crossing)][s.slot]];
    return w[0] == s ? w[1] : w[0];
  };

  // 0 = unknown, 1 = forward (in at slot 1), 2 = backward.
  std::vector<int> flag(quads.size(), 0);
  auto incoming = [&](SlotRef s) -> std::optional<bool> {
    if (s.slot == 0) return true;
    if (s.slot == 2) return false;
    int f = flag[static_cast<std::size_t>(s.crossing)];
    if (f == 0) return std::nullopt;
    return (s.slot == 1) == (f == 1);
  };
  auto assign = [&](SlotRef s, bool in) {
    // s is an over slot with unknown flag
    bool forward = (s.slot == 1) == in;
    flag[static_cast<std::size_t>(s.crossing)] = forward ? 1 : 2;
  };

  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [l, where] : occ) {
        auto d0 = incoming(where[0]);
        auto d1 = incoming(where[1]);
        if (d0 && d1) {
          if (*d0 == *d1)
            throw DiagramError("label " + std::to_string(l) + " has inconsistent orientation");
        } else if (d0 && !d1) {
          assign(where[1], !*d0);
          changed = true;
        } else if (d1 && !d0) {
          assign(where[0], !*d1);
          changed = true;
        }
      }
    }
  };
  propagate();

  // Components that only ever pass over: orient by label succession.
  for (CrossingId x = 0; x < static_cast<int>(quads.size()); ++x) {
    if (flag[static_cast<std::size_t>(x)] != 0) continue;
    std::vector<EdgeLabel> seq;
    std::vector<SlotRef> arrivals;
    SlotRef cur{x, 3};
    do {
      seq.push_back(quads[static_cast<std::size_t>(cur.crossing)][cur.slot]);
      SlotRef in = other(cur);
      arrivals.push_back(in);
      cur = {in.crossing, (in.slot + 2) % 4};
    } while (!(cur.crossing == x && cur.slot == 3));
    auto count_succ = [](const std::vector<EdgeLabel>& s) {
      int n = 0;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (s[(i + 1) % s.size()] == s[i] + 1) ++n;
      return n;
    };
    std::vector<EdgeLabel> rev(seq.rbegin(), seq.rend());
    bool forward = count_succ(seq) >= count_succ(rev);
    for (SlotRef in : arrivals) {
      if (flag[static_cast<std::size_t>(in.crossing)] == 0) assign(in, forward);
    }
    propagate();
  }

  std::vector<Crossing> cs;
  cs.reserve(quads.size());
  for (std::size_t x = 0; x < quads.size(); ++x) cs.push_back({quads[x], flag[x] == 1});
  return Diagram(std::move(cs), free_loops);
}

int crossing_sign(const Diagram& d, CrossingId x) { return d.sign(x); }

// ---- alternation ------------------------------------------------------------

namespace {

std::size_t bad_edges(const Diagram& d, const std::vector<char>& switched) {
  std::size_t bad = 0;
  for (EdgeLabel l : d.labels()) {
    SlotRef t = d.tail(l);
    SlotRef h = d.head(l);
    bool over_t = Diagram::is_over_slot(t.slot) != (switched[static_cast<std::size_t>(t.crossing)] != 0);
    bool over_h = Diagram::is_over_slot(h.slot) != (switched[static_cast<std::size_t>(h.crossing)] != 0);
    if (over_t == over_h) ++bad;
  }
  return bad;
}

}  // namespace

bool is_alternating(const Diagram& d) {
  return bad_edges(d, std::vector<char>(static_cast<std::size_t>(d.crossing_count()), 0)) == 0;
}

std::string AlternationClass::describe() const {
  switch (kind) {
    case AlternationKind::alternating: return "alternating";
    case AlternationKind::almost_alternating: return "almost alternating";
    case AlternationKind::k_almost:
      return switches >= 3 ? std::string(">=3-almost alternating") : std::to_string(switches) + "-almost alternating";
  }
  return "unknown";
}

AlternationClass classify_alternation(const Diagram& d) {
  if (d.projection_component_count() > 1)
    throw DiagramError("classification needs a connected projection; split the diagram first");
  const auto n = static_cast<std::size_t>(d.crossing_count());
  std::vector<char> sw(n, 0);
  AlternationClass out;
  if (bad_edges(d, sw) == 0) return out;

  for (std::size_t x = 0; x < n; ++x) {
    sw[x] = 1;
    if (bad_edges(d, sw) == 0) out.dealternator_candidates.push_back(static_cast<CrossingId>(x));
    sw[x] = 0;
  }
  if (!out.dealternator_candidates.empty()) {
    out.kind = AlternationKind::almost_alternating;
    out.switches = 1;
    return out;
  }
  out.kind = AlternationKind::k_almost;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      sw[x] = sw[y] = 1;
      bool ok = bad_edges(d, sw) == 0;
      sw[x] = sw[y] = 0;
      if (ok) {
        out.switches = 2;
        return out;
      }
    }
  out.switches = 3;
  return out;
}

// ---- local moves ------------------------------------------------------------

std::vector<CrossingId> nugatory_crossings(const Diagram& d) {
  std::vector<CrossingId> out;
  for (CrossingId x = 0; x < d.crossing_count(); ++x) {
    std::set<int> fs;
    for (int i = 0; i < 4; ++i) fs.insert(d.face_of({x, i}));
    if (fs.size() < 4) out.push_back(x);
  }
  return out;
}

Diagram untwist(const Diagram& d, CrossingId x) {
  d.crossing(x);
  int p = -1;
  for (int i = 0; i < 2 && p < 0; ++i)
    if (d.face_of({x, i}) == d.face_of({x, i + 2})) p = i;
  if (p < 0) throw DiagramError("crossing " + std::to_string(x) + " is not nugatory");

  auto reach = [&](std::initializer_list<int> slots) {
    std::set<CrossingId> seen;
    std::queue<CrossingId> q;
    for (int s : slots) {
      SlotRef o = d.opposite_end({x, s});
      if (o.crossing != x && seen.insert(o.crossing).second) q.push(o.crossing);
    }
    while (!q.empty()) {
      CrossingId y = q.front();
      q.pop();
      for (int s = 0; s < 4; ++s) {
        SlotRef o = d.opposite_end({y, s});
        if (o.crossing != x && seen.insert(o.crossing).second) q.push(o.crossing);
      }
    }
    return seen;
  };
  std::set<CrossingId> side_a = reach({(p + 1) % 4, (p + 2) % 4});
  std::set<CrossingId> side_b = reach({(p + 3) % 4, p});
  for (CrossingId y : side_a)
    if (side_b.count(y)) throw DiagramError("crossing " + std::to_string(x) + " does not separate the diagram");

  const std::set<CrossingId>& flip = side_a.size() <= side_b.size() ? side_a : side_b;
  std::vector<Crossing> cs = d.crossings();
  for (CrossingId y : flip) cs[static_cast<std::size_t>(y)] = flipped(cs[static_cast<std::size_t>(y)]);
  Diagram turned(std::move(cs), d.free_loops());
  return remove_crossings(turned, {x}, Reconnect::pass_through, true);
}

Diagram smooth_crossing(const Diagram& d, CrossingId x) {
  d.crossing(x);
  return remove_crossings(d, {x}, Reconnect::seifert, true);
}

Diagram switch_crossing(const Diagram& d, CrossingId x) {
  std::vector<Crossing> cs = d.crossings();
  Crossing& c = cs.at(static_cast<std::size_t>(x));
  d.crossing(x);
  const auto s = c.slots;
  if (c.over_forward) {
    c.slots = {s[1], s[2], s[3], s[0]};
    c.over_forward = false;
  } else {
    c.slots = {s[3], s[0], s[1], s[2]};
    c.over_forward = true;
  }
  return Diagram(std::move(cs), d.free_loops());
}

Diagram mirror(const Diagram& d) {
  Diagram out = d;
  for (CrossingId x = 0; x < d.crossing_count(); ++x) out = switch_crossing(out, x);
  return out;
}

Diagram reverse(const Diagram& d) {
  std::vector<Crossing> cs = d.crossings();
  for (auto& c : cs) {
    const auto s = c.slots;
    c.slots = {s[2], s[3], s[0], s[1]};
  }
  return Diagram(std::move(cs), d.free_loops());
}

Diagram restrict_to(const Diagram& d, const std::set<CrossingId>& keep) {
  std::set<CrossingId> removed;
  for (CrossingId x = 0; x < d.crossing_count(); ++x)
    if (!keep.count(x)) removed.insert(x);
  return remove_crossings(d, removed, Reconnect::seifert, false);
}

std::optional<ConnectedSumSplit> connected_sum_cut(const Diagram& d, EdgeLabel a, EdgeLabel b) {
  if (a == b) return std::nullopt;
  auto side_faces = [&](EdgeLabel e) {
    SlotRef t = d.tail(e);
    return std::set<int>{d.face_of({t.crossing, t.slot}), d.face_of({t.crossing, (t.slot + 3) % 4})};
  };
  auto fa = side_faces(a);
  if (fa.size() != 2 || fa != side_faces(b)) return std::nullopt;

  // Components of the projection with edges a and b removed.
  detail::UnionFind uf(static_cast<std::size_t>(d.crossing_count()));
  for (EdgeLabel l : d.labels())
    if (l != a && l != b) uf.unite(d.head(l).crossing, d.tail(l).crossing);
  std::set<CrossingId> first, second;
  int root = uf.find(d.tail(a).crossing);
  for (CrossingId x = 0; x < d.crossing_count(); ++x) (uf.find(x) == root ? first : second).insert(x);
  if (first.empty() || second.empty()) return std::nullopt;
  int other_root = uf.find(*second.begin());
  for (CrossingId x : second)
    if (uf.find(x) != other_root) return std::nullopt;

  return ConnectedSumSplit{restrict_to(d, first), restrict_to(d, second), a, b};
}

std::optional<ConnectedSumSplit> connected_sum_split(const Diagram& d) {
  if (d.projection_component_count() != 1) return std::nullopt;
  std::vector<EdgeLabel> ls = d.labels();
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      if (auto s = connected_sum_cut(d, ls[i], ls[j])) return s;
  return std::nullopt;
}

}  // namespace knotfib
