#include <algorithm>
#include <map>
#include <sstream>

#include "knotfib/diagram.hpp"

namespace knotfib {

namespace {

struct Labeled {
  std::vector<Crossing> crossings;  // new order, new labels starting at 1
};

bool less(const Labeled& a, const Labeled& b) {
  return std::lexicographical_compare(
      a.crossings.begin(), a.crossings.end(), b.crossings.begin(), b.crossings.end(),
      [](const Crossing& x, const Crossing& y) {
        if (x.slots != y.slots) return x.slots < y.slots;
        return x.over_forward < y.over_forward;
      });
}

// Relabels one projection piece starting the walk at edge `start`.
Labeled relabel_from(const Diagram& d, const std::vector<CrossingId>& piece, EdgeLabel start) {
  std::map<EdgeLabel, EdgeLabel> label;
  std::map<CrossingId, int> id;
  std::vector<CrossingId> order;
  EdgeLabel next = 1;

  auto walk = [&](EdgeLabel e) {
    while (!label.count(e)) {
      label[e] = next++;
      SlotRef h = d.head(e);
      if (id.emplace(h.crossing, static_cast<int>(order.size())).second) order.push_back(h.crossing);
      e = d.label_at({h.crossing, (h.slot + 2) % 4});
    }
  };

  walk(start);
  std::size_t total = piece.size() * 2;
  while (label.size() < total) {
    bool found = false;
    for (CrossingId x : order) {
      for (int s = 0; s < 4 && !found; ++s) {
        EdgeLabel e = d.label_at({x, s});
        if (!label.count(e)) {
          walk(e);
          found = true;
        }
      }
      if (found) break;
    }
    if (!found) throw DiagramError("internal: projection piece is not connected");
  }

  Labeled out;
  for (CrossingId x : order) {
    Crossing c = d.crossing(x);
    for (auto& l : c.slots) l = label.at(l);
    out.crossings.push_back(c);
  }
  return out;
}

Labeled canonical_piece(const Diagram& d, const std::vector<CrossingId>& piece) {
  std::optional<Labeled> best;
  for (CrossingId x : piece)
    for (int s = 0; s < 4; ++s) {
      if (d.is_incoming({x, s})) continue;  // every edge once, from its tail
      Labeled cand = relabel_from(d, piece, d.label_at({x, s}));
      if (!best || less(cand, *best)) best = std::move(cand);
    }
  return *best;
}

}  // namespace

Diagram canonical(const Diagram& d) {
  std::vector<Labeled> pieces;
  for (const auto& p : d.projection_pieces()) pieces.push_back(canonical_piece(d, p));
  std::sort(pieces.begin(), pieces.end(), less);
  std::vector<Crossing> all;
  EdgeLabel offset = 0;
  for (const auto& p : pieces) {
    for (Crossing c : p.crossings) {
      for (auto& l : c.slots) l += offset;
      all.push_back(c);
    }
    offset += static_cast<EdgeLabel>(p.crossings.size() * 2);
  }
  return Diagram(std::move(all), d.free_loops());
}

std::string fingerprint(const Diagram& d) {
  Diagram c = canonical(d);
  std::ostringstream os;
  for (const auto& x : c.crossings())
    os << "X(" << x.slots[0] << ',' << x.slots[1] << ',' << x.slots[2] << ',' << x.slots[3] << ')';
  os << '|';
  for (const auto& x : c.crossings()) os << (x.over_forward ? '+' : '-');
  os << "|U" << c.free_loops();
  return os.str();
}

}  // namespace knotfib
