#pragma once

// Oriented link diagrams on the sphere, stored as planar-diagram (PD) crossing
// records.  Slot order at a crossing is counterclockwise starting from the
// incoming under-strand: slot 0 = a (under, in), slot 2 = c (under, out),
// slots 1 and 3 carry the over-strand.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotfib {

using EdgeLabel = int;
using CrossingId = int;

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in PD text, with a 1-based position.
class ParseError : public DiagramError {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct Crossing {
  std::array<EdgeLabel, 4> slots{};
  // true: the over-strand enters at slot 1 and leaves at slot 3.
  bool over_forward = true;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct SlotRef {
  CrossingId crossing = -1;
  int slot = -1;

  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

/// A corner is the sector between slot i and slot i+1 (counterclockwise).
struct Corner {
  CrossingId crossing = -1;
  int index = -1;

  friend auto operator<=>(const Corner&, const Corner&) = default;
};

class Diagram {
 public:
  /// The 0-crossing unknot.
  Diagram() : free_loops_(1) { index(); }

  /// Validates every structural invariant; throws DiagramError otherwise.
  explicit Diagram(std::vector<Crossing> crossings, int free_loops = 0);

  /// Builds from raw PD quadruples, inferring over-strand orientation from
  /// the under-strand constraints and, failing that, from label succession.
  static Diagram from_pd(const std::vector<std::array<EdgeLabel, 4>>& quads, int free_loops = 0);

  static Diagram unlink(int components);

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int free_loops() const noexcept { return free_loops_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(CrossingId x) const;
  std::vector<EdgeLabel> labels() const;

  static bool is_over_slot(int slot) noexcept { return (slot & 1) != 0; }
  bool is_incoming(SlotRef s) const;
  EdgeLabel label_at(SlotRef s) const { return crossing(s.crossing).slots[s.slot]; }
  /// The end where the edge arrives at a crossing.
  SlotRef head(EdgeLabel e) const;
  /// The end where the edge leaves a crossing.
  SlotRef tail(EdgeLabel e) const;
  /// The other end of the edge occupying this slot.
  SlotRef opposite_end(SlotRef s) const;

  /// +1 when turning the under-strand direction a quarter turn
  /// counterclockwise gives the over-strand direction.
  int sign(CrossingId x) const;

  /// Faces as corner cycles.
  const std::vector<std::vector<Corner>>& faces() const noexcept { return faces_; }
  int face_of(Corner c) const { return corner_face_.at(static_cast<std::size_t>(c.crossing) * 4 + c.index); }

  /// Crossing sets of the connected pieces of the projection (free loops excluded).
  const std::vector<std::vector<CrossingId>>& projection_pieces() const noexcept { return pieces_; }
  /// Pieces of the projection, counting each crossingless loop as its own piece.
  int projection_component_count() const noexcept {
    return static_cast<int>(pieces_.size()) + free_loops_;
  }
  int link_component_count() const noexcept { return link_components_ + free_loops_; }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_;
  }

 private:
  void index();
  void validate() const;

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;

  std::map<EdgeLabel, std::array<SlotRef, 2>> edge_ends_;  // [head, tail]
  std::vector<std::vector<Corner>> faces_;
  std::vector<int> corner_face_;
  std::vector<std::vector<CrossingId>> pieces_;
  int link_components_ = 0;
};

int crossing_sign(const Diagram& d, CrossingId x);

// ---- PD text ----------------------------------------------------------------

Diagram parse_pd(std::string_view text);
/// Canonical relabeled form, one X(...) per line; crossingless loops as U(k).
std::string serialize_pd(const Diagram& d);

// ---- canonical form ---------------------------------------------------------

/// Relabeling normal form: labels 1..2c consecutive along components,
/// crossings numbered by first visit, minimal over all start edges.
Diagram canonical(const Diagram& d);
/// Stable identity string of the canonical form, including crossing signs.
std::string fingerprint(const Diagram& d);

// ---- alternation ------------------------------------------------------------

enum class AlternationKind { alternating, almost_alternating, k_almost };

struct AlternationClass {
  AlternationKind kind = AlternationKind::alternating;
  /// Number of switches needed: 0, 1, 2, or 3 meaning "at least 3".
  int switches = 0;
  /// All crossings whose single switch alternates the diagram (lowest first).
  std::vector<CrossingId> dealternator_candidates;

  CrossingId dealternator() const {
    return dealternator_candidates.empty() ? -1 : dealternator_candidates.front();
  }
  std::string describe() const;
};

/// Whether over/under strictly alternates along every strand.
bool is_alternating(const Diagram& d);
/// Throws DiagramError on a disconnected projection.
AlternationClass classify_alternation(const Diagram& d);

// ---- local moves ------------------------------------------------------------

std::vector<CrossingId> nugatory_crossings(const Diagram& d);
Diagram untwist(const Diagram& d, CrossingId x);
/// Oriented (Seifert) smoothing of one crossing.
Diagram smooth_crossing(const Diagram& d, CrossingId x);
Diagram switch_crossing(const Diagram& d, CrossingId x);
/// Switch every crossing.
Diagram mirror(const Diagram& d);
/// Reverse the orientation of every component.
Diagram reverse(const Diagram& d);
/// Keeps the listed crossings, smooths all others and drops the crossingless
/// loops that result.  The Seifert circles through kept crossings survive.
Diagram restrict_to(const Diagram& d, const std::set<CrossingId>& keep);

struct ConnectedSumSplit {
  Diagram first;
  Diagram second;
  EdgeLabel cut_a = 0;
  EdgeLabel cut_b = 0;
};

/// Performs the split along the curve crossing edges a and b, if that curve
/// is a valid connected-sum sphere.
std::optional<ConnectedSumSplit> connected_sum_cut(const Diagram& d, EdgeLabel a, EdgeLabel b);
/// First split in (label, label) order, or nothing if the diagram is prime.
std::optional<ConnectedSumSplit> connected_sum_split(const Diagram& d);

}  // namespace knotfib
