#pragma once

#include <array>
#include <utility>
#include <vector>

#include "knotfib/diagram.hpp"

namespace knotfib {

using CircleId = int;

struct SeifertEdge {
  CrossingId crossing = -1;
  CircleId u = -1;  // circle through the incoming under-strand
  CircleId v = -1;  // circle through the incoming over-strand
  int sign = 0;
};

struct SeifertStats {
  int s = 0;  // circles
  int c = 0;  // crossings
  int k = 0;  // components of the Seifert graph
  int beta1 = 0;
  int chi = 0;
};

struct SeifertModel {
  /// Each circle as the cyclic list of diagram edges it runs along.
  std::vector<std::vector<EdgeLabel>> circles;
  /// Crossings in the order the circle passes them.
  std::vector<std::vector<CrossingId>> circle_crossings;
  std::map<EdgeLabel, CircleId> circle_of_edge;
  /// Indexed by crossing id.
  std::vector<SeifertEdge> edges;

  /// Gap regions: the complementary regions of the circles.  Crossingless
  /// loops have no recorded position and get region -1.
  int region_count = 0;
  std::vector<std::array<int, 2>> circle_regions;  // left, right
  std::vector<int> crossing_region;

  SeifertStats stats;

  int circle_count() const { return static_cast<int>(circles.size()); }
  /// Graph component id per circle.
  std::vector<int> graph_components() const;
};

SeifertModel build_seifert(const Diagram& d);

/// Circles with other circles on both sides, ascending.
std::vector<CircleId> nested_circles(const SeifertModel& m);

/// The crossings whose bands lie on the left side of a circle.
std::set<CrossingId> crossings_left_of(const SeifertModel& m, CircleId c);

/// Desums along a nested circle.  The first result holds the side containing
/// the lowest crossing id.
std::pair<Diagram, Diagram> split_nested(const Diagram& d, CircleId c);

struct ParallelPair {
  CrossingId x = -1;
  CrossingId y = -1;  // x < y
  bool adjacent = false;
  bool same_sign = false;
};

std::vector<ParallelPair> parallel_pairs(const SeifertModel& m, const Diagram& d);

}  // namespace knotfib
