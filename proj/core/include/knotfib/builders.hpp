#pragma once

// Constructors for standard diagram families.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "knotfib/diagram.hpp"

namespace knotfib {

/// Closure of a braid word on `strands` strands.  Letter +i is sigma_i,
/// -i its inverse (1-based).
Diagram braid_closure(int strands, const std::vector<int>& word);

/// Standard diagram of the (2,n) torus link, the closure of sigma_1^n
/// (n < 0 gives the mirror).
Diagram torus_2n(int n);

/// A plane multigraph with a 2-colouring and a rotation system.  Vertices
/// become Seifert circles drawn side by side, edges become crossings.
struct PlaneGraph {
  std::vector<bool> black;                 // per vertex
  std::vector<std::array<int, 2>> edges;   // endpoints
  std::vector<int> signs;                  // per edge, +1 or -1
  std::vector<std::vector<int>> rotation;  // per vertex, incident edges counterclockwise

  int vertex_count() const { return static_cast<int>(black.size()); }
  int add_vertex(bool is_black);
  /// Darts in face order; each face is a list of (edge, origin vertex).
  std::vector<std::vector<std::pair<int, int>>> faces() const;
};

/// Unnested diagram whose Seifert graph is `g`.  Throws if g is not bipartite
/// under its colouring.
Diagram plane_graph_diagram(const PlaneGraph& g);

/// Generalized theta: two poles joined by paths of the given (length, sign).
PlaneGraph theta_graph(const std::vector<std::pair<int, int>>& paths);
Diagram theta_diagram(const std::vector<std::pair<int, int>>& paths);

/// The pretzel diagram of type (2,-2,2p) as a generalized theta.
Diagram pretzel_2_m2_2p(int p);

/// Random 2-edge-connected plane bipartite multigraph with about `edges`
/// edges, all signs +1.
PlaneGraph random_plane_bipartite(std::mt19937_64& rng, int edges);

/// Band sum of two diagrams, joining edge e1 of d1 with edge e2 of d2.
Diagram connected_sum(const Diagram& d1, EdgeLabel e1, const Diagram& d2, EdgeLabel e2);

/// Adds a Reidemeister I kink on edge e; the new crossing has Diagram::sign
/// `sign` and is the last crossing id.
Diagram add_kink(const Diagram& d, EdgeLabel e, int sign);

}  // namespace knotfib
