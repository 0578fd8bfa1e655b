#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "knotfib/conway.hpp"
#include "knotfib/diagram.hpp"
#include "knotfib/seifert.hpp"

namespace knotfib {

enum class MoveKind {
  untwist,
  split_link_reject,
  nested_desum,
  conn_sum_split,
  parallel_cut,
  opposite_parallel_witness,
  pattern_a,
  pattern_b,
  terminal_disk,
  terminal_hopf_annulus,
  terminal_pretzel,
  annulus_twist_mismatch,
};

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

/// Kind leaves a finished piece of a fiber surface.
bool is_terminal(MoveKind k);
/// Kind proves the surface is not a fiber.
bool is_witness(MoveKind k);

/// One reduction step.  `params` by kind:
///   untwist                    {x}
///   nested_desum               {circle}
///   conn_sum_split             {e1, e2}
///   parallel_cut               {x, partner}
///   opposite_parallel_witness  {x, y}
///   pattern_a / pattern_b      {y, u, v, K1 crossings...}; pattern_b has
///                              variant 1 (alternator) or 2 (dealternator)
///   terminal_pretzel           {n}
///   annulus_twist_mismatch     {sign sum}
/// `sign` is the Hopf band sign for parallel_cut, terminal_hopf_annulus and
/// terminal_pretzel (the sign of the length-one path).
struct Move {
  MoveKind kind = MoveKind::terminal_disk;
  std::vector<int> params;
  int sign = 0;
  int variant = 0;

  friend bool operator==(const Move&, const Move&) = default;
  std::string describe() const;
};

class StaleMove : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

std::optional<Move> terminal_check(const Diagram& d, const SeifertModel& m);
std::optional<Move> find_parallel_cut(const Diagram& d, const SeifertModel& m);

struct PatternCandidate {
  Move move;
  std::set<CrossingId> first;
  std::set<CrossingId> second;
};

/// All 2-sums along a band in search order, unverified.
std::vector<PatternCandidate> pattern_candidates(const Diagram& d, const SeifertModel& m, CrossingId dealternator);

struct PatternOptions {
  ConwayOptions conway;
};

/// First candidate whose children pass the verifier.
std::optional<Move> find_pattern_move(const Diagram& d, const SeifertModel& m, const PatternOptions& opts = {});

/// Children of a move.  Fails with StaleMove if the move does not fit d.
std::vector<Diagram> apply_move(const Diagram& d, const Move& mv);

/// Signs of the Hopf bands a terminal move stands for.
std::vector<int> terminal_hopf_signs(const Move& mv);

/// Conway relation a move must satisfy between parent and children: equality
/// across an untwist, a product across a connected sum, and for Murasugi sums
/// (nested desums, band 2-sums, Hopf deplumbings) multiplicativity of the
/// Seifert-matrix determinant, read off as the z^beta1 coefficient.
bool conway_relation_holds(MoveKind kind, const ConwayPolynomial& parent, int parent_beta1,
                           const std::vector<ConwayPolynomial>& children, const std::vector<int>& child_beta1);

/// Whether the Seifert graph is two vertices joined by n >= 2 edges of one sign.
bool is_standard_torus_graph(const SeifertModel& m);

}  // namespace knotfib
