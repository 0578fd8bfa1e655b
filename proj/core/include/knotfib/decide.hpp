#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotfib/certificate.hpp"
#include "knotfib/conway.hpp"
#include "knotfib/diagram.hpp"
#include "knotfib/seifert.hpp"

namespace knotfib {

enum class WitnessKind {
  disconnected_surface,
  opposite_sign_parallel_pair,
  annulus_twist_mismatch,
  nonstandard_alternating_leaf,
  alexander_obstruction,
};

std::string to_string(WitnessKind k);

struct Witness {
  WitnessKind kind = WitnessKind::disconnected_surface;
  /// Canonical fingerprint of the piece the witness is about.
  std::string fingerprint;
  /// Crossing pair for opposite_sign_parallel_pair, sign sum for
  /// annulus_twist_mismatch.
  std::vector<int> data;
  ConwayPolynomial conway;  // alexander_obstruction only
  int beta1 = 0;
};

enum class VerdictKind { fibered, not_fibered, out_of_scope, stuck };

std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::stuck;
  std::optional<CertificateNode> certificate;  // fibered
  std::optional<Witness> witness;              // not_fibered
  std::string reason;                          // out_of_scope
  std::string stuck_fingerprint;               // stuck
};

/// A runtime cross-check failed; the move engine produced an unsound step.
class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DecideOptions {
  ConwayOptions conway;
  /// Check the Conway relations at every applied move.
  bool oracles = true;
};

Verdict decide_fiber(const Diagram& d, const DecideOptions& opts = {});

/// Re-derives a witness from the diagram piece it annotates.
bool witness_recheck(const Diagram& piece, const Witness& w, const ConwayOptions& opts = {});

}  // namespace knotfib
