#pragma once

#include <string>
#include <vector>

#include "knotfib/conway.hpp"
#include "knotfib/diagram.hpp"
#include "knotfib/moves.hpp"

namespace knotfib {

/// One node of a desumming tree.  Move parameters refer to the crossing and
/// label numbering of the canonical form of the node's diagram.
struct CertificateNode {
  std::string fingerprint;
  int beta1 = 0;
  Move move;
  std::vector<CertificateNode> children;

  friend bool operator==(const CertificateNode&, const CertificateNode&) = default;
};

std::string certificate_to_json(const CertificateNode& root, int indent = 2);
/// Throws std::invalid_argument on malformed input.
CertificateNode certificate_from_json(const std::string& text);

struct VerifyResult {
  bool ok = false;
  std::string message;  // empty when ok
  std::string path;     // child indices from the root, e.g. "0.1"
  explicit operator bool() const noexcept { return ok; }
};

struct VerifyOptions {
  ConwayOptions conway;
};

/// Replays every move from d and re-checks fingerprints, Betti-number
/// bookkeeping, terminal leaves and the Conway relations.
VerifyResult certificate_verify(const Diagram& d, const CertificateNode& cert, const VerifyOptions& opts = {});

/// Hopf band signs in tree order.  Verifies first; throws DiagramError if the
/// certificate does not verify against d.
std::vector<int> hopf_sign_report(const Diagram& d, const CertificateNode& cert, const VerifyOptions& opts = {});

/// Hopf band signs collected without verification.
std::vector<int> collect_hopf_signs(const CertificateNode& cert);

}  // namespace knotfib
