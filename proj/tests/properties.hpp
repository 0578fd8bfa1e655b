#pragma once

#include <random>
#include <string>
#include <vector>

#include "knotfib/builders.hpp"
#include "knotfib/certificate.hpp"
#include "knotfib/conway.hpp"
#include "knotfib/moves.hpp"
#include "oracle.hpp"

namespace testing {

struct SuiteResult {
  int checked = 0;
  std::vector<std::string> failures;
};

// Unnested diagrams from random plane graphs with k bands of the minority
// sign: k = 0 must classify alternating, k = 1 almost alternating with the
// odd band as dealternator, k >= 2 neither.
inline SuiteResult fact_sign_alternation(int count, std::uint64_t seed) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    knotfib::PlaneGraph g = knotfib::random_plane_bipartite(rng, 4 + static_cast<int>(rng() % 10));
    const int n = static_cast<int>(g.signs.size());
    const int major = (rng() & 1) ? 1 : -1;
    int k = static_cast<int>(rng() % 4);
    if (2 * k >= n) k = 0;
    for (auto& s : g.signs) s = major;
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int j = 0; j < k; ++j) g.signs[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] = -major;
    knotfib::Diagram d = knotfib::plane_graph_diagram(g);

    // signs read back from the diagram by the right-hand rule
    auto std_signs = oracle::standard_signs(d);
    int plus = 0;
    for (int s : std_signs) plus += s > 0;
    const int minority = std::min(plus, n - plus);

    auto cls = knotfib::classify_alternation(d);
    ++r.checked;
    const std::string tag = "diagram " + std::to_string(i) + " (" + knotfib::serialize_pd(d) + ")";
    if ((minority == 0) != (cls.kind == knotfib::AlternationKind::alternating))
      r.failures.push_back(tag + ": uniform signs vs alternating disagree");
    if ((minority == 1) != (cls.kind == knotfib::AlternationKind::almost_alternating))
      r.failures.push_back(tag + ": one odd sign vs almost alternating disagree");
    if (minority == 1 && cls.kind == knotfib::AlternationKind::almost_alternating) {
      const int odd = plus == 1 ? 1 : -1;
      if (std_signs[static_cast<std::size_t>(cls.dealternator())] != odd)
        r.failures.push_back(tag + ": dealternator is not the odd band");
    }
  }
  return r;
}

struct WalkReport {
  int nodes = 0;
  std::vector<std::string> failures;
  // literal product checks of the full polynomial at 2-child nodes and
  // plus-or-minus z factor checks at parallel cuts
  int literal_checked = 0;
  int literal_mismatches = 0;
  std::string literal_example;
};

inline std::int64_t top_coefficient(const knotfib::ConwayPolynomial& p, int beta1) {
  return p[static_cast<std::size_t>(beta1)];
}

// Replays a certificate and checks the bookkeeping at every node with the
// test-side beta1 oracle.
inline void walk_node(const knotfib::Diagram& raw, const knotfib::CertificateNode& n, const std::string& path,
                      WalkReport& out) {
  using namespace knotfib;
  ++out.nodes;
  const Diagram d = canonical(raw);
  const int b = oracle::beta1(d);
  if (b != n.beta1) out.failures.push_back(path + ": beta1 " + std::to_string(b) + " vs recorded " + std::to_string(n.beta1));
  const ConwayPolynomial whole = conway(d);
  if (is_terminal(n.move.kind)) {
    if (!is_monic_of_degree(whole, b)) out.failures.push_back(path + ": terminal leaf with non-monic polynomial");
    return;
  }
  const auto kids = apply_move(d, n.move);
  std::vector<int> kb;
  std::vector<ConwayPolynomial> kc;
  for (const auto& k : kids) {
    kb.push_back(oracle::beta1(k));
    kc.push_back(conway(k));
  }
  const std::string what = path + " " + n.move.describe();
  switch (n.move.kind) {
    case MoveKind::untwist:
      if (kb.at(0) != b) out.failures.push_back(what + ": beta1 changed");
      if (kc.at(0) != whole) out.failures.push_back(what + ": polynomial changed");
      break;
    case MoveKind::parallel_cut: {
      if (kb.at(0) != b - 1) out.failures.push_back(what + ": beta1 did not drop by one");
      const std::int64_t p = top_coefficient(whole, b), q = top_coefficient(kc[0], b - 1);
      if (p != q && p != -q) out.failures.push_back(what + ": Seifert determinant changed");
      ++out.literal_checked;
      ConwayPolynomial z = ConwayPolynomial::z();
      if (whole != z * kc[0] && whole != -(z * kc[0])) {
        ++out.literal_mismatches;
        if (out.literal_example.empty())
          out.literal_example = what + ": " + whole.to_string() + " vs z*(" + kc[0].to_string() + ")";
      }
      break;
    }
    default: {
      if (kids.size() != 2) {
        out.failures.push_back(what + ": expected two children");
        return;
      }
      if (kb[0] + kb[1] != b) out.failures.push_back(what + ": beta1 not additive");
      if (top_coefficient(whole, b) != top_coefficient(kc[0], kb[0]) * top_coefficient(kc[1], kb[1]))
        out.failures.push_back(what + ": Seifert determinant not multiplicative");
      ++out.literal_checked;
      if (whole != kc[0] * kc[1]) {
        ++out.literal_mismatches;
        if (out.literal_example.empty())
          out.literal_example = what + ": " + whole.to_string() + " vs (" + kc[0].to_string() + ")(" + kc[1].to_string() + ")";
      }
      break;
    }
  }
  for (std::size_t i = 0; i < kids.size() && i < n.children.size(); ++i)
    walk_node(kids[i], n.children[i], path + "." + std::to_string(i), out);
}

inline WalkReport walk_certificate(const knotfib::Diagram& d, const knotfib::CertificateNode& root) {
  WalkReport r;
  walk_node(d, root, "root", r);
  return r;
}

}  // namespace testing
