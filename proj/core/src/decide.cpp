#include "knotfib/decide.hpp"

#include <algorithm>

#include "knotfib/moves.hpp"

namespace knotfib {

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::disconnected_surface: return "DisconnectedSurface";
    case WitnessKind::opposite_sign_parallel_pair: return "OppositeSignParallelPair";
    case WitnessKind::annulus_twist_mismatch: return "AnnulusTwistMismatch";
    case WitnessKind::nonstandard_alternating_leaf: return "NonStandardAlternatingLeaf";
    case WitnessKind::alexander_obstruction: return "AlexanderObstruction";
  }
  return "Unknown";
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::fibered: return "Fibered";
    case VerdictKind::not_fibered: return "NotFibered";
    case VerdictKind::out_of_scope: return "OutOfScope";
    case VerdictKind::stuck: return "Stuck";
  }
  return "Unknown";
}

namespace {

struct Engine {
  const DecideOptions& opts;

  std::optional<ConwayPolynomial> poly(const Diagram& d) const {
    if (!opts.oracles || d.crossing_count() > opts.conway.max_crossings) return std::nullopt;
    return conway(d, opts.conway);
  }

  Verdict witness(WitnessKind k, const std::string& fp, std::vector<int> data = {}) const {
    Verdict v;
    v.kind = VerdictKind::not_fibered;
    v.witness = Witness{k, fp, std::move(data), {}, 0};
    return v;
  }

  void check_relation(const Diagram& d, int beta1, const Move& mv, const std::vector<Diagram>& kids) const {
    auto whole = poly(d);
    if (!whole) return;
    std::vector<ConwayPolynomial> cp;
    std::vector<int> betas;
    for (const auto& k : kids) {
      auto p = poly(k);
      if (!p) return;
      cp.push_back(*p);
      betas.push_back(build_seifert(k).stats.beta1);
    }
    if (!conway_relation_holds(mv.kind, *whole, beta1, cp, betas))
      throw OracleFailure("Conway relation broken by " + mv.describe() + " on " + fingerprint(d) + ": parent " +
                          whole->to_string());
  }

  Verdict descend(const Diagram& d, const std::string& fp, const SeifertModel& m, const Move& mv) const {
    std::vector<Diagram> kids = apply_move(d, mv);
    check_relation(d, m.stats.beta1, mv, kids);
    CertificateNode node{fp, m.stats.beta1, mv, {}};
    std::vector<Verdict> results;
    for (const auto& k : kids) results.push_back(run(k));

    if (opts.oracles && mv.kind != MoveKind::untwist && mv.kind != MoveKind::parallel_cut) {
      int sum = 0;
      for (const auto& k : kids) sum += build_seifert(k).stats.beta1;
      if (sum != m.stats.beta1) throw OracleFailure("beta1 not additive across " + mv.describe());
    }

    for (auto want : {VerdictKind::not_fibered, VerdictKind::stuck, VerdictKind::out_of_scope})
      for (auto& r : results)
        if (r.kind == want) return r;
    for (auto& r : results) node.children.push_back(std::move(*r.certificate));
    Verdict v;
    v.kind = VerdictKind::fibered;
    v.certificate = std::move(node);
    return v;
  }

  Verdict leaf(const std::string& fp, const SeifertModel& m, const Move& mv) const {
    Verdict v;
    v.kind = VerdictKind::fibered;
    v.certificate = CertificateNode{fp, m.stats.beta1, mv, {}};
    return v;
  }

  Verdict run(const Diagram& raw) const {
    const Diagram d = canonical(raw);
    const std::string fp = fingerprint(d);
    const SeifertModel m = build_seifert(d);

    if (d.projection_component_count() > 1 || m.stats.k > 1) return witness(WitnessKind::disconnected_surface, fp);

    if (auto nug = nugatory_crossings(d); !nug.empty())
      return descend(d, fp, m, Move{MoveKind::untwist, {nug.front()}, 0, 0});
    if (auto nested = nested_circles(m); !nested.empty())
      return descend(d, fp, m, Move{MoveKind::nested_desum, {nested.front()}, 0, 0});
    if (auto cut = connected_sum_split(d))
      return descend(d, fp, m, Move{MoveKind::conn_sum_split, {cut->cut_a, cut->cut_b}, 0, 0});

    const AlternationClass cls = classify_alternation(d);
    if (cls.switches >= 2) {
      Verdict v;
      v.kind = VerdictKind::out_of_scope;
      v.reason = cls.describe();
      return v;
    }
    if (cls.kind == AlternationKind::alternating && d.crossing_count() > 0 && !is_standard_torus_graph(m))
      return witness(WitnessKind::nonstandard_alternating_leaf, fp);

    if (auto t = terminal_check(d, m)) {
      if (t->kind == MoveKind::annulus_twist_mismatch)
        return witness(WitnessKind::annulus_twist_mismatch, fp, t->params);
      return leaf(fp, m, *t);
    }
    if (auto p = find_parallel_cut(d, m)) {
      if (p->kind == MoveKind::opposite_parallel_witness)
        return witness(WitnessKind::opposite_sign_parallel_pair, fp, p->params);
      return descend(d, fp, m, *p);
    }
    if (auto p = find_pattern_move(d, m, PatternOptions{opts.conway})) return descend(d, fp, m, *p);

    if (d.crossing_count() <= opts.conway.max_crossings) {
      ConwayPolynomial c = conway(d, opts.conway);
      if (!is_monic_of_degree(c, m.stats.beta1)) {
        Verdict v = witness(WitnessKind::alexander_obstruction, fp);
        v.witness->conway = c;
        v.witness->beta1 = m.stats.beta1;
        return v;
      }
    }
    Verdict v;
    v.kind = VerdictKind::stuck;
    v.stuck_fingerprint = fp;
    return v;
  }
};

}  // namespace

Verdict decide_fiber(const Diagram& d, const DecideOptions& opts) {
  Engine e{opts};
  const Diagram c = canonical(d);
  if (c.projection_component_count() > 1)
    return e.witness(WitnessKind::disconnected_surface, fingerprint(c));
  return e.run(c);
}

bool witness_recheck(const Diagram& piece, const Witness& w, const ConwayOptions& opts) {
  const Diagram d = canonical(piece);
  if (fingerprint(d) != w.fingerprint) return false;
  const SeifertModel m = build_seifert(d);
  switch (w.kind) {
    case WitnessKind::disconnected_surface: return d.projection_component_count() > 1 || m.stats.k > 1;
    case WitnessKind::opposite_sign_parallel_pair: {
      if (w.data.size() != 2) return false;
      for (const auto& p : parallel_pairs(m, d))
        if (p.x == w.data[0] && p.y == w.data[1]) return !p.same_sign;
      return false;
    }
    case WitnessKind::annulus_twist_mismatch: {
      auto t = terminal_check(d, m);
      return t && t->kind == MoveKind::annulus_twist_mismatch && t->params == w.data && w.data.at(0) != 2 &&
             w.data.at(0) != -2;
    }
    case WitnessKind::nonstandard_alternating_leaf:
      return is_alternating(d) && nugatory_crossings(d).empty() && nested_circles(m).empty() &&
             !connected_sum_split(d) && !is_standard_torus_graph(m);
    case WitnessKind::alexander_obstruction: {
      ConwayPolynomial c = conway(d, opts);
      return c == w.conway && m.stats.beta1 == w.beta1 && !is_monic_of_degree(c, m.stats.beta1);
    }
  }
  return false;
}

}  // namespace knotfib
