#include <doctest.h>

#include <random>

#include "knotfib/builders.hpp"
#include "knotfib/decide.hpp"
#include "mutations.hpp"
#include "oracle.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace knotfib;

TEST_SUITE("properties") {
  TEST_CASE("unnested diagrams: alternation is read off the band signs") {
    auto r = testing::fact_sign_alternation(240, 20261014);
    CHECK(r.checked >= 200);
    for (const auto& f : r.failures) FAIL_CHECK(f);
  }

  TEST_CASE("generated almost alternating diagrams: fibered means uniform Hopf signs opposite the dealternator") {
    std::mt19937_64 rng(77);
    int fibered = 0;
    for (int i = 0; i < 300; ++i) {
      PlaneGraph g = random_plane_bipartite(rng, 5 + i % 7);
      const int eps = (i % 2) ? 1 : -1;
      for (auto& s : g.signs) s = -eps;
      g.signs[rng() % g.signs.size()] = eps;
      Diagram d = plane_graph_diagram(g);
      auto cls = classify_alternation(d);
      REQUIRE(cls.kind == AlternationKind::almost_alternating);
      CHECK(d.sign(cls.dealternator()) == eps);
      Verdict v = decide_fiber(d);
      if (v.kind != VerdictKind::fibered) continue;
      ++fibered;
      CAPTURE(serialize_pd(d));
      REQUIRE(certificate_verify(d, *v.certificate));
      for (int s : collect_hopf_signs(*v.certificate)) CHECK(s == -eps);
    }
    CHECK(fibered >= 20);
  }

  TEST_CASE("oracle walk over every corpus certificate") {
    for (const auto& name : testing::corpus_names()) {
      Diagram d = testing::corpus(name);
      Verdict v = decide_fiber(d);
      if (!v.certificate) continue;
      CAPTURE(name);
      auto report = testing::walk_certificate(d, *v.certificate);
      for (const auto& f : report.failures) FAIL_CHECK(f);
      CHECK(report.nodes > 0);
      CHECK(is_monic_of_degree(conway(d), oracle::beta1(d)));
    }
  }

  TEST_CASE("generated diagrams: verdicts are stable and certificates verify") {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 120; ++i) {
      PlaneGraph g = random_plane_bipartite(rng, 4 + i % 8);
      for (auto& s : g.signs) s = (rng() % 4 == 0) ? -1 : 1;
      Diagram d = plane_graph_diagram(g);
      CAPTURE(serialize_pd(d));
      Verdict v = decide_fiber(d);
      Verdict r = decide_fiber(reverse(d));
      CHECK(to_string(v.kind) == to_string(r.kind));
      if (v.kind == VerdictKind::fibered) {
        CHECK(certificate_verify(d, *v.certificate));
        CHECK(is_monic_of_degree(conway(d), oracle::beta1(d)));
        auto walk = testing::walk_certificate(d, *v.certificate);
        for (const auto& f : walk.failures) FAIL_CHECK(f);
      }
    }
  }

  TEST_CASE("connected sums with fibered corpus knots") {
    Diagram tref = testing::corpus("trefoil_std");
    for (const char* name : {"fig8_braid", "six2_std", "theta_1_m3_m3", "unnested_aa_2"}) {
      CAPTURE(name);
      Diagram s = connected_sum(tref, 2, testing::corpus(name), 1);
      Verdict v = decide_fiber(s);
      REQUIRE(v.kind == VerdictKind::fibered);
      CHECK(certificate_verify(s, *v.certificate));
      CHECK(conway(s) == conway(tref) * conway(testing::corpus(name)));
    }
  }

  TEST_CASE("certificate mutations on generated diagrams") {
    std::mt19937_64 rng(555);
    int done = 0;
    for (int i = 0; i < 200 && done < 10; ++i) {
      PlaneGraph g = random_plane_bipartite(rng, 5 + i % 5);
      for (auto& s : g.signs) s = 1;
      g.signs[rng() % g.signs.size()] = -1;
      Diagram d = plane_graph_diagram(g);
      Verdict v = decide_fiber(d);
      if (v.kind != VerdictKind::fibered) continue;
      ++done;
      for (const auto& m : testing::single_node_mutations(*v.certificate)) {
        CAPTURE(m.what);
        CHECK_FALSE(certificate_verify(d, m.root));
      }
    }
    CHECK(done == 10);
  }
}
