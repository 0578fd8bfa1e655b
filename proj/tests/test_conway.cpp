#include <doctest.h>

#include <thread>

#include "knotfib/builders.hpp"
#include "knotfib/conway.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace knotfib;

namespace {

ConwayPolynomial P(std::vector<std::int64_t> c) { return ConwayPolynomial(std::move(c)); }

ConwayPolynomial negate_z(const ConwayPolynomial& p) {
  auto c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return ConwayPolynomial(c);
}

}  // namespace

TEST_SUITE("conway") {
  TEST_CASE("polynomial arithmetic") {
    CHECK(P({1, 0, 0}).degree() == 0);
    CHECK(P({}).is_zero());
    CHECK((P({1, 1}) * P({1, -1})) == P({1, 0, -1}));
    CHECK((P({1, 2}) - P({1, 2})).is_zero());
    CHECK((-P({0, 1})) == P({0, -1}));
    CHECK(P({1, 0, 1}).to_string() == "1 + z^2");
    CHECK(P({0, -1}).to_string() == "-z");
    CHECK(P({}).to_string() == "0");
    CHECK(P({1, 0, -2, 0, -1}).to_string() == "1 - 2z^2 - z^4");
  }

  TEST_CASE("small values") {
    CHECK(conway(Diagram()) == P({1}));
    CHECK(conway(Diagram::unlink(2)).is_zero());
    CHECK(conway(parse_pd("X(1,2,2,1)")) == P({1}));
    CHECK(conway(testing::corpus("trefoil_std")) == P({1, 0, 1}));
    CHECK(conway(testing::corpus("fig8_braid")) == P({1, 0, -1}));
    CHECK(conway(testing::corpus("five2_std")) == P({1, 0, 2}));
    CHECK(conway(testing::corpus("six1_std")) == P({1, 0, -2}));
    CHECK(conway(testing::corpus("six2_std")) == P({1, 0, -1, 0, -1}));
    CHECK(conway(testing::corpus("knot9_42")) == P({1, 0, -2, 0, -1}));
    CHECK(conway(testing::corpus("knot9_44")) == P({1, 0, 0, 0, 1}));
    CHECK(conway(testing::corpus("knot9_45")) == P({1, 0, 2, 0, -1}));
  }

  TEST_CASE("torus links follow the skein recurrence") {
    for (int n = 1; n <= 10; ++n) {
      CAPTURE(n);
      Diagram d = torus_2n(n);
      const int s = oracle::standard_signs(d).front();
      CHECK(conway(d) == oracle::torus_conway(n, s));
      CHECK(conway(mirror(d)) == oracle::torus_conway(n, -s));
    }
  }

  TEST_CASE("Alexander polynomial agrees with the Fox matrix oracle") {
    for (const auto& name : testing::corpus_names()) {
      CAPTURE(name);
      Diagram d = testing::corpus(name);
      CHECK(oracle::alexander_of_conway(conway(d)) == oracle::fox_alexander(d));
    }
  }

  TEST_CASE("skein relation at every crossing of every corpus diagram") {
    for (const auto& name : testing::corpus_names()) {
      CAPTURE(name);
      Diagram d = testing::corpus(name);
      const auto sg = oracle::standard_signs(d);
      const ConwayPolynomial whole = conway(d);
      for (CrossingId x = 0; x < d.crossing_count(); ++x) {
        CAPTURE(x);
        ConwayPolynomial other = conway(switch_crossing(d, x));
        ConwayPolynomial zero = conway(smooth_crossing(d, x));
        ConwayPolynomial plus = sg[static_cast<std::size_t>(x)] > 0 ? whole : other;
        ConwayPolynomial minus = sg[static_cast<std::size_t>(x)] > 0 ? other : whole;
        CHECK(plus - minus == ConwayPolynomial::z() * zero);
      }
    }
  }

  TEST_CASE("mirror substitutes -z, reversal changes nothing") {
    for (const char* name : {"trefoil_std", "hopf", "torus_2_4", "ten151_aa", "theta_1_m3_m3_m3"}) {
      CAPTURE(name);
      Diagram d = testing::corpus(name);
      CHECK(conway(mirror(d)) == negate_z(conway(d)));
      CHECK(conway(reverse(d)) == conway(d));
    }
  }

  TEST_CASE("cache does not change results") {
    Diagram d = testing::corpus("ten151_table");
    ConwayOptions nocache;
    nocache.use_cache = false;
    clear_conway_cache();
    ConwayPolynomial a = conway(d);
    ConwayPolynomial b = conway(d);
    ConwayPolynomial c = conway(d, nocache);
    CHECK(a == b);
    CHECK(a == c);
  }

  TEST_CASE("concurrent evaluation") {
    clear_conway_cache();
    std::vector<ConwayPolynomial> out(8);
    std::vector<std::thread> pool;
    for (int i = 0; i < 8; ++i)
      pool.emplace_back([&, i] { out[static_cast<std::size_t>(i)] = conway(testing::corpus(i % 2 ? "knot9_42" : "ten151_aa")); });
    for (auto& t : pool) t.join();
    for (int i = 0; i < 8; ++i) CHECK(out[static_cast<std::size_t>(i)] == out[static_cast<std::size_t>(i % 2)]);
  }

  TEST_CASE("crossing bound") {
    ConwayOptions small;
    small.max_crossings = 5;
    CHECK_THROWS_AS(conway(testing::corpus("six1_std"), small), BoundExceeded);
    CHECK_NOTHROW(conway(testing::corpus("five2_std"), small));
  }

  TEST_CASE("monicity and the Seifert determinant") {
    CHECK(is_monic_of_degree(P({1, 0, 1}), 2));
    CHECK(is_monic_of_degree(P({1, 0, -1}), 2));
    CHECK_FALSE(is_monic_of_degree(P({1, 0, 2}), 2));
    CHECK_FALSE(is_monic_of_degree(P({1, 0, 1}), 4));
    CHECK(seifert_determinant(P({1, 0, 3}), 2) == 3);
    CHECK(seifert_determinant(P({1, 0, 3}), 4) == 0);
    CHECK_THROWS_AS(seifert_determinant(P({1, 0, 3}), 1), std::logic_error);
  }

  TEST_CASE("genus-two plumbing obstruction") {
    CHECK(mm_forbidden(P({1, 0, 0, 0, 1})));
    CHECK(mm_forbidden(P({1, 0, 4, 0, 1})));
    CHECK(mm_forbidden(P({1, 0, -2, 0, -1})));
    CHECK(mm_forbidden(P({1, 0, 2, 0, -1})));
    CHECK_FALSE(mm_forbidden(P({1, 0, 1, 0, 1})));
    CHECK_FALSE(mm_forbidden(P({1, 0, -1, 0, -1})));  // 6_2 is a Hopf plumbing
    CHECK_FALSE(mm_forbidden(P({1, 0, 1})));
    CHECK_FALSE(mm_forbidden(P({1, 0, 0, 0, 2})));
  }

  TEST_CASE("Alexander substitution") {
    AlexanderPolynomial a = alexander_from_conway(P({1, 0, 1}));
    CHECK(a.min_power == -2);
    CHECK(a.coeffs == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(a.to_string() == "t^-1 - 1 + t");
    AlexanderPolynomial h = alexander_from_conway(P({0, 1}));
    CHECK(h.coeffs == std::vector<std::int64_t>{-1, 0, 1});
  }
}
