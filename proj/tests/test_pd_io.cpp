#include <doctest.h>

#include "knotfib/diagram.hpp"
#include "support.hpp"

using namespace knotfib;

TEST_SUITE("pd_io") {
  TEST_CASE("comments, whitespace and separators") {
    Diagram a = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    Diagram b = parse_pd("# trefoil\nX( 1, 4 ,2,5 )\n\n  X(3,6,4,1)   # second\nX(5,2,6,3)\n");
    CHECK(fingerprint(a) == fingerprint(b));
  }

  TEST_CASE("free loops") {
    Diagram d = parse_pd("U(2)");
    CHECK(d.crossing_count() == 0);
    CHECK(d.link_component_count() == 2);
    Diagram e = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) U(1)");
    CHECK(e.free_loops() == 1);
    CHECK(e.link_component_count() == 2);
    CHECK(serialize_pd(e).find("U(1)") != std::string::npos);
  }

  TEST_CASE("serialization round-trips the canonical form") {
    for (const auto& name : testing::corpus_names()) {
      CAPTURE(name);
      Diagram d = testing::corpus(name);
      const std::string text = serialize_pd(d);
      CHECK(fingerprint(parse_pd(text)) == fingerprint(d));
      CHECK(serialize_pd(parse_pd(text)) == text);
    }
  }

  TEST_CASE("syntax errors carry a position") {
    auto position = [](const char* text) {
      try {
        parse_pd(text);
      } catch (const ParseError& e) {
        return std::make_pair(e.line(), e.column());
      }
      return std::make_pair(0, 0);
    };
    CHECK(position("X(1,2,3)") == std::make_pair(1, 8));
    CHECK(position("X(1,4,2,5)\nY(3,6,4,1)") == std::make_pair(2, 1));
    CHECK(position("X(1,4,2,-5)").first == 1);
    CHECK(position("X(1,4,2,0)").first == 1);
    CHECK(position("X(1,4,2,5") == std::make_pair(1, 10));
    CHECK(position("U()").first == 1);
  }

  TEST_CASE("empty input is an error") {
    CHECK_THROWS_AS(parse_pd(""), ParseError);
    CHECK_THROWS_AS(parse_pd("# nothing\n"), ParseError);
  }

  TEST_CASE("huge labels are rejected") {
    CHECK_THROWS_AS(parse_pd("X(1,4,2,99999999999999999999)"), ParseError);
  }
}
