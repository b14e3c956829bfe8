#include <doctest.h>

#include <mckay/io.hpp>

#include "support.hpp"

using namespace mckay;
using namespace mckay::test;

TEST_CASE("parse groups") {
  const GroupInput a = parse_group(std::string(R"({"n": 2, "generators": [{"order": 3, "weights": [1, 1, 1]}]})"));
  CHECK(a.spec.has_value());
  CHECK(a.embedding.hnf() == IntMatrix{{3, 2}, {0, 1}});

  const GroupInput b = parse_group(std::string(R"({"n": 2, "bprime": [[3, 2], [0, 1]]})"));
  CHECK_FALSE(b.spec.has_value());
  CHECK(b.embedding == a.embedding);

  CHECK_THROWS_AS(parse_group(std::string("{")), ParseError);
  CHECK_THROWS_AS(parse_group(std::string(R"({"generators": []})")), ParseError);
  CHECK_THROWS_AS(parse_group(std::string(R"({"n": 2})")), ParseError);
  CHECK_THROWS_AS(parse_group(std::string(R"({"n": 2, "bprime": [[1, 2], [2, 4]]})")), ParseError);
  CHECK_THROWS_AS(parse_group(std::string(R"({"n": 2, "generators": [{"order": "3"}]})")), ParseError);
  CHECK_THROWS_AS(parse_group(std::string(R"({"n": 2, "generators": [{"order": 3, "weights": [1, 1]}]})")),
                  InvalidSpecError);
}

TEST_CASE("parse types") {
  CHECK(parse_type("1,1,1") == TypeVector{{1, 1, 1}});
  CHECK(parse_type("2, 0") == TypeVector{{2, 0}});
  CHECK_THROWS_AS(parse_type("1,x"), ParseError);
  CHECK_THROWS_AS(parse_type(""), ParseError);
}

TEST_CASE("cut JSON round trip") {
  const McKayQuiver q = quiver(g13());
  const Cut c = cut_at(q, 2);
  const Json j = to_json(q, c);
  CHECK(j["type"] == Json::array({1, 1, 1}));
  CHECK(j["arrows"].size() == 3);
  CHECK(j["arrows"][0]["source"] == Json::array({2, 0}));
  const CutInput back = parse_cut(q, j);
  CHECK(back.arrows == c.arrows());
  CHECK(back.declared_type == TypeVector{{1, 1, 1}});
  // Sources need not be canonical.
  const Json alt = Json::parse(R"({"arrows": [{"source": [-1, 0], "arrow_type": 1}]})");
  CHECK(parse_cut(q, alt).arrows.contains(q.arrow_id(2, 1)));
  CHECK_THROWS_AS(parse_cut(q, Json::parse(R"({"arrows": [{"source": [0, 0], "arrow_type": 4}]})")),
                  ParseError);
}

TEST_CASE("height and report JSON") {
  const McKayQuiver q = quiver(g13());
  const Json h = to_json(q, height_from_cut(q, cut_at(q, 2)));
  CHECK(h["values"]["0,0"] == 0);
  CHECK(h["values"]["1,0"] == 1);
  CHECK(h["values"]["2,0"] == 2);
  const Json r = to_json(enumerate_types(q.embedding()));
  CHECK(r["types"].size() == 4);
  CHECK(r["positive"].size() == 1);
  CHECK(r["hollow"] == false);
}

TEST_CASE("DOT output") {
  const McKayQuiver q = quiver(g12());
  const std::string d = cut_dot(q, cut_at(q, 1));
  CHECK(d.find("digraph") == 0);
  CHECK(d.find("style=dashed") != std::string::npos);
  CHECK(quiver_dot(q).find("style=dashed") == std::string::npos);
  const std::string h = hasse_dot(q, enumerate_cut_lattice(q, TypeVector{{1, 1}}));
  CHECK(h.find("c0 -> c1 [label=\"1\"]") != std::string::npos);
}
