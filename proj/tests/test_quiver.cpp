#include <doctest.h>

#include "support.hpp"

using namespace mckay;
using namespace mckay::test;

TEST_CASE("trivial group quiver") {
  const McKayQuiver q = build_mckay(LatticeEmbedding::identity(2));
  CHECK(q.vertex_count() == 1);
  CHECK(q.arrow_count() == 3);
  for (const Arrow& a : q.arrows()) CHECK(a.target == 0);
  const McKayQuiver q1 = build_mckay(LatticeEmbedding::identity(1));
  CHECK(elementary_cycles(q1).size() == 1);
}

TEST_CASE("1/2(1,1) quiver and cycles") {
  const McKayQuiver q = quiver(g12());
  CHECK(q.vertex_count() == 2);
  CHECK(q.arrow_count() == 4);
  for (const Arrow& a : q.arrows()) CHECK(a.target == 1 - a.source);
  const auto cycles = elementary_cycles(q);
  REQUIRE(cycles.size() == 2);
  std::set<std::vector<ArrowId>> got;
  for (const auto& c : cycles) got.insert(c.arrows);
  CHECK(got == std::set<std::vector<ArrowId>>{{q.arrow_id(0, 1), q.arrow_id(1, 2)},
                                              {q.arrow_id(1, 1), q.arrow_id(0, 2)}});
}

TEST_CASE("1/3(1,1,1) quiver") {
  const McKayQuiver q = quiver(g13());
  CHECK(q.vertex_count() == 3);
  for (const Arrow& a : q.arrows()) CHECK(a.target == (a.source + 1) % 3);
  CHECK(elementary_cycles(q).size() == 6);
}

TEST_CASE("degrees and cycle counts on random instances") {
  for (const Instance& inst : random_instances(31, 200, 8, 3)) {
    const McKayQuiver q = build_mckay(inst.embedding);
    const std::size_t n = q.dimension();
    const auto m = static_cast<std::size_t>(q.order());
    CHECK(q.arrow_count() == (n + 1) * m);
    std::vector<std::size_t> in(m, 0);
    for (ArrowId id = 0; id < q.arrow_count(); ++id) {
      const Arrow& a = q.arrow(id);
      ++in[a.target];
      IntVector x = q.vertex(a.source).rep;
      const IntVector al = inst.embedding.alpha(a.type);
      for (std::size_t i = 0; i < n; ++i) x[i] += al[i];
      CHECK(q.vertex_of(x) == a.target);
      CHECK(id == q.arrow_id(a.source, a.type));
    }
    for (std::size_t d : in) CHECK(d == n + 1);
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    const auto cycles = elementary_cycles(q);
    CHECK(cycles.size() == m * fact);
    for (const auto& c : cycles) {
      CHECK(c.types.front() == 1);
      // Closes up: the last arrow returns to the start.
      CHECK(q.arrow(c.arrows.back()).target == c.start);
    }
  }
}

TEST_CASE("is_cut examples") {
  const McKayQuiver q3 = quiver(g13());
  for (int t = 1; t <= 3; ++t) CHECK(is_cut(q3, trivial_cut(q3, t).arrows()));
  const McKayQuiver q = quiver(g12());
  CHECK(is_cut(q, ArrowSet(4, std::vector<ArrowId>{q.arrow_id(0, 1), q.arrow_id(0, 2)})));
  const ArrowSet bad(4, std::vector<ArrowId>{q.arrow_id(0, 1), q.arrow_id(1, 2)});
  CHECK_FALSE(is_cut(q, bad));
  CHECK(cut_violation(q, bad).has_value());
  try {
    (void)Cut::checked(q, bad);
    FAIL("expected NotACutError");
  } catch (const NotACutError& e) {
    CHECK(std::string(e.what()).find("more than once") != std::string::npos);
  }
  try {
    (void)Cut::checked(q, ArrowSet(4, std::vector<ArrowId>{q.arrow_id(0, 1)}));
    FAIL("expected NotACutError");
  } catch (const NotACutError& e) {
    CHECK(std::string(e.what()).find("elementary cycle uncovered") != std::string::npos);
  }
}

TEST_CASE("type_of examples") {
  const McKayQuiver q3 = quiver(g13());
  CHECK(type_of(q3, trivial_cut(q3, 1)) == TypeVector{{3, 0, 0}});
  CHECK(type_of(q3, cut_at(q3, 2)) == TypeVector{{1, 1, 1}});
  const McKayQuiver q1 = build_mckay(LatticeEmbedding::identity(2));
  CHECK(type_of(q1, trivial_cut(q1, 2)) == TypeVector{{0, 1, 0}});
  CHECK(TypeVector::trivial(2, 3, 1) == TypeVector{{3, 0, 0}});
}

TEST_CASE("cut quivers, sources and sinks") {
  const McKayQuiver q3 = quiver(g13());
  const Subquiver t1 = cut_quiver(q3, trivial_cut(q3, 1));
  CHECK(t1.arrows.size() == 6);
  for (const Arrow& a : t1.arrows) CHECK(a.type != 1);

  const Subquiver lin = cut_quiver(q3, cut_at(q3, 2));
  CHECK(lin.arrows.size() == 6);
  for (const Arrow& a : lin.arrows) CHECK(a.target == a.source + 1);
  CHECK(is_acyclic(lin));
  CHECK(sources(lin) == std::vector<VertexId>{0});
  CHECK(sinks(lin) == std::vector<VertexId>{2});

  const McKayQuiver q2 = quiver(g12());
  const Subquiver kron = cut_quiver(q2, cut_at(q2, 1));
  CHECK(kron.arrows.size() == 2);
  for (const Arrow& a : kron.arrows) CHECK((a.source == 0 && a.target == 1));
  CHECK(is_acyclic(kron));
  CHECK(sources(kron) == std::vector<VertexId>{0});
  CHECK(sinks(kron) == std::vector<VertexId>{1});

  CHECK_FALSE(is_acyclic(full_quiver(q3)));
}
