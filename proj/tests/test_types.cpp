#include <doctest.h>

#include "support.hpp"

using namespace mckay;
using namespace mckay::test;

namespace {

std::set<IntVector> as_set(const std::vector<TypeVector>& ts) {
  std::set<IntVector> out;
  for (const auto& t : ts) out.insert(t.gamma);
  return out;
}

}  // namespace

TEST_CASE("type simplex examples") {
  const auto r2 = enumerate_types(embedding_from_spec(g12()));
  CHECK(as_set(r2.all_types) == std::set<IntVector>{{2, 0}, {0, 2}, {1, 1}});
  CHECK(as_set(r2.positive_types) == std::set<IntVector>{{1, 1}});
  CHECK_FALSE(r2.hollow);

  const auto r3 = enumerate_types(embedding_from_spec(g13()));
  CHECK(as_set(r3.all_types) == std::set<IntVector>{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}});
  CHECK(as_set(r3.positive_types) == std::set<IntVector>{{1, 1, 1}});

  const auto r4 = enumerate_types(embedding_from_spec(c2xc2()));
  CHECK(as_set(r4.all_types) == std::set<IntVector>{{4, 0, 0}, {0, 4, 0}, {0, 0, 4},
                                                    {2, 2, 0}, {2, 0, 2}, {0, 2, 2}});
  CHECK(r4.positive_types.empty());
  CHECK(r4.hollow);
  CHECK(r4.vertices.size() == 3);
  CHECK(std::is_sorted(r4.all_types.rbegin(), r4.all_types.rend()));
}

TEST_CASE("preprojective cut existence") {
  CHECK_FALSE(has_preprojective_cut(LatticeEmbedding::identity(1)).has_value());
  CHECK_FALSE(has_preprojective_cut(LatticeEmbedding::identity(3)).has_value());
  CHECK(has_preprojective_cut(embedding_from_spec(g13())) == TypeVector{{1, 1, 1}});
  CHECK_FALSE(has_preprojective_cut(embedding_from_spec(c2xc2())).has_value());
}

TEST_CASE("juniors") {
  CHECK(juniors_cyclic(g12()) == std::vector<IntVector>{{1, 1}});
  CHECK(juniors_cyclic(g13()) == std::vector<IntVector>{{1, 1, 1}});
  CHECK(juniors_cyclic(g112()) == std::vector<IntVector>{{1, 1, 2}, {2, 2, 0}});
  CHECK_THROWS_AS(juniors_cyclic(c2xc2()), InvalidSpecError);
}

TEST_CASE("monomial degrees") {
  const LatticeEmbedding e = embedding_from_spec(g13());
  CHECK(monomial_degree(e, IntVector{1, 1, 1}, TypeVector{{1, 1, 1}}) == 1);
  CHECK(monomial_degree(e, IntVector{1, 1, 1}, TypeVector{{3, 0, 0}}) == 1);
  CHECK(monomial_degree(e, IntVector{3, 0, 0}, TypeVector{{1, 1, 1}}) == 1);
  CHECK(monomial_degree(e, IntVector{3, 0, 0}, TypeVector{{3, 0, 0}}) == 3);
  CHECK_THROWS_AS(monomial_degree(e, IntVector{1, 0, 0}, TypeVector{{1, 1, 1}}),
                  std::invalid_argument);
}

TEST_CASE("divisibility conditions match brute force") {
  for (const Instance& inst : random_instances(51, 200, 6, 3)) {
    const McKayQuiver q = build_mckay(inst.embedding);
    const auto report = enumerate_types(inst.embedding);
    CHECK(brute_force_types(q) == report.all_types);
    CHECK(report.hollow == report.positive_types.empty());
    for (const TypeVector& t : simplex_points(q.dimension(), q.order()))
      CHECK(is_admissible_type(inst.embedding, t) ==
            (std::find(report.all_types.begin(), report.all_types.end(), t) !=
             report.all_types.end()));
  }
}
