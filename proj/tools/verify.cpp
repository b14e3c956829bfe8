#include <algorithm>
#include <functional>
#include <set>

#include <mckay/oracle.hpp>

#include "cli.hpp"

namespace mckay::cli {

namespace {

class Suite {
 public:
  explicit Suite(VerifyReport& r) : r_(r) {}

  // Runs fn; a thrown exception or a returned message is a failure.
  void check(const std::string& name, const std::function<std::string()>& fn) {
    std::string msg;
    try {
      msg = fn();
    } catch (const std::exception& e) {
      msg = e.what();
    }
    if (msg.empty())
      r_.passed.push_back(name);
    else
      r_.failures.push_back(name + ": " + msg);
  }

  void notice(const std::string& s) { r_.notices.push_back(s); }

 private:
  VerifyReport& r_;
};

std::string tname(const TypeVector& t) { return to_string(t.gamma); }

std::string check_cut_basics(const McKayQuiver& q, const Cut& c, const TypeVector& gamma) {
  if (const auto bad = cut_violation(q, c.arrows()))
    return "elementary cycle at " + to_string(q.vertex(bad->start).rep) + " types " +
           to_string(std::vector<Int>(bad->types.begin(), bad->types.end())) + " met " +
           std::to_string(cycle_hits(*bad, c.arrows())) + " times";
  if (type_of(q, c) != gamma) return "type is " + tname(type_of(q, c));
  const HeightFunction h = height_from_cut(q, c);
  validate(q, h);
  if (cut_from_height(q, h) != c) return "cut -> height -> cut is not the identity";
  if (h.l1_values != h_gamma_on_basis(q.embedding(), gamma))
    return "L1 values differ from h_gamma";
  if (is_acyclic(cut_quiver(q, c)) != gamma.positive())
    return "acyclicity does not match positivity of the type";
  return {};
}

std::string check_degrees(const LatticeEmbedding& e, const TypeVector& gamma) {
  const std::size_t n = e.dimension();
  if (monomial_degree(e, IntVector(n + 1, 1), gamma) != 1) return "|x^1| != 1";
  for (std::size_t i = 0; i <= n; ++i) {
    IntVector y(n, 0);
    if (i < n)
      y[i] = 1;
    else
      std::fill(y.begin(), y.end(), -1);
    const Int k = e.element_order(y);
    IntVector ex(n + 1, 0);
    ex[i] = k;
    const Int deg = monomial_degree(e, ex, gamma);
    if (deg * e.order() != gamma[i] * k)
      return "pure power x_" + std::to_string(i + 1) + "^" + std::to_string(k) +
             " has degree " + std::to_string(deg);
  }
  return {};
}

std::string check_lattice(const McKayQuiver& q, const MutationLattice& lat) {
  const std::set<Cut> all(lat.cuts.begin(), lat.cuts.end());
  for (const Cut& c : lat.cuts) {
    const std::string basic = check_cut_basics(q, c, lat.type);
    if (!basic.empty()) return basic;
  }
  // Hasse diagram of the componentwise order equals the mutation edges.
  std::vector<std::pair<std::size_t, std::size_t>> mut;
  for (const HasseEdge& e : lat.hasse_edges) mut.emplace_back(e.lower, e.upper);
  std::sort(mut.begin(), mut.end());
  mut.erase(std::unique(mut.begin(), mut.end()), mut.end());
  if (mut != order_covers(lat.heights)) return "Hasse diagram differs from mutation edges";

  for (std::size_t i = 0; i < lat.cuts.size(); ++i)
    for (std::size_t j = i; j < lat.cuts.size(); ++j) {
      if (!all.count(meet(q, lat.cuts[i], lat.cuts[j])) ||
          !all.count(join(q, lat.cuts[i], lat.cuts[j])))
        return "meet or join leaves the set of cuts";
    }

  const Cut mx = max_element(q, lat.type);
  if (mx != lat.cuts[lat.max_index]) return "greedy maximum is not the lattice maximum";
  if (max_via_p(q, lat.type) != mx) return "max_via_p disagrees with max_element";
  if (min_element(q, lat.type) != lat.cuts[lat.min_index])
    return "greedy minimum is not the lattice minimum";
  std::size_t only_origin = 0;
  for (const Cut& c : lat.cuts)
    if (sources(cut_quiver(q, c)) == std::vector<VertexId>{0}) ++only_origin;
  if (only_origin != 1 || sources(cut_quiver(q, mx)) != std::vector<VertexId>{0})
    return "the maximum is not the unique cut whose only source is the origin";
  return {};
}

}  // namespace

Json VerifyReport::to_json() const {
  Json j;
  j["status"] = ok() ? "pass" : "fail";
  j["passed"] = passed.size();
  j["failures"] = failures;
  j["notices"] = notices;
  return j;
}

VerifyReport verify_instance(const GroupInput& g, Int budget, const std::optional<Json>& cut) {
  VerifyReport report;
  Suite s(report);
  const LatticeEmbedding& e = g.embedding;
  const McKayQuiver q = build_mckay(e);
  const Int m = e.order();
  const std::size_t n = e.dimension();

  s.check("embedding", [&]() -> std::string {
    if (determinant(e.hnf()) != m) return "det(B') != m";
    if (g.spec && group_order(*g.spec) != m) return "group order != m";
    if (e.representatives().size() != static_cast<std::size_t>(m)) return "wrong number of cosets";
    return {};
  });

  s.check("quiver", [&]() -> std::string {
    if (q.arrow_count() != static_cast<std::size_t>(m) * (n + 1)) return "wrong arrow count";
    std::vector<std::size_t> indeg(q.vertex_count(), 0);
    for (const Arrow& a : q.arrows()) ++indeg[a.target];
    for (std::size_t d : indeg)
      if (d != n + 1) return "a vertex has in-degree != n+1";
    for (int t = 1; t <= q.type_count(); ++t)
      if (!is_cut(q, trivial_cut(q, t).arrows())) return "trivial cut fails the cut condition";
    return {};
  });

  const TypeSimplexReport types = enumerate_types(e);
  s.check("types", [&]() -> std::string {
    for (int t = 1; t <= q.type_count(); ++t)
      if (std::find(types.all_types.begin(), types.all_types.end(),
                    TypeVector::trivial(n, m, t)) == types.all_types.end())
        return "trivial type missing";
    if (types.hollow != types.positive_types.empty()) return "hollow verdict inconsistent";
    return {};
  });

  for (const TypeVector& gamma : types.all_types) {
    s.check("construct " + tname(gamma),
            [&] { return check_cut_basics(q, construct_cut(q, gamma), gamma); });
    s.check("degrees " + tname(gamma), [&] { return check_degrees(e, gamma); });
  }

  std::vector<MutationLattice> lattices;
  for (const TypeVector& gamma : types.positive_types)
    s.check("lattice " + tname(gamma), [&] {
      lattices.push_back(enumerate_cut_lattice(q, gamma));
      return check_lattice(q, lattices.back());
    });

  if (g.spec && g.spec->generators.size() == 1) {
    s.check("juniors", [&]() -> std::string {
      std::set<IntVector> nontrivial;
      for (const TypeVector& t : types.all_types)
        if (std::count(t.gamma.begin(), t.gamma.end(), 0) < static_cast<long>(n)) nontrivial.insert(t.gamma);
      const auto j = juniors_cyclic(*g.spec);
      if (nontrivial != std::set<IntVector>(j.begin(), j.end()))
        return "nontrivial types differ from junior elements";
      return {};
    });
  }

  if (m > budget) {
    s.notice("oracle skipped: m = " + std::to_string(m) + " exceeds budget " +
             std::to_string(budget) + " (brute-force types)");
    s.notice("oracle skipped: m = " + std::to_string(m) + " exceeds budget " +
             std::to_string(budget) + " (brute-force lattices)");
  } else {
    s.check("oracle types", [&]() -> std::string {
      if (brute_force_types(q) != types.all_types)
        return "brute-force types differ from the divisibility conditions";
      return {};
    });
    for (const MutationLattice& lat : lattices)
      s.check("oracle lattice " + tname(lat.type), [&]() -> std::string {
        const auto bf = brute_force_cuts(q, lat.type);
        if (std::set<Cut>(bf.begin(), bf.end()) != std::set<Cut>(lat.cuts.begin(), lat.cuts.end()))
          return "mutation closure differs from brute-force cut set";
        return {};
      });
  }

  if (cut) {
    s.check("cut file", [&]() -> std::string {
      const CutInput in = parse_cut(q, *cut);
      const Cut c = Cut::checked(q, in.arrows);
      const TypeVector t = type_of(q, c);
      if (in.declared_type && *in.declared_type != t)
        return "declared type " + tname(*in.declared_type) + " but counted " + tname(t);
      return check_cut_basics(q, c, t);
    });
  }
  return report;
}

}  // namespace mckay::cli
