#pragma once

// Shared fixtures for the test binaries: the standard small groups, a
// seeded random spec generator and slow reference implementations.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <mckay/cuts.hpp>
#include <mckay/groupspec.hpp>
#include <mckay/height.hpp>
#include <mckay/mutation.hpp>
#include <mckay/oracle.hpp>
#include <mckay/types.hpp>

namespace mckay::test {

inline GroupSpec cyclic(Int order, IntVector weights) {
  return GroupSpec{weights.size() - 1, {Generator{order, std::move(weights)}}};
}

inline GroupSpec g12() { return cyclic(2, {1, 1}); }
inline GroupSpec g13() { return cyclic(3, {1, 1, 1}); }
inline GroupSpec g14() { return cyclic(4, {1, 1, 1, 1}); }
inline GroupSpec g112() { return cyclic(4, {1, 1, 2}); }
inline GroupSpec g123() { return cyclic(6, {1, 2, 3}); }
inline GroupSpec c2xc2() { return GroupSpec{2, {{2, {1, 1, 0}}, {2, {1, 0, 1}}}}; }

inline McKayQuiver quiver(const GroupSpec& s) { return build_mckay(embedding_from_spec(s)); }

/// All arrows leaving v.
inline Cut cut_at(const McKayQuiver& q, VertexId v) {
  ArrowSet s(q.arrow_count());
  for (int t = 1; t <= q.type_count(); ++t) s.insert(q.arrow_id(v, t));
  return Cut::checked(q, std::move(s));
}

inline VertexId vertex(const McKayQuiver& q, IntVector rep) { return q.vertex_of(rep); }

struct Instance {
  GroupSpec spec;
  LatticeEmbedding embedding;
};

/// Distinct embeddings from random faithful specs with m <= max_m and
/// n <= max_n; one or two generators per spec.
inline std::vector<Instance> random_instances(unsigned seed, int draws, Int max_m,
                                              std::size_t max_n) {
  std::mt19937 rng(seed);
  std::vector<Instance> out;
  std::set<std::vector<IntVector>> seen;
  for (int d = 0; d < draws; ++d) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    const int gens = std::uniform_int_distribution<int>(1, 2)(rng);
    GroupSpec spec{n, {}};
    for (int g = 0; g < gens; ++g) {
      const Int order = std::uniform_int_distribution<Int>(2, max_m)(rng);
      IntVector w(n + 1);
      Int sum = 0;
      for (std::size_t i = 0; i < n; ++i) {
        w[i] = std::uniform_int_distribution<Int>(0, order - 1)(rng);
        sum += w[i];
      }
      w[n] = checked::mod(-sum, order);
      spec.generators.push_back({order, w});
    }
    try {
      LatticeEmbedding e = embedding_from_spec(spec);
      if (e.order() > max_m) continue;
      std::vector<IntVector> key;
      for (std::size_t r = 0; r < n; ++r) key.push_back(e.hnf().row(r));
      if (!seen.insert(key).second) continue;
      out.push_back({std::move(spec), std::move(e)});
    } catch (const InvalidSpecError&) {
    }
  }
  return out;
}

/// Every point of the simplex gamma >= 0, sum m.
inline std::vector<TypeVector> simplex_points(std::size_t n, Int m) {
  std::vector<TypeVector> out;
  IntVector g(n + 1, 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
    if (i == n) {
      g[n] = left;
      out.push_back({g});
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      g[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, m);
  return out;
}

/// p(x) by direct search over y in L1 in a coordinate box:
/// max over y of <y,gamma>/m + min(0, min_i (x_i - y_i)).
inline Int p_box(const LatticeEmbedding& e, const IntVector& x, const TypeVector& gamma) {
  const std::size_t n = e.dimension();
  const Int m = e.order();
  Int norm = 0;
  for (Int v : x) norm = std::max(norm, v < 0 ? -v : v);
  const Int radius = norm + m + 1;
  std::optional<Int> best;
  IntVector y(n, -radius);
  for (;;) {
    if (e.contains(y)) {
      Int dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += y[i] * gamma[i];
      Int slack = 0;
      for (std::size_t i = 0; i < n; ++i) slack = std::min(slack, x[i] - y[i]);
      const Int z = dot / m + slack;
      if (!best || z > *best) best = z;
    }
    std::size_t k = 0;
    while (k < n && y[k] == radius) y[k++] = -radius;
    if (k == n) break;
    ++y[k];
  }
  return *best;
}

inline bool leq(const RelativeHeightVector& a, const RelativeHeightVector& b) {
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i] > b.entries[i]) return false;
  return true;
}

}  // namespace mckay::test
