#include "mckay/mutation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "mckay/cuts.hpp"
#include "mckay/oracle.hpp"

namespace mckay {

namespace {

bool is_source(const McKayQuiver& q, const Cut& c, VertexId v) {
  for (ArrowId a : q.incoming(v))
    if (!c.contains(a)) return false;
  return true;
}

bool is_sink(const McKayQuiver& q, const Cut& c, VertexId v) {
  for (int t = 1; t <= q.type_count(); ++t)
    if (!c.contains(q.arrow_id(v, t))) return false;
  return true;
}

std::vector<VertexId> drop_origin(const std::vector<VertexId>& vs) {
  std::vector<VertexId> out;
  for (VertexId v : vs)
    if (v != 0) out.push_back(v);
  return out;
}

void check_vertex(const McKayQuiver& q, VertexId v) {
  if (v >= q.vertex_count())
    throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
}

HeightFunction pointwise(const McKayQuiver& q, const Cut& a, const Cut& b,
                         const std::function<Int(Int, Int)>& f) {
  const HeightFunction ha = height_from_cut(q, a);
  const HeightFunction hb = height_from_cut(q, b);
  if (ha.l1_values != hb.l1_values)
    throw TypeMismatchError("cuts of different types have no common lattice");
  HeightFunction h{IntVector(ha.values.size()), ha.l1_values};
  for (std::size_t i = 0; i < h.values.size(); ++i) h.values[i] = f(ha.values[i], hb.values[i]);
  return h;
}

RelativeHeightVector relative(const HeightFunction& h, const HeightFunction& ref, Int n1) {
  RelativeHeightVector v{IntVector(h.values.size())};
  for (std::size_t i = 0; i < h.values.size(); ++i)
    v.entries[i] = checked::sub(h.values[i], ref.values[i]) / n1;
  return v;
}

bool leq(const RelativeHeightVector& a, const RelativeHeightVector& b) {
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i] > b.entries[i]) return false;
  return true;
}

Int entry_sum(const RelativeHeightVector& v) {
  Int s = 0;
  for (Int x : v.entries) s = checked::add(s, x);
  return s;
}

void require_positive(const TypeVector& gamma, const char* what) {
  if (!gamma.positive())
    throw UnsupportedRequestError(std::string(what) + " is only defined for positive types; " +
                                  to_string(gamma.gamma) + " has a zero entry");
}

}  // namespace

std::vector<VertexId> MutableVertices::nonzero_sources() const { return drop_origin(sources); }
std::vector<VertexId> MutableVertices::nonzero_sinks() const { return drop_origin(sinks); }

MutableVertices mutable_vertices(const McKayQuiver& q, const Cut& c) {
  MutableVertices out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (is_source(q, c, v)) out.sources.push_back(v);
    if (is_sink(q, c, v)) out.sinks.push_back(v);
  }
  return out;
}

Cut mutate_source(const McKayQuiver& q, const Cut& c, VertexId v) {
  check_vertex(q, v);
  if (!is_source(q, c, v))
    throw NotMutableError("vertex " + to_string(q.vertex(v).rep) + " is not a source of Q_C");
  ArrowSet s = c.arrows();
  for (ArrowId a : q.incoming(v)) s.erase(a);
  for (int t = 1; t <= q.type_count(); ++t) s.insert(q.arrow_id(v, t));
  return Cut::trusted(std::move(s));
}

Cut mutate_sink(const McKayQuiver& q, const Cut& c, VertexId v) {
  check_vertex(q, v);
  if (!is_sink(q, c, v))
    throw NotMutableError("vertex " + to_string(q.vertex(v).rep) + " is not a sink of Q_C");
  ArrowSet s = c.arrows();
  for (int t = 1; t <= q.type_count(); ++t) s.erase(q.arrow_id(v, t));
  for (ArrowId a : q.incoming(v)) s.insert(a);
  return Cut::trusted(std::move(s));
}

RelativeHeightVector relative_height_vector(const McKayQuiver& q, const Cut& c, const Cut& ref) {
  const HeightFunction h = height_from_cut(q, c);
  const HeightFunction r = height_from_cut(q, ref);
  if (h.l1_values != r.l1_values)
    throw TypeMismatchError("relative heights need cuts of the same type; got " +
                            to_string(type_of(q, c).gamma) + " and " +
                            to_string(type_of(q, ref).gamma));
  return relative(h, r, static_cast<Int>(q.type_count()));
}

Cut meet(const McKayQuiver& q, const Cut& a, const Cut& b) {
  return cut_from_height(q, pointwise(q, a, b, [](Int x, Int y) { return std::min(x, y); }));
}

Cut join(const McKayQuiver& q, const Cut& a, const Cut& b) {
  return cut_from_height(q, pointwise(q, a, b, [](Int x, Int y) { return std::max(x, y); }));
}

std::vector<std::pair<std::size_t, std::size_t>> order_covers(
    const std::vector<RelativeHeightVector>& vs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i == j || !leq(vs[i], vs[j]) || vs[i] == vs[j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < vs.size() && cover; ++k)
        if (k != i && k != j && vs[k] != vs[i] && vs[k] != vs[j] && leq(vs[i], vs[k]) &&
            leq(vs[k], vs[j]))
          cover = false;
      if (cover) out.emplace_back(i, j);
    }
  std::sort(out.begin(), out.end());
  return out;
}

MutationLattice enumerate_cut_lattice(const McKayQuiver& q, const TypeVector& gamma,
                                      const LatticeOptions& options) {
  require_admissible(q.embedding(), gamma);
  const Int n1 = static_cast<Int>(q.type_count());

  std::vector<Cut> found;
  if (gamma.positive()) {
    std::set<Cut> seen;
    std::deque<Cut> queue;
    const Cut start = construct_cut(q, gamma);
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
      const Cut c = queue.front();
      queue.pop_front();
      const MutableVertices mv = mutable_vertices(q, c);
      auto visit = [&](Cut next) {
        if (seen.insert(next).second) queue.push_back(std::move(next));
      };
      for (VertexId v : mv.nonzero_sources()) visit(mutate_source(q, c, v));
      for (VertexId v : mv.nonzero_sinks()) visit(mutate_sink(q, c, v));
    }
    found.assign(seen.begin(), seen.end());
  } else {
    if (q.order() > options.brute_force_budget)
      throw UnsupportedRequestError(
          "type " + to_string(gamma.gamma) + " is not positive and m = " +
          std::to_string(q.order()) + " exceeds the brute-force budget of " +
          std::to_string(options.brute_force_budget));
    found = brute_force_cuts(q, gamma);
  }

  // Heights relative to an arbitrary element first, then to the element of
  // least total height.
  std::vector<HeightFunction> hs;
  hs.reserve(found.size());
  for (const Cut& c : found) hs.push_back(height_from_cut(q, c));
  std::size_t low = 0;
  {
    std::vector<Int> sums(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) sums[i] = entry_sum(relative(hs[i], hs[0], n1));
    low = static_cast<std::size_t>(std::min_element(sums.begin(), sums.end()) - sums.begin());
  }

  std::vector<std::size_t> order(found.size());
  std::vector<RelativeHeightVector> vs;
  for (std::size_t i = 0; i < found.size(); ++i) {
    order[i] = i;
    vs.push_back(relative(hs[i], hs[low], n1));
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vs[a] < vs[b]; });

  MutationLattice lat;
  lat.type = gamma;
  lat.mutation_covers = gamma.positive();
  std::map<Cut, std::size_t> index;
  for (std::size_t k = 0; k < order.size(); ++k) {
    lat.cuts.push_back(found[order[k]]);
    lat.heights.push_back(vs[order[k]]);
    index.emplace(found[order[k]], k);
  }

  auto below_all = [&](std::size_t i) {
    for (const auto& v : lat.heights)
      if (!leq(lat.heights[i], v)) return false;
    return true;
  };
  auto above_all = [&](std::size_t i) {
    for (const auto& v : lat.heights)
      if (!leq(v, lat.heights[i])) return false;
    return true;
  };
  lat.min_index = 0;
  lat.max_index = lat.cuts.size() - 1;
  for (std::size_t i = 0; i < lat.cuts.size(); ++i) {
    if (below_all(i)) lat.min_index = i;
    if (above_all(i)) lat.max_index = i;
  }

  if (lat.mutation_covers) {
    for (std::size_t i = 0; i < lat.cuts.size(); ++i)
      for (VertexId v : mutable_vertices(q, lat.cuts[i]).nonzero_sources())
        lat.hasse_edges.push_back({i, index.at(mutate_source(q, lat.cuts[i], v)), v});
  } else {
    for (const auto& [lo, hi] : order_covers(lat.heights))
      lat.hasse_edges.push_back({lo, hi, std::nullopt});
  }
  std::sort(lat.hasse_edges.begin(), lat.hasse_edges.end());
  return lat;
}

Cut max_element(const McKayQuiver& q, const TypeVector& gamma) {
  require_admissible(q.embedding(), gamma);
  require_positive(gamma, "max_element");
  Cut c = construct_cut(q, gamma);
  for (;;) {
    const auto src = mutable_vertices(q, c).nonzero_sources();
    if (src.empty()) return c;
    c = mutate_source(q, c, src.front());
  }
}

Cut min_element(const McKayQuiver& q, const TypeVector& gamma) {
  require_admissible(q.embedding(), gamma);
  require_positive(gamma, "min_element");
  Cut c = construct_cut(q, gamma);
  for (;;) {
    const auto snk = mutable_vertices(q, c).nonzero_sinks();
    if (snk.empty()) return c;
    c = mutate_sink(q, c, snk.front());
  }
}

IntVector p_function(const McKayQuiver& q, const TypeVector& gamma) {
  const LatticeEmbedding& e = q.embedding();
  require_admissible(e, gamma);
  const Int m = e.order();

  // Cheapest path from the origin in the quotient, arrow of type i costing gamma_i.
  constexpr Int inf = std::numeric_limits<Int>::max();
  std::vector<Int> dist(q.vertex_count(), inf);
  using Item = std::pair<Int, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (int t = 1; t <= q.type_count(); ++t) {
      const VertexId w = q.arrow(q.arrow_id(u, t)).target;
      const Int nd = checked::add(d, gamma[static_cast<std::size_t>(t - 1)]);
      if (nd < dist[w]) {
        dist[w] = nd;
        pq.emplace(nd, w);
      }
    }
  }

  IntVector p(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    Int dot = 0;
    for (std::size_t i = 0; i < q.dimension(); ++i)
      dot = checked::add(dot, checked::mul(q.vertex(v).rep[i], gamma[i]));
    const Int num = checked::sub(dot, dist[v]);
    if (num % m != 0)
      throw std::logic_error("p is not integral at " + to_string(q.vertex(v).rep));
    p[v] = num / m;
  }
  return p;
}

Cut max_via_p(const McKayQuiver& q, const TypeVector& gamma) {
  const IntVector p = p_function(q, gamma);
  const Int n1 = static_cast<Int>(q.type_count());
  HeightFunction h{IntVector(q.vertex_count()), h_gamma_on_basis(q.embedding(), gamma)};
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    Int s = 0;
    for (Int x : q.vertex(v).rep) s = checked::add(s, x);
    h.values[v] = checked::sub(s, checked::mul(n1, p[v]));
  }
  Cut c = cut_from_height(q, h);
  if (type_of(q, c) != gamma)
    throw std::logic_error("p-function height has type " + to_string(type_of(q, c).gamma) +
                           " instead of " + to_string(gamma.gamma));
  return c;
}

}  // namespace mckay
