#include "mckay/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace mckay {

McKayQuiver::McKayQuiver(LatticeEmbedding embedding)
    : embedding_(std::move(embedding)), vertices_(embedding_.representatives()) {
  const std::size_t n = dimension();
  // Representatives fill the box prod [0, d_i) in lexicographic order, so a
  // vertex index is the mixed-radix value of its representative.
  radix_.assign(n, 1);
  for (std::size_t i = n; i-- > 1;)
    radix_[i - 1] = radix_[i] * static_cast<std::size_t>(embedding_.hnf()(i, i));

  const auto types = static_cast<std::size_t>(type_count());
  arrows_.reserve(vertices_.size() * types);
  std::vector<IntVector> alphas;
  for (int t = 1; t <= type_count(); ++t) alphas.push_back(embedding_.alpha(t));
  for (VertexId v = 0; v < vertices_.size(); ++v)
    for (int t = 1; t <= type_count(); ++t) {
      IntVector x = vertices_[v].rep;
      const IntVector& a = alphas[static_cast<std::size_t>(t - 1)];
      for (std::size_t i = 0; i < n; ++i) x[i] = checked::add(x[i], a[i]);
      arrows_.push_back(Arrow{v, t, vertex_of(x)});
    }

  incoming_.assign(arrows_.size(), 0);
  for (ArrowId id = 0; id < arrows_.size(); ++id) {
    const Arrow& a = arrows_[id];
    incoming_[a.target * types + static_cast<std::size_t>(a.type - 1)] = id;
  }
}

VertexId McKayQuiver::index_of(const CosetPoint& p) const {
  VertexId idx = 0;
  for (std::size_t i = 0; i < p.rep.size(); ++i)
    idx += static_cast<std::size_t>(p.rep[i]) * radix_[i];
  return idx;
}

VertexId McKayQuiver::vertex_of(std::span<const Int> x) const {
  return index_of(embedding_.reduce(x));
}

McKayQuiver build_mckay(const LatticeEmbedding& e) { return McKayQuiver(e); }

void for_each_elementary_cycle(const McKayQuiver& q,
                               const std::function<void(const ElementaryCycle&)>& visit) {
  const int k = q.type_count();
  std::vector<int> tail(static_cast<std::size_t>(k - 1));
  std::iota(tail.begin(), tail.end(), 2);
  ElementaryCycle c;
  c.types.resize(static_cast<std::size_t>(k));
  c.arrows.resize(static_cast<std::size_t>(k));
  do {
    c.types[0] = 1;
    std::copy(tail.begin(), tail.end(), c.types.begin() + 1);
    for (VertexId start = 0; start < q.vertex_count(); ++start) {
      c.start = start;
      VertexId at = start;
      for (std::size_t j = 0; j < c.types.size(); ++j) {
        const ArrowId id = q.arrow_id(at, c.types[j]);
        c.arrows[j] = id;
        at = q.arrow(id).target;
      }
      visit(c);
    }
  } while (std::next_permutation(tail.begin(), tail.end()));
}

std::vector<ElementaryCycle> elementary_cycles(const McKayQuiver& q) {
  std::vector<ElementaryCycle> out;
  for_each_elementary_cycle(q, [&](const ElementaryCycle& c) { out.push_back(c); });
  return out;
}

// --- ArrowSet / Cut ----------------------------------------------------------

ArrowSet::ArrowSet(std::size_t arrow_count, std::span<const ArrowId> members)
    : bits_(arrow_count, 0) {
  for (ArrowId a : members) bits_.at(a) = 1;
}

std::size_t ArrowSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<ArrowId> ArrowSet::members() const {
  std::vector<ArrowId> out;
  for (ArrowId a = 0; a < bits_.size(); ++a)
    if (bits_[a]) out.push_back(a);
  return out;
}

std::size_t cycle_hits(const ElementaryCycle& c, const ArrowSet& s) {
  return static_cast<std::size_t>(
      std::count_if(c.arrows.begin(), c.arrows.end(), [&](ArrowId a) { return s.contains(a); }));
}

std::optional<ElementaryCycle> cut_violation(const McKayQuiver& q, const ArrowSet& s) {
  if (s.universe() != q.arrow_count())
    throw DimensionError("arrow set does not belong to this quiver");
  std::optional<ElementaryCycle> bad;
  for_each_elementary_cycle(q, [&](const ElementaryCycle& c) {
    if (!bad && cycle_hits(c, s) != 1) bad = c;
  });
  return bad;
}

bool is_cut(const McKayQuiver& q, const ArrowSet& s) { return !cut_violation(q, s); }

Cut Cut::checked(const McKayQuiver& q, ArrowSet arrows) {
  if (auto bad = cut_violation(q, arrows)) {
    const std::size_t hits = cycle_hits(*bad, arrows);
    std::string msg = hits == 0 ? "elementary cycle uncovered" : "elementary cycle cut more than once";
    msg += ": start " + to_string(q.vertex(bad->start).rep) + ", types (";
    for (std::size_t i = 0; i < bad->types.size(); ++i)
      msg += (i ? "," : "") + std::to_string(bad->types[i]);
    msg += ")";
    throw NotACutError(msg);
  }
  return Cut(std::move(arrows));
}

// --- types -------------------------------------------------------------------

Int TypeVector::sum() const {
  Int s = 0;
  for (Int g : gamma) s = checked::add(s, g);
  return s;
}

bool TypeVector::positive() const {
  return std::all_of(gamma.begin(), gamma.end(), [](Int g) { return g > 0; });
}

TypeVector TypeVector::trivial(std::size_t n, Int m, int type) {
  TypeVector t{IntVector(n + 1, 0)};
  t.gamma.at(static_cast<std::size_t>(type - 1)) = m;
  return t;
}

TypeVector type_of(const McKayQuiver& q, const ArrowSet& s) {
  TypeVector t{IntVector(static_cast<std::size_t>(q.type_count()), 0)};
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (s.contains(a)) ++t.gamma[static_cast<std::size_t>(q.arrow(a).type - 1)];
  return t;
}

Cut trivial_cut(const McKayQuiver& q, int type) {
  ArrowSet s(q.arrow_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) s.insert(q.arrow_id(v, type));
  return Cut::trusted(std::move(s));
}

// --- cut quivers -------------------------------------------------------------

Subquiver cut_quiver(const McKayQuiver& q, const ArrowSet& c) {
  Subquiver g{q.vertex_count(), {}};
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (!c.contains(a)) g.arrows.push_back(q.arrow(a));
  return g;
}

Subquiver full_quiver(const McKayQuiver& q) { return Subquiver{q.vertex_count(), q.arrows()}; }

// Kahn's algorithm
bool is_acyclic(const Subquiver& g) {
  std::vector<std::size_t> in_degree(g.vertex_count, 0);
  std::vector<std::vector<VertexId>> next(g.vertex_count);
  for (const Arrow& a : g.arrows) {
    ++in_degree[a.target];
    next[a.source].push_back(a.target);
  }
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < g.vertex_count; ++v)
    if (in_degree[v] == 0) stack.push_back(v);
  std::size_t removed = 0;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    ++removed;
    for (VertexId w : next[v])
      if (--in_degree[w] == 0) stack.push_back(w);
  }
  return removed == g.vertex_count;
}

std::vector<VertexId> sources(const Subquiver& g) {
  std::vector<bool> has_in(g.vertex_count, false);
  for (const Arrow& a : g.arrows) has_in[a.target] = true;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count; ++v)
    if (!has_in[v]) out.push_back(v);
  return out;
}

std::vector<VertexId> sinks(const Subquiver& g) {
  std::vector<bool> has_out(g.vertex_count, false);
  for (const Arrow& a : g.arrows) has_out[a.source] = true;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count; ++v)
    if (!has_out[v]) out.push_back(v);
  return out;
}

}  // namespace mckay
