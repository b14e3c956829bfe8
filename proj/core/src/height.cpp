#include "mckay/height.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace mckay {

namespace {

IntVector add(std::span<const Int> a, std::span<const Int> b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked::add(a[i], b[i]);
  return out;
}

IntVector sub(std::span<const Int> a, std::span<const Int> b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked::sub(a[i], b[i]);
  return out;
}

Int linear_on_basis(std::span<const Int> coords, std::span<const Int> l1_values) {
  Int s = 0;
  for (std::size_t k = 0; k < coords.size(); ++k)
    s = checked::add(s, checked::mul(coords[k], l1_values[k]));
  return s;
}

Int step(const McKayQuiver& q, const ArrowSet& s, ArrowId a) {
  return s.contains(a) ? -static_cast<Int>(q.dimension()) : 1;
}

// Height increment along a path in the cover from 0 to y that uses only
// forward arrows: y = sum_i (c_i + k) alpha_i + k alpha_{n+1}, k >= 0.
Int walk_to(const McKayQuiver& q, const ArrowSet& s, std::span<const Int> y) {
  const std::size_t n = q.dimension();
  Int k = 0;
  for (Int c : y) k = std::max(k, checked::neg(c));
  IntVector at(n, 0);
  Int h = 0;
  auto go = [&](int type, Int times) {
    const IntVector alpha = q.embedding().alpha(type);
    for (Int r = 0; r < times; ++r) {
      h = checked::add(h, step(q, s, q.arrow_id(q.vertex_of(at), type)));
      at = add(at, alpha);
    }
  };
  for (std::size_t i = 0; i < n; ++i) go(static_cast<int>(i) + 1, checked::add(y[i], k));
  go(static_cast<int>(n) + 1, k);
  return h;
}

}  // namespace

Int HeightFunction::on_sublattice(const LatticeEmbedding& e, std::span<const Int> y) const {
  const auto coords = e.coordinates(y);
  if (!coords) throw std::invalid_argument("vector " + to_string(y) + " is not in L1");
  return linear_on_basis(*coords, l1_values);
}

Int HeightFunction::at(const McKayQuiver& q, std::span<const Int> x) const {
  const CosetPoint p = q.embedding().reduce(x);
  return checked::add(values[q.index_of(p)], on_sublattice(q.embedding(), sub(x, p.rep)));
}

Int HeightFunction::increment(const McKayQuiver& q, ArrowId id) const {
  const Arrow& a = q.arrow(id);
  const IntVector x = add(q.vertex(a.source).rep, q.embedding().alpha(a.type));
  return checked::sub(at(q, x), values[a.source]);
}

HeightFunction height_from_cut(const McKayQuiver& q, const ArrowSet& s) {
  if (s.universe() != q.arrow_count())
    throw DimensionError("arrow set does not belong to this quiver");
  const LatticeEmbedding& e = q.embedding();
  const std::size_t n = q.dimension();

  HeightFunction h;
  h.l1_values.resize(n);
  for (std::size_t k = 0; k < n; ++k) h.l1_values[k] = walk_to(q, s, e.hnf().column(k));

  // Spread values over the quotient, following arrows in both directions.
  std::vector<std::optional<Int>> value(q.vertex_count());
  value[0] = 0;
  std::deque<VertexId> queue{0};
  auto lift = [&](VertexId v, std::span<const Int> x) {
    // h(x) - h(rep_v) for x in the coset of v
    return h.on_sublattice(e, sub(x, q.vertex(v).rep));
  };
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (int t = 1; t <= q.type_count(); ++t) {
      const ArrowId out = q.arrow_id(u, t);
      const VertexId w = q.arrow(out).target;
      if (!value[w]) {
        const IntVector x = add(q.vertex(u).rep, e.alpha(t));
        value[w] = checked::sub(checked::add(*value[u], step(q, s, out)), lift(w, x));
        queue.push_back(w);
      }
    }
    for (ArrowId in : q.incoming(u)) {
      const Arrow& a = q.arrow(in);
      if (!value[a.source]) {
        const IntVector x = add(q.vertex(a.source).rep, e.alpha(a.type));
        value[a.source] = checked::sub(checked::add(*value[u], lift(u, x)), step(q, s, in));
        queue.push_back(a.source);
      }
    }
  }
  h.values.resize(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) h.values[v] = *value[v];

  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (h.increment(q, a) != step(q, s, a))
      throw NotACutError("height increments are inconsistent around arrow " +
                         to_string(q.vertex(q.arrow(a).source).rep) + " type " +
                         std::to_string(q.arrow(a).type) + "; the arrow set is not a cut");
  return h;
}

void validate(const McKayQuiver& q, const HeightFunction& h) {
  if (h.values.size() != q.vertex_count() || h.l1_values.size() != q.dimension())
    throw InvalidHeightError("height function has the wrong shape for this quiver");
  if (h.values[0] != 0) throw InvalidHeightError("h(0) must be 0");
  const Int n = static_cast<Int>(q.dimension());
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Int d = h.increment(q, a);
    if (d != 1 && d != -n)
      throw InvalidHeightError("increment " + std::to_string(d) + " along arrow from " +
                               to_string(q.vertex(q.arrow(a).source).rep) + " of type " +
                               std::to_string(q.arrow(a).type));
  }
}

Cut cut_from_height(const McKayQuiver& q, const HeightFunction& h) {
  validate(q, h);
  ArrowSet s(q.arrow_count());
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    if (h.increment(q, a) != 1) s.insert(a);
  return Cut::trusted(std::move(s));
}

Int h_gamma(const LatticeEmbedding& e, std::span<const Int> y, const TypeVector& gamma) {
  const std::size_t n = e.dimension();
  if (gamma.size() != n + 1) throw DimensionError("type vector must have n+1 entries");
  if (!e.contains(y)) throw std::invalid_argument("vector " + to_string(y) + " is not in L1");
  const Int m = e.order();
  Int ones = 0, dot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ones = checked::add(ones, y[i]);
    dot = checked::add(dot, checked::mul(y[i], gamma[i]));
  }
  const Int num = checked::sub(checked::mul(m, ones), checked::mul(static_cast<Int>(n + 1), dot));
  if (num % m != 0)
    throw std::invalid_argument("h_gamma is not integral at " + to_string(y) +
                                "; not a valid type for this embedding");
  return num / m;
}

IntVector h_gamma_on_basis(const LatticeEmbedding& e, const TypeVector& gamma) {
  IntVector out(e.dimension());
  for (std::size_t k = 0; k < e.dimension(); ++k) out[k] = h_gamma(e, e.hnf().column(k), gamma);
  return out;
}

bool types_equal_iff_h_equal(const TypeVector& gamma, const TypeVector& delta,
                             const LatticeEmbedding& e) {
  return h_gamma_on_basis(e, gamma) == h_gamma_on_basis(e, delta);
}

}  // namespace mckay
