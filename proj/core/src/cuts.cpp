#include "mckay/cuts.hpp"

#include "mckay/types.hpp"

namespace mckay {

void require_admissible(const LatticeEmbedding& e, const TypeVector& gamma) {
  if (!is_admissible_type(e, gamma))
    throw InadmissibleTypeError("type " + to_string(gamma.gamma) +
                                " is not admissible for B' = " + e.bprime().str() +
                                " (m = " + std::to_string(e.order()) + ")");
}

Int xi_gamma(const LatticeEmbedding& e, const CosetPoint& x, const TypeVector& gamma) {
  require_admissible(e, gamma);
  Int dot = 0;
  for (std::size_t i = 0; i < e.dimension(); ++i)
    dot = checked::add(dot, checked::mul(x.rep.at(i), gamma[i]));
  return checked::mod(dot, e.order());
}

Cut construct_cut(const McKayQuiver& q, const TypeVector& gamma) {
  const LatticeEmbedding& e = q.embedding();
  require_admissible(e, gamma);
  const Int m = e.order();
  Int d = 0;
  for (Int g : gamma.gamma) d = checked::gcd(d, g);
  const Int mp = m / d;
  if (mp == 1) {
    for (int t = 1; t <= q.type_count(); ++t)
      if (gamma[static_cast<std::size_t>(t - 1)] == m) return trivial_cut(q, t);
  }

  std::vector<Int> label(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) label[v] = xi_gamma(e, q.vertex(v), gamma) / d;

  ArrowSet s(q.arrow_count());
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const Int j = label[arrow.source];
    const Int step = gamma[static_cast<std::size_t>(arrow.type - 1)] / d;
    if (j > checked::mod(j + step, mp)) s.insert(a);
  }
  return Cut::trusted(std::move(s));
}

std::vector<CommutationRelation> commutation_relations(const McKayQuiver& q) {
  std::vector<CommutationRelation> out;
  for (VertexId x = 0; x < q.vertex_count(); ++x)
    for (int i = 1; i <= q.type_count(); ++i)
      for (int j = i + 1; j <= q.type_count(); ++j) {
        CommutationRelation r{x, i, j, q.arrow_id(x, i), 0, q.arrow_id(x, j), 0};
        r.a_j = q.arrow_id(q.arrow(r.a_i).target, j);
        r.b_i = q.arrow_id(q.arrow(r.b_j).target, i);
        out.push_back(r);
      }
  return out;
}

DegreeZeroPresentation degree_zero_presentation(const McKayQuiver& q, const Cut& c) {
  DegreeZeroPresentation p{cut_quiver(q, c), {}};
  for (const CommutationRelation& r : commutation_relations(q))
    if (!c.contains(r.a_i) && !c.contains(r.a_j) && !c.contains(r.b_j) && !c.contains(r.b_i))
      p.relations.push_back(r);
  return p;
}

}  // namespace mckay
