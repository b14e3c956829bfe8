#pragma once

// Constructing a cut of each admissible type by labelling vertices with a
// cyclic quotient and cutting the arrows whose label decreases.

#include <stdexcept>
#include <string>
#include <vector>

#include "mckay/quiver.hpp"

namespace mckay {

class InadmissibleTypeError : public std::invalid_argument {
 public:
  explicit InadmissibleTypeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Throws InadmissibleTypeError unless gamma satisfies the divisibility
/// conditions for e.
void require_admissible(const LatticeEmbedding& e, const TypeVector& gamma);

/// <rep(x), (gamma_1..gamma_n)> mod m.
Int xi_gamma(const LatticeEmbedding& e, const CosetPoint& x, const TypeVector& gamma);

/// Cut of type gamma. With d = gcd(gamma) and m' = m/d, vertices are
/// labelled xi_gamma / d in Z/m', and an arrow of type i leaving label j is
/// cut iff j > (j + gamma_i/d) mod m'. For m' = 1 the trivial cut is returned.
Cut construct_cut(const McKayQuiver& q, const TypeVector& gamma);

/// a_i a_j = b_j b_i for the square x -> x+alpha_i -> x+alpha_i+alpha_j and
/// x -> x+alpha_j -> x+alpha_i+alpha_j, i < j.
struct CommutationRelation {
  VertexId source = 0;
  int i = 1;
  int j = 2;
  ArrowId a_i = 0;
  ArrowId a_j = 0;
  ArrowId b_j = 0;
  ArrowId b_i = 0;
};

std::vector<CommutationRelation> commutation_relations(const McKayQuiver& q);

/// The degree-zero algebra: the cut quiver with the relations none of whose
/// arrows is cut.
struct DegreeZeroPresentation {
  Subquiver quiver;
  std::vector<CommutationRelation> relations;
};

DegreeZeroPresentation degree_zero_presentation(const McKayQuiver& q, const Cut& c);

}  // namespace mckay
