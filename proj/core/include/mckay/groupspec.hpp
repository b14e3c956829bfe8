#pragma once

// Diagonal abelian subgroups of SL(n+1) given by generators
// 1/m(e_1, ..., e_{n+1}), and the sublattice L1 they determine.

#include <stdexcept>
#include <string>
#include <vector>

#include "mckay/intlat.hpp"

namespace mckay {

class InvalidSpecError : public std::invalid_argument {
 public:
  explicit InvalidSpecError(const std::string& what) : std::invalid_argument(what) {}
};

struct Generator {
  Int order = 1;
  /// n+1 exponents; the generator acts on x_i by a primitive order-th root of
  /// unity raised to weights[i].
  IntVector weights;
};

struct GroupSpec {
  std::size_t n = 1;
  std::vector<Generator> generators;
};

/// Throws InvalidSpecError unless every generator has n+1 weights, positive
/// order, and weight sum divisible by its order.
void validate(const GroupSpec& spec);

/// L1 = ker(L0 -> (+)_j Z/m_j, alpha_i -> (weights_{j,i})_j), in canonical HNF.
///
/// Rejects specs whose product of declared orders differs from [L0:L1]
/// (non-faithful or redundant generators).
LatticeEmbedding embedding_from_spec(const GroupSpec& spec);

/// [L0 : L1] for the spec.
Int group_order(const GroupSpec& spec);

}  // namespace mckay
