#pragma once

// The simplex of cut types: gamma >= 0 with sum m and gamma B in mZ.

#include <optional>
#include <vector>

#include "mckay/groupspec.hpp"
#include "mckay/quiver.hpp"

namespace mckay {

struct TypeSimplexReport {
  /// Every admissible type, lexicographically descending.
  std::vector<TypeVector> all_types;
  /// Types with every entry positive (interior lattice points).
  std::vector<TypeVector> positive_types;
  /// The n+1 trivial types, in order of the cut type.
  std::vector<TypeVector> vertices;
  /// True iff there is no positive type.
  bool hollow = true;
};

/// gamma >= 0, sum m, and <(gamma_1..gamma_n), c> = 0 mod m for every
/// column c of B'.
bool is_admissible_type(const LatticeEmbedding& e, const TypeVector& gamma);

TypeSimplexReport enumerate_types(const LatticeEmbedding& e);

/// Some positive type, if any exists.
std::optional<TypeVector> has_preprojective_cut(const LatticeEmbedding& e);

/// Age-one elements k * weights mod m (k = 1..m-1) of a cyclic spec, sorted
/// and deduplicated. Throws InvalidSpecError for a non-cyclic spec.
std::vector<IntVector> juniors_cyclic(const GroupSpec& spec);

/// Degree <e, gamma>_{n+1} / m of an invariant monomial x^e in the grading
/// of a cut of type gamma. Throws invalid_argument for a non-invariant
/// monomial or a non-integral result.
Int monomial_degree(const LatticeEmbedding& e, std::span<const Int> exponent,
                    const TypeVector& gamma);

}  // namespace mckay
