#pragma once

// L1-equivariant height functions h : L0 -> Z with h(0) = 0 and
// h(x + alpha_i) in {h(x) + 1, h(x) - n}, and their bijection with cuts.

#include <stdexcept>
#include <string>

#include "mckay/quiver.hpp"

namespace mckay {

class InvalidHeightError : public std::invalid_argument {
 public:
  explicit InvalidHeightError(const std::string& what) : std::invalid_argument(what) {}
};

/// Finite storage of an equivariant height function: its values on the m
/// canonical representatives (indexed like the quiver's vertices) and its
/// values on the HNF basis of L1. Everything else follows by equivariance.
struct HeightFunction {
  IntVector values;
  IntVector l1_values;

  /// h(y) for y in L1. Throws DimensionError/invalid_argument if y is not in L1.
  [[nodiscard]] Int on_sublattice(const LatticeEmbedding& e, std::span<const Int> y) const;
  /// h(x) for arbitrary x in L0.
  [[nodiscard]] Int at(const McKayQuiver& q, std::span<const Int> x) const;
  /// h(t(a)) - h(s(a)) for an arrow of the quiver, evaluated on the cover.
  [[nodiscard]] Int increment(const McKayQuiver& q, ArrowId a) const;

  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
};

/// h_C. Throws NotACutError when the increments are inconsistent, which
/// happens exactly when s is not a cut.
HeightFunction height_from_cut(const McKayQuiver& q, const ArrowSet& s);
inline HeightFunction height_from_cut(const McKayQuiver& q, const Cut& c) {
  return height_from_cut(q, c.arrows());
}

/// C_h = arrows along which h drops by n. Throws InvalidHeightError if h
/// is not a height function.
Cut cut_from_height(const McKayQuiver& q, const HeightFunction& h);

/// Throws InvalidHeightError unless h(0) = 0 and every increment is 1 or -n.
void validate(const McKayQuiver& q, const HeightFunction& h);

/// h_gamma(y) = <y, 1 - (n+1)/m gamma>_n for y in L1, computed exactly.
/// Throws invalid_argument if y is not in L1 or the value is not integral.
Int h_gamma(const LatticeEmbedding& e, std::span<const Int> y, const TypeVector& gamma);

/// h_gamma on each HNF basis column.
IntVector h_gamma_on_basis(const LatticeEmbedding& e, const TypeVector& gamma);

/// Compares h_gamma and h_delta on the HNF basis of L1.
bool types_equal_iff_h_equal(const TypeVector& gamma, const TypeVector& delta,
                             const LatticeEmbedding& e);

}  // namespace mckay
