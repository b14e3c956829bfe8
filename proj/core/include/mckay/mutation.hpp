#pragma once

// Cut mutation and the finite distributive lattice of cuts of one type,
// ordered by relative height vectors v_C = (h_C - h_ref) / (n+1).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mckay/height.hpp"
#include "mckay/quiver.hpp"

namespace mckay {

class NotMutableError : public std::invalid_argument {
 public:
  explicit NotMutableError(const std::string& what) : std::invalid_argument(what) {}
};

class TypeMismatchError : public std::invalid_argument {
 public:
  explicit TypeMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// Requests the library declines: nonpositive lattices beyond the
/// brute-force budget, extremal elements of nonpositive types.
class UnsupportedRequestError : public std::runtime_error {
 public:
  explicit UnsupportedRequestError(const std::string& what) : std::runtime_error(what) {}
};

struct MutableVertices {
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;

  /// Sources and sinks other than the origin (vertex 0).
  [[nodiscard]] std::vector<VertexId> nonzero_sources() const;
  [[nodiscard]] std::vector<VertexId> nonzero_sinks() const;
};

MutableVertices mutable_vertices(const McKayQuiver& q, const Cut& c);

/// At a source v of Q_C: uncut the arrows into v and cut the arrows out of
/// v. Raises the height by n+1 on the orbit of v.
Cut mutate_source(const McKayQuiver& q, const Cut& c, VertexId v);
/// At a sink v of Q_C: the inverse operation, lowering the height by n+1.
Cut mutate_sink(const McKayQuiver& q, const Cut& c, VertexId v);

struct RelativeHeightVector {
  IntVector entries;

  friend auto operator<=>(const RelativeHeightVector&, const RelativeHeightVector&) = default;
};

/// (h_C - h_ref) / (n+1) on the canonical representatives. Throws
/// TypeMismatchError if the cuts have different types.
RelativeHeightVector relative_height_vector(const McKayQuiver& q, const Cut& c, const Cut& ref);

/// Cuts of the pointwise min / max of the two height functions.
Cut meet(const McKayQuiver& q, const Cut& a, const Cut& b);
Cut join(const McKayQuiver& q, const Cut& a, const Cut& b);

struct HasseEdge {
  std::size_t lower = 0;
  std::size_t upper = 0;
  /// Vertex at which lower is mutated (source) into upper; empty for
  /// order covers of nonpositive lattices.
  std::optional<VertexId> vertex;

  friend auto operator<=>(const HasseEdge&, const HasseEdge&) = default;
};

struct MutationLattice {
  TypeVector type;
  /// Sorted lexicographically by v.
  std::vector<Cut> cuts;
  /// v_C relative to the minimal element, parallel to cuts.
  std::vector<RelativeHeightVector> heights;
  std::vector<HasseEdge> hasse_edges;
  std::size_t max_index = 0;
  std::size_t min_index = 0;
  /// True when the Hasse edges are the nonzero mutations (positive types).
  bool mutation_covers = true;
};

struct LatticeOptions {
  /// Largest m for which nonpositive types are brute-forced.
  Int brute_force_budget = 8;
};

/// All cuts of type gamma. Positive types: breadth-first search over
/// nonzero source/sink mutations from construct_cut(gamma). Nonpositive
/// types: exhaustive search if m is within the budget, otherwise
/// UnsupportedRequestError.
MutationLattice enumerate_cut_lattice(const McKayQuiver& q, const TypeVector& gamma,
                                      const LatticeOptions& options = {});

/// Hasse diagram of the componentwise order on a set of vectors, as
/// (lower, upper) index pairs in sorted order.
std::vector<std::pair<std::size_t, std::size_t>> order_covers(
    const std::vector<RelativeHeightVector>& vs);

/// Greedy extremes for positive gamma: mutate at nonzero sources (max) or
/// sinks (min) until only the origin remains.
Cut max_element(const McKayQuiver& q, const TypeVector& gamma);
Cut min_element(const McKayQuiver& q, const TypeVector& gamma);

/// p(x) = max{z : u_z(x) >= l for some l in psi(L1)} on each canonical
/// representative, for any admissible gamma.
IntVector p_function(const McKayQuiver& q, const TypeVector& gamma);

/// The cut of h(x) = <u_{p(x)}(x), 1>_{n+1}, certified to be a height
/// function of type gamma.
Cut max_via_p(const McKayQuiver& q, const TypeVector& gamma);

}  // namespace mckay
