#pragma once

// The McKay quiver of a diagonal abelian group as the Cayley graph of
// L0/L1 with generators alpha_1, ..., alpha_{n+1}, together with cuts and
// cut quivers.

#include <cstddef>
#include <cstdint>
#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mckay/intlat.hpp"

namespace mckay {

using VertexId = std::size_t;
/// Arrows are keyed by (source, type): id = source * (n+1) + (type - 1).
using ArrowId = std::size_t;

struct Arrow {
  VertexId source = 0;
  int type = 1;  // 1..n+1
  VertexId target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class McKayQuiver {
 public:
  explicit McKayQuiver(LatticeEmbedding embedding);

  [[nodiscard]] const LatticeEmbedding& embedding() const { return embedding_; }
  /// Rank n of L0; arrow types are 1..n+1.
  [[nodiscard]] std::size_t dimension() const { return embedding_.dimension(); }
  [[nodiscard]] int type_count() const { return static_cast<int>(dimension()) + 1; }
  [[nodiscard]] Int order() const { return embedding_.order(); }

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] std::size_t arrow_count() const { return arrows_.size(); }
  [[nodiscard]] const std::vector<CosetPoint>& vertices() const { return vertices_; }
  [[nodiscard]] const CosetPoint& vertex(VertexId v) const { return vertices_[v]; }
  [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
  [[nodiscard]] const Arrow& arrow(ArrowId a) const { return arrows_[a]; }

  [[nodiscard]] ArrowId arrow_id(VertexId source, int type) const {
    return source * static_cast<std::size_t>(type_count()) + static_cast<std::size_t>(type - 1);
  }
  [[nodiscard]] std::span<const ArrowId> incoming(VertexId v) const {
    return {incoming_.data() + v * static_cast<std::size_t>(type_count()),
            static_cast<std::size_t>(type_count())};
  }

  /// Index of the coset containing x.
  [[nodiscard]] VertexId vertex_of(std::span<const Int> x) const;
  /// Index of an already-canonical representative.
  [[nodiscard]] VertexId index_of(const CosetPoint& p) const;

 private:
  LatticeEmbedding embedding_;
  std::vector<CosetPoint> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<ArrowId> incoming_;  // grouped by target, ordered by type
  std::vector<std::size_t> radix_;
};

McKayQuiver build_mckay(const LatticeEmbedding& e);

/// An elementary cycle: one arrow of each type, types rotated so the
/// sequence starts with type 1.
struct ElementaryCycle {
  VertexId start = 0;
  std::vector<int> types;
  std::vector<ArrowId> arrows;
};

/// Visits each of the m * n! elementary cycles once.
void for_each_elementary_cycle(const McKayQuiver& q,
                               const std::function<void(const ElementaryCycle&)>& visit);
std::vector<ElementaryCycle> elementary_cycles(const McKayQuiver& q);

/// Membership bitmap over the arrows of a fixed quiver.
class ArrowSet {
 public:
  ArrowSet() = default;
  explicit ArrowSet(std::size_t arrow_count) : bits_(arrow_count, 0) {}
  ArrowSet(std::size_t arrow_count, std::span<const ArrowId> members);

  [[nodiscard]] std::size_t universe() const { return bits_.size(); }
  [[nodiscard]] bool contains(ArrowId a) const { return bits_[a] != 0; }
  void insert(ArrowId a) { bits_[a] = 1; }
  void erase(ArrowId a) { bits_[a] = 0; }
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::vector<ArrowId> members() const;

  friend auto operator<=>(const ArrowSet&, const ArrowSet&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

class NotACutError : public std::invalid_argument {
 public:
  explicit NotACutError(const std::string& what) : std::invalid_argument(what) {}
};

/// A set of arrows meeting every elementary cycle exactly once.
class Cut {
 public:
  /// Verifies the cut condition; throws NotACutError naming an offending cycle.
  static Cut checked(const McKayQuiver& q, ArrowSet arrows);
  /// For sets that are cuts by construction (mutation, decreasing arrows,
  /// height functions). The test suite re-verifies these.
  static Cut trusted(ArrowSet arrows) { return Cut(std::move(arrows)); }

  [[nodiscard]] const ArrowSet& arrows() const { return arrows_; }
  [[nodiscard]] bool contains(ArrowId a) const { return arrows_.contains(a); }

  friend auto operator<=>(const Cut&, const Cut&) = default;

 private:
  explicit Cut(ArrowSet arrows) : arrows_(std::move(arrows)) {}
  ArrowSet arrows_;
};

/// Number of arrows of s on a cycle, the quantity the cut condition fixes at 1.
std::size_t cycle_hits(const ElementaryCycle& c, const ArrowSet& s);

bool is_cut(const McKayQuiver& q, const ArrowSet& s);

/// First elementary cycle not met exactly once, if any.
std::optional<ElementaryCycle> cut_violation(const McKayQuiver& q, const ArrowSet& s);

/// Per-type arrow counts gamma_1..gamma_{n+1}.
struct TypeVector {
  IntVector gamma;

  [[nodiscard]] std::size_t size() const { return gamma.size(); }
  [[nodiscard]] Int operator[](std::size_t i) const { return gamma[i]; }
  [[nodiscard]] Int sum() const;
  [[nodiscard]] bool positive() const;
  /// (0, ..., m, ..., 0) with m at position type-1.
  static TypeVector trivial(std::size_t n, Int m, int type);

  friend auto operator<=>(const TypeVector&, const TypeVector&) = default;
};

TypeVector type_of(const McKayQuiver& q, const ArrowSet& s);
inline TypeVector type_of(const McKayQuiver& q, const Cut& c) {
  return type_of(q, c.arrows());
}

/// The trivial cut of all arrows of one type.
Cut trivial_cut(const McKayQuiver& q, int type);

/// A finite quiver on vertices 0..vertex_count-1; parallel arrows and loops
/// allowed.
struct Subquiver {
  std::size_t vertex_count = 0;
  std::vector<Arrow> arrows;
};

Subquiver cut_quiver(const McKayQuiver& q, const ArrowSet& c);
inline Subquiver cut_quiver(const McKayQuiver& q, const Cut& c) {
  return cut_quiver(q, c.arrows());
}
Subquiver full_quiver(const McKayQuiver& q);

bool is_acyclic(const Subquiver& g);
std::vector<VertexId> sources(const Subquiver& g);
std::vector<VertexId> sinks(const Subquiver& g);

}  // namespace mckay
