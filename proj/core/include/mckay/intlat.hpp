#pragma once

// Exact integer linear algebra on full-rank sublattices of Z^n.
//
// Entries are 64-bit and every operation that could leave that range is
// checked; an OverflowError is thrown instead of wrapping.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mckay {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what)
      : std::overflow_error("integer overflow: " + what) {}
};

class SingularMatrixError : public std::domain_error {
 public:
  explicit SingularMatrixError(const std::string& what)
      : std::domain_error(what) {}
};

class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what)
      : std::invalid_argument(what) {}
};

namespace checked {

Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);
/// a*b + c*d evaluated in 128 bits, checked once on the way out.
Int mul_add(Int a, Int b, Int c, Int d);
/// Floor division, b != 0.
Int floor_div(Int a, Int b);
/// Representative of a mod b in [0, b), b > 0.
Int mod(Int a, Int b);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

}  // namespace checked

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] IntVector row(std::size_t r) const;
  [[nodiscard]] IntVector column(std::size_t c) const;
  [[nodiscard]] IntMatrix transposed() const;

  /// this * v
  [[nodiscard]] IntVector apply(std::span<const Int> v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& m);

/// Column Hermite normal form H = M * U of a square nonsingular M.
///
/// H is upper triangular with a positive diagonal, and in every row the
/// entries right of the diagonal lie in [0, diagonal).
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};

HermiteForm hnf(const IntMatrix& m);

/// HNF basis (n x n) of the lattice spanned by the columns of an n x r
/// generator matrix of rank n.
IntMatrix hnf_basis(const IntMatrix& generators);

/// U * M * V = S with S diagonal, s_1 | s_2 | ..., U and V unimodular.
struct SmithForm {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
};

SmithForm snf(const IntMatrix& m);

/// Basis (as columns) of {v in Z^cols : M v = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Canonical representative of a coset x + L1.
struct CosetPoint {
  IntVector rep;

  friend auto operator<=>(const CosetPoint&, const CosetPoint&) = default;
};

/// A cofinite sublattice L1 of L0 = Z^n, given by a basis matrix B' whose
/// columns are the basis vectors. Stores B' with det(B') > 0 together with
/// its canonical HNF, which defines the coset representatives.
class LatticeEmbedding {
 public:
  /// Canonicalizes any nonsingular basis. A basis with negative determinant
  /// has its first column negated.
  explicit LatticeEmbedding(const IntMatrix& basis);

  /// L1 = L0 (the trivial group).
  static LatticeEmbedding identity(std::size_t n);

  [[nodiscard]] std::size_t dimension() const { return bprime_.rows(); }
  [[nodiscard]] Int order() const { return order_; }
  [[nodiscard]] const IntMatrix& bprime() const { return bprime_; }
  [[nodiscard]] const IntMatrix& hnf() const { return hnf_; }

  [[nodiscard]] CosetPoint reduce(std::span<const Int> x) const;
  [[nodiscard]] bool contains(std::span<const Int> x) const;
  /// Coordinates of y in the HNF basis; nullopt if y is not in L1.
  [[nodiscard]] std::optional<IntVector> coordinates(std::span<const Int> y) const;
  [[nodiscard]] Int element_order(std::span<const Int> x) const;

  /// All m canonical representatives in lexicographic order (origin first).
  [[nodiscard]] std::vector<CosetPoint> representatives() const;

  /// Generator alpha_i of L0 for arrow type i in 1..n+1, with
  /// alpha_{n+1} = -(alpha_1 + ... + alpha_n).
  [[nodiscard]] IntVector alpha(int type) const;

  friend bool operator==(const LatticeEmbedding& a, const LatticeEmbedding& b) {
    return a.hnf_ == b.hnf_;
  }

 private:
  void check_dim(std::span<const Int> x) const;

  IntMatrix bprime_;
  IntMatrix hnf_;
  Int order_ = 1;
};

CosetPoint reduce(std::span<const Int> x, const LatticeEmbedding& e);
bool in_sublattice(std::span<const Int> x, const LatticeEmbedding& e);
Int element_order(std::span<const Int> x, const LatticeEmbedding& e);

std::string to_string(std::span<const Int> v);

}  // namespace mckay
