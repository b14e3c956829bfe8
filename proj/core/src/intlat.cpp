#include "mckay/intlat.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace mckay {

namespace checked {

namespace {

__extension__ using Wide = __int128;

Int narrow(Wide v, const char* what) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw OverflowError(what);
  return static_cast<Int>(v);
}

}  // namespace

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("add");
  return r;
}

Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("sub");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("mul");
  return r;
}

Int neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) throw OverflowError("neg");
  return -a;
}

Int mul_add(Int a, Int b, Int c, Int d) {
  return narrow(static_cast<Wide>(a) * b + static_cast<Wide>(c) * d, "mul_add");
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (b == -1) return neg(a);
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod(Int a, Int b) {
  if (b <= 0) throw std::domain_error("mod requires a positive modulus");
  Int r = a % b;
  return r < 0 ? r + b : r;
}

Int gcd(Int a, Int b) {
  a = a < 0 ? neg(a) : a;
  b = b < 0 ? neg(b) : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd(a, b);
  Int r = mul(a / g, b);
  return r < 0 ? neg(r) : r;
}

}  // namespace checked

namespace {

struct Bezout {
  Int g;
  Int s;
  Int t;
};

// s*a + t*b = g = gcd(a, b) >= 0. Prefers t = 0 when a | b.
Bezout xgcd(Int a, Int b) {
  if (a != 0 && b % a == 0) return {a < 0 ? checked::neg(a) : a, a < 0 ? -1 : 1, 0};
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, checked::sub(old_r, checked::mul(q, r)));
    old_s = std::exchange(s, checked::sub(old_s, checked::mul(q, s)));
    old_t = std::exchange(t, checked::sub(old_t, checked::mul(q, t)));
  }
  if (old_r < 0) return {checked::neg(old_r), checked::neg(old_s), checked::neg(old_t)};
  return {old_r, old_s, old_t};
}

// Column operations applied to a working matrix and (optionally) to the
// accumulated transform.
class ColumnOps {
 public:
  ColumnOps(IntMatrix& a, IntMatrix* u) : a_(a), u_(u) {}

  // (col_p, col_k) <- (s*col_p + t*col_k, x*col_k - y*col_p)
  void combine(std::size_t p, std::size_t k, Int s, Int t, Int x, Int y) {
    apply(a_, p, k, s, t, x, y);
    if (u_) apply(*u_, p, k, s, t, x, y);
  }

  // col_k <- col_k - q*col_p
  void axpy(std::size_t p, std::size_t k, Int q) {
    if (q == 0) return;
    combine_single(a_, p, k, q);
    if (u_) combine_single(*u_, p, k, q);
  }

  void negate(std::size_t c) {
    negate(a_, c);
    if (u_) negate(*u_, c);
  }

 private:
  static void apply(IntMatrix& m, std::size_t p, std::size_t k, Int s, Int t,
                    Int x, Int y) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Int mp = m(r, p);
      const Int mk = m(r, k);
      m(r, p) = checked::mul_add(s, mp, t, mk);
      m(r, k) = checked::mul_add(x, mk, checked::neg(y), mp);
    }
  }
  static void combine_single(IntMatrix& m, std::size_t p, std::size_t k, Int q) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      m(r, k) = checked::sub(m(r, k), checked::mul(q, m(r, p)));
  }
  static void negate(IntMatrix& m, std::size_t c) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = checked::neg(m(r, c));
  }

  IntMatrix& a_;
  IntMatrix* u_;
};

// In-place column HNF of an n x r matrix of rank n. The last n columns
// become the canonical upper-triangular basis, the first r-n become zero.
void column_hnf(IntMatrix& a, IntMatrix* u) {
  const std::size_t n = a.rows();
  const std::size_t r = a.cols();
  if (r < n) throw SingularMatrixError("generator matrix has fewer columns than rows");
  ColumnOps ops(a, u);
  for (std::size_t ii = n; ii-- > 0;) {
    const std::size_t pivot = ii + (r - n);
    for (std::size_t k = 0; k < pivot; ++k) {
      const Int y = a(ii, k);
      if (y == 0) continue;
      const Int x = a(ii, pivot);
      const auto [g, s, t] = xgcd(x, y);
      ops.combine(pivot, k, s, t, x / g, y / g);
    }
    if (a(ii, pivot) == 0) throw SingularMatrixError("matrix is singular");
    if (a(ii, pivot) < 0) ops.negate(pivot);
    for (std::size_t j = pivot + 1; j < r; ++j)
      ops.axpy(pivot, j, checked::floor_div(a(ii, j), a(ii, pivot)));
  }
}

}  // namespace

// --- IntMatrix ---------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
  return from_rows(cols).transposed();
}

IntVector IntMatrix::row(std::size_t r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(std::span<const Int> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  IntVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out[r] = checked::add(out[r], checked::mul((*this)(r, c), v[c]));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product size mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int ark = a(r, k);
      if (ark == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        out(r, c) = checked::add(out(r, c), checked::mul(ark, b(k, c)));
    }
  return out;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << to_string(std::span<const Int>(data_.data() + r * cols_, cols_));
  }
  os << ']';
  return os.str();
}

// --- determinant / normal forms ---------------------------------------------

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const checked::Wide num = static_cast<checked::Wide>(a(i, j)) * a(k, k) -
                                  static_cast<checked::Wide>(a(i, k)) * a(k, j);
        const checked::Wide q = num / prev;
        if (q > std::numeric_limits<Int>::max() || q < std::numeric_limits<Int>::min())
          throw OverflowError("determinant");
        a(i, j) = static_cast<Int>(q);
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : checked::neg(a(n - 1, n - 1));
}

HermiteForm hnf(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("hnf expects a square matrix");
  HermiteForm out{m, IntMatrix::identity(m.cols())};
  column_hnf(out.h, &out.u);
  return out;
}

IntMatrix hnf_basis(const IntMatrix& generators) {
  IntMatrix a = generators;
  column_hnf(a, nullptr);
  const std::size_t n = a.rows();
  const std::size_t offset = a.cols() - n;
  IntMatrix h(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h(r, c) = a(r, c + offset);
  return h;
}

SmithForm snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm f{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& s = f.s;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(s(a, c), s(b, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(f.u(a, c), f.u(b, c));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(s(r, a), s(r, b));
    for (std::size_t r = 0; r < cols; ++r) std::swap(f.v(r, a), f.v(r, b));
  };
  // row_b -= q * row_a
  auto row_axpy = [&](std::size_t a, std::size_t b, Int q) {
    for (std::size_t c = 0; c < cols; ++c)
      s(b, c) = checked::sub(s(b, c), checked::mul(q, s(a, c)));
    for (std::size_t c = 0; c < rows; ++c)
      f.u(b, c) = checked::sub(f.u(b, c), checked::mul(q, f.u(a, c)));
  };
  // col_b -= q * col_a
  auto col_axpy = [&](std::size_t a, std::size_t b, Int q) {
    for (std::size_t r = 0; r < rows; ++r)
      s(r, b) = checked::sub(s(r, b), checked::mul(q, s(r, a)));
    for (std::size_t r = 0; r < cols; ++r)
      f.v(r, b) = checked::sub(f.v(r, b), checked::mul(q, f.v(r, a)));
  };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t pr = rows, pc = cols;
      Int best = 0;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          const Int v = s(r, c) < 0 ? checked::neg(s(r, c)) : s(r, c);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (best == 0) return f;
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        row_axpy(t, r, checked::floor_div(s(r, t), s(t, t)));
        if (s(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        col_axpy(t, c, checked::floor_div(s(t, c), s(t, t)));
        if (s(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any row whose entries the pivot does not divide.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (s(r, c) % s(t, t) != 0) {
            bad_row = r;
            break;
          }
      if (bad_row == rows) break;
      row_axpy(bad_row, t, -1);
    }
    if (s(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) s(t, c) = checked::neg(s(t, c));
      for (std::size_t c = 0; c < rows; ++c) f.u(t, c) = checked::neg(f.u(t, c));
    }
  }
  return f;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm f = snf(m);
  std::size_t rank = 0;
  while (rank < std::min(m.rows(), m.cols()) && f.s(rank, rank) != 0) ++rank;
  IntMatrix k(m.cols(), m.cols() - rank);
  for (std::size_t c = rank; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.cols(); ++r) k(r, c - rank) = f.v(r, c);
  return k;
}

// --- LatticeEmbedding --------------------------------------------------------

LatticeEmbedding::LatticeEmbedding(const IntMatrix& basis) : bprime_(basis) {
  if (!basis.is_square()) throw DimensionError("lattice basis must be square");
  const Int det = determinant(basis);
  if (det == 0) throw SingularMatrixError("lattice basis is singular");
  if (det < 0 && basis.cols() > 0)
    for (std::size_t r = 0; r < basis.rows(); ++r)
      bprime_(r, 0) = checked::neg(bprime_(r, 0));
  order_ = det < 0 ? checked::neg(det) : det;
  hnf_ = mckay::hnf(bprime_).h;
}

LatticeEmbedding LatticeEmbedding::identity(std::size_t n) {
  return LatticeEmbedding(IntMatrix::identity(n));
}

void LatticeEmbedding::check_dim(std::span<const Int> x) const {
  if (x.size() != dimension())
    throw DimensionError("expected a vector of length " + std::to_string(dimension()) +
                         ", got " + std::to_string(x.size()));
}

CosetPoint LatticeEmbedding::reduce(std::span<const Int> x) const {
  check_dim(x);
  IntVector v(x.begin(), x.end());
  for (std::size_t i = dimension(); i-- > 0;) {
    const Int q = checked::floor_div(v[i], hnf_(i, i));
    if (q == 0) continue;
    for (std::size_t r = 0; r <= i; ++r)
      v[r] = checked::sub(v[r], checked::mul(q, hnf_(r, i)));
  }
  return CosetPoint{std::move(v)};
}

std::optional<IntVector> LatticeEmbedding::coordinates(std::span<const Int> y) const {
  check_dim(y);
  const std::size_t n = dimension();
  IntVector v(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    Int rest = y[i];
    for (std::size_t j = i + 1; j < n; ++j)
      rest = checked::sub(rest, checked::mul(hnf_(i, j), v[j]));
    if (rest % hnf_(i, i) != 0) return std::nullopt;
    v[i] = rest / hnf_(i, i);
  }
  return v;
}

bool LatticeEmbedding::contains(std::span<const Int> x) const {
  return coordinates(x).has_value();
}

Int LatticeEmbedding::element_order(std::span<const Int> x) const {
  check_dim(x);
  IntVector acc(x.begin(), x.end());
  for (Int o = 1;; ++o) {
    if (contains(acc)) return o;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = checked::add(acc[i], x[i]);
  }
}

std::vector<CosetPoint> LatticeEmbedding::representatives() const {
  const std::size_t n = dimension();
  std::vector<CosetPoint> out;
  out.reserve(static_cast<std::size_t>(order_));
  IntVector cur(n, 0);
  while (true) {
    out.push_back(CosetPoint{cur});
    std::size_t i = n;
    while (i-- > 0) {
      if (++cur[i] < hnf_(i, i)) break;
      cur[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

IntVector LatticeEmbedding::alpha(int type) const {
  const auto n = static_cast<int>(dimension());
  if (type < 1 || type > n + 1)
    throw std::out_of_range("arrow type out of range: " + std::to_string(type));
  if (type == n + 1) return IntVector(dimension(), -1);
  IntVector v(dimension(), 0);
  v[static_cast<std::size_t>(type - 1)] = 1;
  return v;
}

CosetPoint reduce(std::span<const Int> x, const LatticeEmbedding& e) { return e.reduce(x); }

bool in_sublattice(std::span<const Int> x, const LatticeEmbedding& e) {
  return e.contains(x);
}

Int element_order(std::span<const Int> x, const LatticeEmbedding& e) {
  return e.element_order(x);
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace mckay
