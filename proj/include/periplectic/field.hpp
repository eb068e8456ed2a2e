#ifndef PERIPLECTIC_FIELD_HPP
#define PERIPLECTIC_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace peri {

/// Raised for invalid field parameters and for inversion of zero through Field::inv.
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Characteristic and extension degree. ext is 1 (prime field) or p (the
/// Artin-Schreier extension GF(p)[t]/(t^p - t - 1)).
struct FieldParams {
  int p = 5;
  int ext = 1;

  void validate() const;
  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// Element handle. 0 is the zero element; k > 0 stands for g^(k-1) where g is
/// the primitive element chosen by the owning Field. Handles are only
/// meaningful together with the Field that produced them.
struct Fe {
  std::uint32_t v = 0;
  friend bool operator==(Fe, Fe) = default;
};

/// GF(p) or GF(p^p), implemented with Zech logarithms. Tables are built once per
/// (p, ext) and shared; a Field is immutable after construction.
class Field {
 public:
  /// Shared instance for the given parameters (built on first use, thread-safe).
  static std::shared_ptr<const Field> get(int p, int ext);
  static std::shared_ptr<const Field> get(FieldParams params) { return get(params.p, params.ext); }

  explicit Field(FieldParams params);

  int p() const { return params_.p; }
  int ext() const { return params_.ext; }
  FieldParams params() const { return params_; }
  std::uint32_t order() const { return q_; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  Fe from_int(long long n) const;
  /// Coefficients in the power basis 1, t, t^2, ... (little-endian).
  Fe from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(Fe a) const;
  /// The Artin-Schreier generator t (requires ext > 1).
  Fe theta() const;

  /// Integer sum_i c_i p^i of the coefficient vector; a bijection onto [0, q).
  std::uint32_t packed(Fe a) const { return a.v == 0 ? 0u : exp_packed_[a.v - 1]; }
  Fe from_packed(std::uint32_t packed) const;

  bool in_prime_field(Fe a) const { return packed(a) < static_cast<std::uint32_t>(params_.p); }
  /// Representative in [0, p); throws unless the element lies in GF(p).
  int to_int(Fe a) const;
  std::string to_string(Fe a) const;
  /// Inverse of to_string: a sum of terms c, ct, ct^k (c may be negative or written c*t).
  /// Throws std::invalid_argument on malformed input.
  Fe parse(const std::string& text) const;

  Fe add(Fe a, Fe b) const {
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    const std::uint32_t i = a.v - 1;
    const std::uint32_t j = b.v - 1;
    const std::uint32_t d = j >= i ? j - i : j + qm1_ - i;
    const std::int32_t z = zech_[d];
    if (z < 0) return Fe{0};
    std::uint32_t r = i + static_cast<std::uint32_t>(z);
    if (r >= qm1_) r -= qm1_;
    return Fe{r + 1};
  }
  Fe neg(Fe a) const {
    if (a.v == 0) return a;
    std::uint32_t r = a.v - 1 + half_;
    if (r >= qm1_) r -= qm1_;
    return Fe{r + 1};
  }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return Fe{0};
    std::uint32_t s = a.v + b.v - 2;
    if (s >= qm1_) s -= qm1_;
    return Fe{s + 1};
  }
  std::optional<Fe> try_inv(Fe a) const;
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, std::uint64_t e) const;

  /// Lane-packed coefficient vector used by the accumulation kernels.
  std::uint64_t lanes(Fe a) const { return lanes_[a.v]; }
  /// Collapses an accumulator of lane-packed sums back into an element.
  Fe from_lanes(std::uint64_t acc) const;
  /// Number of lane additions that can be accumulated before a fold.
  std::uint32_t lane_capacity() const { return lane_capacity_; }

  /// Total order by packed value; used for deterministic sorting of weights.
  bool less(Fe a, Fe b) const { return packed(a) < packed(b); }

 private:
  FieldParams params_;
  std::uint32_t q_ = 0;
  std::uint32_t qm1_ = 0;
  std::uint32_t half_ = 0;
  std::vector<std::uint32_t> exp_packed_;  // k -> packed(g^k)
  std::vector<std::uint32_t> log_packed_;  // packed -> k (index 0 unused)
  std::vector<std::int32_t> zech_;         // d -> log(1 + g^d), -1 when zero
  std::vector<std::uint64_t> lanes_;
  int lane_bits_ = 64;
  std::uint32_t lane_capacity_ = 0;
};

/// Dense row-major matrix of field elements. The field is supplied to every
/// operation rather than stored.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Fe& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fe operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Fe* row(std::size_t r) { return data_.data() + r * cols_; }
  const Fe* row(std::size_t r) const { return data_.data() + r * cols_; }
  std::span<const Fe> row_span(std::size_t r) const { return {row(r), cols_}; }
  std::vector<Fe>& data() { return data_; }
  const std::vector<Fe>& data() const { return data_; }

  bool is_zero() const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fe> data_;
};

using Vec = std::vector<Fe>;

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix sub(const Field& f, const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, Fe c, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix power(const Field& f, const Matrix& a, std::uint64_t e);
Vec apply(const Field& f, const Matrix& a, std::span<const Fe> x);
/// y += c * x
void axpy(const Field& f, std::span<Fe> y, Fe c, std::span<const Fe> x);

RrefResult rref(const Field& f, Matrix m);
std::size_t rank(const Field& f, const Matrix& m);
/// Columns form a basis of the right kernel.
Matrix nullspace(const Field& f, const Matrix& m);
/// Rows form a basis of the right kernel (same space as nullspace, transposed).
Matrix kernel_rows(const Field& f, const Matrix& m);
/// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<Matrix> solve(const Field& f, const Matrix& m, const Matrix& b);
/// Characteristic polynomial det(xI - m), coefficients low to high (monic).
std::vector<Fe> charpoly(const Field& f, const Matrix& m);
Fe eval_poly(const Field& f, std::span<const Fe> coeffs, Fe x);

/// Row space kept in semi-echelon form: every stored row has a pivot (its first
/// nonzero entry, equal to 1) at which all later rows vanish.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v in place against the stored rows; returns true if v became zero.
  bool reduce(const Field& f, Vec& v) const;
  bool contains(const Field& f, Vec v) const { return reduce(f, v); }
  /// Adds v if it is independent. Returns true when the span grew.
  bool insert(const Field& f, Vec v);
  /// Fully reduced echelon form, rows sorted by pivot.
  Matrix to_rref(const Field& f) const;

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// On-disk text format: header "p ext rows cols", then one line per entry
/// holding ext coefficients (little-endian in the power basis).
void write_matrix(std::ostream& out, const Field& f, const Matrix& m);
/// Reads a matrix written by write_matrix; the field must match the header.
Matrix read_matrix(std::istream& in, const Field& f);
FieldParams peek_matrix_params(std::istream& in);

}  // namespace peri

#endif
