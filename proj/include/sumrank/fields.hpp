#pragma once

// Finite-field tower F_p ⊂ F_q ⊂ F_{q^m} with dense coefficient-vector
// elements, plus Gaussian elimination over any level of the tower.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sumrank {

bool is_prime(std::uint64_t n);

/// Splits q = p^e. Returns nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, int>> prime_power_decompose(std::uint64_t q);

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::span<T> row(int r) { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const T> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

/// Integers mod p.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t order() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} + b) % p_); }
  Element sub(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} + p_ - b) % p_); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return static_cast<Element>((std::uint64_t{a} * b) % p_); }
  Element inv(Element a) const;

 private:
  std::uint32_t p_;
};

/// F_q = F_p[y]/(f) with f the lexicographically smallest monic irreducible
/// of degree e. Elements are encoded as integers sum_i c_i p^i, where c_i is
/// the coefficient of y^i.
class Field {
 public:
  using Element = std::uint32_t;

  /// Largest supported q; codes over bigger fields are not enumerable anyway.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

  static Field make(std::uint32_t p, int e);
  /// Builds F_q from its order; q must be a prime power.
  static Field of_order(std::uint64_t q);

  std::uint32_t characteristic() const { return base_.characteristic(); }
  int degree() const { return e_; }
  std::uint64_t order() const { return q_; }
  const PrimeField& prime_field() const { return base_; }
  /// Coefficients over F_p from the constant term up; leading coefficient 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;

  std::vector<std::uint32_t> digits(Element a) const;
  Element from_digits(std::span<const std::uint32_t> d) const;

 private:
  Field(PrimeField base, int e, std::vector<std::uint32_t> modulus);

  Element add_slow(Element a, Element b, bool subtract) const;
  Element mul_slow(Element a, Element b) const;

  PrimeField base_;
  int e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  // Full operation tables, only for q <= kTableLimit.
  static constexpr std::uint32_t kTableLimit = 256;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<std::uint16_t> inv_table_;
};

/// Element of F_{q^m}: coordinates over F_q in the polynomial basis
/// {1, a, ..., a^{m-1}}.
struct ExtElement {
  std::vector<Field::Element> coords;
  bool operator==(const ExtElement&) const = default;
};

/// F_{q^m} = F_q[x]/(g), g the lexicographically smallest monic irreducible
/// of degree m over F_q.
class ExtField {
 public:
  using Element = ExtElement;

  static ExtField make(const Field& base, int m);

  const Field& base() const { return base_; }
  int degree() const { return m_; }
  /// q^m when it fits in 64 bits.
  std::optional<std::uint64_t> order() const;
  /// Coefficients over F_q from the constant term up; leading coefficient 1.
  const std::vector<Field::Element>& modulus() const { return modulus_; }

  Element zero() const { return ExtElement{std::vector<Field::Element>(m_, 0)}; }
  Element one() const;
  /// The class of x, i.e. the root of the modulus.
  Element generator() const;
  Element embed(Field::Element a) const;
  bool is_zero(const Element& a) const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element scale(Field::Element s, const Element& a) const;

  /// F_q-linear coordinate map F_{q^m} -> F_q^m.
  const std::vector<Field::Element>& expand(const Element& a) const { return a.coords; }
  Element from_coords(std::vector<Field::Element> coords) const;

  /// Enumeration index sum_i c_i q^i; requires q^m < 2^64.
  std::uint64_t index(const Element& a) const;
  Element from_index(std::uint64_t idx) const;

 private:
  ExtField(Field base, int m, std::vector<Field::Element> modulus)
      : base_(std::move(base)), m_(m), modulus_(std::move(modulus)) {}

  void check(const Element& a) const;

  Field base_;
  int m_;
  std::vector<Field::Element> modulus_;
};

using MatrixFq = Matrix<Field::Element>;
using MatrixExt = Matrix<ExtElement>;

/// Row rank by Gaussian elimination over any field type exposing the
/// Element/is_zero/mul/sub/inv interface.
template <class F>
int gaussian_rank(const F& field, Matrix<typename F::Element> a) {
  const int rows = a.rows();
  const int cols = a.cols();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!field.is_zero(a(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < cols; ++c) std::swap(a(pivot, c), a(rank, c));
    const auto pivot_inv = field.inv(a(rank, col));
    for (int r = rank + 1; r < rows; ++r) {
      if (field.is_zero(a(r, col))) continue;
      const auto factor = field.mul(a(r, col), pivot_inv);
      for (int c = col; c < cols; ++c) a(r, c) = field.sub(a(r, c), field.mul(factor, a(rank, c)));
    }
    ++rank;
  }
  return rank;
}

inline int rank_fq(const Field& field, const MatrixFq& m) { return gaussian_rank(field, m); }
inline int rank_ext(const ExtField& field, const MatrixExt& m) { return gaussian_rank(field, m); }

}  // namespace sumrank
