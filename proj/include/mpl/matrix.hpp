#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "mpl/scalar.hpp"

namespace mpl {

/// Dense row-major matrix over the max-plus semiring. Also the storage for
/// DBM bound matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Scalar fill = eps);
  /// Row-list literal; throws DimensionError on ragged rows.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  /// Square n x n matrix, all entries epsilon.
  static Matrix zero(std::size_t n) { return Matrix(n, n); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Bounds-checked access; throws DimensionError.
  Scalar at(std::size_t i, std::size_t j) const;

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// One finite column per row: A(i, columns[i]) != eps. Indices are 0-based
/// positions in whatever matrix the coefficient belongs to; for augmented
/// matrices (dummy row/column 0) entry 0 is always 0 and entries 1..n are
/// the usual 1-based variable indices.
struct FiniteCoefficient {
  std::vector<std::size_t> columns;

  std::size_t size() const noexcept { return columns.size(); }
  std::size_t operator[](std::size_t i) const { return columns[i]; }

  /// True iff every g_i is distinct.
  bool is_permutation() const;

  friend bool operator==(const FiniteCoefficient&, const FiniteCoefficient&) = default;
  friend auto operator<=>(const FiniteCoefficient&, const FiniteCoefficient&) = default;
};

std::ostream& operator<<(std::ostream& os, const FiniteCoefficient& g);

/// The finite coefficients of a row-finite matrix, in lexicographic order.
/// Random access by index so the range can be split across workers; element
/// k is the k-th coefficient of the Cartesian product of the per-row finite
/// column sets, last row varying fastest.
class CoefficientRange {
 public:
  class iterator {
   public:
    using value_type = FiniteCoefficient;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const CoefficientRange* range, std::uint64_t index) : range_(range), index_(index) {}

    FiniteCoefficient operator*() const { return (*range_)[index_]; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++index_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const CoefficientRange* range_ = nullptr;
    std::uint64_t index_ = 0;
  };

  explicit CoefficientRange(std::vector<std::vector<std::size_t>> choices);

  std::uint64_t size() const noexcept { return size_; }
  FiniteCoefficient operator[](std::uint64_t index) const;

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

  const std::vector<std::vector<std::size_t>>& choices() const noexcept { return choices_; }

 private:
  std::vector<std::vector<std::size_t>> choices_;
  std::uint64_t size_ = 0;
};

// --- semiring operations ---------------------------------------------------

Matrix mat_oplus(const Matrix& a, const Matrix& b);
Matrix mat_otimes(const Matrix& a, const Matrix& c);
Matrix mat_power(const Matrix& a, std::size_t m);

/// Tropical matrix-vector product over finite vectors; entries of the result
/// are epsilon for rows with no finite entry.
std::vector<Scalar> mat_vec(const Matrix& a, std::span<const Scalar> x);

// --- region matrices, conjugates, definite forms ----------------------------

bool is_row_finite(const Matrix& a);
bool is_finite_coefficient(const Matrix& a, const FiniteCoefficient& g);

/// Throws DimensionError for non-square input, NotRowFiniteError if a row
/// has no finite entry.
CoefficientRange enumerate_finite_coefficients(const Matrix& a);

/// A_g: keeps A(i, g_i), epsilon elsewhere.
Matrix region_matrix(const Matrix& a, const FiniteCoefficient& g);

/// Negated transpose of the finite entries: A^c(i,j) = -A(j,i) where
/// A(j,i) is finite.
Matrix conjugate(const Matrix& a);

/// A_g^c (x) A
Matrix row_definite(const Matrix& a, const FiniteCoefficient& g);
/// A (x) A_g^c
Matrix col_definite(const Matrix& a, const FiniteCoefficient& g);

inline constexpr std::size_t kPermanentLimit = 10;

/// Brute-force tropical permanent, max over permutations of sum A(i, s(i)).
/// Test support only; throws UnsupportedSizeError above `limit`.
Scalar permanent(const Matrix& a, std::size_t limit = kPermanentLimit);

/// Adds the dummy row/column 0: A(0,0) = 0, eps elsewhere on the border.
Matrix augment_zero(const Matrix& a);

/// Prepends g_0 = 0 to a coefficient given over variables 1..n.
FiniteCoefficient with_dummy(std::vector<std::size_t> one_based);

}  // namespace mpl
