#include "mpl/matrix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "mpl/error.hpp"

namespace mpl {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) throw DimensionError(std::string(op) + ": matrix must be square, got " + shape(a));
}

void require_finite_coefficient(const Matrix& a, const FiniteCoefficient& g) {
  require_square(a, "region_matrix");
  if (g.size() != a.rows()) {
    throw InvalidCoefficientError("coefficient has length " + std::to_string(g.size()) + ", matrix has " +
                                  std::to_string(a.rows()) + " rows");
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] >= a.cols() || a(i, g[i]).is_eps()) {
      throw InvalidCoefficientError("coefficient is not finite at row " + std::to_string(i));
    }
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::unit();
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw DimensionError("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + shape(*this));
  }
  return (*this)(i, j);
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

bool FiniteCoefficient::is_permutation() const {
  std::vector<bool> seen(columns.size(), false);
  for (auto c : columns) {
    if (c >= seen.size() || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const FiniteCoefficient& g) {
  os << '(';
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
  return os << ')';
}

CoefficientRange::CoefficientRange(std::vector<std::vector<std::size_t>> choices) : choices_(std::move(choices)) {
  size_ = 1;
  for (const auto& c : choices_) {
    if (c.empty()) {
      size_ = 0;
      break;
    }
    if (size_ > std::numeric_limits<std::uint64_t>::max() / c.size()) {
      throw UnsupportedSizeError("number of finite coefficients exceeds 2^64");
    }
    size_ *= c.size();
  }
}

FiniteCoefficient CoefficientRange::operator[](std::uint64_t index) const {
  FiniteCoefficient g;
  g.columns.resize(choices_.size());
  for (std::size_t r = choices_.size(); r-- > 0;) {
    const auto radix = choices_[r].size();
    g.columns[r] = choices_[r][index % radix];
    index /= radix;
  }
  return g;
}

Matrix mat_oplus(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("mat_oplus: shape mismatch " + shape(a) + " vs " + shape(b));
  }
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = oplus(a(i, j), b(i, j));
  return r;
}

Matrix mat_otimes(const Matrix& a, const Matrix& c) {
  if (a.cols() != c.rows()) throw DimensionError("mat_otimes: inner dimensions differ, " + shape(a) + " vs " + shape(c));
  Matrix r(a.rows(), c.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik.is_eps()) continue;
      for (std::size_t j = 0; j < c.cols(); ++j) r(i, j) = oplus(r(i, j), otimes(aik, c(k, j)));
    }
  }
  return r;
}

Matrix mat_power(const Matrix& a, std::size_t m) {
  require_square(a, "mat_power");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (m > 0) {
    if (m & 1U) result = mat_otimes(result, base);
    m >>= 1U;
    if (m > 0) base = mat_otimes(base, base);
  }
  return result;
}

std::vector<Scalar> mat_vec(const Matrix& a, std::span<const Scalar> x) {
  if (x.size() != a.cols()) throw DimensionError("mat_vec: vector length does not match column count");
  std::vector<Scalar> r(a.rows(), eps);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] = oplus(r[i], otimes(a(i, j), x[j]));
  return r;
}

bool is_row_finite(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    if (std::none_of(row.begin(), row.end(), [](Scalar s) { return s.is_finite(); })) return false;
  }
  return true;
}

bool is_finite_coefficient(const Matrix& a, const FiniteCoefficient& g) {
  if (!a.is_square() || g.size() != a.rows()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] >= a.cols() || a(i, g[i]).is_eps()) return false;
  return true;
}

CoefficientRange enumerate_finite_coefficients(const Matrix& a) {
  require_square(a, "enumerate_finite_coefficients");
  std::vector<std::vector<std::size_t>> choices(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite()) choices[i].push_back(j);
    if (choices[i].empty()) throw NotRowFiniteError("row " + std::to_string(i) + " has no finite entry");
  }
  return CoefficientRange(std::move(choices));
}

Matrix region_matrix(const Matrix& a, const FiniteCoefficient& g) {
  require_finite_coefficient(a, g);
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) r(i, g[i]) = a(i, g[i]);
  return r;
}

Matrix conjugate(const Matrix& a) {
  Matrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).is_finite()) r(j, i) = negate(a(i, j));
  return r;
}

Matrix row_definite(const Matrix& a, const FiniteCoefficient& g) {
  return mat_otimes(conjugate(region_matrix(a, g)), a);
}

Matrix col_definite(const Matrix& a, const FiniteCoefficient& g) {
  return mat_otimes(a, conjugate(region_matrix(a, g)));
}

Scalar permanent(const Matrix& a, std::size_t limit) {
  require_square(a, "permanent");
  const std::size_t n = a.rows();
  if (n > limit) {
    throw UnsupportedSizeError("permanent: brute force limited to n <= " + std::to_string(limit) + ", got " +
                               std::to_string(n));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Scalar best = eps;
  do {
    Scalar sum = Scalar::unit();
    for (std::size_t i = 0; i < n && sum.is_finite(); ++i) sum = otimes(sum, a(i, perm[i]));
    best = oplus(best, sum);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Matrix augment_zero(const Matrix& a) {
  require_square(a, "augment_zero");
  const std::size_t n = a.rows();
  Matrix r(n + 1, n + 1);
  r(0, 0) = Scalar::unit();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i + 1, j + 1) = a(i, j);
  return r;
}

FiniteCoefficient with_dummy(std::vector<std::size_t> one_based) {
  FiniteCoefficient g;
  g.columns.reserve(one_based.size() + 1);
  g.columns.push_back(0);
  g.columns.insert(g.columns.end(), one_based.begin(), one_based.end());
  return g;
}

}  // namespace mpl
