#ifndef HOPFCERT_MATRIX_HPP
#define HOPFCERT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfcert/scalar.hpp"

namespace hopfcert {

/// Dense matrix over an exact field. Everything here is desk-scale
/// (dimensions up to a few hundred), so plain Gaussian elimination with
/// deterministic pivoting is all we need.
class Mat {
public:
  Mat() = default;
  Mat(FieldSpec spec, size_t rows, size_t cols)
      : spec_(spec), rows_(rows), cols_(cols),
        a_(rows * cols, Scalar::zero(spec)) {}

  static Mat identity(FieldSpec spec, size_t n);

  FieldSpec spec() const { return spec_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar &at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar &at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend Mat operator+(const Mat &x, const Mat &y);
  friend Mat operator-(const Mat &x, const Mat &y);
  friend Mat operator*(const Mat &x, const Mat &y);
  Mat scaled(const Scalar &c) const;
  Mat transpose() const;

  /// Kronecker product, row/column index of the result is
  /// (i_x * y.rows + i_y, j_x * y.cols + j_y).
  friend Mat kron(const Mat &x, const Mat &y);

  friend bool operator==(const Mat &x, const Mat &y);
  friend bool operator!=(const Mat &x, const Mat &y) { return !(x == y); }

  size_t rank() const;
  std::optional<Mat> inverse() const;

  /// Reduced row echelon form together with the pivot column list.
  struct Rref;
  Rref rref() const;

  /// Basis of the right kernel, one column per basis vector.
  Mat kernel() const;

  /// Solve this * x = b (b a column vector); nullopt when inconsistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar> &b) const;

  std::vector<Scalar> apply(const std::vector<Scalar> &v) const;

private:
  FieldSpec spec_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct Mat::Rref {
  Mat mat;
  std::vector<size_t> pivots;
};

}  // namespace hopfcert

#endif
