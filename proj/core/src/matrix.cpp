#include "hopfcert/matrix.hpp"

#include <stdexcept>

namespace hopfcert {

Mat Mat::identity(FieldSpec spec, size_t n) {
  Mat m(spec, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(spec);
  return m;
}

Mat operator+(const Mat &x, const Mat &y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  Mat out = x;
  for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = out.a_[i] + y.a_[i];
  return out;
}

Mat operator-(const Mat &x, const Mat &y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  Mat out = x;
  for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = out.a_[i] - y.a_[i];
  return out;
}

Mat operator*(const Mat &x, const Mat &y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
  Mat out(x.spec_, x.rows_, y.cols_);
  for (size_t i = 0; i < x.rows_; ++i)
    for (size_t k = 0; k < x.cols_; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (size_t j = 0; j < y.cols_; ++j)
        out.at(i, j) = out.at(i, j) + x.at(i, k) * y.at(k, j);
    }
  return out;
}

Mat Mat::scaled(const Scalar &c) const {
  Mat out = *this;
  for (auto &v : out.a_) v = v * c;
  return out;
}

Mat Mat::transpose() const {
  Mat out(spec_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Mat kron(const Mat &x, const Mat &y) {
  Mat out(x.spec_, x.rows_ * y.rows_, x.cols_ * y.cols_);
  for (size_t i = 0; i < x.rows_; ++i)
    for (size_t j = 0; j < x.cols_; ++j) {
      if (x.at(i, j).is_zero()) continue;
      for (size_t p = 0; p < y.rows_; ++p)
        for (size_t q = 0; q < y.cols_; ++q)
          out.at(i * y.rows_ + p, j * y.cols_ + q) = x.at(i, j) * y.at(p, q);
    }
  return out;
}

bool operator==(const Mat &x, const Mat &y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

Mat::Rref Mat::rref() const {
  Mat m = *this;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t piv = row;
    while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (size_t j = col; j < cols_; ++j) m.at(row, j) = m.at(row, j) * inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (size_t j = col; j < cols_; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

size_t Mat::rank() const { return rref().pivots.size(); }

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Mat aug(spec_, rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar::one(spec_);
  }
  auto r = aug.rref();
  if (r.pivots.size() != rows_ || r.pivots.back() >= cols_)
    return std::nullopt;
  Mat out(spec_, rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.at(i, j) = r.mat.at(i, cols_ + j);
  return out;
}

Mat Mat::kernel() const {
  auto r = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<size_t> free_cols;
  for (size_t j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat out(spec_, cols_, free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t fc = free_cols[k];
    out.at(fc, k) = Scalar::one(spec_);
    for (size_t i = 0; i < r.pivots.size(); ++i)
      out.at(r.pivots[i], k) = -r.mat.at(i, fc);
  }
  return out;
}

std::optional<std::vector<Scalar>> Mat::solve(
    const std::vector<Scalar> &b) const {
  if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
  Mat aug(spec_, rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto r = aug.rref();
  if (!r.pivots.empty() && r.pivots.back() == cols_) return std::nullopt;
  std::vector<Scalar> x(cols_, Scalar::zero(spec_));
  for (size_t i = 0; i < r.pivots.size(); ++i)
    x[r.pivots[i]] = r.mat.at(i, cols_);
  return x;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar> &v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(spec_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero())
        out[i] = out[i] + at(i, j) * v[j];
  return out;
}

}  // namespace hopfcert
