#include "hopfcert/braiding.hpp"

#include <stdexcept>

namespace hopfcert {

Braiding Braiding::flip(FieldSpec spec, int n) {
  Braiding c(spec, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      c.set_entry(i, j, j, i, Scalar::one(spec));
  return c;
}

Braiding Braiding::diagonal(const Mat &q) {
  int n = int(q.rows());
  if (q.cols() != size_t(n)) throw std::invalid_argument("q must be square");
  Braiding c(q.spec(), n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      c.set_entry(i, j, j, i, q.at(i - 1, j - 1));
  return c;
}

Braiding Braiding::scaled(const Scalar &q) const {
  if (q.is_zero()) throw std::invalid_argument("scaling by zero");
  Braiding out = *this;
  out.mat_ = mat_.scaled(q);
  return out;
}

BraidCheck check_braid(const Braiding &c) {
  int n = c.n();
  Mat id = Mat::identity(c.spec(), n);
  Mat c12 = kron(c.matrix(), id);
  Mat c23 = kron(id, c.matrix());
  Mat lhs = c12 * c23 * c12;
  Mat rhs = c23 * c12 * c23;
  for (size_t row = 0; row < lhs.rows(); ++row)
    for (size_t col = 0; col < lhs.cols(); ++col)
      if (lhs.at(row, col) != rhs.at(row, col)) {
        BraidCheck out;
        out.ok = false;
        // column = input (i, j, k), row = output (a, b, c), base n.
        out.witness = {int(col / (n * n)) + 1, int(col / n % n) + 1,
                       int(col % n) + 1,      int(row / (n * n)) + 1,
                       int(row / n % n) + 1,  int(row % n) + 1};
        return out;
      }
  return {};
}

RigidCheck check_rigid(const Braiding &c) {
  RigidCheck out;
  auto inv = c.matrix().inverse();
  out.invertible = inv.has_value();
  if (!inv) {
    out.diagnostics = "c is not invertible as an n^2 x n^2 matrix";
    return out;
  }
  // Partial dual of c^{-1} on the first tensor factor: the matrix with
  // entries d_{kj}^{li} at row (k,l), column (i,j), d = entries of
  // c^{-1}. Its invertibility gives the dual braiding on V*; for the
  // flip it is the identity, for a diagonal braiding a monomial matrix.
  int n = c.n();
  Mat pt(c.spec(), size_t(n) * n, size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          // inv row = output (l,i) of d, column = input (k,j).
          pt.at(size_t(k) * n + l, size_t(i) * n + j) =
              inv->at(size_t(l) * n + i, size_t(k) * n + j);
  out.dual_invertible = pt.inverse().has_value();
  out.ok = out.dual_invertible;
  out.diagnostics =
      out.ok ? "c invertible and first-factor partial transpose of c^{-1} "
               "invertible"
             : "partial transpose of c^{-1} in the first factor is singular";
  return out;
}

BilinearForm::BilinearForm(Mat b) : b_(std::move(b)), binv_() {
  if (b_.rows() != b_.cols())
    throw std::invalid_argument("bilinear form must be square");
  auto inv = b_.inverse();
  if (!inv) throw std::invalid_argument("bilinear form is degenerate");
  binv_ = std::move(*inv);
}

}  // namespace hopfcert
