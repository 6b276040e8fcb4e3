#ifndef HOPFCERT_BRAIDING_HPP
#define HOPFCERT_BRAIDING_HPP

#include <array>
#include <string>

#include "hopfcert/matrix.hpp"

namespace hopfcert {

/// A candidate solution c of the braid equation on V tensor V, stored as
/// the n^2 x n^2 matrix of its entries. Index convention, fixed once:
///   c(x_i (x) x_j) = sum_{k,l} c_{ij}^{kl} x_k (x) x_l
/// so the matrix entry at row (k,l), column (i,j) is c_{ij}^{kl}.
/// Indices are 1-based at the interface, matching t[i][j].
class Braiding {
public:
  Braiding(FieldSpec spec, int n)
      : n_(n), mat_(spec, size_t(n) * n, size_t(n) * n) {}

  static Braiding flip(FieldSpec spec, int n);
  /// c(x_i (x) x_j) = q_{ij} x_j (x) x_i.
  static Braiding diagonal(const Mat &q);

  int n() const { return n_; }
  FieldSpec spec() const { return mat_.spec(); }
  const Mat &matrix() const { return mat_; }

  const Scalar &entry(int i, int j, int k, int l) const {
    return mat_.at(idx(k, l), idx(i, j));
  }
  void set_entry(int i, int j, int k, int l, Scalar v) {
    mat_.at(idx(k, l), idx(i, j)) = std::move(v);
  }

  /// q times c; the braid equation is preserved. q must be nonzero.
  Braiding scaled(const Scalar &q) const;

  friend bool operator==(const Braiding &a, const Braiding &b) {
    return a.n_ == b.n_ && a.mat_ == b.mat_;
  }

private:
  int n_;
  Mat mat_;
  size_t idx(int i, int j) const { return size_t(i - 1) * n_ + (j - 1); }
};

/// Result of the braid-equation check; on failure `witness` is the first
/// failing index 6-tuple (i, j, k -> a, b, c), 1-based.
struct BraidCheck {
  bool ok = true;
  std::array<int, 6> witness{};
};

BraidCheck check_braid(const Braiding &c);

/// Rigidity diagnostics: c invertible and the first-factor partial
/// transpose of c^{-1} invertible (existence of the dual braiding).
struct RigidCheck {
  bool ok = false;
  bool invertible = false;
  bool dual_invertible = false;
  std::string diagnostics;
};

RigidCheck check_rigid(const Braiding &c);

/// Non-degenerate bilinear form with its inverse matrix; B * Binv = Id
/// is established at construction.
class BilinearForm {
public:
  explicit BilinearForm(Mat b);

  int n() const { return int(b_.rows()); }
  FieldSpec spec() const { return b_.spec(); }
  const Mat &matrix() const { return b_; }
  const Mat &inverse_matrix() const { return binv_; }
  /// 1-based entries b_{mu nu} and b^{mu nu}.
  const Scalar &entry(int mu, int nu) const { return b_.at(mu - 1, nu - 1); }
  const Scalar &inverse_entry(int mu, int nu) const {
    return binv_.at(mu - 1, nu - 1);
  }

private:
  Mat b_, binv_;
};

}  // namespace hopfcert

#endif
