#ifndef HOPFCERT_NICHOLS_HPP
#define HOPFCERT_NICHOLS_HPP

#include "hopfcert/braiding.hpp"

namespace hopfcert {

/// Permutations of {0..k-1} as image vectors.
using Perm = std::vector<int>;

/// A reduced word for w (indices of adjacent transpositions s_i,
/// 0-based), obtained by sorting; any reduced word gives the same braid
/// lift by Matsumoto's theorem.
std::vector<int> reduced_word(const Perm &w);

/// Positive braid lift T_w of w acting on V^{(x)k}, built as the product
/// of the braiding at adjacent positions along a reduced word.
Mat braid_lift(const Braiding &c, int k, const Perm &w);
Mat braid_lift_from_word(const Braiding &c, int k,
                         const std::vector<int> &word);

/// Quantum symmetrizer S_k = sum_{w in S_k} T_w on V^{(x)k}.
Mat symmetrizer(const Braiding &c, int k);

/// All (p,q)-shuffles inside S_{p+q}.
std::vector<Perm> shuffles(int p, int q);

/// One graded piece of the Nichols algebra, modelled as the quotient
/// V^{(x)k} / ker S_k. `proj` has full row rank with kernel exactly
/// ker S_k; `section` is a right inverse picking monomial
/// representatives at the pivot positions.
struct GradedComponent {
  size_t dim = 0;
  Mat proj;     // dim x n^k
  Mat section;  // n^k x dim
  std::vector<size_t> pivot_words;
};

struct NicholsData {
  Braiding braiding;  // the braiding qc actually used
  int n = 0;
  bool finite = false;
  int top = -1;
  std::vector<GradedComponent> degrees;  // 0 .. top when finite
  std::vector<size_t> hilbert_prefix;    // dims 0 .. max_degree scanned

  FieldSpec spec() const { return braiding.spec(); }
  const GradedComponent &component(int k) const { return degrees.at(k); }
  /// Coordinates of the chosen top-degree spanning element (the class of
  /// the pivot word of degree `top`); a 1-vector (1).
  std::vector<Scalar> b_vector() const;
  /// Its tensor representative in V^{(x)top}.
  std::vector<Scalar> b_representative() const;

  /// Product B^p (x) B^q -> B^{p+q} through tensor representatives.
  std::vector<Scalar> multiply(int p, const std::vector<Scalar> &a, int q,
                               const std::vector<Scalar> &b) const;
  /// Graded comultiplication component B^{p+q} -> B^p (x) B^q: the sum
  /// of braid lifts over inverse (p,q)-shuffles applied to a
  /// representative, projected in both factors. Result indexed
  /// (i_p * dim_q + i_q).
  std::vector<Scalar> comultiply(int p, int q,
                                 const std::vector<Scalar> &v) const;
};

/// Degree-by-degree scan of B(V, qc): image ranks of the symmetrizers,
/// stopping at the first vanishing degree (B is generated in degree 1,
/// so the first zero kills everything above). When no degree vanishes
/// by max_degree the result has finite = false and carries the
/// Hilbert-series prefix.
NicholsData nichols_compute(const Braiding &c, const Scalar &q,
                            int max_degree);

/// The bases and matrices of the top-degree pairing and coevaluation.
/// After construction the bases are normalized: x_i omega^j =
/// delta_ij b, and coev(b) = sum_i omega_hat^i (x) x_i.
struct PairingData {
  Mat omega;        // columns: B^{top-1}-coordinates of omega^j
  Mat omega_hat;    // columns: coordinates of omega_hat^j
  Mat m_matrix;     // omega^i x_j = m_ij b (after normalization)
  Mat coev_matrix;  // coev coefficients in the pre-normalized basis
};

/// Throws if either matrix is singular (contradicts non-degeneracy of
/// the top pairing; signals an upstream bug or a non-Nichols input).
PairingData pairing_data(const NicholsData &N);

/// Coefficient of the top-degree element b in a graded element given as
/// per-degree coordinate vectors (index = degree).
Scalar integral_coefficient(const NicholsData &N,
                            const std::vector<std::vector<Scalar>> &omega);

}  // namespace hopfcert

#endif
