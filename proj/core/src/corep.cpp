#include "hopfcert/corep.hpp"

#include <stdexcept>

namespace hopfcert {

namespace {

size_t ipow(size_t base, int e) {
  size_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

// 1-based digits of a tensor basis index, first factor most significant.
std::vector<int> digits(size_t x, int n, int k) {
  std::vector<int> d(k);
  for (int t = k - 1; t >= 0; --t) {
    d[t] = int(x % n) + 1;
    x /= n;
  }
  return d;
}

}  // namespace

std::vector<NcPoly> coaction(const PresentedBialgebra &A, const NicholsData &N,
                             int k, const std::vector<Scalar> &v) {
  const GradedComponent &comp = N.component(k);
  if (v.size() != comp.dim) throw std::invalid_argument("degree mismatch");
  FieldSpec spec = A.spec;
  auto rep = comp.section.apply(v);
  size_t dim = ipow(A.n, k);
  std::vector<NcPoly> out(comp.dim, NcPoly::zero(spec));
  for (size_t xi = 0; xi < dim; ++xi) {
    if (rep[xi].is_zero()) continue;
    auto I = digits(xi, A.n, k);
    for (size_t xj = 0; xj < dim; ++xj) {
      auto J = digits(xj, A.n, k);
      Word w;
      for (int t = 0; t < k; ++t) w.push_back(A.alphabet.t(I[t], J[t]));
      for (size_t m = 0; m < comp.dim; ++m) {
        Scalar coef = rep[xi] * comp.proj.at(m, xj);
        if (!coef.is_zero()) out[m].add_term(w, coef);
      }
    }
  }
  return out;
}

NcPoly quantum_determinant(const PresentedBialgebra &A, const NicholsData &N) {
  if (!N.finite) throw std::invalid_argument("Nichols algebra not finite");
  if (N.component(N.top).dim != 1)
    throw std::runtime_error("top degree not one-dimensional");
  NcPoly D = coaction(A, N, N.top, N.b_vector())[0];
  auto gl = check_grouplike(A, D);
  if (!gl.ok)
    throw std::runtime_error("quantum determinant is not group-like: " +
                             gl.witness);
  return D;
}

namespace {

// rho of each column of `basis` (coordinates of a basis of B^{top-1}),
// re-expanded in that same basis: rho(w^j) = sum_l M_jl (x) w^l.
PolyMat corep_in_basis(const PresentedBialgebra &A, const NicholsData &N,
                       const Mat &basis) {
  size_t d = basis.cols();
  auto binv = basis.inverse();
  if (!binv) throw std::runtime_error("corepresentation basis is singular");
  PolyMat M(d, std::vector<NcPoly>(d, NcPoly::zero(A.spec)));
  for (size_t j = 0; j < d; ++j) {
    std::vector<Scalar> col(basis.rows());
    for (size_t k = 0; k < basis.rows(); ++k) col[k] = basis.at(k, j);
    auto u = coaction(A, N, N.top - 1, col);
    for (size_t l = 0; l < d; ++l)
      for (size_t k = 0; k < d; ++k)
        M[j][l] = M[j][l] + binv->at(l, k) * u[k];
  }
  return M;
}

}  // namespace

CorepData corep_matrices(const PresentedBialgebra &A, const NicholsData &N,
                         const PairingData &P) {
  CorepData C;
  C.n = A.n;
  C.D = quantum_determinant(A, N);
  C.T = corep_in_basis(A, N, P.omega);
  C.That = corep_in_basis(A, N, P.omega_hat);
  return C;
}

VerifyReport verify_determinant_identities(const CorepData &C,
                                           const PresentedBialgebra &A) {
  VerifyReport rep;
  FieldSpec spec = A.spec;
  int n = C.n;
  size_t d = C.T.size();
  auto check = [&](const NcPoly &p, const std::string &label) {
    NcPoly nf = normal_form(p, A.rewrite);
    ++rep.reductions;
    if (!A.rewrite.certifies(p.degree())) rep.certified = false;
    if (!nf.is_zero()) {
      rep.ok = false;
      rep.failures.push_back(label + ": " + nf.render(A.alphabet));
    }
  };
  // (t * T^tr)_{ij} = D delta_ij
  for (int i = 1; i <= n; ++i)
    for (size_t j = 0; j < d; ++j) {
      NcPoly sum(spec);
      for (size_t k = 0; k < d; ++k)
        sum = sum + A.t(i, int(k) + 1) * C.T[j][k];
      if (size_t(i - 1) == j) sum = sum - C.D;
      check(sum, "t*T^tr at (" + std::to_string(i) + "," +
                     std::to_string(j + 1) + ")");
    }
  // (That^tr * t)_{jk} = D delta_jk
  for (size_t j = 0; j < d; ++j)
    for (int k = 1; k <= n; ++k) {
      NcPoly sum(spec);
      for (int i = 1; i <= n; ++i)
        sum = sum + C.That[size_t(i - 1)][j] * A.t(i, k);
      if (j == size_t(k - 1)) sum = sum - C.D;
      check(sum, "That^tr*t at (" + std::to_string(j + 1) + "," +
                     std::to_string(k) + ")");
    }
  return rep;
}

VerifyReport check_colinearity(const PresentedBialgebra &A,
                               const NicholsData &N, const PairingData &P) {
  VerifyReport rep;
  FieldSpec spec = A.spec;
  int n = A.n;
  CorepData C = corep_matrices(A, N, P);
  size_t d = P.omega.cols();
  auto unit = [&](size_t len, size_t i) {
    std::vector<Scalar> e(len, Scalar::zero(spec));
    e[i] = Scalar::one(spec);
    return e;
  };
  auto omega_col = [&](size_t j) {
    std::vector<Scalar> col(P.omega.rows());
    for (size_t k = 0; k < P.omega.rows(); ++k) col[k] = P.omega.at(k, j);
    return col;
  };
  // Pairing coefficients x_k omega^l = pair_{kl} b (identity after the
  // normalization, but computed rather than assumed).
  Mat pair(spec, n, d);
  for (int k = 0; k < n; ++k)
    for (size_t l = 0; l < d; ++l)
      pair.at(k, l) = N.multiply(1, unit(n, k), N.top - 1, omega_col(l))[0];

  for (int i = 1; i <= n; ++i)
    for (size_t j = 0; j < d; ++j) {
      // Through the product: x_i omega^j lands in B^top, then rho.
      Scalar s = N.multiply(1, unit(n, i - 1), N.top - 1, omega_col(j))[0];
      NcPoly via_product = s * C.D;
      // Through the coactions: sum t_ik T_jl (x) x_k omega^l.
      NcPoly via_coactions(spec);
      for (int k = 1; k <= n; ++k)
        for (size_t l = 0; l < d; ++l)
          via_coactions = via_coactions +
                          pair.at(k - 1, l) * (A.t(i, k) * C.T[j][l]);
      NcPoly nf = normal_form(via_product - via_coactions, A.rewrite);
      ++rep.reductions;
      if (!A.rewrite.certifies(N.top + 1u)) rep.certified = false;
      if (!nf.is_zero()) {
        rep.ok = false;
        rep.failures.push_back("colinearity at (" + std::to_string(i) + "," +
                               std::to_string(j + 1) +
                               "): " + nf.render(A.alphabet));
      }
    }
  return rep;
}

}  // namespace hopfcert
