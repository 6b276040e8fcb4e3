#ifndef HOPFCERT_COREP_HPP
#define HOPFCERT_COREP_HPP

#include "hopfcert/bialgebra.hpp"
#include "hopfcert/nichols.hpp"

namespace hopfcert {

/// Square matrix of noncommutative polynomials (entries in a presented
/// algebra), used for t, T and T-hat.
using PolyMat = std::vector<std::vector<NcPoly>>;

/// The comodule structure map rho: B^k -> A (x) B^k on coordinates: for
/// v in B^k the result lists, per basis coordinate, the A-side
/// polynomial (left unreduced; reduction is the caller's choice).
std::vector<NcPoly> coaction(const PresentedBialgebra &A, const NicholsData &N,
                             int k, const std::vector<Scalar> &v);

/// The group-like element D with rho(b) = D (x) b; asserts that D is
/// group-like in A.
NcPoly quantum_determinant(const PresentedBialgebra &A, const NicholsData &N);

/// The corepresentation data of the top-degree bases.
struct CorepData {
  int n = 0;
  NcPoly D;
  PolyMat T;     // rho(omega^j)     = sum_k T_jk   (x) omega^k
  PolyMat That;  // rho(omega_hat^j) = sum_k That_jk (x) omega_hat^k
};

CorepData corep_matrices(const PresentedBialgebra &A, const NicholsData &N,
                         const PairingData &P);

/// Reduction-based certification outcome with per-entry failures.
struct VerifyReport {
  bool ok = true;
  bool certified = true;
  std::vector<std::string> failures;
  size_t reductions = 0;
};

/// t * T^tr = D * Id and That^tr * t = D * Id as normal forms in A.
VerifyReport verify_determinant_identities(const CorepData &C,
                                           const PresentedBialgebra &A);

/// Colinearity of the multiplication V (x) B^{top-1} -> B^top: the
/// coaction of x_i omega^j computed through the product agrees with the
/// product of the coactions, entrywise after reduction.
VerifyReport check_colinearity(const PresentedBialgebra &A,
                               const NicholsData &N, const PairingData &P);

}  // namespace hopfcert

#endif
