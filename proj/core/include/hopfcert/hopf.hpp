#ifndef HOPFCERT_HOPF_HPP
#define HOPFCERT_HOPF_HPP

#include "hopfcert/corep.hpp"

namespace hopfcert {

/// A(c)[D^{-1}]: the base algebra with a fresh symbol Dinv and the two
/// relations D*Dinv = 1 = Dinv*D, recompleted to the truncation bound.
struct LocalizedAlgebra {
  PresentedBialgebra base;  // alphabet extended with Dinv
  NcPoly D;
  uint16_t dinv = 0;

  NcPoly dinv_poly() const {
    return NcPoly::generator(base.spec, dinv);
  }
};

/// Refuses a non-group-like D (the comultiplication would not extend).
LocalizedAlgebra localize(const PresentedBialgebra &A, const NcPoly &D,
                          unsigned truncation_degree);

/// The antipode on generators, extended anti-multiplicatively to words
/// and linearly to polynomials.
struct AntipodeMap {
  std::map<uint16_t, NcPoly> images;

  NcPoly apply(const NcPoly &p) const;
};

/// S(t_ij) = (T^tr * D^{-1})_ij, S(D^{-1}) = D; certifies that the left
/// inverse D^{-1} * That^tr agrees entrywise, and throws on mismatch.
AntipodeMap build_antipode(const LocalizedAlgebra &L, const CorepData &C);

/// The generator-level antipode axioms: both matrix products
/// t * S(t) and S(t) * t reduce to the identity, D S(D) = 1 = S(D) D,
/// and S maps every defining relation to zero (anti-algebra
/// well-definedness; for FRT relations this is exactly the opposite
/// relation set in the u_ij).
VerifyReport verify_hopf(const Alphabet &alphabet, const RewriteSystem &R,
                         const std::vector<NcPoly> &relations,
                         const AntipodeMap &S, int n,
                         const NcPoly *D = nullptr);

inline VerifyReport verify_hopf(const LocalizedAlgebra &L,
                                const AntipodeMap &S) {
  return verify_hopf(L.base.alphabet, L.base.rewrite, L.base.relations, S,
                     L.base.n, &L.D);
}

/// Antipode of the Dubois-Violette/Launer algebra: S(t) = B t^tr B^{-1},
/// certified with verify_hopf under both relation families (no
/// localization needed).
struct DvlAntipodeResult {
  AntipodeMap S;
  VerifyReport report;
};

DvlAntipodeResult dvl_antipode(const DvlBialgebra &A, const BilinearForm &b);

/// Membership probe for the disputed redundancy claim: completes family
/// (1) alone and reduces every element of family (2) against it.
struct ProbeEntry {
  int lambda = 0, rho = 0;
  std::string residue;  // rendered normal form
  bool vanished = false;
};

struct ProbeReport {
  unsigned degree = 0;
  bool truncated = false;
  std::vector<ProbeEntry> entries;
  /// One of: "redundant up to degree d", "not implied up to degree d",
  /// "inconclusive".
  std::string summary;
};

ProbeReport redundancy_probe(const BilinearForm &b, unsigned truncation_degree);

}  // namespace hopfcert

#endif
