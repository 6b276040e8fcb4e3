#ifndef HOPFCERT_BIALGEBRA_HPP
#define HOPFCERT_BIALGEBRA_HPP

#include <optional>

#include "hopfcert/braiding.hpp"
#include "hopfcert/rewrite.hpp"

namespace hopfcert {

/// A linear map f: V^{(x) n1} -> V^{(x) n2} by its coefficients
/// f(x_I) = sum_J f_I^J x_J, multi-indices over 1..n.
struct LinearMapSpec {
  int n = 0;
  int n1 = 0, n2 = 0;
  std::map<std::vector<int>, std::map<std::vector<int>, Scalar>> coeffs;

  Scalar coeff(FieldSpec spec, const std::vector<int> &I,
               const std::vector<int> &J) const;

  static LinearMapSpec from_braiding(const Braiding &c);
  /// b: V^{(x)2} -> k.
  static LinearMapSpec evaluation(const BilinearForm &b);
  /// i_b: k -> V^{(x)2}, 1 -> sum b^{ij} x_i (x) x_j.
  static LinearMapSpec coevaluation(const BilinearForm &b);
};

/// A bialgebra presented on the n^2 matrix generators t[i][j], with its
/// defining relations and the completed rewrite system. Comultiplication
/// is Delta(t[i][j]) = sum_k t[i][k] (x) t[k][j], counit t[i][j] -> delta.
struct PresentedBialgebra {
  int n = 0;
  FieldSpec spec;
  Alphabet alphabet;
  std::vector<NcPoly> relations;
  RewriteSystem rewrite;

  NcPoly t(int i, int j) const {
    return NcPoly::generator(spec, alphabet.t(i, j));
  }
  size_t max_relation_degree() const;
};

/// Quotient by the ideal making every map in `maps` a comodule map:
/// one relation sum_J (t_I^J f_J^K - f_I^J t_J^K) per map and (I, K).
/// An empty map list yields the free bialgebra (no relations).
PresentedBialgebra universal_bialgebra(FieldSpec spec, int n,
                                       const std::vector<LinearMapSpec> &maps,
                                       unsigned truncation_degree);

/// The FRT bialgebra A(c): n^4 homogeneous quadratic relations
/// sum c_{ij}^{kl} t_{kr} t_{ls} = sum t_{ik} t_{jl} c_{kl}^{rs}.
/// Rejects inputs failing the braid-equation check.
PresentedBialgebra frt_bialgebra(const Braiding &c, unsigned truncation_degree);

/// Dubois-Violette/Launer algebra A(b, i_b) with the two relation
/// families kept separately addressable (the redundancy probe needs
/// family (1) alone).
struct DvlBialgebra {
  PresentedBialgebra algebra;
  std::vector<NcPoly> family1;  // b_{mu nu} t_{la mu} t_{rho nu} = b_{la rho}
  std::vector<NcPoly> family2;  // b^{mu nu} t_{mu la} t_{nu rho} = b^{la rho}
};

DvlBialgebra dvl_bialgebra(const BilinearForm &b, unsigned truncation_degree);

/// The counit character: t[i][j] -> delta_ij, group-likes and their
/// inverses -> 1, extended multiplicatively and linearly.
Scalar counit(const Alphabet &alphabet, const NcPoly &p);

/// Tensor square A (x) A encoded in a doubled alphabet: a primed and a
/// double-primed copy of each generator, double-primed letters rewriting
/// past primed ones. The ideal is I (x) A + A (x) I.
struct DoubledSystem {
  Alphabet alphabet;
  size_t offset = 0;  // id of the first double-primed symbol
  RewriteSystem rewrite;

  /// Image of p under the map a -> a' (left factor) or a -> a'' (right).
  NcPoly left(const NcPoly &p) const;
  NcPoly right(const NcPoly &p) const;
};

DoubledSystem doubled_system(const PresentedBialgebra &A,
                             unsigned truncation_degree);

/// Delta(p) written in the doubled alphabet (algebra-map extension of
/// the generator comultiplication).
NcPoly comultiply(const PresentedBialgebra &A, const DoubledSystem &dbl,
                  const NcPoly &p);

/// Outcome of a reduction-based check. `certified` is false when the
/// verdict relies on a truncated system outside its exact range.
struct CheckResult {
  bool ok = true;
  bool certified = true;
  std::string witness;
};

/// Delta maps every relation into I (x) A + A (x) I, i.e. the
/// comultiplication descends to the quotient.
CheckResult check_comul_welldefined(const PresentedBialgebra &A);

/// Delta(g) = g (x) g and eps(g) = 1.
CheckResult check_grouplike(const PresentedBialgebra &A, const NcPoly &g);

}  // namespace hopfcert

#endif
