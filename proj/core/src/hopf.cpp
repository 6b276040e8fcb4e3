#include "hopfcert/hopf.hpp"

#include <stdexcept>

namespace hopfcert {

LocalizedAlgebra localize(const PresentedBialgebra &A, const NcPoly &D,
                          unsigned truncation_degree) {
  auto gl = check_grouplike(A, D);
  if (!gl.ok)
    throw std::invalid_argument("cannot localize at a non-group-like: " +
                                gl.witness);
  LocalizedAlgebra L;
  L.D = D;
  L.base.n = A.n;
  L.base.spec = A.spec;
  L.base.alphabet = A.alphabet;
  L.dinv = L.base.alphabet.add({"Dinv", SymbolSort::GrouplikeInverse});
  L.base.relations = A.relations;
  NcPoly dinv = NcPoly::generator(A.spec, L.dinv);
  NcPoly one = NcPoly::one(A.spec);
  L.base.relations.push_back(D * dinv - one);
  L.base.relations.push_back(dinv * D - one);
  L.base.rewrite = complete(A.spec, L.base.alphabet.size(), L.base.relations,
                            truncation_degree);
  return L;
}

NcPoly AntipodeMap::apply(const NcPoly &p) const {
  NcPoly out(p.spec());
  for (const auto &[w, c] : p.terms()) {
    NcPoly img = NcPoly::constant(p.spec(), c);
    // Anti-multiplicative: letters map in reverse order.
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto found = images.find(*it);
      if (found == images.end())
        throw std::invalid_argument("antipode image missing for a generator");
      img = img * found->second;
    }
    out = out + img;
  }
  return out;
}

AntipodeMap build_antipode(const LocalizedAlgebra &L, const CorepData &C) {
  AntipodeMap S;
  const Alphabet &alphabet = L.base.alphabet;
  NcPoly dinv = L.dinv_poly();
  int n = L.base.n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      // (T^tr * D^{-1})_{ij} = T_{ji} * Dinv.
      NcPoly right_inv = C.T[size_t(j - 1)][size_t(i - 1)] * dinv;
      NcPoly left_inv = dinv * C.That[size_t(j - 1)][size_t(i - 1)];
      NcPoly nf = normal_form(right_inv - left_inv, L.base.rewrite);
      if (!nf.is_zero())
        throw std::runtime_error(
            "left and right inverses of t disagree at (" + std::to_string(i) +
            "," + std::to_string(j) + "): " + nf.render(alphabet));
      S.images[alphabet.t(i, j)] = right_inv;
    }
  S.images[L.dinv] = L.D;
  return S;
}

VerifyReport verify_hopf(const Alphabet &alphabet, const RewriteSystem &R,
                         const std::vector<NcPoly> &relations,
                         const AntipodeMap &S, int n, const NcPoly *D) {
  VerifyReport rep;
  FieldSpec spec = R.spec();
  auto check = [&](const NcPoly &p, const std::string &label) {
    NcPoly nf = normal_form(p, R);
    ++rep.reductions;
    if (!R.certifies(p.degree())) rep.certified = false;
    if (!nf.is_zero()) {
      rep.ok = false;
      rep.failures.push_back(label + ": " + nf.render(alphabet));
    }
  };
  NcPoly one = NcPoly::one(spec);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NcPoly right(spec), left(spec);
      for (int k = 1; k <= n; ++k) {
        NcPoly t_ik = NcPoly::generator(spec, alphabet.t(i, k));
        NcPoly t_kj = NcPoly::generator(spec, alphabet.t(k, j));
        right = right + t_ik * S.apply(t_kj);
        left = left + S.apply(t_ik) * t_kj;
      }
      if (i == j) {
        right = right - one;
        left = left - one;
      }
      check(right, "sum t_ik S(t_kj) at (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
      check(left, "sum S(t_ik) t_kj at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
    }
  if (D) {
    check(*D * S.apply(*D) - one, "D S(D) = 1");
    check(S.apply(*D) * *D - one, "S(D) D = 1");
  }
  for (size_t r = 0; r < relations.size(); ++r)
    check(S.apply(relations[r]),
          "S of defining relation " + std::to_string(r));
  return rep;
}

DvlAntipodeResult dvl_antipode(const DvlBialgebra &A, const BilinearForm &b) {
  DvlAntipodeResult out;
  const PresentedBialgebra &alg = A.algebra;
  int n = alg.n;
  // S(t) = B t^tr B^{-1}: S(t_ij) = sum_{kl} b_{ik} t_{lk} b^{lj}.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NcPoly img(alg.spec);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          Scalar coef = b.entry(i, k) * b.inverse_entry(l, j);
          if (!coef.is_zero())
            img.add_term({alg.alphabet.t(l, k)}, coef);
        }
      out.S.images[alg.alphabet.t(i, j)] = std::move(img);
    }
  out.report =
      verify_hopf(alg.alphabet, alg.rewrite, alg.relations, out.S, n);
  return out;
}

ProbeReport redundancy_probe(const BilinearForm &b,
                             unsigned truncation_degree) {
  ProbeReport rep;
  rep.degree = truncation_degree;
  FieldSpec spec = b.spec();
  int n = b.n();
  Alphabet alphabet = Alphabet::matrix_generators(n);
  // Families built per (lambda, rho) so trivially-zero members keep
  // their index in the report.
  auto family = [&](bool second, int lambda, int rho) {
    NcPoly rel(spec);
    for (int mu = 1; mu <= n; ++mu)
      for (int nu = 1; nu <= n; ++nu) {
        Scalar coef = second ? b.inverse_entry(mu, nu) : b.entry(mu, nu);
        Word w = second ? Word{alphabet.t(mu, lambda), alphabet.t(nu, rho)}
                        : Word{alphabet.t(lambda, mu), alphabet.t(rho, nu)};
        rel.add_term(w, coef);
      }
    Scalar rhs = second ? b.inverse_entry(lambda, rho) : b.entry(lambda, rho);
    rel.add_term({}, -rhs);
    return rel;
  };
  std::vector<NcPoly> family1;
  for (int lambda = 1; lambda <= n; ++lambda)
    for (int rho = 1; rho <= n; ++rho) {
      NcPoly rel = family(false, lambda, rho);
      if (!rel.is_zero()) family1.push_back(std::move(rel));
    }
  RewriteSystem family1_system =
      complete(spec, alphabet.size(), family1, truncation_degree);
  rep.truncated = family1_system.truncated();
  bool all_vanish = true;
  for (int lambda = 1; lambda <= n; ++lambda)
    for (int rho = 1; rho <= n; ++rho) {
      ProbeEntry e;
      e.lambda = lambda;
      e.rho = rho;
      NcPoly nf = normal_form(family(true, lambda, rho), family1_system);
      e.vanished = nf.is_zero();
      e.residue = nf.render(alphabet);
      all_vanish = all_vanish && e.vanished;
      rep.entries.push_back(std::move(e));
    }
  std::string d = std::to_string(truncation_degree);
  if (all_vanish)
    rep.summary = "redundant up to degree " + d;
  else if (!rep.truncated)
    rep.summary = "not implied up to degree " + d;
  else
    rep.summary = "inconclusive";
  return rep;
}

}  // namespace hopfcert
