#include <doctest.h>

#include "hopfcert/hopf.hpp"

using namespace hopfcert;

namespace {

struct ExteriorHopf {
  PresentedBialgebra A;
  NicholsData N;
  CorepData C;
  LocalizedAlgebra L;
  AntipodeMap S;
};

ExteriorHopf exterior_hopf() {
  FieldSpec Q = FieldSpec::rationals();
  Braiding c = Braiding::flip(Q, 2);
  PresentedBialgebra A = frt_bialgebra(c.scaled(-Scalar::one(Q)), 6);
  NicholsData N = nichols_compute(c, -Scalar::one(Q), 6);
  PairingData P = pairing_data(N);
  CorepData C = corep_matrices(A, N, P);
  LocalizedAlgebra L = localize(A, C.D, 6);
  AntipodeMap S = build_antipode(L, C);
  return {std::move(A), std::move(N), std::move(C), std::move(L),
          std::move(S)};
}

}  // namespace

TEST_CASE("localization of k[t] at t is the Laurent ring") {
  FieldSpec Q = FieldSpec::rationals();
  PresentedBialgebra A = universal_bialgebra(Q, 1, {}, 6);
  LocalizedAlgebra L = localize(A, A.t(1, 1), 6);
  NcPoly t = A.t(1, 1);
  NcPoly ti = L.dinv_poly();
  CHECK(normal_form(t * t * t * ti, L.base.rewrite) == t * t);
  CHECK(normal_form(ti * ti * t, L.base.rewrite) == ti);
  CHECK(normal_form(t * ti - NcPoly::one(Q), L.base.rewrite).is_zero());
}

TEST_CASE("localization refuses a non-group-like element") {
  FieldSpec Q = FieldSpec::rationals();
  Braiding c = Braiding::flip(Q, 2).scaled(-Scalar::one(Q));
  PresentedBialgebra A = frt_bialgebra(c, 6);
  CHECK_THROWS(localize(A, A.t(1, 1), 6));
}

TEST_CASE("exterior antipode certifies all axioms") {
  auto E = exterior_hopf();
  // S(t11) = t22 Dinv and friends.
  auto nf = [&](const NcPoly &p) { return normal_form(p, E.L.base.rewrite); };
  NcPoly di = E.L.dinv_poly();
  CHECK(nf(E.S.apply(E.A.t(1, 1)) - E.A.t(2, 2) * di).is_zero());
  CHECK(nf(E.S.apply(E.A.t(1, 2)) + E.A.t(1, 2) * di).is_zero());

  VerifyReport r = verify_hopf(E.L, E.S);
  CHECK(r.ok);
  CHECK(r.certified);
  CHECK(r.failures.empty());

  // S(D) is the inverse of D.
  CHECK(nf(E.S.apply(E.C.D) - di).is_zero());
  CHECK(nf(E.S.apply(di) - E.C.D).is_zero());
}

TEST_CASE("antipode is anti-multiplicative") {
  auto E = exterior_hopf();
  NcPoly a = E.A.t(1, 1) * E.A.t(1, 2);
  NcPoly sa = E.S.apply(a);
  NcPoly expect = E.S.apply(E.A.t(1, 2)) * E.S.apply(E.A.t(1, 1));
  CHECK(normal_form(sa - expect, E.L.base.rewrite).is_zero());
}

TEST_CASE("corrupted antipode image is caught") {
  auto E = exterior_hopf();
  AntipodeMap bad = E.S;
  bad.images[E.A.alphabet.t(1, 1)] =
      bad.images[E.A.alphabet.t(1, 1)] + NcPoly::one(E.A.spec);
  VerifyReport r = verify_hopf(E.L, bad);
  CHECK(!r.ok);
  CHECK(!r.failures.empty());
}

TEST_CASE("DVL antipode for the identity form is transposition") {
  FieldSpec Q = FieldSpec::rationals();
  BilinearForm b(Mat::identity(Q, 2));
  DvlBialgebra A = dvl_bialgebra(b, 6);
  DvlAntipodeResult r = dvl_antipode(A, b);
  CHECK(r.report.ok);
  auto nf = [&](const NcPoly &p) { return normal_form(p, A.algebra.rewrite); };
  CHECK(nf(r.S.apply(A.algebra.t(1, 2)) - A.algebra.t(2, 1)).is_zero());
  CHECK(nf(r.S.apply(A.algebra.t(1, 1)) - A.algebra.t(1, 1)).is_zero());
}

TEST_CASE("DVL antipode for the symplectic form") {
  FieldSpec Q = FieldSpec::rationals();
  Mat m(Q, 2, 2);
  m.at(0, 1) = Scalar::one(Q);
  m.at(1, 0) = -Scalar::one(Q);
  BilinearForm b(m);
  DvlBialgebra A = dvl_bialgebra(b, 6);
  DvlAntipodeResult r = dvl_antipode(A, b);
  CHECK(r.report.ok);
  auto nf = [&](const NcPoly &p) { return normal_form(p, A.algebra.rewrite); };
  // S = B t^tr B^{-1}: S(t11) = t22, S(t12) = -t12.
  CHECK(nf(r.S.apply(A.algebra.t(1, 1)) - A.algebra.t(2, 2)).is_zero());
  CHECK(nf(r.S.apply(A.algebra.t(1, 2)) + A.algebra.t(1, 2)).is_zero());
}

TEST_CASE("redundancy probe on the rank-1 form") {
  FieldSpec Q = FieldSpec::rationals();
  Mat m(Q, 1, 1);
  m.at(0, 0) = Scalar::one(Q);
  ProbeReport r = redundancy_probe(BilinearForm(m), 4);
  CHECK(r.summary == "redundant up to degree 4");
  for (const auto &e : r.entries) CHECK(e.vanished);
}

TEST_CASE("redundancy probe vocabulary and determinism") {
  FieldSpec Q = FieldSpec::rationals();
  BilinearForm b(Mat::identity(Q, 2));
  ProbeReport r1 = redundancy_probe(b, 6);
  ProbeReport r2 = redundancy_probe(b, 6);
  CHECK(r1.summary == r2.summary);
  REQUIRE(r1.entries.size() == r2.entries.size());
  for (size_t i = 0; i < r1.entries.size(); ++i) {
    CHECK(r1.entries[i].residue == r2.entries[i].residue);
    CHECK(r1.entries[i].vanished == r2.entries[i].vanished);
  }
  bool known =
      r1.summary == "redundant up to degree 6" ||
      r1.summary == "not implied up to degree 6" || r1.summary == "inconclusive";
  CHECK(known);
}
