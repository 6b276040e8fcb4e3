// Acceptance checks, one line of output per criterion.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hopfcert/pipeline.hpp"

using namespace hopfcert;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void criterion(int id, const std::string &what,
               const std::function<void()> &body) {
  try {
    body();
    std::cout << "[PASS] " << id << ". " << what << "\n";
  } catch (const std::exception &e) {
    ++failures;
    std::cout << "[FAIL] " << id << ". " << what << ": " << e.what() << "\n";
  }
}

void require(bool cond, const std::string &msg) {
  if (!cond) throw std::runtime_error(msg);
}

Braiding rank1_braiding(FieldSpec F) {
  Braiding c(F, 1);
  c.set_entry(1, 1, 1, 1, Scalar::one(F));
  return c;
}

// ---- independent brute-force oracles -------------------------------

std::vector<Word> all_words(size_t g, unsigned k) {
  std::vector<Word> out{Word{}};
  for (unsigned d = 0; d < k; ++d) {
    std::vector<Word> next;
    for (const auto &w : out)
      for (uint16_t s = 0; s < g; ++s) {
        Word v = w;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

size_t brute_quotient_dimension(FieldSpec spec, size_t g,
                                const std::vector<NcPoly> &relations,
                                unsigned k) {
  std::vector<Word> basis = all_words(g, k);
  std::map<Word, size_t> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<Scalar>> rows;
  for (const auto &r : relations) {
    unsigned d = unsigned(r.degree());
    if (d > k) continue;
    for (unsigned lu = 0; lu + d <= k; ++lu)
      for (const auto &u : all_words(g, lu))
        for (const auto &v : all_words(g, k - d - lu)) {
          std::vector<Scalar> row(basis.size(), Scalar::zero(spec));
          for (const auto &[w, c] : r.terms()) {
            Word full = u;
            full.insert(full.end(), w.begin(), w.end());
            full.insert(full.end(), v.begin(), v.end());
            row[index.at(full)] = row[index.at(full)] + c;
          }
          rows.push_back(std::move(row));
        }
  }
  Mat m(spec, rows.size(), basis.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) m.at(i, j) = rows[i][j];
  return basis.size() - m.rank();
}

// Apply the braiding at tensor position pos (0-based) of V^{(x)k} to a
// coordinate vector, by direct index bookkeeping.
std::vector<Scalar> apply_braiding_at(const Braiding &c, int k, int pos,
                                      const std::vector<Scalar> &v) {
  int n = c.n();
  size_t dim = 1;
  for (int i = 0; i < k; ++i) dim *= size_t(n);
  std::vector<Scalar> out(dim, Scalar::zero(c.spec()));
  for (size_t idx = 0; idx < dim; ++idx) {
    if (v[idx].is_zero()) continue;
    std::vector<int> digits(k);
    size_t rest = idx;
    for (int p = k - 1; p >= 0; --p) {
      digits[p] = int(rest % n) + 1;
      rest /= n;
    }
    int i = digits[pos], j = digits[pos + 1];
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        const Scalar &e = c.entry(i, j, a, b);
        if (e.is_zero()) continue;
        std::vector<int> d2 = digits;
        d2[pos] = a;
        d2[pos + 1] = b;
        size_t target = 0;
        for (int p = 0; p < k; ++p) target = target * n + size_t(d2[p] - 1);
        out[target] = out[target] + e * v[idx];
      }
  }
  return out;
}

// Independent quantum symmetrizer: enumerate S_k with next_permutation,
// lift each permutation through a descent recursion, sum.
size_t brute_nichols_dimension(const Braiding &c, unsigned k) {
  int n = c.n();
  size_t dim = 1;
  for (unsigned i = 0; i < k; ++i) dim *= size_t(n);
  std::map<Perm, std::vector<std::vector<Scalar>>> lifts;
  std::vector<std::vector<Scalar>> id_cols(dim);
  for (size_t j = 0; j < dim; ++j) {
    id_cols[j].assign(dim, Scalar::zero(c.spec()));
    id_cols[j][j] = Scalar::one(c.spec());
  }
  Perm idp(k);
  for (unsigned i = 0; i < k; ++i) idp[i] = int(i);
  lifts[idp] = id_cols;

  std::function<const std::vector<std::vector<Scalar>> &(const Perm &)> lift =
      [&](const Perm &w) -> const std::vector<std::vector<Scalar>> & {
    auto it = lifts.find(w);
    if (it != lifts.end()) return it->second;
    // Find a descent: w = w' s_i with l(w') = l(w) - 1.
    int i = 0;
    while (w[i] < w[i + 1]) ++i;
    Perm wp = w;
    std::swap(wp[i], wp[i + 1]);
    const auto &base = lift(wp);
    std::vector<std::vector<Scalar>> cols(dim);
    for (size_t j = 0; j < dim; ++j) {
      // T_w = T_{w'} after first braiding at position i: column j of
      // T_w is T_{w'} applied to c_i(e_j).
      std::vector<Scalar> e(dim, Scalar::zero(c.spec()));
      e[j] = Scalar::one(c.spec());
      std::vector<Scalar> ce = apply_braiding_at(c, int(k), i, e);
      std::vector<Scalar> acc(dim, Scalar::zero(c.spec()));
      for (size_t m = 0; m < dim; ++m) {
        if (ce[m].is_zero()) continue;
        for (size_t r = 0; r < dim; ++r)
          acc[r] = acc[r] + base[m][r] * ce[m];
      }
      cols[j] = std::move(acc);
    }
    return lifts.emplace(w, std::move(cols)).first->second;
  };

  Mat S(c.spec(), dim, dim);
  Perm w = idp;
  do {
    const auto &cols = lift(w);
    for (size_t j = 0; j < dim; ++j)
      for (size_t r = 0; r < dim; ++r)
        S.at(r, j) = S.at(r, j) + cols[j][r];
  } while (std::next_permutation(w.begin(), w.end()));
  return S.rank();
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- the criteria --------------------------------------------------

void criterion1() {
  auto start = std::chrono::steady_clock::now();
  PipelineConfig cfg;
  cfg.field = FieldSpec::rationals();
  cfg.n = 2;
  cfg.braiding = Braiding::flip(cfg.field, 2);
  cfg.q_candidates = {"-1"};
  CertificationReport r = run_pipeline(cfg);
  require(r.overall() == StageStatus::Certified, "pipeline not certified");
  require(r.hilbert_prefix == std::vector<size_t>{1, 2, 1, 0},
          "wrong Nichols dimensions");

  FieldSpec Q = cfg.field;
  PresentedBialgebra A =
      frt_bialgebra(Braiding::flip(Q, 2).scaled(-Scalar::one(Q)), 6);
  NicholsData N = nichols_compute(Braiding::flip(Q, 2), -Scalar::one(Q), 6);
  require(N.top == 2, "top degree is not 2");
  NcPoly D = quantum_determinant(A, N);
  NcPoly det = A.t(1, 1) * A.t(2, 2) - A.t(1, 2) * A.t(2, 1);
  bool match = normal_form(D - det, A.rewrite).is_zero() ||
               normal_form(D + det, A.rewrite).is_zero();
  require(match, "D is not +-(t11 t22 - t12 t21)");

  PairingData P = pairing_data(N);
  CorepData C = corep_matrices(A, N, P);
  require(verify_determinant_identities(C, A).ok, "determinant identities");
  LocalizedAlgebra L = localize(A, C.D, 6);
  AntipodeMap S = build_antipode(L, C);
  require(verify_hopf(L, S).ok, "antipode sums do not vanish");
  double sec = std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  require(sec < 10.0, "exceeded the 10 second budget");
}

void criterion2() {
  auto start = std::chrono::steady_clock::now();
  {
    FieldSpec Q = FieldSpec::rationals();
    Braiding c = rank1_braiding(Q);
    PresentedBialgebra A = frt_bialgebra(c.scaled(-Scalar::one(Q)), 6);
    NicholsData N = nichols_compute(c, -Scalar::one(Q), 6);
    NcPoly D = quantum_determinant(A, N);
    require(D == A.t(1, 1), "q = -1: D != t");
    PairingData P = pairing_data(N);
    CorepData C = corep_matrices(A, N, P);
    LocalizedAlgebra L = localize(A, D, 6);
    AntipodeMap S = build_antipode(L, C);
    // S(t) = t^{-1}: S(t) * t reduces to 1.
    NcPoly st = S.apply(A.t(1, 1));
    require(normal_form(st * A.t(1, 1) - NcPoly::one(Q), L.base.rewrite)
                .is_zero(),
            "q = -1: S(t) is not t^{-1}");
    require(verify_hopf(L, S).ok, "q = -1: antipode axioms");
  }
  {
    FieldSpec F(3);
    Scalar z = root_of_unity(F, 3);
    Braiding c = rank1_braiding(F);
    PresentedBialgebra A = frt_bialgebra(c.scaled(z), 6);
    NicholsData N = nichols_compute(c, z, 6);
    require(N.hilbert_prefix == std::vector<size_t>{1, 1, 1, 0},
            "zeta3: wrong dimensions");
    NcPoly D = quantum_determinant(A, N);
    require(D == A.t(1, 1) * A.t(1, 1), "zeta3: D != t^2");
    PairingData P = pairing_data(N);
    CorepData C = corep_matrices(A, N, P);
    LocalizedAlgebra L = localize(A, D, 6);
    AntipodeMap S = build_antipode(L, C);
    NcPoly st = S.apply(A.t(1, 1));
    require(normal_form(st * A.t(1, 1) - NcPoly::one(F), L.base.rewrite)
                .is_zero(),
            "zeta3: S(t) is not t^{-1}");
    require(verify_hopf(L, S).ok, "zeta3: antipode axioms");
  }
  double sec = std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  require(sec < 2.0, "exceeded the runtime budget");
}

void criterion3() {
  auto start = std::chrono::steady_clock::now();
  FieldSpec Q = FieldSpec::rationals();
  std::vector<Mat> forms;
  forms.push_back(Mat::identity(Q, 2));
  Mat sympl(Q, 2, 2);
  sympl.at(0, 1) = Scalar::one(Q);
  sympl.at(1, 0) = -Scalar::one(Q);
  forms.push_back(sympl);
  for (const Mat &m : forms) {
    BilinearForm b(m);
    DvlBialgebra A = dvl_bialgebra(b, 6);
    DvlAntipodeResult r = dvl_antipode(A, b);
    require(r.report.ok && r.report.certified, "DVL antipode not certified");
    // S(t)_{ij} = (B t^tr B^{-1})_{ij} entrywise, and t S(t) = Id = S(t) t.
    int n = b.n();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NcPoly expect = NcPoly::zero(Q);
        for (int a = 1; a <= n; ++a)
          for (int c = 1; c <= n; ++c)
            expect = expect + b.entry(i, a) * b.inverse_entry(c, j) *
                                  A.algebra.t(c, a);
        NcPoly got = r.S.apply(A.algebra.t(i, j));
        require(normal_form(got - expect, A.algebra.rewrite).is_zero(),
                "S(t) != B t^tr B^{-1}");
      }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        NcPoly lhs = NcPoly::zero(Q), rhs = NcPoly::zero(Q);
        for (int k = 1; k <= n; ++k) {
          lhs = lhs + A.algebra.t(i, k) * r.S.apply(A.algebra.t(k, j));
          rhs = rhs + r.S.apply(A.algebra.t(i, k)) * A.algebra.t(k, j);
        }
        NcPoly delta = i == j ? NcPoly::one(Q) : NcPoly::zero(Q);
        require(normal_form(lhs - delta, A.algebra.rewrite).is_zero(),
                "t S(t) != Id");
        require(normal_form(rhs - delta, A.algebra.rewrite).is_zero(),
                "S(t) t != Id");
      }
  }
  double sec = std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  require(sec < 10.0, "exceeded the 10 second budget");
}

void criterion4() {
  FieldSpec F(12);
  Scalar z = root_of_unity(F, 12);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> p(0, 11);
  for (int it = 0; it < 20; ++it) {
    Mat q(F, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) q.at(i, j) = z.pow(p(rng));
    Braiding c = Braiding::diagonal(q);
    Scalar scale = z.pow(p(rng));
    if (scale.is_one()) scale = z;
    Braiding cq = c.scaled(scale);
    PresentedBialgebra A = frt_bialgebra(c, 4);
    PresentedBialgebra Aq = frt_bialgebra(cq, 4);
    require(A.rewrite == Aq.rewrite, "A(c) != A(qc) as rule sets");
  }
}

void criterion5() {
  struct Case {
    Braiding c;
    Scalar q;
  };
  FieldSpec Q = FieldSpec::rationals();
  FieldSpec F3(3);
  std::vector<Case> cases;
  cases.push_back({Braiding::flip(Q, 2), -Scalar::one(Q)});
  cases.push_back({Braiding::flip(Q, 3), -Scalar::one(Q)});
  cases.push_back({rank1_braiding(Q), -Scalar::one(Q)});
  cases.push_back({rank1_braiding(F3), root_of_unity(F3, 3)});
  for (const auto &[c, q] : cases) {
    NicholsData N = nichols_compute(c, q, 8);
    require(N.finite, "expected a finite Nichols algebra");
    require(N.component(N.top).dim == 1, "top component not a line");
    for (int pdeg = 0; pdeg <= N.top; ++pdeg)
      require(N.component(pdeg).dim == N.component(N.top - pdeg).dim,
              "graded dimensions are not palindromic");
    PairingData P = pairing_data(N);
    size_t n = size_t(c.n());
    require(P.m_matrix.rank() == n, "pairing matrix singular");
    require(P.coev_matrix.rank() == n, "coevaluation matrix singular");
    PresentedBialgebra A = frt_bialgebra(c.scaled(q), unsigned(N.top) + 2);
    require(check_colinearity(A, N, P).ok, "colinearity failed");
  }
}

void criterion6() {
  FieldSpec Q = FieldSpec::rationals();
  // FRT graded dimensions, degrees <= 3, n <= 2.
  std::vector<Braiding> frts;
  frts.push_back(rank1_braiding(Q).scaled(-Scalar::one(Q)));
  frts.push_back(Braiding::flip(Q, 2).scaled(-Scalar::one(Q)));
  Mat qm(Q, 2, 2);
  qm.at(0, 0) = Scalar(Q, Rational(2));
  qm.at(0, 1) = Scalar(Q, Rational(-1));
  qm.at(1, 0) = Scalar(Q, Rational(1, 2));
  qm.at(1, 1) = Scalar(Q, Rational(-1));
  frts.push_back(Braiding::diagonal(qm));
  for (const Braiding &c : frts) {
    PresentedBialgebra A = frt_bialgebra(c, 4);
    for (unsigned k = 0; k <= 3; ++k)
      require(graded_dimension(A.rewrite, k) ==
                  brute_quotient_dimension(Q, A.alphabet.size(), A.relations,
                                           k),
              "FRT dimension disagrees with the oracle");
  }
  // Nichols graded dimensions, degrees <= 4, n <= 2.
  struct NCase {
    Braiding c;
    Scalar q;
  };
  std::vector<NCase> ncases;
  ncases.push_back({rank1_braiding(Q), -Scalar::one(Q)});
  ncases.push_back({Braiding::flip(Q, 2), -Scalar::one(Q)});
  ncases.push_back({Braiding::flip(Q, 2), Scalar::one(Q)});
  for (const auto &[c, q] : ncases) {
    NicholsData N = nichols_compute(c, q, 4);
    Braiding qc = c.scaled(q);
    for (unsigned k = 1; k <= 4; ++k) {
      size_t got = k < N.hilbert_prefix.size() ? N.hilbert_prefix[k] : 0;
      require(got == brute_nichols_dimension(qc, k),
              "Nichols dimension disagrees with the oracle");
    }
  }
}

void criterion7() {
  fs::path dir = fs::temp_directory_path() / "hopfcert-acceptance";
  fs::create_directories(dir);
  fs::path input = dir / "probe-input.json";
  {
    std::ofstream out(input);
    out << R"({"field": {"rationals": true}, "n": 2,)"
        << R"( "bilinear_form": [["1","0"],["0","1"]]})" << "\n";
  }
  fs::path out1 = dir / "probe-1.json", out2 = dir / "probe-2.json";
  std::string base = std::string(HOPFCERT_CLI_PATH) + " probe " +
                     input.string() + " --truncation 6 --format json";
  require(std::system((base + " --output " + out1.string()).c_str()) == 0,
          "probe run 1 failed");
  require(std::system((base + " --output " + out2.string()).c_str()) == 0,
          "probe run 2 failed");
  std::string a = slurp(out1), b = slurp(out2);
  require(!a.empty(), "empty probe report");
  require(a == b, "probe reports are not byte-identical");
  auto j = nlohmann::json::parse(a);
  std::string summary = j.at("probe").at("summary").get<std::string>();
  require(summary == "redundant up to degree 6" ||
              summary == "not implied up to degree 6" ||
              summary == "inconclusive",
          "summary outside the allowed vocabulary");
}

void criterion8() {
  FieldSpec Q = FieldSpec::rationals();
  Braiding tau = Braiding::flip(Q, 2);
  Braiding mtau = tau.scaled(-Scalar::one(Q));
  PresentedBialgebra A = frt_bialgebra(mtau, 6);
  NicholsData N = nichols_compute(tau, -Scalar::one(Q), 6);
  PairingData P = pairing_data(N);
  CorepData C = corep_matrices(A, N, P);
  LocalizedAlgebra L = localize(A, C.D, 6);
  AntipodeMap S = build_antipode(L, C);

  using Fault = std::pair<std::string, std::function<bool()>>;
  std::vector<Fault> faults;

  faults.emplace_back("braid entry corrupted", [&] {
    Braiding c = tau;
    c.set_entry(1, 2, 1, 2, Scalar::one(Q));
    return !check_braid(c).ok;
  });
  faults.emplace_back("singular braiding rejected by rigidity", [&] {
    Mat q(Q, 2, 2);
    q.at(0, 0) = Scalar::one(Q);
    q.at(1, 1) = Scalar::one(Q);
    q.at(0, 1) = Scalar::one(Q);
    return !check_rigid(Braiding::diagonal(q)).ok;
  });
  faults.emplace_back("relation corrupted breaks comultiplication", [&] {
    PresentedBialgebra bad = A;
    bad.relations[2] = bad.relations[2] + bad.t(2, 1) * bad.t(1, 2);
    bad.rewrite = complete(Q, bad.alphabet.size(), bad.relations, 6);
    auto r = check_comul_welldefined(bad);
    return !r.ok && !r.witness.empty();
  });
  faults.emplace_back("pairing basis corrupted", [&] {
    PairingData badP = P;
    for (size_t r = 0; r < badP.omega.rows(); ++r)
      std::swap(badP.omega.at(r, 0), badP.omega.at(r, 1));
    try {
      CorepData badC = corep_matrices(A, N, badP);
      auto r = verify_determinant_identities(badC, A);
      return !r.ok && !r.failures.empty();
    } catch (const std::exception &) {
      return true;  // detected at construction
    }
  });
  faults.emplace_back("non-group-like determinant candidate", [&] {
    auto r = check_grouplike(A, A.t(1, 1));
    return !r.ok && !r.witness.empty();
  });
  faults.emplace_back("localization refuses a bad denominator", [&] {
    try {
      localize(A, A.t(1, 2), 6);
      return false;
    } catch (const std::exception &) {
      return true;
    }
  });
  faults.emplace_back("corep matrix entry corrupted", [&] {
    CorepData bad = C;
    bad.T[1][1] = bad.T[1][1] + A.t(1, 1);
    auto r = verify_determinant_identities(bad, A);
    return !r.ok && !r.failures.empty();
  });
  faults.emplace_back("determinant corrupted", [&] {
    CorepData bad = C;
    bad.D = bad.D + A.t(1, 2) * A.t(2, 1);
    auto r = verify_determinant_identities(bad, A);
    return !r.ok && !r.failures.empty();
  });
  faults.emplace_back("antipode image corrupted", [&] {
    AntipodeMap bad = S;
    bad.images[A.alphabet.t(2, 2)] =
        bad.images[A.alphabet.t(2, 2)] + NcPoly::one(Q);
    auto r = verify_hopf(L, bad);
    return !r.ok && !r.failures.empty();
  });
  faults.emplace_back("antipode of the inverse determinant corrupted", [&] {
    AntipodeMap bad = S;
    bad.images[L.dinv] = NcPoly::one(Q);
    auto r = verify_hopf(L, bad);
    return !r.ok && !r.failures.empty();
  });

  require(faults.size() == 10, "expected 10 fault injections");
  for (const auto &[name, run] : faults)
    require(run(), "fault not caught: " + name);
}

}  // namespace

int main() {
  criterion(1, "exterior end-to-end certification", criterion1);
  criterion(2, "rank-1 root-of-unity cases", criterion2);
  criterion(3, "Dubois-Violette/Launer certifications", criterion3);
  criterion(4, "scaling invariance of the FRT rule sets", criterion4);
  criterion(5, "Nichols structural invariants", criterion5);
  criterion(6, "brute-force oracle equivalence", criterion6);
  criterion(7, "probe report determinism", criterion7);
  criterion(8, "fault injection coverage", criterion8);
  if (failures) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
