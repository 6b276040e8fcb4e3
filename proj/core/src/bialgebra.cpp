#include "hopfcert/bialgebra.hpp"

#include <stdexcept>

namespace hopfcert {

namespace {

std::vector<std::vector<int>> multi_indices(int n, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(length, 1);
  while (true) {
    out.push_back(cur);
    int pos = length - 1;
    while (pos >= 0 && cur[pos] == n) {
      cur[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++cur[pos];
  }
  if (length == 0) out = {{}};
  return out;
}

Word t_word(const Alphabet &alphabet, const std::vector<int> &I,
            const std::vector<int> &J) {
  Word w;
  for (size_t s = 0; s < I.size(); ++s) w.push_back(alphabet.t(I[s], J[s]));
  return w;
}

}  // namespace

Scalar LinearMapSpec::coeff(FieldSpec spec, const std::vector<int> &I,
                            const std::vector<int> &J) const {
  auto it = coeffs.find(I);
  if (it == coeffs.end()) return Scalar::zero(spec);
  auto jt = it->second.find(J);
  return jt == it->second.end() ? Scalar::zero(spec) : jt->second;
}

LinearMapSpec LinearMapSpec::from_braiding(const Braiding &c) {
  LinearMapSpec f;
  f.n = c.n();
  f.n1 = f.n2 = 2;
  for (int i = 1; i <= f.n; ++i)
    for (int j = 1; j <= f.n; ++j)
      for (int k = 1; k <= f.n; ++k)
        for (int l = 1; l <= f.n; ++l) {
          const Scalar &v = c.entry(i, j, k, l);
          if (!v.is_zero()) f.coeffs[{i, j}][{k, l}] = v;
        }
  return f;
}

LinearMapSpec LinearMapSpec::evaluation(const BilinearForm &b) {
  LinearMapSpec f;
  f.n = b.n();
  f.n1 = 2;
  f.n2 = 0;
  for (int i = 1; i <= f.n; ++i)
    for (int j = 1; j <= f.n; ++j) {
      const Scalar &v = b.entry(i, j);
      if (!v.is_zero()) f.coeffs[{i, j}][{}] = v;
    }
  return f;
}

LinearMapSpec LinearMapSpec::coevaluation(const BilinearForm &b) {
  LinearMapSpec f;
  f.n = b.n();
  f.n1 = 0;
  f.n2 = 2;
  for (int i = 1; i <= f.n; ++i)
    for (int j = 1; j <= f.n; ++j) {
      const Scalar &v = b.inverse_entry(i, j);
      if (!v.is_zero()) f.coeffs[{}][{i, j}] = v;
    }
  return f;
}

size_t PresentedBialgebra::max_relation_degree() const {
  // At least 1 so that doubled systems always admit their degree-2
  // commutation rules, even for a free algebra.
  size_t d = 1;
  for (const auto &r : relations) d = std::max(d, r.degree());
  return d;
}

static std::vector<NcPoly> universal_relations(FieldSpec spec, int n,
                                               const Alphabet &alphabet,
                                               const LinearMapSpec &f) {
  std::vector<NcPoly> out;
  for (const auto &I : multi_indices(n, f.n1))
    for (const auto &K : multi_indices(n, f.n2)) {
      NcPoly rel(spec);
      for (const auto &J : multi_indices(n, f.n1)) {
        Scalar fJK = f.coeff(spec, J, K);
        if (!fJK.is_zero()) rel.add_term(t_word(alphabet, I, J), fJK);
      }
      for (const auto &J : multi_indices(n, f.n2)) {
        Scalar fIJ = f.coeff(spec, I, J);
        if (!fIJ.is_zero()) rel.add_term(t_word(alphabet, J, K), -fIJ);
      }
      if (!rel.is_zero()) out.push_back(std::move(rel));
    }
  return out;
}

PresentedBialgebra universal_bialgebra(FieldSpec spec, int n,
                                       const std::vector<LinearMapSpec> &maps,
                                       unsigned truncation_degree) {
  PresentedBialgebra A;
  A.n = n;
  A.spec = spec;
  A.alphabet = Alphabet::matrix_generators(n);
  for (const auto &f : maps) {
    if (f.n != n) throw std::invalid_argument("map dimension mismatch");
    auto rels = universal_relations(spec, n, A.alphabet, f);
    A.relations.insert(A.relations.end(), rels.begin(), rels.end());
  }
  A.rewrite =
      complete(spec, A.alphabet.size(), A.relations, truncation_degree);
  return A;
}

PresentedBialgebra frt_bialgebra(const Braiding &c,
                                 unsigned truncation_degree) {
  auto braid = check_braid(c);
  if (!braid.ok) {
    std::string w;
    for (int x : braid.witness) w += std::to_string(x) + " ";
    throw std::invalid_argument("not a braiding; first failure at " + w);
  }
  return universal_bialgebra(c.spec(), c.n(),
                             {LinearMapSpec::from_braiding(c)},
                             truncation_degree);
}

DvlBialgebra dvl_bialgebra(const BilinearForm &b, unsigned truncation_degree) {
  DvlBialgebra out;
  FieldSpec spec = b.spec();
  int n = b.n();
  Alphabet alphabet = Alphabet::matrix_generators(n);
  out.family1 =
      universal_relations(spec, n, alphabet, LinearMapSpec::evaluation(b));
  out.family2 =
      universal_relations(spec, n, alphabet, LinearMapSpec::coevaluation(b));
  out.algebra.n = n;
  out.algebra.spec = spec;
  out.algebra.alphabet = alphabet;
  out.algebra.relations = out.family1;
  out.algebra.relations.insert(out.algebra.relations.end(),
                               out.family2.begin(), out.family2.end());
  out.algebra.rewrite = complete(spec, alphabet.size(), out.algebra.relations,
                                 truncation_degree);
  return out;
}

Scalar counit(const Alphabet &alphabet, const NcPoly &p) {
  Scalar out = Scalar::zero(p.spec());
  for (const auto &[w, c] : p.terms()) {
    bool kills = false;
    for (uint16_t id : w) {
      const GenSymbol &g = alphabet.symbols.at(id);
      if (g.sort == SymbolSort::MatrixGenerator && g.row != g.col) {
        kills = true;
        break;
      }
    }
    if (!kills) out = out + c;
  }
  return out;
}

NcPoly DoubledSystem::left(const NcPoly &p) const {
  NcPoly out(p.spec());
  for (const auto &[w, c] : p.terms()) out.add_term(w, c);
  return out;
}

NcPoly DoubledSystem::right(const NcPoly &p) const {
  NcPoly out(p.spec());
  for (const auto &[w, c] : p.terms()) {
    Word shifted = w;
    for (auto &id : shifted) id = uint16_t(id + offset);
    out.add_term(shifted, c);
  }
  return out;
}

DoubledSystem doubled_system(const PresentedBialgebra &A,
                             unsigned truncation_degree) {
  DoubledSystem dbl;
  dbl.offset = A.alphabet.size();
  for (const auto &g : A.alphabet.symbols) {
    GenSymbol copy = g;
    copy.name = g.name + "'";
    dbl.alphabet.add(std::move(copy));
  }
  for (const auto &g : A.alphabet.symbols) {
    GenSymbol copy = g;
    copy.name = g.name + "''";
    dbl.alphabet.add(std::move(copy));
  }
  std::vector<NcPoly> relations;
  for (const auto &r : A.relations) {
    relations.push_back(dbl.left(r));
    relations.push_back(dbl.right(r));
  }
  // Double-primed letters pass to the right of primed ones.
  for (size_t a = 0; a < dbl.offset; ++a)
    for (size_t b = 0; b < dbl.offset; ++b) {
      NcPoly comm(A.spec);
      comm.add_term({uint16_t(dbl.offset + a), uint16_t(b)},
                    Scalar::one(A.spec));
      comm.add_term({uint16_t(b), uint16_t(dbl.offset + a)},
                    -Scalar::one(A.spec));
      relations.push_back(std::move(comm));
    }
  dbl.rewrite =
      complete(A.spec, dbl.alphabet.size(), relations, truncation_degree);
  return dbl;
}

NcPoly comultiply(const PresentedBialgebra &A, const DoubledSystem &dbl,
                  const NcPoly &p) {
  FieldSpec spec = A.spec;
  NcPoly out(spec);
  for (const auto &[w, c] : p.terms()) {
    NcPoly img = NcPoly::constant(spec, c);
    for (uint16_t id : w) {
      const GenSymbol &g = A.alphabet.symbols.at(id);
      NcPoly delta(spec);
      if (g.sort == SymbolSort::MatrixGenerator) {
        for (int k = 1; k <= A.n; ++k)
          delta.add_term({A.alphabet.t(g.row, k),
                          uint16_t(dbl.offset + A.alphabet.t(k, g.col))},
                         Scalar::one(spec));
      } else {
        // Group-like letters (and their inverses) are primitivity-free:
        // Delta(g) = g (x) g.
        delta.add_term({id, uint16_t(dbl.offset + id)}, Scalar::one(spec));
      }
      img = img * delta;
    }
    out = out + img;
  }
  return out;
}

CheckResult check_comul_welldefined(const PresentedBialgebra &A) {
  unsigned d = unsigned(2 * A.max_relation_degree());
  DoubledSystem dbl = doubled_system(A, d);
  CheckResult res;
  for (const auto &r : A.relations) {
    NcPoly nf = normal_form(comultiply(A, dbl, r), dbl.rewrite);
    if (!nf.is_zero()) {
      res.ok = false;
      res.witness = r.render(A.alphabet);
      res.certified = dbl.rewrite.homogeneous() || !dbl.rewrite.truncated();
      return res;
    }
  }
  return res;
}

CheckResult check_grouplike(const PresentedBialgebra &A, const NcPoly &g) {
  CheckResult res;
  if (counit(A.alphabet, g) != Scalar::one(A.spec)) {
    res.ok = false;
    res.witness = "counit is not 1";
    return res;
  }
  unsigned d =
      unsigned(2 * std::max(g.degree(), A.max_relation_degree()));
  DoubledSystem dbl = doubled_system(A, d);
  NcPoly diff = comultiply(A, dbl, g) - dbl.left(g) * dbl.right(g);
  NcPoly nf = normal_form(diff, dbl.rewrite);
  if (!nf.is_zero()) {
    res.ok = false;
    res.witness = nf.render(dbl.alphabet);
  }
  res.certified = dbl.rewrite.homogeneous() || !dbl.rewrite.truncated();
  return res;
}

}  // namespace hopfcert
