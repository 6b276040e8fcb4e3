#include "hopfcert/nichols.hpp"

#include <map>
#include <stdexcept>

namespace hopfcert {

namespace {

size_t ipow(size_t base, int e) {
  size_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

// The braiding at adjacent positions (i, i+1) of V^{(x)k}.
Mat adjacent_braiding(const Braiding &c, int k, int i) {
  Mat left = Mat::identity(c.spec(), ipow(c.n(), i));
  Mat right = Mat::identity(c.spec(), ipow(c.n(), k - i - 2));
  return kron(left, kron(c.matrix(), right));
}

Perm identity_perm(int k) {
  Perm w(k);
  for (int i = 0; i < k; ++i) w[i] = i;
  return w;
}

Perm inverse_perm(const Perm &w) {
  Perm inv(w.size());
  for (size_t i = 0; i < w.size(); ++i) inv[w[i]] = int(i);
  return inv;
}

}  // namespace

std::vector<int> reduced_word(const Perm &w) {
  Perm v = w;
  std::vector<int> letters;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        letters.push_back(int(i));
        moved = true;
        break;
      }
  }
  // w * s_{i1} * ... * s_{il} = e, so w = s_{il} ... s_{i1}.
  return {letters.rbegin(), letters.rend()};
}

Mat braid_lift_from_word(const Braiding &c, int k,
                         const std::vector<int> &word) {
  Mat m = Mat::identity(c.spec(), ipow(c.n(), k));
  for (int i : word) m = m * adjacent_braiding(c, k, i);
  return m;
}

Mat braid_lift(const Braiding &c, int k, const Perm &w) {
  return braid_lift_from_word(c, k, reduced_word(w));
}

Mat symmetrizer(const Braiding &c, int k) {
  size_t dim = ipow(c.n(), k);
  Mat acc = Mat::identity(c.spec(), dim);
  if (k <= 1) return acc;
  // Walk the weak order level by level: T_{w s_i} = T_w * C_i whenever
  // the length goes up. Only two levels live at a time.
  std::map<Perm, Mat> level{{identity_perm(k), Mat::identity(c.spec(), dim)}};
  while (!level.empty()) {
    std::map<Perm, Mat> next;
    for (const auto &[w, m] : level)
      for (int i = 0; i + 1 < k; ++i) {
        if (w[i] > w[i + 1]) continue;
        Perm w2 = w;
        std::swap(w2[i], w2[i + 1]);
        if (next.count(w2)) continue;
        Mat lifted = m * adjacent_braiding(c, k, i);
        acc = acc + lifted;
        next.emplace(std::move(w2), std::move(lifted));
      }
    level = std::move(next);
  }
  return acc;
}

std::vector<Perm> shuffles(int p, int q) {
  std::vector<Perm> out;
  std::vector<int> pick(p);
  std::function<void(int, int)> rec = [&](int start, int chosen) {
    if (chosen == p) {
      Perm w(p + q);
      std::vector<bool> used(p + q, false);
      for (int i = 0; i < p; ++i) {
        w[i] = pick[i];
        used[pick[i]] = true;
      }
      int pos = p;
      for (int v = 0; v < p + q; ++v)
        if (!used[v]) w[pos++] = v;
      out.push_back(std::move(w));
      return;
    }
    for (int v = start; v <= p + q - (p - chosen); ++v) {
      pick[chosen] = v;
      rec(v + 1, chosen + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Scalar> NicholsData::b_vector() const {
  return {Scalar::one(spec())};
}

std::vector<Scalar> NicholsData::b_representative() const {
  if (!finite) throw std::logic_error("no top degree: not finite");
  return component(top).section.apply(b_vector());
}

std::vector<Scalar> NicholsData::multiply(int p, const std::vector<Scalar> &a,
                                          int q,
                                          const std::vector<Scalar> &b) const {
  auto rep_a = component(p).section.apply(a);
  auto rep_b = component(q).section.apply(b);
  std::vector<Scalar> tensor(rep_a.size() * rep_b.size(),
                             Scalar::zero(spec()));
  for (size_t i = 0; i < rep_a.size(); ++i) {
    if (rep_a[i].is_zero()) continue;
    for (size_t j = 0; j < rep_b.size(); ++j)
      tensor[i * rep_b.size() + j] = rep_a[i] * rep_b[j];
  }
  return component(p + q).proj.apply(tensor);
}

std::vector<Scalar> NicholsData::comultiply(
    int p, int q, const std::vector<Scalar> &v) const {
  auto rep = component(p + q).section.apply(v);
  Mat unshuffle(spec(), rep.size(), rep.size());
  for (const auto &w : shuffles(p, q)) {
    Mat lift = braid_lift(braiding, p + q, inverse_perm(w));
    unshuffle = unshuffle + lift;
  }
  Mat both = kron(component(p).proj, component(q).proj);
  return both.apply(unshuffle.apply(rep));
}

NicholsData nichols_compute(const Braiding &c, const Scalar &q,
                            int max_degree) {
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  if (max_degree < 2) throw std::invalid_argument("max_degree must be >= 2");
  NicholsData N{c.scaled(q)};
  N.n = c.n();
  for (int k = 0; k <= max_degree; ++k) {
    Mat sym = symmetrizer(N.braiding, k);
    auto r = sym.rref();
    GradedComponent comp;
    comp.dim = r.pivots.size();
    comp.pivot_words = {r.pivots.begin(), r.pivots.end()};
    comp.proj = Mat(N.spec(), comp.dim, sym.cols());
    for (size_t i = 0; i < comp.dim; ++i)
      for (size_t j = 0; j < sym.cols(); ++j)
        comp.proj.at(i, j) = r.mat.at(i, j);
    comp.section = Mat(N.spec(), sym.cols(), comp.dim);
    for (size_t j = 0; j < comp.dim; ++j)
      comp.section.at(r.pivots[j], j) = Scalar::one(N.spec());
    N.hilbert_prefix.push_back(comp.dim);
    if (comp.dim == 0) {
      N.finite = true;
      N.top = k - 1;
      break;
    }
    N.degrees.push_back(std::move(comp));
  }
  if (N.finite && N.degrees.at(N.top).dim != 1)
    throw std::runtime_error(
        "top degree is not one-dimensional: not a finite Nichols algebra");
  return N;
}

PairingData pairing_data(const NicholsData &N) {
  if (!N.finite || N.top < 1)
    throw std::invalid_argument("pairing needs a finite algebra with top>=1");
  FieldSpec spec = N.spec();
  int n = N.n;
  size_t d = N.component(N.top - 1).dim;
  if (d != size_t(n))
    throw std::runtime_error("dim B^{top-1} != dim V: duality violated");

  auto unit = [&](size_t len, size_t i) {
    std::vector<Scalar> e(len, Scalar::zero(spec));
    e[i] = Scalar::one(spec);
    return e;
  };

  // x_i * e_j = A_ij b in the raw monomial basis e_j of B^{top-1}.
  Mat a(spec, n, d);
  for (int i = 0; i < n; ++i)
    for (size_t j = 0; j < d; ++j)
      a.at(i, j) = N.multiply(1, unit(n, i), N.top - 1, unit(d, j))[0];
  auto ainv = a.inverse();
  if (!ainv)
    throw std::runtime_error("top pairing matrix is singular");

  PairingData P;
  P.omega = *ainv;  // omega^j = sum_k (A^{-1})_{kj} e_k, so x_i omega^j = d_ij b

  P.m_matrix = Mat(spec, n, n);
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> wi(d);
    for (size_t k = 0; k < d; ++k) wi[k] = P.omega.at(k, i);
    for (int j = 0; j < n; ++j)
      P.m_matrix.at(i, j) = N.multiply(N.top - 1, wi, 1, unit(n, j))[0];
  }
  if (!P.m_matrix.inverse())
    throw std::runtime_error("multiplication matrix m is singular");

  // coev(b) = sum_{kj} C_kj e_k (x) x_j; columns of C are the
  // normalized omega_hat basis.
  auto u = N.comultiply(N.top - 1, 1, N.b_vector());
  P.coev_matrix = Mat(spec, d, n);
  for (size_t k = 0; k < d; ++k)
    for (int j = 0; j < n; ++j) P.coev_matrix.at(k, j) = u[k * n + j];
  if (!P.coev_matrix.inverse())
    throw std::runtime_error("coevaluation matrix is singular");
  P.omega_hat = P.coev_matrix;
  return P;
}

Scalar integral_coefficient(const NicholsData &N,
                            const std::vector<std::vector<Scalar>> &omega) {
  if (!N.finite) throw std::invalid_argument("not finite dimensional");
  if (int(omega.size()) <= N.top) return Scalar::zero(N.spec());
  return omega[N.top][0];
}

}  // namespace hopfcert
