#include "hopfcert/rewrite.hpp"

#include <set>
#include <stdexcept>

namespace hopfcert {

namespace {

bool lead_occurs_at(const Word &w, const Word &lead, size_t pos) {
  if (pos + lead.size() > w.size()) return false;
  for (size_t i = 0; i < lead.size(); ++i)
    if (w[pos + i] != lead[i]) return false;
  return true;
}

// Replacement for one reduction step: coefficient * prefix * tail * suffix.
NcPoly splice(const Word &w, size_t pos, size_t len, const NcPoly &tail,
              const Scalar &coef) {
  NcPoly out(tail.spec());
  for (const auto &[u, cu] : tail.terms()) {
    Word nw(w.begin(), w.begin() + pos);
    nw.insert(nw.end(), u.begin(), u.end());
    nw.insert(nw.end(), w.begin() + pos + len, w.end());
    out.add_term(nw, coef * cu);
  }
  return out;
}

NcPoly word_poly(FieldSpec spec, const Word &w) {
  return NcPoly(spec, w, Scalar::one(spec));
}

// Monic rule whose underlying polynomial is p (nonzero).
RewriteRule make_rule(const NcPoly &p) {
  const auto &[lead, c] = p.leading();
  NcPoly monic = p.scaled(c.inverse());
  NcPoly tail = word_poly(p.spec(), lead) - monic;
  return {lead, std::move(tail)};
}

}  // namespace

bool RewriteSystem::homogeneous() const {
  for (const auto &r : rules_) {
    if (r.tail.is_zero()) continue;
    if (r.tail.terms().begin()->first.size() != r.lead.size() ||
        r.tail.terms().rbegin()->first.size() != r.lead.size())
      return false;
  }
  return true;
}

bool operator==(const RewriteSystem &a, const RewriteSystem &b) {
  if (a.rules_.size() != b.rules_.size()) return false;
  for (size_t i = 0; i < a.rules_.size(); ++i)
    if (a.rules_[i].lead != b.rules_[i].lead ||
        a.rules_[i].tail != b.rules_[i].tail)
      return false;
  return true;
}

NcPoly normal_form(const NcPoly &p, const RewriteSystem &R) {
  NcPoly result(p.spec());
  NcPoly work = p;
  while (!work.is_zero()) {
    Word w = work.leading().first;
    Scalar c = work.leading().second;
    // Leftmost position, then lowest rule index.
    size_t best_rule = R.rules().size();
    size_t best_pos = 0;
    for (size_t pos = 0; pos < w.size() + 1 && best_rule == R.rules().size();
         ++pos)
      for (size_t ri = 0; ri < R.rules().size(); ++ri)
        if (lead_occurs_at(w, R.rules()[ri].lead, pos)) {
          best_rule = ri;
          best_pos = pos;
          break;
        }
    work.add_term(w, -c);
    if (best_rule == R.rules().size()) {
      result.add_term(w, c);
    } else {
      const auto &rule = R.rules()[best_rule];
      work = work + splice(w, best_pos, rule.lead.size(), rule.tail, c);
    }
  }
  return result;
}

NcPoly normal_form_random(const NcPoly &p, const RewriteSystem &R,
                          std::mt19937 &rng) {
  NcPoly work = p;
  while (true) {
    struct Site {
      Word word;
      Scalar coef;
      size_t pos, rule;
    };
    std::vector<Site> sites;
    for (const auto &[w, c] : work.terms())
      for (size_t pos = 0; pos < w.size(); ++pos)
        for (size_t ri = 0; ri < R.rules().size(); ++ri)
          if (lead_occurs_at(w, R.rules()[ri].lead, pos))
            sites.push_back({w, c, pos, ri});
    if (sites.empty()) return work;
    const Site &s =
        sites[std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng)];
    const auto &rule = R.rules()[s.rule];
    work.add_term(s.word, -s.coef);
    work = work + splice(s.word, s.pos, rule.lead.size(), rule.tail, s.coef);
  }
}

RewriteSystem complete(FieldSpec spec, size_t alphabet_size,
                       const std::vector<NcPoly> &relations,
                       unsigned truncation_degree) {
  RewriteSystem R(spec, alphabet_size);
  R.truncation_degree_ = truncation_degree;
  std::set<NcPoly> pending;
  for (const auto &r : relations) {
    if (r.is_zero()) throw std::invalid_argument("zero relation");
    if (r.degree() > truncation_degree)
      throw std::invalid_argument(
          "truncation degree below a relation's degree");
    pending.insert(r);
  }

  // Enqueue all s-polynomials of the ordered rule pair (a applied on the
  // left, b on the right), overlaps and inclusions.
  auto enqueue_pairs = [&](size_t ai, size_t bi) {
    const Word &u = R.rules_[ai].lead;
    const Word &v = R.rules_[bi].lead;
    const NcPoly &ta = R.rules_[ai].tail;
    const NcPoly &tb = R.rules_[bi].tail;
    size_t shortest = std::min(u.size(), v.size());
    for (size_t k = 1; k < shortest; ++k) {
      bool match = true;
      for (size_t i = 0; i < k && match; ++i)
        match = u[u.size() - k + i] == v[i];
      if (!match) continue;
      if (u.size() + v.size() - k > truncation_degree) {
        R.truncated_ = true;
        continue;
      }
      Word right(v.begin() + k, v.end());
      Word left(u.begin(), u.end() - k);
      NcPoly s = ta * word_poly(spec, right) - word_poly(spec, left) * tb;
      if (!s.is_zero()) pending.insert(s);
    }
    if (ai != bi && v.size() < u.size()) {
      for (size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
        if (!lead_occurs_at(u, v, pos)) continue;
        Word pre(u.begin(), u.begin() + pos);
        Word post(u.begin() + pos + v.size(), u.end());
        NcPoly s = ta - word_poly(spec, pre) * tb * word_poly(spec, post);
        if (!s.is_zero()) pending.insert(s);
      }
    }
  };

  while (!pending.empty()) {
    NcPoly p = *pending.begin();
    pending.erase(pending.begin());
    NcPoly nf = normal_form(p, R);
    if (nf.is_zero()) continue;
    if (nf.degree() > truncation_degree) {
      R.truncated_ = true;
      continue;
    }
    R.rules_.push_back(make_rule(nf));
    size_t ni = R.rules_.size() - 1;
    for (size_t j = 0; j <= ni; ++j) {
      enqueue_pairs(ni, j);
      if (j != ni) enqueue_pairs(j, ni);
    }
  }

  // Interreduce: each rule fully reduced against the others; drop the
  // redundant ones. Preference goes to smaller leading words since a
  // rule reducible by a smaller lead disappears.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < R.rules_.size(); ++i) {
      RewriteSystem others(spec, alphabet_size);
      for (size_t j = 0; j < R.rules_.size(); ++j)
        if (j != i) others.rules_.push_back(R.rules_[j]);
      NcPoly p = word_poly(spec, R.rules_[i].lead) - R.rules_[i].tail;
      NcPoly nf = normal_form(p, others);
      if (nf == p) continue;
      changed = true;
      if (nf.is_zero()) {
        R.rules_.erase(R.rules_.begin() + i);
        --i;
      } else {
        R.rules_[i] = make_rule(nf);
      }
    }
  }
  std::sort(R.rules_.begin(), R.rules_.end(),
            [](const RewriteRule &a, const RewriteRule &b) {
              return DegLexLess{}(a.lead, b.lead);
            });
  R.complete_below_ = truncation_degree;
  return R;
}

size_t graded_dimension(const RewriteSystem &R, unsigned k) {
  if (!R.homogeneous())
    throw std::invalid_argument(
        "graded dimension of an inhomogeneous system is ill-defined");
  if (!R.certifies(k))
    throw std::invalid_argument("degree exceeds the certified range");
  size_t count = 0;
  Word w;
  auto reducible_suffix = [&]() {
    for (const auto &rule : R.rules())
      if (rule.lead.size() <= w.size() &&
          lead_occurs_at(w, rule.lead, w.size() - rule.lead.size()))
        return true;
    return false;
  };
  std::function<void()> rec = [&]() {
    if (w.size() == k) {
      ++count;
      return;
    }
    for (uint16_t g = 0; g < R.alphabet_size(); ++g) {
      w.push_back(g);
      if (!reducible_suffix()) rec();
      w.pop_back();
    }
  };
  rec();
  return count;
}

}  // namespace hopfcert
