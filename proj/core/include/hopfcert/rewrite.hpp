#ifndef HOPFCERT_REWRITE_HPP
#define HOPFCERT_REWRITE_HPP

#include <functional>
#include <random>

#include "hopfcert/ncpoly.hpp"

namespace hopfcert {

/// One rewrite rule: leading word maps to a strictly smaller tail.
struct RewriteRule {
  Word lead;
  NcPoly tail;
};

/// Degree-truncated two-sided rewriting system for an ideal, produced
/// by overlap completion. Normal forms are exact ideal-membership
/// decisions for homogeneous ideals up to complete_below; otherwise
/// they are valid "up to truncation".
class RewriteSystem {
public:
  RewriteSystem() = default;
  RewriteSystem(FieldSpec spec, size_t alphabet_size)
      : spec_(spec), alphabet_size_(alphabet_size) {}

  FieldSpec spec() const { return spec_; }
  size_t alphabet_size() const { return alphabet_size_; }
  const std::vector<RewriteRule> &rules() const { return rules_; }
  unsigned truncation_degree() const { return truncation_degree_; }
  unsigned complete_below() const { return complete_below_; }
  /// True when ambiguities above the truncation degree were skipped,
  /// i.e. the system is only certified below the bound.
  bool truncated() const { return truncated_; }
  bool homogeneous() const;
  bool certifies(size_t degree) const { return degree <= complete_below_; }

  /// Rule sets compare as ordered lists of (lead, tail) pairs.
  friend bool operator==(const RewriteSystem &a, const RewriteSystem &b);
  friend bool operator!=(const RewriteSystem &a, const RewriteSystem &b) {
    return !(a == b);
  }

private:
  FieldSpec spec_;
  size_t alphabet_size_ = 0;
  std::vector<RewriteRule> rules_;
  unsigned truncation_degree_ = 0;
  unsigned complete_below_ = 0;
  bool truncated_ = false;

  friend RewriteSystem complete(FieldSpec spec, size_t alphabet_size,
                                const std::vector<NcPoly> &relations,
                                unsigned truncation_degree);
};

/// Buchberger/Mora overlap completion in deglex order, resolving all
/// ambiguities of degree <= truncation_degree. Deterministic in
/// (relations, truncation_degree). Relations of degree above the bound
/// are rejected.
RewriteSystem complete(FieldSpec spec, size_t alphabet_size,
                       const std::vector<NcPoly> &relations,
                       unsigned truncation_degree);

/// Exhaustive rewriting to the unique fixed point (deterministic
/// leftmost-innermost strategy; confluent on the certified range).
NcPoly normal_form(const NcPoly &p, const RewriteSystem &R);

/// Same fixed point reached through randomly chosen reductions; used by
/// the confluence property tests.
NcPoly normal_form_random(const NcPoly &p, const RewriteSystem &R,
                          std::mt19937 &rng);

/// Number of irreducible words of length k. Requires a homogeneous
/// system with k <= complete_below.
size_t graded_dimension(const RewriteSystem &R, unsigned k);

}  // namespace hopfcert

#endif
