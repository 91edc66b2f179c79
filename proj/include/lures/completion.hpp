#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lures/element_set.hpp"
#include "lures/poset.hpp"
#include "lures/verdict.hpp"

namespace lures {

/// All LU-closed subsets of `p`, each exactly once, ordered by size and then
/// by member list. Generated as the intersection closure of the principal
/// ideals together with the whole carrier (every closed set is some L(S)).
std::vector<ElementSet> closed_sets(const Poset& p);

/// A lattice of LU-closed sets of a base poset, ordered by inclusion, with
/// join LU(A,B) and meet A & B. Either the full Dedekind-MacNeille
/// completion or a sublattice of it.
class CompletionLattice {
 public:
  CompletionLattice(Poset base, std::vector<ElementSet> sets);

  const Poset& base() const { return base_; }
  const std::vector<ElementSet>& closed_sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  const ElementSet& set(std::size_t i) const { return sets_[i]; }

  std::optional<std::size_t> find(const ElementSet& a) const;
  bool leq(std::size_t i, std::size_t j) const { return sets_[i].is_subset_of(sets_[j]); }
  /// Index of L(x).
  std::size_t embedding(Element x) const { return embedding_[x]; }
  /// Throws if the result is not a member (only possible for sublattices
  /// that are not closed under the operation).
  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t meet(std::size_t i, std::size_t j) const;

  const std::optional<std::vector<std::size_t>>& star() const { return star_; }
  CompletionLattice with_star(std::vector<std::size_t> star) const;

  /// Principal ideals take the label of their generator; other sets are
  /// rendered as `{a,b}`.
  std::string label(std::size_t i) const;
  /// Inclusion order as a poset, in closed-set order.
  Poset as_poset() const;
  /// as_poset() with the star as complementation. Throws without a star.
  ComplementedPoset as_complemented() const;

 private:
  Poset base_;
  std::vector<ElementSet> sets_;
  std::vector<std::size_t> embedding_;
  std::optional<std::vector<std::size_t>> star_;
};

CompletionLattice dm_completion(const Poset& p);

/// Sublattice generated by the principal ideals: joins and meets are added
/// round by round until nothing new appears.
CompletionLattice d0_sublattice(const CompletionLattice& c);

/// Extends the orthocomplementation of `cp` to A* = L(A') on every member of
/// `c`. Throws if `cp` is not an orthoposet or `c` is not closed under *.
CompletionLattice star_extension(const CompletionLattice& c, const ComplementedPoset& cp);

/// The identities that make * an orthocomplementation extending ', each
/// checked over every member of the lattice.
struct StarChecks {
  Verdict cone_image;    ///< L(A') = (U(A))' and U(A') = (L(A))'
  Verdict antitone;      ///< A <= B implies B* <= A*
  Verdict involution;    ///< A** = A
  Verdict join_top;      ///< A v A* = P
  Verdict meet_bottom;   ///< A & A* = {0}
  Verdict extends;       ///< (L(a))* = L(a')

  bool all() const {
    return cone_image.holds && antitone.holds && involution.holds && join_top.holds &&
           meet_bottom.holds && extends.holds;
  }
};
StarChecks verify_star(const CompletionLattice& c, const ComplementedPoset& cp);

struct CompletionModularityReport {
  Verdict d_modular;
  Verdict d0_modular;
  Verdict p_strongly_modular;
  Verdict p_strictly_modular;

  /// D0 modular implies strongly modular.
  bool strong_implication_ok() const { return !d0_modular.holds || p_strongly_modular.holds; }
  /// D modular implies strictly modular.
  bool strict_implication_ok() const { return !d_modular.holds || p_strictly_modular.holds; }
};
CompletionModularityReport completion_modularity_report(const Poset& p, unsigned jobs = 1);

}  // namespace lures
