#pragma once

#include "lures/poset.hpp"
#include "lures/verdict.hpp"

namespace lures {

/// L(U(x,y)) and U(L(x,y)) for every pair, the two shapes every
/// three-variable LU-identity below bottoms out in.
class PairCones {
 public:
  explicit PairCones(const Poset& p);

  const ElementSet& lu(Element x, Element y) const { return lu_[x * n_ + y]; }
  const ElementSet& ul(Element x, Element y) const { return ul_[x * n_ + y]; }

 private:
  std::size_t n_;
  std::vector<ElementSet> lu_;
  std::vector<ElementSet> ul_;
};

/// L(U(x,y),z) = LU(x,L(y,z)) whenever x <= z. Witness: first (x,y,z) in
/// lexicographic index order.
Verdict is_modular_poset(const Poset& p, unsigned jobs = 1);

/// One of the two equivalent distributivity LU-identities:
///   1: L(U(x,y),z) = LU(L(x,z),L(y,z))
///   2: LU(L(x,y),z) = L(U(x,z),U(y,z))
Verdict distributive_identity(const Poset& p, int which, unsigned jobs = 1);

/// Evaluates both distributivity identities and returns the verdict of the
/// first. Throws std::logic_error if they disagree.
Verdict is_distributive_poset(const Poset& p, unsigned jobs = 1);

/// 1: L(U(x,y),U(x,z)) = LU(x,L(y,U(x,z)))
/// 2: L(U(L(x,z),y),z) = LU(L(x,z),L(y,z))
Verdict strongly_modular_identity(const Poset& p, int which, unsigned jobs = 1);

/// Both identities; at each triple identity 1 is tried before identity 2 and
/// the note names the identity that failed.
Verdict is_strongly_modular(const Poset& p, unsigned jobs = 1);

/// The set-quantified conditions
///   (a) x <= Z       implies L(U(x,y),Z) = LU(x,L(y,Z))
///   (b) L(X) <= z    implies L(U(L(X),y),z) = LU(L(X),L(y,z))
/// checked over the Dedekind-MacNeille closed sets instead of all subsets:
/// every L(Z) is closed, every closed A is L(U(A)), x <= Z iff x in L(Z),
/// and L(X) <= z iff z in U(L(X)). Failures of (a) are scanned over
/// (x, y, A) first, then (b) over (A, y, z), with closed sets in completion
/// order.
Verdict is_strictly_modular(const Poset& p, unsigned jobs = 1);

/// (x v y) ^ (x v z) = x v (y ^ (x v z)). Throws if `p` is not a lattice.
Verdict is_modular_lattice(const Poset& p, unsigned jobs = 1);

/// Complementation (guaranteed by construction) plus antitone involution.
Verdict is_orthoposet(const ComplementedPoset& cp);
/// Distributive orthoposet.
Verdict is_boolean_poset(const ComplementedPoset& cp, unsigned jobs = 1);
/// Throws if the underlying poset is not a lattice.
Verdict is_ortholattice(const ComplementedPoset& cp);
/// x v ((x v y) ^ x') = x v y alone. Throws on non-lattices.
Verdict orthomodular_law(const ComplementedPoset& cp);
Verdict is_orthomodular_lattice(const ComplementedPoset& cp);

}  // namespace lures
