#pragma once

#include <vector>

#include "lures/element_set.hpp"
#include "lures/poset.hpp"
#include "lures/verdict.hpp"

namespace lures {

/// Which half of an adjointness equivalence to check. `forward` tests
/// "left side implies right side", `backward` the converse.
enum class Direction { forward, backward, both };

/// Term operations on a complemented lattice:
///   x (.) y = (x v y') ^ y,   x -> y = (x ^ y) v x'.
/// Construction throws when the poset is not a lattice.
class TermResiduation {
 public:
  explicit TermResiduation(const ComplementedPoset& cp);

  const ComplementedPoset& structure() const { return cp_; }
  const LatticeTables& lattice() const { return lattice_; }
  Element odot(Element x, Element y) const { return odot_[x * cp_.size() + y]; }
  Element arrow(Element x, Element y) const { return arrow_[x * cp_.size() + y]; }

 private:
  ComplementedPoset cp_;
  LatticeTables lattice_;
  std::vector<Element> odot_;
  std::vector<Element> arrow_;
};

/// x (.) 1 = x and 1 (.) x = x.
Verdict check_unit_laws(const TermResiduation& t);
/// x (.) y <= z  iff  x <= y -> z.
Verdict check_adjointness(const TermResiduation& t, Direction d = Direction::both, unsigned jobs = 1);
/// (x -> y) (.) x = x ^ y.
Verdict check_divisibility(const TermResiduation& t);
/// Unit laws, then adjointness over all triples, then divisibility.
Verdict verify_left_residuated_lattice(const ComplementedPoset& cp, unsigned jobs = 1);

/// Operator residuation on a bounded complemented poset:
///   M(x,y) = L(U(x,y'),y),   R(x,y) = LU(L(x,y),x').
/// Both tables are materialized on construction.
class OperatorResiduation {
 public:
  explicit OperatorResiduation(const ComplementedPoset& cp);

  const ComplementedPoset& structure() const { return cp_; }
  const ElementSet& m(Element x, Element y) const { return m_[x * cp_.size() + y]; }
  const ElementSet& r(Element x, Element y) const { return r_[x * cp_.size() + y]; }
  /// M with a set as first argument: L(U(A,y'),y).
  ElementSet m(const ElementSet& a, Element y) const;

 private:
  ComplementedPoset cp_;
  std::vector<ElementSet> m_;
  std::vector<ElementSet> r_;
};

/// M(x,1) = M(1,x) = L(x) and R(x,0) = L(x').
Verdict check_operator_units(const OperatorResiduation& o);
/// M(x,y) <= L(z)  iff  L(x) <= R(y,z), as set inclusions.
Verdict check_operator_adjointness(const OperatorResiduation& o, Direction d = Direction::both,
                                   unsigned jobs = 1);
/// M(R(x,y),x) = L(x,y).
Verdict check_operator_divisibility(const OperatorResiduation& o);
/// Units, adjointness over all triples, then divisibility.
Verdict verify_operator_left_residuated(const ComplementedPoset& cp, unsigned jobs = 1);

/// x <= y iff R(x,y) = P.
Verdict residuum_order_test(const ComplementedPoset& cp);

/// On a complemented lattice: M(x,y) = L(x (.) y) and R(x,y) = L(x -> y).
Verdict lattice_operator_agreement(const ComplementedPoset& cp);

}  // namespace lures
