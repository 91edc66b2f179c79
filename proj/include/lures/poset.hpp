#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lures/element_set.hpp"
#include "lures/verdict.hpp"

namespace lures {

using LabelPair = std::pair<std::string, std::string>;

/// Finite poset over dense indices 0..n-1. Immutable once built; the order
/// is stored as cached principal cones, so L(x) and U(x) are row lookups and
/// cones over sets are intersections of rows.
class Poset {
 public:
  /// Builds the reflexive-transitive closure of a cover (Hasse) relation.
  /// Throws on duplicate labels, unknown labels and cycles.
  static Poset from_covers(std::vector<std::string> names, const std::vector<LabelPair>& covers);

  /// `up[i]` is the set {j : i <= j}. The relation must already be a partial
  /// order; it is validated, not closed.
  static Poset from_order(std::vector<std::string> names, std::vector<ElementSet> up);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element e) const { return names_[e]; }
  std::optional<Element> find(std::string_view label) const;
  /// Like find() but throws on unknown labels.
  Element index_of(std::string_view label) const;

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  /// Principal ideal L(x).
  const ElementSet& down(Element x) const { return down_[x]; }
  /// Principal filter U(x).
  const ElementSet& up(Element x) const { return up_[x]; }

  std::optional<Element> bottom() const { return bottom_; }
  std::optional<Element> top() const { return top_; }
  bool bounded() const { return bottom_.has_value() && top_.has_value(); }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet::full(size()); }
  ElementSet singleton(Element e) const { return ElementSet::single(size(), e); }

  /// L(A): common lower bounds. L of the empty set is the whole carrier.
  ElementSet lower(const ElementSet& a) const {
    ElementSet out = full_set();
    a.for_each([&](Element e) { out &= down_[e]; });
    return out;
  }
  /// U(A): common upper bounds.
  ElementSet upper(const ElementSet& a) const {
    ElementSet out = full_set();
    a.for_each([&](Element e) { out &= up_[e]; });
    return out;
  }
  ElementSet lu(const ElementSet& a) const { return lower(upper(a)); }
  ElementSet ul(const ElementSet& a) const { return upper(lower(a)); }

  /// Least element of `s`, if it has one.
  std::optional<Element> minimum(const ElementSet& s) const;
  /// Greatest element of `s`, if it has one.
  std::optional<Element> maximum(const ElementSet& s) const;

  /// Hasse diagram as (lower, upper) index pairs in lexicographic order.
  std::vector<std::pair<Element, Element>> covers() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  Poset(std::vector<std::string> names, std::vector<ElementSet> up);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::optional<Element> bottom_;
  std::optional<Element> top_;
};

/// Bounded poset with a validated complementation x -> x'.
class ComplementedPoset {
 public:
  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  Element comp(Element x) const { return comp_[x]; }
  const std::vector<Element>& complement() const { return comp_; }
  /// Elementwise image A' = {x' : x in A}.
  ElementSet image(const ElementSet& a) const {
    ElementSet out = poset_.empty_set();
    a.for_each([&](Element e) { out.insert(comp_[e]); });
    return out;
  }

  friend bool operator==(const ComplementedPoset&, const ComplementedPoset&) = default;

 private:
  friend ComplementedPoset attach_complement(Poset p, std::vector<Element> comp);
  ComplementedPoset(Poset p, std::vector<Element> comp) : poset_(std::move(p)), comp_(std::move(comp)) {}

  Poset poset_;
  std::vector<Element> comp_;
};

/// First element x (by index) with U(x,x') != {1} or L(x,x') != {0}.
/// The poset must be bounded and `comp` total.
std::optional<Witness> complementation_violation(const Poset& p, std::span<const Element> comp);

/// Validates `comp` as a complementation of the bounded poset `p`.
ComplementedPoset attach_complement(Poset p, std::vector<Element> comp);
/// Same, with the map given by labels; every element needs an entry.
ComplementedPoset attach_complement(Poset p, const std::vector<LabelPair>& comp);

/// Componentwise order; element (i,j) gets index i*|q|+j and label "(x,y)".
Poset direct_product(const Poset& p, const Poset& q);
ComplementedPoset direct_product(const ComplementedPoset& p, const ComplementedPoset& q);

/// Order transposed, labels kept; bottom and top swap roles.
Poset dual(const Poset& p);

/// Every pair has a least upper bound and a greatest lower bound. The
/// witness is the first pair (x < y by index) lacking one.
Verdict is_lattice(const Poset& p);

struct UnaryProperties {
  Verdict involution;
  Verdict antitone;
};
UnaryProperties unary_properties(const ComplementedPoset& cp);

/// Join/meet tables of a lattice. Construction throws when `p` is not one.
class LatticeTables {
 public:
  explicit LatticeTables(const Poset& p);

  Element join(Element x, Element y) const { return join_[x * n_ + y]; }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }

 private:
  std::size_t n_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
};

}  // namespace lures
