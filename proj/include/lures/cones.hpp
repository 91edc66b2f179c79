#pragma once

#include <initializer_list>
#include <string_view>

#include "lures/element_set.hpp"
#include "lures/poset.hpp"

namespace lures {

/// A set of elements tied to its ambient poset. Subsets of different posets
/// never combine; doing so throws.
class Subset {
 public:
  Subset(const Poset& p, ElementSet members);
  static Subset of(const Poset& p, std::initializer_list<std::string_view> labels);
  static Subset empty(const Poset& p) { return Subset(p, p.empty_set()); }

  const Poset& poset() const { return *poset_; }
  const ElementSet& members() const { return members_; }
  bool contains(Element e) const { return members_.contains(e); }
  std::size_t size() const { return members_.count(); }
  bool is_subset_of(const Subset& other) const;

  /// Union; throws if the ambient posets differ.
  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  friend bool operator==(const Subset& a, const Subset& b) {
    return a.poset_ == b.poset_ && a.members_ == b.members_;
  }

 private:
  const Poset* poset_;
  ElementSet members_;
};

Subset lower_cone(const Subset& a);
Subset upper_cone(const Subset& a);
/// L(A1, ..., Ak) in the mixed notation: the cone of the union.
Subset lower_cone(std::initializer_list<Subset> parts);
Subset upper_cone(std::initializer_list<Subset> parts);
Subset lu_closure(const Subset& a);
Subset ul_closure(const Subset& a);

/// Renders `{a,b,c}` with members in index order.
std::string format_set(const Poset& p, const ElementSet& s);

}  // namespace lures
