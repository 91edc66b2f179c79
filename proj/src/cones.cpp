#include "lures/cones.hpp"

namespace lures {

namespace {

void require_same(const Poset& a, const Poset& b) {
  if (&a != &b) throw Error("subsets belong to different posets");
}

Subset cone_of_union(std::initializer_list<Subset> parts, bool lower) {
  if (parts.size() == 0) throw Error("cone of an empty argument list needs an ambient poset");
  const Poset& p = parts.begin()->poset();
  ElementSet all = p.empty_set();
  for (const auto& s : parts) {
    require_same(p, s.poset());
    all |= s.members();
  }
  return Subset(p, lower ? p.lower(all) : p.upper(all));
}

}  // namespace

Subset::Subset(const Poset& p, ElementSet members) : poset_(&p), members_(std::move(members)) {
  if (members_.universe() != p.size()) throw Error("subset universe does not match its poset");
}

Subset Subset::of(const Poset& p, std::initializer_list<std::string_view> labels) {
  ElementSet s = p.empty_set();
  for (auto label : labels) s.insert(p.index_of(label));
  return Subset(p, std::move(s));
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same(*poset_, *other.poset_);
  return members_.is_subset_of(other.members_);
}

Subset operator|(const Subset& a, const Subset& b) {
  require_same(*a.poset_, *b.poset_);
  return Subset(*a.poset_, a.members_ | b.members_);
}

Subset operator&(const Subset& a, const Subset& b) {
  require_same(*a.poset_, *b.poset_);
  return Subset(*a.poset_, a.members_ & b.members_);
}

Subset lower_cone(const Subset& a) { return Subset(a.poset(), a.poset().lower(a.members())); }
Subset upper_cone(const Subset& a) { return Subset(a.poset(), a.poset().upper(a.members())); }
Subset lower_cone(std::initializer_list<Subset> parts) { return cone_of_union(parts, true); }
Subset upper_cone(std::initializer_list<Subset> parts) { return cone_of_union(parts, false); }
Subset lu_closure(const Subset& a) { return Subset(a.poset(), a.poset().lu(a.members())); }
Subset ul_closure(const Subset& a) { return Subset(a.poset(), a.poset().ul(a.members())); }

std::string format_set(const Poset& p, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ',';
    out += p.name(e);
    first = false;
  });
  return out + "}";
}

}  // namespace lures
