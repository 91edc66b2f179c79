#include "lures/completion.hpp"

#include <algorithm>
#include <unordered_set>

#include "lures/cones.hpp"
#include "lures/props.hpp"

namespace lures {

std::vector<ElementSet> closed_sets(const Poset& p) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> out;
  std::vector<ElementSet> frontier;
  auto add = [&](ElementSet s) {
    if (seen.insert(s).second) {
      out.push_back(s);
      frontier.push_back(std::move(s));
    }
  };
  add(p.full_set());
  for (Element x = 0; x < p.size(); ++x) add(p.down(x));
  while (!frontier.empty()) {
    const ElementSet a = std::move(frontier.back());
    frontier.pop_back();
    for (Element x = 0; x < p.size(); ++x)
      if (!a.is_subset_of(p.down(x))) add(a & p.down(x));
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

CompletionLattice::CompletionLattice(Poset base, std::vector<ElementSet> sets)
    : base_(std::move(base)), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(), size_lex_less);
  embedding_.assign(base_.size(), sets_.size());
  for (Element x = 0; x < base_.size(); ++x)
    if (auto i = find(base_.down(x))) embedding_[x] = *i;
}

std::optional<std::size_t> CompletionLattice::find(const ElementSet& a) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), a, size_lex_less);
  if (it != sets_.end() && *it == a) return static_cast<std::size_t>(it - sets_.begin());
  return std::nullopt;
}

std::size_t CompletionLattice::join(std::size_t i, std::size_t j) const {
  if (auto k = find(base_.lu(sets_[i] | sets_[j]))) return *k;
  throw Error("join leaves the lattice");
}

std::size_t CompletionLattice::meet(std::size_t i, std::size_t j) const {
  if (auto k = find(sets_[i] & sets_[j])) return *k;
  throw Error("meet leaves the lattice");
}

CompletionLattice CompletionLattice::with_star(std::vector<std::size_t> star) const {
  CompletionLattice out = *this;
  out.star_ = std::move(star);
  return out;
}

std::string CompletionLattice::label(std::size_t i) const {
  if (auto top = base_.maximum(sets_[i]); top && base_.down(*top) == sets_[i]) return base_.name(*top);
  return format_set(base_, sets_[i]);
}

Poset CompletionLattice::as_poset() const {
  const std::size_t n = size();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(label(i));
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(i, j)) up[i].insert(j);
  return Poset::from_order(std::move(names), std::move(up));
}

ComplementedPoset CompletionLattice::as_complemented() const {
  if (!star_) throw Error("completion has no star operation");
  return attach_complement(as_poset(), *star_);
}

CompletionLattice dm_completion(const Poset& p) { return CompletionLattice(p, closed_sets(p)); }

CompletionLattice d0_sublattice(const CompletionLattice& c) {
  const Poset& p = c.base();
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> members;
  for (Element x = 0; x < p.size(); ++x)
    if (seen.insert(p.down(x)).second) members.push_back(p.down(x));

  // Each round combines every new member with every member seen so far.
  std::size_t processed = 0;
  while (processed < members.size()) {
    const std::size_t end = members.size();
    for (std::size_t i = processed; i < end; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        ElementSet meet = members[i] & members[j];
        ElementSet join = p.lu(members[i] | members[j]);
        if (seen.insert(meet).second) members.push_back(std::move(meet));
        if (seen.insert(join).second) members.push_back(std::move(join));
      }
    processed = end;
  }
  CompletionLattice out(p, std::move(members));
  if (!c.star()) return out;
  std::vector<std::size_t> star(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t in_c = *c.find(out.set(i));
    auto k = out.find(c.set((*c.star())[in_c]));
    if (!k) throw Error("generated sublattice is not closed under the star operation");
    star[i] = *k;
  }
  return out.with_star(std::move(star));
}

CompletionLattice star_extension(const CompletionLattice& c, const ComplementedPoset& cp) {
  if (!(c.base() == cp.poset())) throw Error("completion and complemented poset differ");
  if (Verdict v = is_orthoposet(cp); !v) throw Error("star extension needs an orthoposet: " + v.witness->note);
  const Poset& p = cp.poset();
  std::vector<std::size_t> star(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto k = c.find(p.lower(cp.image(c.set(i))));
    if (!k) throw Error("lattice is not closed under the star operation");
    star[i] = *k;
  }
  return c.with_star(std::move(star));
}

StarChecks verify_star(const CompletionLattice& c, const ComplementedPoset& cp) {
  const Poset& p = cp.poset();
  const std::size_t n = c.size();
  auto star_of = [&](std::size_t i) { return p.lower(cp.image(c.set(i))); };
  auto one = [&](std::size_t i, const char* note) {
    return Verdict::fail({{}, {{"A", c.set(i)}}, note});
  };

  StarChecks out;
  for (std::size_t i = 0; i < n && out.cone_image.holds; ++i) {
    const ElementSet& a = c.set(i);
    if (p.lower(cp.image(a)) != cp.image(p.upper(a))) out.cone_image = one(i, "L(A') != (U(A))'");
    else if (p.upper(cp.image(a)) != cp.image(p.lower(a))) out.cone_image = one(i, "U(A') != (L(A))'");
  }
  std::vector<ElementSet> stars;
  stars.reserve(n);
  for (std::size_t i = 0; i < n; ++i) stars.push_back(star_of(i));
  for (std::size_t i = 0; i < n && out.antitone.holds; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c.leq(i, j) && !stars[j].is_subset_of(stars[i])) {
        out.antitone = Verdict::fail({{}, {{"A", c.set(i)}, {"B", c.set(j)}}, "A <= B but B* !<= A*"});
        break;
      }
  const ElementSet bottom = p.bottom() ? p.singleton(*p.bottom()) : p.lower(p.full_set());
  for (std::size_t i = 0; i < n; ++i) {
    const ElementSet& a = c.set(i);
    if (out.involution.holds && p.lower(cp.image(stars[i])) != a) out.involution = one(i, "A** != A");
    if (out.join_top.holds && !p.lu(a | stars[i]).is_full()) out.join_top = one(i, "A v A* != P");
    if (out.meet_bottom.holds && (a & stars[i]) != bottom) out.meet_bottom = one(i, "A & A* != {0}");
  }
  for (Element x = 0; x < p.size(); ++x)
    if (p.lower(cp.image(p.down(x))) != p.down(cp.comp(x))) {
      out.extends = Verdict::fail({{{"a", x}}, {}, "(L(a))* != L(a')"});
      break;
    }
  return out;
}

CompletionModularityReport completion_modularity_report(const Poset& p, unsigned jobs) {
  const CompletionLattice d = dm_completion(p);
  const CompletionLattice d0 = d0_sublattice(d);
  return {is_modular_lattice(d.as_poset(), jobs), is_modular_lattice(d0.as_poset(), jobs),
          is_strongly_modular(p, jobs), is_strictly_modular(p, jobs)};
}

}  // namespace lures
