#include "lures/props.hpp"

#include <stdexcept>
#include <string>

#include "lures/cones.hpp"
#include "lures/completion.hpp"
#include "lures/parallel.hpp"

namespace lures {

namespace {

Witness triple(Element x, Element y, Element z, std::string note) {
  return {{{"x", x}, {"y", y}, {"z", z}}, {}, std::move(note)};
}

/// First (x,y,z) for which `holds(x,y,z)` is false.
template <class Pred>
Verdict scan_triples(std::size_t n, unsigned jobs, const std::string& note, Pred&& holds) {
  return Verdict::from(first_failure(n, jobs, [&](Element x) -> std::optional<Witness> {
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (!holds(x, y, z)) return triple(x, y, z, note);
    return std::nullopt;
  }));
}

}  // namespace

PairCones::PairCones(const Poset& p) : n_(p.size()) {
  lu_.reserve(n_ * n_);
  ul_.reserve(n_ * n_);
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y) {
      lu_.push_back(p.lower(p.up(x) & p.up(y)));
      ul_.push_back(p.upper(p.down(x) & p.down(y)));
    }
}

Verdict is_modular_poset(const Poset& p, unsigned jobs) {
  const PairCones c(p);
  return scan_triples(p.size(), jobs, "modular", [&](Element x, Element y, Element z) {
    if (!p.leq(x, z)) return true;
    // L(U(x,y),z) = LU(x,y) & L(z);  LU(x,L(y,z)) = L(U(x) & UL(y,z)).
    return (c.lu(x, y) & p.down(z)) == p.lower(p.up(x) & c.ul(y, z));
  });
}

Verdict distributive_identity(const Poset& p, int which, unsigned jobs) {
  const PairCones c(p);
  if (which == 1)
    return scan_triples(p.size(), jobs, "distributive-1", [&](Element x, Element y, Element z) {
      return (c.lu(x, y) & p.down(z)) == p.lower(c.ul(x, z) & c.ul(y, z));
    });
  if (which == 2)
    return scan_triples(p.size(), jobs, "distributive-2", [&](Element x, Element y, Element z) {
      return p.lower(c.ul(x, y) & p.up(z)) == (c.lu(x, z) & c.lu(y, z));
    });
  throw Error("distributivity identity must be 1 or 2");
}

Verdict is_distributive_poset(const Poset& p, unsigned jobs) {
  Verdict first = distributive_identity(p, 1, jobs);
  const Verdict second = distributive_identity(p, 2, jobs);
  if (first.holds != second.holds)
    throw std::logic_error("distributivity identities disagree");
  return first;
}

namespace {

bool strongly_modular_1(const Poset& p, const PairCones& c, Element x, Element y, Element z) {
  const ElementSet& lu_xz = c.lu(x, z);
  return (c.lu(x, y) & lu_xz) == p.lower(p.up(x) & p.upper(p.down(y) & lu_xz));
}

bool strongly_modular_2(const Poset& p, const PairCones& c, Element x, Element y, Element z) {
  const ElementSet& ul_xz = c.ul(x, z);
  return (p.lower(ul_xz & p.up(y)) & p.down(z)) == p.lower(ul_xz & c.ul(y, z));
}

}  // namespace

Verdict strongly_modular_identity(const Poset& p, int which, unsigned jobs) {
  const PairCones c(p);
  if (which == 1)
    return scan_triples(p.size(), jobs, "strongly-modular-1",
                        [&](Element x, Element y, Element z) { return strongly_modular_1(p, c, x, y, z); });
  if (which == 2)
    return scan_triples(p.size(), jobs, "strongly-modular-2",
                        [&](Element x, Element y, Element z) { return strongly_modular_2(p, c, x, y, z); });
  throw Error("strong modularity identity must be 1 or 2");
}

Verdict is_strongly_modular(const Poset& p, unsigned jobs) {
  const PairCones c(p);
  const std::size_t n = p.size();
  return Verdict::from(first_failure(n, jobs, [&](Element x) -> std::optional<Witness> {
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        if (!strongly_modular_1(p, c, x, y, z)) return triple(x, y, z, "strongly-modular-1");
        if (!strongly_modular_2(p, c, x, y, z)) return triple(x, y, z, "strongly-modular-2");
      }
    return std::nullopt;
  }));
}

Verdict is_strictly_modular(const Poset& p, unsigned jobs) {
  const std::vector<ElementSet> closed = closed_sets(p);
  std::vector<ElementSet> closed_upper;
  closed_upper.reserve(closed.size());
  for (const auto& a : closed) closed_upper.push_back(p.upper(a));
  const PairCones c(p);
  const std::size_t n = p.size();

  // (a): A plays L(Z), so x <= Z becomes x in A.
  auto lower_witness = first_failure(n, jobs, [&](Element x) -> std::optional<Witness> {
    for (Element y = 0; y < n; ++y)
      for (const ElementSet& a : closed) {
        if (!a.contains(x)) continue;
        if ((c.lu(x, y) & a) != p.lower(p.up(x) & p.upper(p.down(y) & a)))
          return Witness{{{"x", x}, {"y", y}},
                         {{"Z", a}},
                         "x <= Z but L(U(x,y),Z) != LU(x,L(y,Z)) (Z given by its closure L(Z))"};
      }
    return std::nullopt;
  });
  if (lower_witness) return Verdict::fail(std::move(*lower_witness));

  // (b): A plays L(X), so L(X) <= z becomes z in U(A).
  auto upper_witness = first_failure(closed.size(), jobs, [&](std::size_t i) -> std::optional<Witness> {
    const ElementSet& a = closed[i];
    const ElementSet& ua = closed_upper[i];
    for (Element y = 0; y < n; ++y) {
      const ElementSet lhs_base = p.lower(ua & p.up(y));
      for (Element z = 0; z < n; ++z) {
        if (!ua.contains(z)) continue;
        if ((lhs_base & p.down(z)) != p.lower(ua & c.ul(y, z)))
          return Witness{{{"y", y}, {"z", z}},
                         {{"L(X)", a}},
                         "L(X) <= z but L(U(L(X),y),z) != LU(L(X),L(y,z))"};
      }
    }
    return std::nullopt;
  });
  return Verdict::from(std::move(upper_witness));
}

Verdict is_modular_lattice(const Poset& p, unsigned jobs) {
  const LatticeTables t(p);
  return scan_triples(p.size(), jobs, "modular-lattice", [&](Element x, Element y, Element z) {
    const Element xz = t.join(x, z);
    return t.meet(t.join(x, y), xz) == t.join(x, t.meet(y, xz));
  });
}

Verdict is_orthoposet(const ComplementedPoset& cp) {
  const UnaryProperties u = unary_properties(cp);
  if (!u.involution) return u.involution;
  return u.antitone;
}

Verdict is_boolean_poset(const ComplementedPoset& cp, unsigned jobs) {
  if (Verdict v = is_orthoposet(cp); !v) return v;
  return is_distributive_poset(cp.poset(), jobs);
}

Verdict is_ortholattice(const ComplementedPoset& cp) {
  if (Verdict v = is_lattice(cp.poset()); !v)
    throw Error("ortholattice check needs a lattice");
  return is_orthoposet(cp);
}

Verdict orthomodular_law(const ComplementedPoset& cp) {
  const Poset& p = cp.poset();
  const LatticeTables t(p);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      const Element xy = t.join(x, y);
      if (t.join(x, t.meet(xy, cp.comp(x))) != xy)
        return Verdict::fail({{{"x", x}, {"y", y}}, {}, "orthomodular-law"});
    }
  return Verdict::pass();
}

Verdict is_orthomodular_lattice(const ComplementedPoset& cp) {
  if (Verdict v = is_ortholattice(cp); !v) return v;
  return orthomodular_law(cp);
}

}  // namespace lures
