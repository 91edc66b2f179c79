#include "lures/residuation.hpp"

#include "lures/parallel.hpp"

namespace lures {

namespace {

Witness pair_witness(Element x, Element y, std::string note) {
  return {{{"x", x}, {"y", y}}, {}, std::move(note)};
}

Witness triple_witness(Element x, Element y, Element z, std::string note) {
  return {{{"x", x}, {"y", y}, {"z", z}}, {}, std::move(note)};
}

/// Shared shape of both adjointness scans: `lhs(x,y,z)` and `rhs(x,y,z)`
/// are the two sides of the equivalence.
template <class Lhs, class Rhs>
Verdict scan_equivalence(std::size_t n, Direction d, unsigned jobs, Lhs&& lhs, Rhs&& rhs) {
  return Verdict::from(first_failure(n, jobs, [&](Element x) -> std::optional<Witness> {
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const bool l = lhs(x, y, z);
        const bool r = rhs(x, y, z);
        if (l && !r && d != Direction::backward)
          return triple_witness(x, y, z, "adjointness: left holds, right fails");
        if (r && !l && d != Direction::forward)
          return triple_witness(x, y, z, "adjointness: right holds, left fails");
      }
    return std::nullopt;
  }));
}

}  // namespace

TermResiduation::TermResiduation(const ComplementedPoset& cp) : cp_(cp), lattice_(cp.poset()) {
  const std::size_t n = cp.size();
  odot_.resize(n * n);
  arrow_.resize(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      odot_[x * n + y] = lattice_.meet(lattice_.join(x, cp.comp(y)), y);
      arrow_[x * n + y] = lattice_.join(lattice_.meet(x, y), cp.comp(x));
    }
}

Verdict check_unit_laws(const TermResiduation& t) {
  const Element top = *t.structure().poset().top();
  for (Element x = 0; x < t.structure().size(); ++x) {
    if (t.odot(x, top) != x) return Verdict::fail({{{"x", x}}, {}, "unit: x (.) 1 != x"});
    if (t.odot(top, x) != x) return Verdict::fail({{{"x", x}}, {}, "unit: 1 (.) x != x"});
  }
  return Verdict::pass();
}

Verdict check_adjointness(const TermResiduation& t, Direction d, unsigned jobs) {
  const Poset& p = t.structure().poset();
  return scan_equivalence(
      p.size(), d, jobs, [&](Element x, Element y, Element z) { return p.leq(t.odot(x, y), z); },
      [&](Element x, Element y, Element z) { return p.leq(x, t.arrow(y, z)); });
}

Verdict check_divisibility(const TermResiduation& t) {
  const std::size_t n = t.structure().size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (t.odot(t.arrow(x, y), x) != t.lattice().meet(x, y))
        return Verdict::fail(pair_witness(x, y, "divisibility: (x -> y) (.) x != x ^ y"));
  return Verdict::pass();
}

Verdict verify_left_residuated_lattice(const ComplementedPoset& cp, unsigned jobs) {
  const TermResiduation t(cp);
  if (Verdict v = check_unit_laws(t); !v) return v;
  if (Verdict v = check_adjointness(t, Direction::both, jobs); !v) return v;
  return check_divisibility(t);
}

OperatorResiduation::OperatorResiduation(const ComplementedPoset& cp) : cp_(cp) {
  const Poset& p = cp.poset();
  const std::size_t n = p.size();
  m_.reserve(n * n);
  r_.reserve(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      m_.push_back(p.lower(p.up(x) & p.up(cp.comp(y))) & p.down(y));
      r_.push_back(p.lower(p.upper(p.down(x) & p.down(y)) & p.up(cp.comp(x))));
    }
}

ElementSet OperatorResiduation::m(const ElementSet& a, Element y) const {
  const Poset& p = cp_.poset();
  return p.lower(p.upper(a) & p.up(cp_.comp(y))) & p.down(y);
}

Verdict check_operator_units(const OperatorResiduation& o) {
  const ComplementedPoset& cp = o.structure();
  const Poset& p = cp.poset();
  const Element top = *p.top();
  const Element bottom = *p.bottom();
  for (Element x = 0; x < p.size(); ++x) {
    if (o.m(x, top) != p.down(x)) return Verdict::fail({{{"x", x}}, {}, "unit: M(x,1) != L(x)"});
    if (o.m(top, x) != p.down(x)) return Verdict::fail({{{"x", x}}, {}, "unit: M(1,x) != L(x)"});
  }
  for (Element x = 0; x < p.size(); ++x)
    if (o.r(x, bottom) != p.down(cp.comp(x)))
      return Verdict::fail({{{"x", x}}, {}, "R(x,0) != L(x')"});
  return Verdict::pass();
}

Verdict check_operator_adjointness(const OperatorResiduation& o, Direction d, unsigned jobs) {
  const Poset& p = o.structure().poset();
  return scan_equivalence(
      p.size(), d, jobs,
      [&](Element x, Element y, Element z) { return o.m(x, y).is_subset_of(p.down(z)); },
      [&](Element x, Element y, Element z) { return p.down(x).is_subset_of(o.r(y, z)); });
}

Verdict check_operator_divisibility(const OperatorResiduation& o) {
  const Poset& p = o.structure().poset();
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (o.m(o.r(x, y), x) != (p.down(x) & p.down(y)))
        return Verdict::fail(pair_witness(x, y, "divisibility: M(R(x,y),x) != L(x,y)"));
  return Verdict::pass();
}

Verdict verify_operator_left_residuated(const ComplementedPoset& cp, unsigned jobs) {
  const OperatorResiduation o(cp);
  if (Verdict v = check_operator_units(o); !v) return v;
  if (Verdict v = check_operator_adjointness(o, Direction::both, jobs); !v) return v;
  return check_operator_divisibility(o);
}

Verdict residuum_order_test(const ComplementedPoset& cp) {
  const OperatorResiduation o(cp);
  const Poset& p = cp.poset();
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != o.r(x, y).is_full())
        return Verdict::fail(pair_witness(x, y, p.leq(x, y) ? "x <= y but R(x,y) != P" : "R(x,y) = P but x !<= y"));
  return Verdict::pass();
}

Verdict lattice_operator_agreement(const ComplementedPoset& cp) {
  const TermResiduation t(cp);
  const OperatorResiduation o(cp);
  const Poset& p = cp.poset();
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) {
      if (o.m(x, y) != p.down(t.odot(x, y))) return Verdict::fail(pair_witness(x, y, "M(x,y) != L(x (.) y)"));
      if (o.r(x, y) != p.down(t.arrow(x, y))) return Verdict::fail(pair_witness(x, y, "R(x,y) != L(x -> y)"));
    }
  return Verdict::pass();
}

}  // namespace lures
