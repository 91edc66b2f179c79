#include "lures/poset.hpp"

namespace lures {

namespace {

std::unordered_map<std::string, Element> build_index(const std::vector<std::string>& names) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error("empty element label");
    if (!index.emplace(names[i], i).second) throw Error("duplicate label '" + names[i] + "'");
  }
  return index;
}

}  // namespace

Poset::Poset(std::vector<std::string> names, std::vector<ElementSet> up)
    : names_(std::move(names)), up_(std::move(up)) {
  index_ = build_index(names_);
  const std::size_t n = names_.size();
  down_.assign(n, ElementSet(n));
  for (Element i = 0; i < n; ++i) up_[i].for_each([&](Element j) { down_[j].insert(i); });
  for (Element i = 0; i < n; ++i) {
    if (up_[i].is_full()) bottom_ = i;
    if (down_[i].is_full()) top_ = i;
  }
}

Poset Poset::from_covers(std::vector<std::string> names, const std::vector<LabelPair>& covers) {
  const auto index = build_index(names);
  const std::size_t n = names.size();
  if (n == 0) throw Error("a poset needs at least one element");

  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw Error("unknown label '" + label + "' in cover pair");
    return it->second;
  };

  std::vector<ElementSet> up(n, ElementSet(n));
  for (Element i = 0; i < n; ++i) up[i].insert(i);
  for (const auto& [lo, hi] : covers) {
    const Element a = lookup(lo);
    const Element b = lookup(hi);
    if (a == b) throw Error("cycle detected at '" + lo + "'");
    up[a].insert(b);
  }
  // Warshall over bit rows.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];

  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (up[i].contains(j) && up[j].contains(i))
        throw Error("cycle detected through '" + names[i] + "' and '" + names[j] + "'");

  return Poset(std::move(names), std::move(up));
}

Poset Poset::from_order(std::vector<std::string> names, std::vector<ElementSet> up) {
  const std::size_t n = names.size();
  if (n == 0) throw Error("a poset needs at least one element");
  if (up.size() != n) throw Error("order relation has the wrong number of rows");
  for (Element i = 0; i < n; ++i) {
    if (up[i].universe() != n) throw Error("order relation row has the wrong width");
    if (!up[i].contains(i)) throw Error("order is not reflexive at '" + names[i] + "'");
  }
  for (Element i = 0; i < n; ++i) {
    bool ok = true;
    up[i].for_each([&](Element j) {
      if (j != i && up[j].contains(i)) ok = false;
      if (!up[j].is_subset_of(up[i])) ok = false;
    });
    if (!ok) throw Error("order is not antisymmetric or not transitive at '" + names[i] + "'");
  }
  return Poset(std::move(names), std::move(up));
}

std::optional<Element> Poset::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Poset::index_of(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error("unknown label '" + std::string(label) + "'");
}

std::optional<Element> Poset::minimum(const ElementSet& s) const {
  const std::size_t c = s.count();
  std::optional<Element> found;
  s.for_each([&](Element m) {
    if (!found && (up_[m] & s).count() == c) found = m;
  });
  return found;
}

std::optional<Element> Poset::maximum(const ElementSet& s) const {
  const std::size_t c = s.count();
  std::optional<Element> found;
  s.for_each([&](Element m) {
    if (!found && (down_[m] & s).count() == c) found = m;
  });
  return found;
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element i = 0; i < size(); ++i) {
    ElementSet strict = up_[i];
    strict.erase(i);
    strict.for_each([&](Element j) {
      // j covers i iff nothing lies strictly between them.
      ElementSet between = strict & down_[j];
      between.erase(j);
      if (between.empty()) out.emplace_back(i, j);
    });
  }
  return out;
}

std::optional<Witness> complementation_violation(const Poset& p, std::span<const Element> comp) {
  if (!p.bounded()) throw Error("complementation requires a bounded poset");
  if (comp.size() != p.size()) throw Error("complementation must be a total map");
  const auto top = p.singleton(*p.top());
  const auto bottom = p.singleton(*p.bottom());
  for (Element x = 0; x < p.size(); ++x) {
    if (comp[x] >= p.size()) throw Error("complement index out of range");
    const Element xc = comp[x];
    if ((p.up(x) & p.up(xc)) != top)
      return Witness{{{"x", x}}, {}, "U(" + p.name(x) + "," + p.name(xc) + ") != {" + p.name(*p.top()) + "}"};
    if ((p.down(x) & p.down(xc)) != bottom)
      return Witness{{{"x", x}}, {}, "L(" + p.name(x) + "," + p.name(xc) + ") != {" + p.name(*p.bottom()) + "}"};
  }
  return std::nullopt;
}

ComplementedPoset attach_complement(Poset p, std::vector<Element> comp) {
  if (auto w = complementation_violation(p, comp))
    throw Error("not a complementation: " + w->note);
  return ComplementedPoset(std::move(p), std::move(comp));
}

ComplementedPoset attach_complement(Poset p, const std::vector<LabelPair>& comp) {
  std::vector<std::optional<Element>> partial(p.size());
  for (const auto& [from, to] : comp) {
    const Element x = p.index_of(from);
    const Element y = p.index_of(to);
    if (partial[x] && *partial[x] != y) throw Error("conflicting complements for '" + from + "'");
    partial[x] = y;
  }
  std::vector<Element> total(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    if (!partial[x]) throw Error("no complement given for '" + p.name(x) + "'");
    total[x] = *partial[x];
  }
  return attach_complement(std::move(p), std::move(total));
}

Poset direct_product(const Poset& p, const Poset& q) {
  const std::size_t m = q.size();
  const std::size_t n = p.size() * m;
  std::vector<std::string> names;
  names.reserve(n);
  for (Element i = 0; i < p.size(); ++i)
    for (Element j = 0; j < m; ++j) names.push_back("(" + p.name(i) + "," + q.name(j) + ")");

  std::vector<ElementSet> up(n, ElementSet(n));
  for (Element i = 0; i < p.size(); ++i)
    for (Element j = 0; j < m; ++j)
      p.up(i).for_each([&](Element k) {
        q.up(j).for_each([&](Element l) { up[i * m + j].insert(k * m + l); });
      });
  return Poset::from_order(std::move(names), std::move(up));
}

ComplementedPoset direct_product(const ComplementedPoset& p, const ComplementedPoset& q) {
  Poset prod = direct_product(p.poset(), q.poset());
  const std::size_t m = q.size();
  std::vector<Element> comp(prod.size());
  for (Element i = 0; i < p.size(); ++i)
    for (Element j = 0; j < m; ++j) comp[i * m + j] = p.comp(i) * m + q.comp(j);
  return attach_complement(std::move(prod), std::move(comp));
}

Poset dual(const Poset& p) {
  std::vector<ElementSet> up;
  up.reserve(p.size());
  for (Element i = 0; i < p.size(); ++i) up.push_back(p.down(i));
  return Poset::from_order(p.names(), std::move(up));
}

Verdict is_lattice(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!p.minimum(p.up(x) & p.up(y)))
        return Verdict::fail({{{"x", x}, {"y", y}}, {}, "no least upper bound"});
      if (!p.maximum(p.down(x) & p.down(y)))
        return Verdict::fail({{{"x", x}, {"y", y}}, {}, "no greatest lower bound"});
    }
  return Verdict::pass();
}

UnaryProperties unary_properties(const ComplementedPoset& cp) {
  const Poset& p = cp.poset();
  UnaryProperties out;
  for (Element x = 0; x < p.size(); ++x)
    if (cp.comp(cp.comp(x)) != x) {
      out.involution = Verdict::fail(
          {{{"x", x}}, {}, p.name(x) + "'' = " + p.name(cp.comp(cp.comp(x))) + " != " + p.name(x)});
      break;
    }
  for (Element x = 0; x < p.size() && out.antitone.holds; ++x)
    p.up(x).for_each([&](Element y) {
      if (out.antitone.holds && !p.leq(cp.comp(y), cp.comp(x)))
        out.antitone = Verdict::fail({{{"x", x}, {"y", y}},
                                      {},
                                      p.name(x) + " <= " + p.name(y) + " but " + p.name(cp.comp(y)) +
                                          " !<= " + p.name(cp.comp(x))});
    });
  return out;
}

LatticeTables::LatticeTables(const Poset& p) : n_(p.size()), join_(n_ * n_), meet_(n_ * n_) {
  for (Element x = 0; x < n_; ++x)
    for (Element y = x; y < n_; ++y) {
      const auto j = p.minimum(p.up(x) & p.up(y));
      const auto m = p.maximum(p.down(x) & p.down(y));
      if (!j || !m) throw Error("not a lattice: '" + p.name(x) + "' and '" + p.name(y) + "' lack a " +
                                (j ? "meet" : "join"));
      join_[x * n_ + y] = join_[y * n_ + x] = *j;
      meet_[x * n_ + y] = meet_[y * n_ + x] = *m;
    }
}

}  // namespace lures
