#include <algorithm>
#include <optional>

#include "lures/cones.hpp"
#include "lures/formula.hpp"
#include "lures/parallel.hpp"

namespace lures {

namespace {

struct Needs {
  bool complement = false;
  bool bounds = false;
  bool lattice = false;
};

void scan_needs(const Term& t, Needs& n) {
  switch (t.kind) {
    case Term::Kind::prime:
    case Term::Kind::m_op:
    case Term::Kind::r_op:
      n.complement = true;
      break;
    case Term::Kind::zero:
    case Term::Kind::one:
      n.bounds = true;
      break;
    case Term::Kind::join:
    case Term::Kind::meet:
      n.lattice = true;
      break;
    default:
      break;
  }
  for (const auto& c : t.children) scan_needs(*c, n);
}

/// Term tree flattened into index-linked nodes with variables resolved.
class Evaluator {
 public:
  Evaluator(const std::vector<std::string>& vars, const Poset& p, const ComplementedPoset* cp)
      : vars_(vars), p_(p), cp_(cp) {}

  void require(const Needs& n) {
    if (n.complement && !cp_) throw Error("formula uses a complement but the poset has no complementation");
    if (n.bounds && !p_.bounded()) throw Error("formula uses 0 or 1 but the poset is not bounded");
    if (n.lattice) {
      if (!is_lattice(p_)) throw Error("formula uses v or ^ but the poset is not a lattice");
      lattice_.emplace(p_);
    }
  }

  std::size_t compile(const Term& t) {
    Node node{t.kind, 0, {}};
    if (t.kind == Term::Kind::variable) {
      auto it = std::find(vars_.begin(), vars_.end(), t.name);
      if (it == vars_.end()) throw Error("unbound variable '" + t.name + "'");
      node.var = static_cast<std::size_t>(it - vars_.begin());
    }
    for (const auto& c : t.children) node.kids.push_back(compile(*c));
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  }

  ElementSet eval(std::size_t i, const std::vector<Element>& values) const {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case Term::Kind::variable:
        return p_.singleton(values[n.var]);
      case Term::Kind::zero:
        return p_.singleton(*p_.bottom());
      case Term::Kind::one:
        return p_.singleton(*p_.top());
      case Term::Kind::prime:
        return cp_->image(eval(n.kids[0], values));
      case Term::Kind::lower:
        return p_.lower(union_of(n, values));
      case Term::Kind::upper:
        return p_.upper(union_of(n, values));
      case Term::Kind::join:
      case Term::Kind::meet: {
        Element acc = element_of(n.kids[0], values);
        for (std::size_t k = 1; k < n.kids.size(); ++k) {
          const Element e = element_of(n.kids[k], values);
          acc = n.kind == Term::Kind::join ? lattice_->join(acc, e) : lattice_->meet(acc, e);
        }
        return p_.singleton(acc);
      }
      case Term::Kind::m_op: {
        // L(U(s,t'),t)
        const ElementSet s = eval(n.kids[0], values);
        const ElementSet t = eval(n.kids[1], values);
        return p_.lower(p_.upper(s | cp_->image(t)) | t);
      }
      case Term::Kind::r_op: {
        // LU(L(s,t),s')
        const ElementSet s = eval(n.kids[0], values);
        const ElementSet t = eval(n.kids[1], values);
        return p_.lower(p_.upper(p_.lower(s | t) | cp_->image(s)));
      }
    }
    return p_.empty_set();
  }

 private:
  struct Node {
    Term::Kind kind;
    std::size_t var;
    std::vector<std::size_t> kids;
  };

  ElementSet union_of(const Node& n, const std::vector<Element>& values) const {
    ElementSet all = p_.empty_set();
    for (std::size_t k : n.kids) all |= eval(k, values);
    return all;
  }

  Element element_of(std::size_t i, const std::vector<Element>& values) const {
    const ElementSet s = eval(i, values);
    if (s.count() != 1) throw Error("lattice operation applied to a term that is not a single element");
    return s.first();
  }

  const std::vector<std::string>& vars_;
  const Poset& p_;
  const ComplementedPoset* cp_;
  std::optional<LatticeTables> lattice_;
  std::vector<Node> nodes_;
};

Verdict evaluate_impl(const Formula& f, const Poset& p, const ComplementedPoset* cp, unsigned jobs) {
  Needs needs;
  scan_needs(*f.lhs, needs);
  scan_needs(*f.rhs, needs);
  for (const auto& c : f.conditions) {
    scan_needs(*c.lhs, needs);
    scan_needs(*c.rhs, needs);
  }
  Evaluator ev(f.vars, p, cp);
  ev.require(needs);

  std::vector<std::pair<std::size_t, std::size_t>> conditions;
  for (const auto& c : f.conditions) conditions.emplace_back(ev.compile(*c.lhs), ev.compile(*c.rhs));
  const std::size_t lhs = ev.compile(*f.lhs);
  const std::size_t rhs = ev.compile(*f.rhs);

  const std::size_t n = p.size();
  const std::size_t k = f.vars.size();

  auto scan = [&](Element first) -> std::optional<Witness> {
    std::vector<Element> values(k, 0);
    values[0] = first;
    for (;;) {
      bool applicable = true;
      for (const auto& [cl, cr] : conditions) {
        // A <= B: every element of A lies below every element of B.
        if (!ev.eval(cr, values).is_subset_of(p.upper(ev.eval(cl, values)))) {
          applicable = false;
          break;
        }
      }
      if (applicable) {
        const ElementSet a = ev.eval(lhs, values);
        const ElementSet b = ev.eval(rhs, values);
        const bool ok = f.relation == Relation::equal ? a == b : a.is_subset_of(b);
        if (!ok) {
          Witness w;
          for (std::size_t i = 0; i < k; ++i) w.assignment.emplace_back(f.vars[i], values[i]);
          w.note = "left side " + format_set(p, a) + ", right side " + format_set(p, b);
          return w;
        }
      }
      // Odometer over the remaining variables, last one fastest.
      std::size_t i = k;
      while (i > 1) {
        --i;
        if (++values[i] < n) break;
        values[i] = 0;
        if (i == 1) return std::nullopt;
      }
      if (k == 1) return std::nullopt;
    }
  };
  return Verdict::from(first_failure(n, jobs, scan));
}

}  // namespace

Verdict evaluate(const Formula& f, const Poset& p, unsigned jobs) { return evaluate_impl(f, p, nullptr, jobs); }

Verdict evaluate(const Formula& f, const ComplementedPoset& cp, unsigned jobs) {
  return evaluate_impl(f, cp.poset(), &cp, jobs);
}

ElementSet denote(const Term& t, const std::vector<std::string>& vars, const std::vector<Element>& values,
                  const Poset& p, const ComplementedPoset* cp) {
  Needs needs;
  scan_needs(t, needs);
  Evaluator ev(vars, p, cp);
  ev.require(needs);
  return ev.eval(ev.compile(t), values);
}

}  // namespace lures
