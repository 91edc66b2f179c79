#pragma once

// Registry formulas paired with the dedicated checkers they restate.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lures/formula.hpp"
#include "lures/poset_io.hpp"
#include "lures/props.hpp"
#include "lures/residuation.hpp"

namespace parity {

using namespace lures;

/// Either a verdict or "threw an Error".
struct Outcome {
  bool threw = false;
  Verdict verdict;
};

template <class F>
Outcome capture(F&& f) {
  try {
    return {false, f()};
  } catch (const Error&) {
    return {true, {}};
  }
}

/// Equal holds flags and, on failure, equal witness assignments.
inline bool same(const Outcome& a, const Outcome& b) {
  if (a.threw || b.threw) return a.threw == b.threw;
  if (a.verdict.holds != b.verdict.holds) return false;
  if (a.verdict.holds) return true;
  return a.verdict.witness->assignment == b.verdict.witness->assignment;
}

inline const ComplementedPoset& need(const PosetDocument& d) {
  if (!d.complemented) throw Error("no complementation");
  return *d.complemented;
}

using Checker = std::function<Verdict(const PosetDocument&)>;

inline const std::vector<std::pair<std::string, Checker>>& checkers() {
  static const std::vector<std::pair<std::string, Checker>> table{
      {"modular", [](const PosetDocument& d) { return is_modular_poset(d.poset); }},
      {"distributive-1", [](const PosetDocument& d) { return distributive_identity(d.poset, 1); }},
      {"distributive-2", [](const PosetDocument& d) { return distributive_identity(d.poset, 2); }},
      {"strongly-modular-1", [](const PosetDocument& d) { return strongly_modular_identity(d.poset, 1); }},
      {"strongly-modular-2", [](const PosetDocument& d) { return strongly_modular_identity(d.poset, 2); }},
      {"modular-lattice", [](const PosetDocument& d) { return is_modular_lattice(d.poset); }},
      {"orthomodular-law", [](const PosetDocument& d) { return orthomodular_law(need(d)); }},
      {"involution", [](const PosetDocument& d) { return unary_properties(need(d)).involution; }},
      {"divisible-lattice", [](const PosetDocument& d) { return check_divisibility(TermResiduation(need(d))); }},
      {"divisible-operator",
       [](const PosetDocument& d) { return check_operator_divisibility(OperatorResiduation(need(d))); }},
      {"adjointness-lattice-forward",
       [](const PosetDocument& d) { return check_adjointness(TermResiduation(need(d)), Direction::forward); }},
      {"adjointness-lattice-backward",
       [](const PosetDocument& d) { return check_adjointness(TermResiduation(need(d)), Direction::backward); }},
      {"adjointness-operator-forward",
       [](const PosetDocument& d) {
         return check_operator_adjointness(OperatorResiduation(need(d)), Direction::forward);
       }},
      {"adjointness-operator-backward",
       [](const PosetDocument& d) {
         return check_operator_adjointness(OperatorResiduation(need(d)), Direction::backward);
       }},
  };
  return table;
}

/// DSL verdict of the registry formula `name` on `doc`.
inline Outcome dsl(const std::string& name, const PosetDocument& doc) {
  const Formula& f = builtin_formula(name).formula;
  return capture([&] { return doc.complemented ? evaluate(f, *doc.complemented) : evaluate(f, doc.poset); });
}

}  // namespace parity
