#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lures/poset.hpp"
#include "lures/verdict.hpp"

namespace lures {

/// Term of the LU-identity language. Every term denotes a subset of the
/// poset: a variable its singleton, a cone the cone of the union of its
/// arguments, a prime the elementwise complement image.
struct Term {
  enum class Kind {
    variable,
    zero,
    one,
    prime,
    lower,   ///< L(t1,...,tk)
    upper,   ///< U(t1,...,tk)
    join,    ///< t1 v ... v tk, lattices only, singleton operands
    meet,    ///< t1 ^ ... ^ tk, lattices only, singleton operands
    m_op,    ///< M(s,t) = L(U(s,t'),t)
    r_op,    ///< R(s,t) = LU(L(s,t),s')
  };

  Kind kind;
  std::string name;  ///< variable name; empty otherwise
  std::vector<std::shared_ptr<const Term>> children;

  friend bool operator==(const Term& a, const Term& b);
};

using TermPtr = std::shared_ptr<const Term>;

/// Side condition `lhs <= rhs`, read as "every element of lhs is below every
/// element of rhs". At least one side is a bare variable.
struct Condition {
  TermPtr lhs;
  TermPtr rhs;
};

enum class Relation { equal, subseteq };

/// forall vars [where conditions] : lhs (= | <=) rhs
struct Formula {
  std::vector<std::string> vars;
  std::vector<Condition> conditions;
  TermPtr lhs;
  Relation relation = Relation::equal;
  TermPtr rhs;

  friend bool operator==(const Formula& a, const Formula& b);
};

/// Grammar:
///
///     formula   := 'forall' ident+ ['where' cond (',' cond)*] ':' term rel term
///     rel       := '=' | '≈' | '<=' | '≤' | '⊆'
///     cond      := term ('<=' | '≤') term
///     term      := meetterm ('v' meetterm)*
///     meetterm  := postfix ('^' postfix)*
///     postfix   := primary ("'" | '′')*
///     primary   := ident | '0' | '1' | '(' term ')'
///                | CONE '(' term (',' term)* ')'      CONE is any word over {L,U}
///                | ('M' | 'R') '(' term ',' term ')'
///
/// Throws ParseError (1-based line/column) on syntax errors, unbound
/// variables and arity violations.
Formula parse_formula(std::string_view src);

/// Canonical text; parse_formula(to_string(f)) == f. Nested cones print
/// expanded (LU(x) prints as L(U(x))).
std::string to_string(const Formula& f);
std::string to_string(const Term& t);

/// Holds iff the relation holds under every assignment (variables range over
/// elements, first variable most significant) that satisfies all
/// conditions. The witness is the first violating assignment.
/// Throws Error when the formula needs a complementation, bounds or a
/// lattice that the structure does not have.
Verdict evaluate(const Formula& f, const Poset& p, unsigned jobs = 1);
Verdict evaluate(const Formula& f, const ComplementedPoset& cp, unsigned jobs = 1);

/// Denotation of a term under one assignment (values indexed like `vars`).
/// `cp` may be null when the term has no prime or M/R node.
ElementSet denote(const Term& t, const std::vector<std::string>& vars, const std::vector<Element>& values,
                  const Poset& p, const ComplementedPoset* cp = nullptr);

struct BuiltinFormula {
  std::string name;
  std::string source;
  Formula formula;
};

/// modular, distributive-1, distributive-2, strongly-modular-1,
/// strongly-modular-2, orthomodular-law, divisible-operator,
/// adjointness-lattice-forward, adjointness-lattice-backward,
/// adjointness-operator-forward, adjointness-operator-backward, and a few
/// more (involution, complementation, boolean-m, boolean-r).
const std::vector<BuiltinFormula>& builtin_registry();
/// Throws Error for unknown names.
const BuiltinFormula& builtin_formula(std::string_view name);

}  // namespace lures
