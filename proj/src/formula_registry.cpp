#include "lures/formula.hpp"

namespace lures {

namespace {

std::vector<BuiltinFormula> build_registry() {
  const std::vector<std::pair<std::string, std::string>> sources{
      {"modular", "forall x y z where x <= z : L(U(x,y),z) = LU(x,L(y,z))"},
      {"distributive-1", "forall x y z : L(U(x,y),z) = LU(L(x,z),L(y,z))"},
      {"distributive-2", "forall x y z : LU(L(x,y),z) = L(U(x,z),U(y,z))"},
      {"strongly-modular-1", "forall x y z : L(U(x,y),U(x,z)) = LU(x,L(y,U(x,z)))"},
      {"strongly-modular-2", "forall x y z : L(U(L(x,z),y),z) = LU(L(x,z),L(y,z))"},
      {"modular-lattice", "forall x y z : (x v y) ^ (x v z) = x v (y ^ (x v z))"},
      {"orthomodular-law", "forall x y : x v ((x v y) ^ x') = x v y"},
      {"involution", "forall x : x'' = x"},
      {"complementation-lower", "forall x : L(x,x') = L(0)"},
      {"complementation-upper", "forall x : U(x,x') = U(1)"},
      {"divisible-operator", "forall x y : M(R(x,y),x) = L(x,y)"},
      {"divisible-lattice", "forall x y : (((x ^ y) v x') v x') ^ x = x ^ y"},
      {"adjointness-lattice-forward", "forall x y z where (x v y') ^ y <= z : L(x) <= L((y ^ z) v y')"},
      {"adjointness-lattice-backward", "forall x y z where x <= (y ^ z) v y' : L((x v y') ^ y) <= L(z)"},
      {"adjointness-operator-forward", "forall x y z where M(x,y) <= z : L(x) <= R(y,z)"},
      // L(x) <= R(y,z) iff x lies below every element of U(L(y,z),y').
      {"adjointness-operator-backward", "forall x y z where x <= U(L(y,z),y') : M(x,y) <= L(z)"},
      {"operator-unit-right", "forall x : M(x,1) = L(x)"},
      {"operator-unit-left", "forall x : M(1,x) = L(x)"},
      {"operator-residuum-bottom", "forall x : R(x,0) = L(x')"},
      {"boolean-m", "forall x y : M(x,y) = L(x,y)"},
      {"boolean-r", "forall x y : R(x,y) = LU(x',y)"},
  };
  std::vector<BuiltinFormula> out;
  out.reserve(sources.size());
  for (const auto& [name, src] : sources) out.push_back({name, src, parse_formula(src)});
  return out;
}

}  // namespace

const std::vector<BuiltinFormula>& builtin_registry() {
  static const std::vector<BuiltinFormula> registry = build_registry();
  return registry;
}

const BuiltinFormula& builtin_formula(std::string_view name) {
  for (const auto& b : builtin_registry())
    if (b.name == name) return b;
  throw Error("unknown builtin formula '" + std::string(name) + "'");
}

}  // namespace lures
