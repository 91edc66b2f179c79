#include "lures/properties.hpp"

#include "lures/completion.hpp"
#include "lures/props.hpp"
#include "lures/residuation.hpp"

namespace lures {

const std::vector<PropertyInfo>& property_catalog() {
  static const std::vector<PropertyInfo> catalog{
      {"bounded", false},
      {"lattice", false},
      {"modular", false},
      {"distributive", false},
      {"strongly-modular", false},
      {"strictly-modular", false},
      {"modular-lattice", false},
      {"d-modular", false},
      {"d0-modular", false},
      {"involution", true},
      {"antitone", true},
      {"orthoposet", true},
      {"boolean", true},
      {"ortholattice", true},
      {"orthomodular-lattice", true},
      {"left-residuated", true},
      {"operator-residuated", true},
      {"residuum-order", true},
      {"lattice-operator-agreement", true},
  };
  return catalog;
}

Verdict check_property(std::string_view name, const Poset& p, const ComplementedPoset* cp, unsigned jobs) {
  const PropertyInfo* info = nullptr;
  for (const auto& i : property_catalog())
    if (i.name == name) info = &i;
  if (!info) throw Error("unknown property '" + std::string(name) + "'");
  if (info->needs_complement && !cp) throw Error("property '" + info->name + "' needs a complementation");

  if (name == "bounded") {
    if (p.bounded()) return Verdict::pass();
    return Verdict::fail({{}, {}, p.bottom() ? "no top element" : "no bottom element"});
  }
  if (name == "lattice") return is_lattice(p);
  if (name == "modular") return is_modular_poset(p, jobs);
  if (name == "distributive") return is_distributive_poset(p, jobs);
  if (name == "strongly-modular") return is_strongly_modular(p, jobs);
  if (name == "strictly-modular") return is_strictly_modular(p, jobs);
  if (name == "d-modular") return is_modular_lattice(dm_completion(p).as_poset(), jobs);
  if (name == "d0-modular") return is_modular_lattice(d0_sublattice(dm_completion(p)).as_poset(), jobs);
  if (name == "involution") return unary_properties(*cp).involution;
  if (name == "antitone") return unary_properties(*cp).antitone;
  if (name == "orthoposet") return is_orthoposet(*cp);
  if (name == "boolean") return is_boolean_poset(*cp, jobs);
  if (name == "operator-residuated") return verify_operator_left_residuated(*cp, jobs);
  if (name == "residuum-order") return residuum_order_test(*cp);

  // Lattice-only from here on.
  if (Verdict v = is_lattice(p); !v) return v;
  if (name == "modular-lattice") return is_modular_lattice(p, jobs);
  if (name == "ortholattice") return is_ortholattice(*cp);
  if (name == "orthomodular-lattice") return is_orthomodular_lattice(*cp);
  if (name == "left-residuated") return verify_left_residuated_lattice(*cp, jobs);
  return lattice_operator_agreement(*cp);
}

}  // namespace lures
