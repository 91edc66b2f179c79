#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lures/poset.hpp"
#include "lures/verdict.hpp"

namespace lures {

/// Named structural properties shared by the CLI `check` command and the
/// witness search.
struct PropertyInfo {
  std::string name;
  bool needs_complement;
};

const std::vector<PropertyInfo>& property_catalog();

/// Evaluates a named property. `cp` must be non-null for properties that need
/// a complementation. Lattice-only properties report a failing verdict (not
/// an error) on non-lattices, with the is_lattice witness.
Verdict check_property(std::string_view name, const Poset& p, const ComplementedPoset* cp, unsigned jobs = 1);

}  // namespace lures
