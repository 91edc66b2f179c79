#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lures/poset_io.hpp"

namespace lures {

/// Built-in structures, stored in the poset text format:
///   fig1       10-element modular lattice with a non-antitone involutive complementation
///   fig2       12-element orthoposet that is not a lattice
///   p6         6-element bounded distributive poset without complementation
///   fig1xfig2  120-element product of the two above, complemented componentwise
///   fig1xp6    60-element product, no complementation
///   boolean8   8-element Boolean algebra
///   n5         pentagon with a (non-involutive) complementation
///   m3         diamond with a complementation
///   chain2     two-element Boolean algebra
///   chain1     one-element poset
const std::vector<std::string>& builtin_names();

/// Throws Error for unknown names.
PosetDocument builtin(std::string_view name);
/// Text form of a built-in (products are generated, then printed).
std::string builtin_text(std::string_view name);

ComplementedPoset builtin_complemented(std::string_view name);

}  // namespace lures
