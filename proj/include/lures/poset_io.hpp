#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lures/poset.hpp"

namespace lures {

/// A parsed poset file: the order and, when a `complement:` section is
/// present, the validated complementation.
struct PosetDocument {
  Poset poset;
  std::optional<ComplementedPoset> complemented;
};

/// Reads the line-oriented poset format:
///
///     elements: 0 a b c d 1
///     covers: 0<a 0<b a<c a<d b<c b<d c<1 d<1
///     complement: 0:1 a:a'
///     bottom: 0
///     top: 1
///
/// `#` starts a comment line. Sections may repeat; their entries append.
/// `complement` entries x:y imply y:x unless y has its own entry. `bottom`
/// and `top` are optional and must agree with the detected bounds.
/// Throws ParseError with the position of the offending token.
PosetDocument parse_poset(std::string_view text);
PosetDocument read_poset_file(const std::string& path);

std::string format_poset(const Poset& p);
std::string format_poset(const ComplementedPoset& cp);
std::string format_document(const PosetDocument& doc);

}  // namespace lures
