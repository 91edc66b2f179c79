#include "lures/builtins.hpp"

#include <map>

namespace lures {

namespace {

const std::map<std::string, std::string, std::less<>>& sources() {
  static const std::map<std::string, std::string, std::less<>> table{
      {"fig1",
       "elements: 0 a b c d c' d' b' a' 1\n"
       "covers: 0<a 0<b 0<c 0<d a<c' a<d' a<b' b<c' b<a' c<a' c<d' d<b' d<a'\n"
       "covers: c'<1 d'<1 b'<1 a'<1\n"
       "complement: 0:1 a:a' b:b' c:c' d:d'\n"},
      {"fig2",
       "elements: 0 a b c d e e' d' c' b' a' 1\n"
       "covers: 0<a 0<b 0<c 0<d a<e b<e a<b' b<a' c<e' d<e' c<d' d<c'\n"
       "covers: e<d' e<c' e'<b' e'<a' d'<1 c'<1 b'<1 a'<1\n"
       "complement: 0:1 a:a' b:b' c:c' d:d' e:e'\n"},
      {"p6",
       "elements: 0 a b c d 1\n"
       "covers: 0<a 0<b a<c a<d b<c b<d c<1 d<1\n"},
      {"boolean8",
       "elements: 0 a b c a' b' c' 1\n"
       "covers: 0<a 0<b 0<c a<b' a<c' b<a' b<c' c<a' c<b' a'<1 b'<1 c'<1\n"
       "complement: 0:1 a:a' b:b' c:c'\n"},
      {"n5",
       "elements: 0 a b c 1\n"
       "covers: 0<a a<c c<1 0<b b<1\n"
       "complement: 0:1 1:0 a:b b:a c:b\n"},
      {"m3",
       "elements: 0 a b c 1\n"
       "covers: 0<a 0<b 0<c a<1 b<1 c<1\n"
       "complement: 0:1 1:0 a:b b:a c:a\n"},
      {"chain2",
       "elements: 0 1\n"
       "covers: 0<1\n"
       "complement: 0:1\n"},
      {"chain1", "elements: 0\ncovers:\ncomplement: 0:0\n"},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"fig1", "fig2",     "p6", "fig1xfig2", "fig1xp6",
                                              "boolean8", "n5", "m3", "chain2",    "chain1"};
  return names;
}

PosetDocument builtin(std::string_view name) {
  if (name == "fig1xfig2")
    return {direct_product(builtin("fig1").poset, builtin("fig2").poset),
            direct_product(builtin_complemented("fig1"), builtin_complemented("fig2"))};
  if (name == "fig1xp6") return {direct_product(builtin("fig1").poset, builtin("p6").poset), std::nullopt};
  const auto& table = sources();
  auto it = table.find(name);
  if (it == table.end()) throw Error("unknown builtin '" + std::string(name) + "'");
  return parse_poset(it->second);
}

std::string builtin_text(std::string_view name) { return format_document(builtin(name)); }

ComplementedPoset builtin_complemented(std::string_view name) {
  PosetDocument doc = builtin(name);
  if (!doc.complemented) throw Error("builtin '" + std::string(name) + "' has no complementation");
  return std::move(*doc.complemented);
}

}  // namespace lures
