#include "lures/poset_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace lures {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

[[noreturn]] void fail_at(const Token& t, const std::string& message) {
  throw ParseError(message, t.line, t.column);
}

std::vector<Token> split_tokens(std::string_view line, std::size_t line_no, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = offset;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
  }
  return out;
}

}  // namespace

PosetDocument parse_poset(std::string_view text) {
  std::vector<Token> elements;
  std::vector<Token> covers;
  std::vector<Token> complement;
  std::optional<Token> bottom;
  std::optional<Token> top;
  std::optional<Token> complement_section;
  Token elements_section{"", 1, 1};
  Token covers_section{"", 1, 1};

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = end + 1;

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    const std::size_t colon = line.find(':', first);
    if (colon == std::string_view::npos)
      throw ParseError("expected '<section>:'", line_no, first + 1);
    std::string_view key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
    const Token key_token{std::string(key), line_no, first + 1};
    auto tokens = split_tokens(line, line_no, colon + 1);

    if (key == "elements") {
      elements_section = key_token;
      elements.insert(elements.end(), tokens.begin(), tokens.end());
    } else if (key == "covers") {
      covers_section = key_token;
      covers.insert(covers.end(), tokens.begin(), tokens.end());
    } else if (key == "complement") {
      complement_section = key_token;
      complement.insert(complement.end(), tokens.begin(), tokens.end());
    } else if (key == "bottom" || key == "top") {
      if (tokens.size() != 1) fail_at(key_token, "'" + key_token.text + "' takes exactly one label");
      (key == "bottom" ? bottom : top) = tokens.front();
    } else {
      fail_at(key_token, "unknown section '" + key_token.text + "'");
    }
  }

  if (elements.empty()) throw ParseError("missing 'elements:' section", 1, 1);
  std::unordered_map<std::string, Element> index;
  std::vector<std::string> names;
  for (const auto& t : elements) {
    if (t.text.find_first_of("<:") != std::string::npos) fail_at(t, "labels may not contain '<' or ':'");
    if (!index.emplace(t.text, names.size()).second) fail_at(t, "duplicate label '" + t.text + "'");
    names.push_back(t.text);
  }
  auto lookup = [&](const Token& where, const std::string& label) {
    if (!index.count(label)) fail_at(where, "unknown label '" + label + "'");
    return label;
  };

  std::vector<LabelPair> cover_pairs;
  for (const auto& t : covers) {
    const std::size_t lt = t.text.find('<');
    if (lt == std::string::npos || lt == 0 || lt + 1 == t.text.size() ||
        t.text.find('<', lt + 1) != std::string::npos)
      fail_at(t, "cover pair must look like 'lower<upper'");
    cover_pairs.emplace_back(lookup(t, t.text.substr(0, lt)), lookup(t, t.text.substr(lt + 1)));
  }

  std::optional<Poset> poset;
  try {
    poset = Poset::from_covers(names, cover_pairs);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail_at(covers.empty() ? elements_section : covers_section, e.what());
  }

  auto check_bound = [&](const std::optional<Token>& declared, std::optional<Element> detected,
                         const char* what) {
    if (!declared) return;
    const Element e = index.at(lookup(*declared, declared->text));
    if (!detected)
      fail_at(*declared, std::string("declared ") + what + " '" + declared->text + "' but the poset has none");
    if (*detected != e)
      fail_at(*declared, std::string("declared ") + what + " '" + declared->text + "' but detected '" +
                             names[*detected] + "'");
  };
  check_bound(bottom, poset->bottom(), "bottom");
  check_bound(top, poset->top(), "top");

  PosetDocument doc{*poset, std::nullopt};
  if (!complement_section) return doc;

  std::vector<std::optional<Element>> explicit_map(names.size());
  for (const auto& t : complement) {
    const std::size_t c = t.text.find(':');
    if (c == std::string::npos || c == 0 || c + 1 == t.text.size())
      fail_at(t, "complement entry must look like 'x:y'");
    const Element x = index.at(lookup(t, t.text.substr(0, c)));
    const Element y = index.at(lookup(t, t.text.substr(c + 1)));
    if (explicit_map[x] && *explicit_map[x] != y) fail_at(t, "conflicting complement for '" + names[x] + "'");
    explicit_map[x] = y;
  }
  std::vector<std::optional<Element>> map = explicit_map;
  for (Element x = 0; x < names.size(); ++x) {
    if (!explicit_map[x] || explicit_map[*explicit_map[x]]) continue;
    const Element y = *explicit_map[x];
    if (map[y] && *map[y] != x)
      fail_at(*complement_section, "complement of '" + names[y] + "' is ambiguous; list it explicitly");
    map[y] = x;
  }

  std::vector<Element> comp(names.size());
  for (Element x = 0; x < names.size(); ++x) {
    if (!map[x]) fail_at(*complement_section, "no complement given for '" + names[x] + "'");
    comp[x] = *map[x];
  }
  if (!poset->bounded()) fail_at(*complement_section, "complementation requires a bounded poset");
  if (auto w = complementation_violation(*poset, comp))
    fail_at(*complement_section, "not a complementation: " + w->note);
  doc.complemented = attach_complement(*poset, std::move(comp));
  return doc;
}

PosetDocument read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

namespace {

std::string order_lines(const Poset& p) {
  std::string out = "elements:";
  for (const auto& n : p.names()) out += " " + n;
  out += "\ncovers:";
  for (const auto& [lo, hi] : p.covers()) out += " " + p.name(lo) + "<" + p.name(hi);
  return out + "\n";
}

}  // namespace

std::string format_poset(const Poset& p) { return order_lines(p); }

std::string format_poset(const ComplementedPoset& cp) {
  const Poset& p = cp.poset();
  bool involution = true;
  for (Element x = 0; x < p.size(); ++x) involution = involution && cp.comp(cp.comp(x)) == x;
  std::string out = order_lines(p) + "complement:";
  for (Element x = 0; x < p.size(); ++x)
    if (!involution || x <= cp.comp(x)) out += " " + p.name(x) + ":" + p.name(cp.comp(x));
  return out + "\n";
}

std::string format_document(const PosetDocument& doc) {
  return doc.complemented ? format_poset(*doc.complemented) : format_poset(doc.poset);
}

}  // namespace lures
