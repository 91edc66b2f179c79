#include <algorithm>
#include <cctype>

#include "lures/formula.hpp"

namespace lures {

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!(*a.children[i] == *b.children[i])) return false;
  return true;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.vars != b.vars || a.relation != b.relation || a.conditions.size() != b.conditions.size())
    return false;
  for (std::size_t i = 0; i < a.conditions.size(); ++i)
    if (!(*a.conditions[i].lhs == *b.conditions[i].lhs) || !(*a.conditions[i].rhs == *b.conditions[i].rhs))
      return false;
  return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
}

namespace {

enum class Tok { ident, zero, one, lparen, rparen, comma, colon, prime, caret, le, eq, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const std::size_t line = line_;
      const std::size_t col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, "", line, col});
        return out;
      }
      const char c = src_[pos_];
      auto single = [&](Tok k) {
        advance(1);
        out.push_back({k, std::string(1, c), line, col});
      };
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t end = pos_;
        while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
        std::string word(src_.substr(pos_, end - pos_));
        advance(end - pos_);
        out.push_back({Tok::ident, std::move(word), line, col});
      } else if (c == '0' || c == '1') {
        if (pos_ + 1 < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])))
          throw ParseError("only the constants 0 and 1 are numeric", line, col);
        single(c == '0' ? Tok::zero : Tok::one);
      } else if (c == '(') {
        single(Tok::lparen);
      } else if (c == ')') {
        single(Tok::rparen);
      } else if (c == ',') {
        single(Tok::comma);
      } else if (c == ':') {
        single(Tok::colon);
      } else if (c == '\'') {
        single(Tok::prime);
      } else if (c == '^') {
        single(Tok::caret);
      } else if (c == '=') {
        single(Tok::eq);
      } else if (c == '<' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
        advance(2);
        out.push_back({Tok::le, "<=", line, col});
      } else if (match_utf8("\xE2\x89\x88")) {  // ≈
        out.push_back({Tok::eq, "=", line, col});
      } else if (match_utf8("\xE2\x89\xA4") || match_utf8("\xE2\x8A\x86")) {  // ≤ ⊆
        out.push_back({Tok::le, "<=", line, col});
      } else if (match_utf8("\xE2\x80\xB2")) {  // ′
        out.push_back({Tok::prime, "'", line, col});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
    }
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance(1);
  }

  void advance(std::size_t k) {
    for (std::size_t i = 0; i < k; ++i, ++pos_) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
        ++col_;
      }
    }
  }

  bool match_utf8(std::string_view seq) {
    if (src_.substr(pos_, seq.size()) != seq) return false;
    pos_ += seq.size();
    ++col_;
    return true;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool is_cone_word(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c == 'L' || c == 'U'; });
}

bool is_reserved(std::string_view w) {
  return w == "v" || w == "forall" || w == "where" || w == "M" || w == "R" || is_cone_word(w);
}

TermPtr make(Term::Kind kind, std::vector<TermPtr> children = {}, std::string name = {}) {
  return std::make_shared<const Term>(Term{kind, std::move(name), std::move(children)});
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula formula() {
    Formula f;
    expect_word("forall");
    while (peek().kind == Tok::ident && peek().text != "where") {
      const Token& t = next();
      if (is_reserved(t.text)) fail(t, "'" + t.text + "' cannot be used as a variable name");
      if (std::find(f.vars.begin(), f.vars.end(), t.text) != f.vars.end())
        fail(t, "variable '" + t.text + "' quantified twice");
      f.vars.push_back(t.text);
    }
    if (f.vars.empty()) fail(peek(), "expected at least one variable after 'forall'");
    vars_ = &f.vars;

    if (peek().kind == Tok::ident && peek().text == "where") {
      next();
      do {
        const Token& start = peek();
        Condition c;
        c.lhs = term();
        expect(Tok::le, "'<=' in condition");
        c.rhs = term();
        if (c.lhs->kind != Term::Kind::variable && c.rhs->kind != Term::Kind::variable)
          fail(start, "a condition needs a bare variable on one side");
        f.conditions.push_back(std::move(c));
      } while (accept(Tok::comma));
    }
    expect(Tok::colon, "':'");
    f.lhs = term();
    if (accept(Tok::eq)) {
      f.relation = Relation::equal;
    } else if (accept(Tok::le)) {
      f.relation = Relation::subseteq;
    } else {
      fail(peek(), "expected '=' or '<='");
    }
    f.rhs = term();
    if (peek().kind != Tok::end) fail(peek(), "unexpected trailing input");
    return f;
  }

 private:
  TermPtr term() {
    std::vector<TermPtr> parts{meet_term()};
    while (peek().kind == Tok::ident && peek().text == "v") {
      next();
      parts.push_back(meet_term());
    }
    return parts.size() == 1 ? parts.front() : make(Term::Kind::join, std::move(parts));
  }

  TermPtr meet_term() {
    std::vector<TermPtr> parts{postfix()};
    while (accept(Tok::caret)) parts.push_back(postfix());
    return parts.size() == 1 ? parts.front() : make(Term::Kind::meet, std::move(parts));
  }

  TermPtr postfix() {
    TermPtr t = primary();
    while (accept(Tok::prime)) t = make(Term::Kind::prime, {t});
    return t;
  }

  TermPtr primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::zero:
        return make(Term::Kind::zero);
      case Tok::one:
        return make(Term::Kind::one);
      case Tok::lparen: {
        TermPtr inner = term();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::ident:
        break;
      default:
        fail(t, "expected a term");
    }

    if (peek().kind != Tok::lparen) {
      if (is_reserved(t.text)) fail(t, "'" + t.text + "' is not a variable");
      if (std::find(vars_->begin(), vars_->end(), t.text) == vars_->end())
        fail(t, "unbound variable '" + t.text + "'");
      return make(Term::Kind::variable, {}, t.text);
    }

    next();  // '('
    std::vector<TermPtr> args{term()};
    while (accept(Tok::comma)) args.push_back(term());
    expect(Tok::rparen, "')'");

    if (t.text == "M" || t.text == "R") {
      if (args.size() != 2) fail(t, t.text + " takes exactly two arguments");
      return make(t.text == "M" ? Term::Kind::m_op : Term::Kind::r_op, std::move(args));
    }
    if (!is_cone_word(t.text)) fail(t, "unknown operator '" + t.text + "'");
    // LU(args) = L(U(args)): build from the innermost letter outwards.
    TermPtr out;
    for (auto it = t.text.rbegin(); it != t.text.rend(); ++it) {
      const auto kind = *it == 'L' ? Term::Kind::lower : Term::Kind::upper;
      out = out ? make(kind, {out}) : make(kind, args);
    }
    return out;
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k)) fail(peek(), "expected " + what);
  }
  void expect_word(const std::string& w) {
    if (peek().kind != Tok::ident || peek().text != w) fail(peek(), "expected '" + w + "'");
    next();
  }
  [[noreturn]] static void fail(const Token& t, const std::string& message) {
    throw ParseError(message, t.line, t.column);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* vars_ = nullptr;
};

bool is_lattice_op(const Term& t) { return t.kind == Term::Kind::join || t.kind == Term::Kind::meet; }

}  // namespace

Formula parse_formula(std::string_view src) { return Parser(Lexer(src).run()).formula(); }

std::string to_string(const Term& t) {
  auto args = [&](const char* head) {
    std::string out = head;
    out += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (i) out += ',';
      out += to_string(*t.children[i]);
    }
    return out + ')';
  };
  auto infix = [&](const char* op) {
    std::string out;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (i) out += op;
      const Term& c = *t.children[i];
      out += is_lattice_op(c) ? "(" + to_string(c) + ")" : to_string(c);
    }
    return out;
  };
  switch (t.kind) {
    case Term::Kind::variable:
      return t.name;
    case Term::Kind::zero:
      return "0";
    case Term::Kind::one:
      return "1";
    case Term::Kind::prime: {
      const Term& c = *t.children.front();
      return (is_lattice_op(c) ? "(" + to_string(c) + ")" : to_string(c)) + "'";
    }
    case Term::Kind::lower:
      return args("L");
    case Term::Kind::upper:
      return args("U");
    case Term::Kind::join:
      return infix(" v ");
    case Term::Kind::meet:
      return infix(" ^ ");
    case Term::Kind::m_op:
      return args("M");
    case Term::Kind::r_op:
      return args("R");
  }
  return {};
}

std::string to_string(const Formula& f) {
  std::string out = "forall";
  for (const auto& v : f.vars) out += " " + v;
  for (std::size_t i = 0; i < f.conditions.size(); ++i) {
    out += i == 0 ? " where " : ", ";
    out += to_string(*f.conditions[i].lhs) + " <= " + to_string(*f.conditions[i].rhs);
  }
  out += " : " + to_string(*f.lhs) + (f.relation == Relation::equal ? " = " : " <= ") + to_string(*f.rhs);
  return out;
}

}  // namespace lures
