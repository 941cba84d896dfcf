#include "gaplab/io/sexpr.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "gaplab/errors.hpp"

namespace gaplab::io {

SExpr SExpr::atom(std::string s) {
  SExpr e;
  e.kind = Kind::kAtom;
  e.text = std::move(s);
  return e;
}

SExpr SExpr::str(std::string s) {
  SExpr e;
  e.kind = Kind::kString;
  e.text = std::move(s);
  return e;
}

SExpr SExpr::integer(BigInt v) {
  SExpr e;
  e.kind = Kind::kInt;
  e.number = std::move(v);
  return e;
}

SExpr SExpr::list(std::vector<SExpr> items) {
  SExpr e;
  e.kind = Kind::kList;
  e.items = std::move(items);
  return e;
}

bool SExpr::is_form(const std::string& head) const {
  return kind == Kind::kList && !items.empty() && items[0].is_atom(head);
}

const SExpr& SExpr::arg(std::size_t i, const std::string& context) const {
  if (kind != Kind::kList || i + 1 >= items.size())
    throw ParseError("missing argument " + std::to_string(i) + " in " + context);
  return items[i + 1];
}

const std::string& SExpr::as_string(const std::string& context) const {
  if (kind != Kind::kString)
    throw ParseError("expected a quoted string in " + context);
  return text;
}

const std::string& SExpr::as_atom(const std::string& context) const {
  if (kind != Kind::kAtom) throw ParseError("expected an atom in " + context);
  return text;
}

const BigInt& SExpr::as_int(const std::string& context) const {
  if (kind != Kind::kInt) throw ParseError("expected an integer in " + context);
  return number;
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_space() {
    while (!done()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        ++pos;
      } else if (peek() == ';') {
        while (!done() && peek() != '\n') ++pos;
      } else {
        return;
      }
    }
  }
};

bool atom_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' &&
         c != '"' && c != ';';
}

SExpr parse_one(Cursor& cur) {
  cur.skip_space();
  if (cur.done()) throw ParseError("unexpected end of input");
  const char c = cur.peek();
  if (c == '(') {
    ++cur.pos;
    std::vector<SExpr> items;
    while (true) {
      cur.skip_space();
      if (cur.done()) throw ParseError("unterminated list");
      if (cur.peek() == ')') {
        ++cur.pos;
        return SExpr::list(std::move(items));
      }
      items.push_back(parse_one(cur));
    }
  }
  if (c == ')') throw ParseError("unbalanced ')'");
  if (c == '"') {
    ++cur.pos;
    std::string out;
    while (true) {
      if (cur.done()) throw ParseError("unterminated string literal");
      char d = cur.text[cur.pos++];
      if (d == '"') return SExpr::str(std::move(out));
      if (d == '\\') {
        if (cur.done()) throw ParseError("dangling escape in string literal");
        d = cur.text[cur.pos++];
        if (d != '"' && d != '\\')
          throw ParseError(std::string("unknown escape \\") + d);
      }
      out.push_back(d);
    }
  }
  std::string token;
  while (!cur.done() && atom_char(cur.peek())) token.push_back(cur.text[cur.pos++]);
  if (token.empty()) throw ParseError("empty token");
  const bool numeric =
      (token[0] == '-' && token.size() > 1 &&
       token.find_first_not_of("0123456789", 1) == std::string::npos) ||
      token.find_first_not_of("0123456789") == std::string::npos;
  if (numeric && token != "-") return SExpr::integer(parse_bigint(token));
  return SExpr::atom(std::move(token));
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

SExpr parse_sexpr(const std::string& text) {
  Cursor cur{text};
  SExpr e = parse_one(cur);
  cur.skip_space();
  if (!cur.done()) throw ParseError("trailing content after expression");
  return e;
}

std::vector<SExpr> parse_sexprs(const std::string& text) {
  Cursor cur{text};
  std::vector<SExpr> out;
  while (true) {
    cur.skip_space();
    if (cur.done()) return out;
    out.push_back(parse_one(cur));
  }
}

std::string print_sexpr(const SExpr& e, int indent) {
  switch (e.kind) {
    case SExpr::Kind::kAtom:
      return e.text;
    case SExpr::Kind::kString:
      return "\"" + escape(e.text) + "\"";
    case SExpr::Kind::kInt:
      return e.number.str();
    case SExpr::Kind::kList:
      break;
  }
  std::ostringstream out;
  out << "(";
  // Short forms stay on one line; long ones break per item.
  std::vector<std::string> parts;
  std::size_t width = 0;
  for (const SExpr& item : e.items) {
    parts.push_back(print_sexpr(item, indent + 2));
    width += parts.back().size() + 1;
  }
  if (width <= 72) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out << " ";
      out << parts[i];
    }
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out << "\n" << std::string(static_cast<std::size_t>(indent) + 2, ' ');
      out << parts[i];
    }
  }
  out << ")";
  return out.str();
}

}  // namespace gaplab::io
