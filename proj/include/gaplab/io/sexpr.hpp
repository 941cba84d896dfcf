#ifndef GAPLAB_IO_SEXPR_HPP_
#define GAPLAB_IO_SEXPR_HPP_

#include <string>
#include <vector>

#include "gaplab/bigint.hpp"

namespace gaplab::io {

// Small s-expression reader/printer: atoms, quoted strings, integers and
// lists, with ';' line comments.
struct SExpr {
  enum class Kind { kAtom, kString, kInt, kList };
  Kind kind = Kind::kList;
  std::string text;          // kAtom / kString
  BigInt number;             // kInt
  std::vector<SExpr> items;  // kList

  static SExpr atom(std::string s);
  static SExpr str(std::string s);
  static SExpr integer(BigInt v);
  static SExpr list(std::vector<SExpr> items);

  bool is_atom(const std::string& name) const {
    return kind == Kind::kAtom && text == name;
  }
  // List whose first element is the given atom.
  bool is_form(const std::string& head) const;
  // Items after the head; throws ParseError if not the expected form.
  const SExpr& arg(std::size_t i, const std::string& context) const;
  std::size_t arity() const { return items.empty() ? 0 : items.size() - 1; }

  const std::string& as_string(const std::string& context) const;
  const std::string& as_atom(const std::string& context) const;
  const BigInt& as_int(const std::string& context) const;
};

SExpr parse_sexpr(const std::string& text);
// Parses a file that may hold several top-level forms.
std::vector<SExpr> parse_sexprs(const std::string& text);
std::string print_sexpr(const SExpr& e, int indent = 0);

}  // namespace gaplab::io

#endif  // GAPLAB_IO_SEXPR_HPP_
