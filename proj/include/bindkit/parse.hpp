#pragma once

#include <stdexcept>
#include <string>

#include "bindkit/term.hpp"
#include "bindkit/var.hpp"

namespace bindkit {

// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int col);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Grammar:
//   term ::= lam | app
//   lam  ::= ("\" | "λ") ident "." term
//   app  ::= atom+                      (left-associative)
//   atom ::= ident | "(" term ")"
//   ident ::= [A-Za-z][A-Za-z0-9_']*
// Identifiers x<digits> denote that index directly; other identifiers are
// resolved through the session.
Term parse_term(const std::string& src, Interner& session);

// Convenience overload with a throwaway session.
Term parse_term(const std::string& src);

// Inverse of parsing up to alpha: reparsing the output in the same session
// yields an alpha-equal term. Without a session, binders and free variables
// print canonically as x<N>.
std::string print_term(const Term& t, const Interner* session = nullptr);

}  // namespace bindkit
