#include "bindkit/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace bindkit {

ParseError::ParseError(const std::string& what, int line, int col)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(col) + ": " + what),
      line_(line),
      col_(col) {}

namespace {

struct Token {
  enum class Kind { Lambda, Dot, LParen, RParen, Ident, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::Kind::End, "", line, col};
    char c = src_[pos_];
    if (c == '\\') {
      advance();
      return {Token::Kind::Lambda, "\\", line, col};
    }
    // UTF-8 lambda: 0xCE 0xBB
    if (static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < src_.size() &&
        static_cast<unsigned char>(src_[pos_ + 1]) == 0xBB) {
      advance();
      advance();
      return {Token::Kind::Lambda, "λ", line, col};
    }
    if (c == '.') {
      advance();
      return {Token::Kind::Dot, ".", line, col};
    }
    if (c == '(') {
      advance();
      return {Token::Kind::LParen, "(", line, col};
    }
    if (c == ')') {
      advance();
      return {Token::Kind::RParen, ")", line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < src_.size()) {
        char d = src_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' ||
            d == '\'') {
          text += d;
          advance();
        } else {
          break;
        }
      }
      return {Token::Kind::Ident, text, line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     col);
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }
};

class Parser {
 public:
  Parser(const std::string& src, Interner& session)
      : lex_(src), session_(session) {
    bump();
  }

  Term parse() {
    Term t = term();
    expect(Token::Kind::End, "end of input");
    return t;
  }

 private:
  Lexer lex_;
  Interner& session_;
  Token tok_;

  void bump() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k)
      throw ParseError(std::string("expected ") + what, tok_.line, tok_.col);
  }

  Term term() {
    if (tok_.kind == Token::Kind::Lambda) {
      bump();
      expect(Token::Kind::Ident, "identifier after lambda");
      VarId b = session_.intern(tok_.text);
      bump();
      expect(Token::Kind::Dot, "'.' after binder");
      bump();
      return Term::lam(b, term());
    }
    return app();
  }

  Term app() {
    std::optional<Term> acc;
    while (true) {
      std::optional<Term> a = atom();
      if (!a) break;
      acc = acc ? Term::app(*acc, *a) : *a;
    }
    if (!acc)
      throw ParseError("expected a term", tok_.line, tok_.col);
    return *acc;
  }

  std::optional<Term> atom() {
    if (tok_.kind == Token::Kind::Ident) {
      VarId v = session_.intern(tok_.text);
      bump();
      return Term::var(v);
    }
    if (tok_.kind == Token::Kind::LParen) {
      bump();
      Term t = term();
      expect(Token::Kind::RParen, "')'");
      bump();
      return t;
    }
    return std::nullopt;
  }
};

void print_rec(const PreTerm& t, const Interner* names, bool fun_pos,
               bool arg_pos, std::string& out) {
  auto name = [&](VarId v) {
    return names ? names->name(v) : var_name(v);
  };
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      out += name(t.var());
      return;
    case PreTerm::Kind::Lam: {
      bool paren = fun_pos || arg_pos;
      if (paren) out += '(';
      out += '\\';
      out += name(t.var());
      out += ". ";
      print_rec(t.body(), names, false, false, out);
      if (paren) out += ')';
      return;
    }
    case PreTerm::Kind::App: {
      bool paren = arg_pos;
      if (paren) out += '(';
      print_rec(t.fun(), names, true, false, out);
      out += ' ';
      print_rec(t.arg(), names, false, true, out);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

Term parse_term(const std::string& src, Interner& session) {
  Parser p(src, session);
  return p.parse();
}

Term parse_term(const std::string& src) {
  Interner session;
  return parse_term(src, session);
}

std::string print_term(const Term& t, const Interner* session) {
  std::string out;
  print_rec(t.repr(), session, false, false, out);
  return out;
}

}  // namespace bindkit
