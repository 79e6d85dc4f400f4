#include "parser.hpp"

#include <cctype>

namespace kcw::logic {

namespace {

enum class Tok {
  Ident, Top, Bot, Amp, Bar, Bang, Tilde, Hash, Dollar, Vee, Hat,
  Diamond, Bdiamond, LParen, RParen, Turnstile, End,
};

struct Lexer {
  const std::string& text;
  size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  size_t tok_pos = 0;

  explicit Lexer(const std::string& t) : text(t) { advance(); }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::parse_error, msg + " at position " + std::to_string(tok_pos + 1));
  }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    if (c >= 'a' && c <= 'z') {
      size_t start = pos;
      while (pos < text.size() &&
             ((text[pos] >= 'a' && text[pos] <= 'z') || (text[pos] >= '0' && text[pos] <= '9') ||
              text[pos] == '_'))
        ++pos;
      ident = text.substr(start, pos - start);
      tok = ident == "top" ? Tok::Top : ident == "bot" ? Tok::Bot : ident == "v" ? Tok::Vee : Tok::Ident;
      return;
    }
    ++pos;
    switch (c) {
      case '&': tok = Tok::Amp; return;
      case '!': tok = Tok::Bang; return;
      case '~': tok = Tok::Tilde; return;
      case '#': tok = Tok::Hash; return;
      case '$': tok = Tok::Dollar; return;
      case '^': tok = Tok::Hat; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      case '|':
        if (pos < text.size() && text[pos] == '-') {
          ++pos;
          tok = Tok::Turnstile;
        } else {
          tok = Tok::Bar;
        }
        return;
      case '<':
        if (pos < text.size() && (text[pos] == '#' || text[pos] == '$') && pos + 1 < text.size() &&
            text[pos + 1] == '>') {
          tok = text[pos] == '#' ? Tok::Diamond : Tok::Bdiamond;
          pos += 2;
          return;
        }
        error("expected <#> or <$>");
      default: error(std::string("unexpected character '") + c + "'");
    }
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(const std::string& text) : lex(text) {}

  Formula atom() {
    switch (lex.tok) {
      case Tok::Top: lex.advance(); return Formula::top();
      case Tok::Bot: lex.advance(); return Formula::bot();
      case Tok::Ident: {
        Formula f = Formula::var(lex.ident);
        lex.advance();
        return f;
      }
      case Tok::LParen: {
        lex.advance();
        Formula f = wedge_level();
        if (lex.tok != Tok::RParen) lex.error("expected ')'");
        lex.advance();
        return f;
      }
      default: lex.error("expected a formula");
    }
  }

  Formula unary() {
    switch (lex.tok) {
      case Tok::Bang: lex.advance(); return Formula::neg(unary());
      case Tok::Tilde: lex.advance(); return Formula::lneg(unary());
      case Tok::Hash: lex.advance(); return Formula::box(unary());
      case Tok::Dollar: lex.advance(); return Formula::bbox(unary());
      case Tok::Diamond: lex.advance(); return Formula::diamond(unary());
      case Tok::Bdiamond: lex.advance(); return Formula::bdiamond(unary());
      default: return atom();
    }
  }

  Formula meet_level() {
    Formula f = unary();
    while (lex.tok == Tok::Amp) {
      lex.advance();
      f = Formula::meet(std::move(f), unary());
    }
    return f;
  }

  Formula join_level() {
    Formula f = meet_level();
    while (lex.tok == Tok::Bar) {
      lex.advance();
      f = Formula::join(std::move(f), meet_level());
    }
    return f;
  }

  Formula vee_level() {
    Formula f = join_level();
    while (lex.tok == Tok::Vee) {
      lex.advance();
      f = Formula::vee(std::move(f), join_level());
    }
    return f;
  }

  Formula wedge_level() {
    Formula f = vee_level();
    while (lex.tok == Tok::Hat) {
      lex.advance();
      f = Formula::wedge(std::move(f), vee_level());
    }
    return f;
  }
};

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p(text);
  Formula f = p.wedge_level();
  if (p.lex.tok != Tok::End) p.lex.error("trailing input");
  return f;
}

Sequent parse_sequent(const std::string& text) {
  Parser p(text);
  Formula left = p.wedge_level();
  if (p.lex.tok != Tok::Turnstile) p.lex.error("expected '|-'");
  p.lex.advance();
  Formula right = p.wedge_level();
  if (p.lex.tok != Tok::End) p.lex.error("trailing input");
  return Sequent{std::move(left), std::move(right)};
}

}  // namespace kcw::logic
