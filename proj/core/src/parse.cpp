#include "ezd/parse.hpp"

#include <cctype>

namespace ezd {

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos == text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected an integer", start);
    return mpz_class(std::string(text.substr(start, pos - start)), 10);
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    auto head = [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto tail = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (pos == text.size() || !head(text[pos]))
      throw ParseError("expected a variable name", start);
    ++pos;
    while (pos < text.size() && tail(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

struct Parser {
  Lexer lex;
  const VarSet& vars;
  const FieldSpec& field;

  Monomial factor() {
    std::size_t at = lex.pos;
    lex.skip_ws();
    at = lex.pos;
    std::string name = lex.ident();
    auto idx = vars.index(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'", at);
    int e = 1;
    if (lex.eat('^')) {
      lex.skip_ws();
      std::size_t expat = lex.pos;
      mpz_class v = lex.integer();
      if (v < 0 || v > 4096)
        throw ParseError("exponent out of range", expat);
      e = static_cast<int>(v.get_si());
    }
    std::vector<int> exps(vars.size(), 0);
    exps[*idx] = e;
    return Monomial(std::move(exps));
  }

  // one summand: optional integer coefficient, then '*'-joined factors
  std::pair<Monomial, Scalar> term() {
    Scalar coeff = Scalar::one(field);
    Monomial mon = Monomial::one(vars.size());
    char c = lex.peek();
    bool saw_any = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = Scalar::from_mpz(lex.integer(), field);
      saw_any = true;
      while (lex.eat('*')) mon = mon * factor();
    } else {
      mon = mon * factor();
      saw_any = true;
      while (lex.eat('*')) mon = mon * factor();
    }
    if (!saw_any) throw ParseError("expected a term", lex.pos);
    return {mon, coeff};
  }
};

}  // namespace

Poly parse_polynomial(std::string_view text, const VarSet& vars,
                      const FieldSpec& field) {
  Parser p{Lexer{text, 0}, vars, field};
  Poly out(vars, field);
  bool negate = p.lex.eat('-');
  while (true) {
    auto [mon, coeff] = p.term();
    out.add_term(mon, negate ? -coeff : coeff);
    if (p.lex.done()) break;
    if (p.lex.eat('+'))
      negate = false;
    else if (p.lex.eat('-'))
      negate = true;
    else
      throw ParseError("expected '+', '-' or end of input", p.lex.pos);
  }
  return out;
}

}  // namespace ezd
