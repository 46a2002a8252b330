#include "nsbound/parser.hpp"

#include "nsbound/errors.hpp"

#include <cctype>
#include <optional>

namespace nsbound {

namespace {

enum class Tok { integer, name, plus, minus, star, slash, caret, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      out.push_back({Tok::integer, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Tok::name, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
    case '+': kind = Tok::plus; break;
    case '-': kind = Tok::minus; break;
    case '*': kind = Tok::star; break;
    case '/': kind = Tok::slash; break;
    case '^': kind = Tok::caret; break;
    default:
      throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
    }
    out.push_back({kind, std::string(1, s[i]), i});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
public:
  Parser(std::string_view text, std::span<const std::string> names)
      : tokens_(tokenize(text)), names_(names) {}

  Polynomial parse() {
    Polynomial result(names_.size());
    bool negate = false;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus)
      negate = next().kind == Tok::minus;
    result += term(negate);
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      negate = next().kind == Tok::minus;
      result += term(negate);
    }
    if (peek().kind != Tok::end)
      throw ParseError("expected '+', '-' or end of input, found '" +
                           peek().text + "'",
                       peek().pos);
    return result;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  Polynomial term(bool negate) {
    mpq_class coeff = 1;
    Monomial mono(names_.size());
    bool have_factor = false;
    if (peek().kind == Tok::integer) {
      coeff = rational();
      if (peek().kind == Tok::star) {
        next();
        if (peek().kind != Tok::name)
          throw ParseError("expected a variable after '*'", peek().pos);
      }
      if (peek().kind == Tok::name) {
        factor(mono);
        have_factor = true;
      }
    } else if (peek().kind == Tok::name) {
      factor(mono);
      have_factor = true;
    } else {
      throw ParseError(peek().kind == Tok::end
                           ? std::string("unexpected end of input")
                           : "expected a term, found '" + peek().text + "'",
                       peek().pos);
    }
    while (have_factor && peek().kind == Tok::star) {
      next();
      if (peek().kind != Tok::name)
        throw ParseError("expected a variable after '*'", peek().pos);
      factor(mono);
    }
    if (negate)
      coeff = -coeff;
    return Polynomial::monomial(mono, coeff);
  }

  mpq_class rational() {
    const Token& num = next();
    mpz_class numerator(num.text);
    if (peek().kind != Tok::slash)
      return mpq_class(numerator);
    next();
    if (peek().kind != Tok::integer)
      throw ParseError("expected a denominator after '/'", peek().pos);
    const Token& den = next();
    mpz_class denominator(den.text);
    if (denominator == 0)
      throw ParseError("zero denominator", den.pos);
    mpq_class q(numerator, denominator);
    q.canonicalize();
    return q;
  }

  void factor(Monomial& mono) {
    const Token& name = next();
    const std::optional<std::size_t> index = lookup(name.text);
    if (!index)
      throw ParseError("unknown variable '" + name.text + "'", name.pos);
    unsigned long power = 1;
    if (peek().kind == Tok::caret) {
      next();
      if (peek().kind != Tok::integer)
        throw ParseError("expected an exponent after '^'", peek().pos);
      const Token& e = next();
      mpz_class value(e.text);
      if (value == 0 || !value.fits_uint_p())
        throw ParseError("exponent must be a positive integer", e.pos);
      power = value.get_ui();
    }
    mono[*index] += static_cast<Monomial::Exponent>(power);
  }

  std::optional<std::size_t> lookup(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name)
        return i;
    return std::nullopt;
  }

  std::vector<Token> tokens_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> variable_names) {
  return Parser(text, variable_names).parse();
}

std::vector<std::string> projective_variable_names(unsigned r) {
  std::vector<std::string> names;
  for (unsigned i = 0; i <= r; ++i)
    names.push_back("x" + std::to_string(i));
  return names;
}

Polynomial parse_polynomial(std::string_view text, unsigned r) {
  const auto names = projective_variable_names(r);
  return parse_polynomial(text, names);
}

} // namespace nsbound
