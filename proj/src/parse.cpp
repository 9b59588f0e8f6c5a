#include "hilb/parse.hpp"

#include <cctype>
#include <sstream>

namespace hilb {

namespace {

struct Token {
  enum class Kind { ident, integer, punct, eof };
  Kind kind = Kind::eof;
  std::string text;
  long long value = 0;
  int line = 1, column = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.column);
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      bump();
    tok_ = Token{};
    tok_.line = line_;
    tok_.column = column_;
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Token::Kind::ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        tok_.text += text_[pos_];
        bump();
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Kind::integer;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        tok_.text += text_[pos_];
        bump();
      }
      if (tok_.text.size() > 18)
        throw ParseError("integer literal too large", tok_.line, tok_.column);
      tok_.value = std::stoll(tok_.text);
      return;
    }
    if (std::string(";,=^*+-()").find(c) != std::string::npos) {
      tok_.kind = Token::Kind::punct;
      tok_.text = std::string(1, c);
      bump();
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, column_ = 1;
  Token tok_;
};

bool is_punct(const Token& t, const char* p) {
  return t.kind == Token::Kind::punct && t.text == p;
}

class PolyParser {
public:
  PolyParser(Lexer& lex, const RingCtxPtr& ctx) : lex_(lex), ctx_(ctx) {}

  // expr := ['+'|'-'] term (('+'|'-') term)*
  Polynomial expr() {
    bool negate = false;
    if (is_punct(lex_.peek(), "-")) {
      lex_.take();
      negate = true;
    } else if (is_punct(lex_.peek(), "+")) {
      lex_.take();
    }
    Polynomial acc = term();
    if (negate) acc = acc.negated();
    while (is_punct(lex_.peek(), "+") || is_punct(lex_.peek(), "-")) {
      const bool minus = lex_.take().text == "-";
      const Polynomial t = term();
      acc = minus ? acc.minus(t) : acc.plus(t);
    }
    return acc;
  }

private:
  // term := factor ('*' factor)*
  Polynomial term() {
    Polynomial acc = factor();
    while (is_punct(lex_.peek(), "*")) {
      lex_.take();
      acc = acc.times(factor());
    }
    return acc;
  }

  // factor := atom ['^' int]
  Polynomial factor() {
    Polynomial base = atom();
    if (is_punct(lex_.peek(), "^")) {
      lex_.take();
      if (is_punct(lex_.peek(), "-")) lex_.fail("negative exponent");
      if (lex_.peek().kind != Token::Kind::integer) lex_.fail("expected exponent");
      const long long e = lex_.take().value;
      if (e > 0xFFFF) lex_.fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::integer)
      return Polynomial::constant(ctx_, ctx_->field().from_int(lex_.take().value));
    if (t.kind == Token::Kind::ident) {
      const Token id = lex_.take();
      const int v = ctx_->variable_index(id.text);
      if (v < 0)
        throw ParseError("unknown variable '" + id.text + "'", id.line, id.column);
      return Polynomial::variable(ctx_, v);
    }
    if (is_punct(t, "(")) {
      lex_.take();
      Polynomial inner = expr();
      if (!is_punct(lex_.peek(), ")")) lex_.fail("expected ')'");
      lex_.take();
      return inner;
    }
    lex_.fail("expected coefficient, variable or '('");
  }

  Lexer& lex_;
  const RingCtxPtr& ctx_;
};

std::vector<Polynomial> poly_list(Lexer& lex, const RingCtxPtr& ctx) {
  std::vector<Polynomial> polys;
  if (is_punct(lex.peek(), ";")) return polys; // empty list
  while (true) {
    polys.push_back(PolyParser(lex, ctx).expr());
    if (is_punct(lex.peek(), ",")) {
      lex.take();
      continue;
    }
    break;
  }
  return polys;
}

void expect_semicolon(Lexer& lex) {
  if (!is_punct(lex.peek(), ";")) lex.fail("expected ';'");
  lex.take();
}

} // namespace

RingDocument parse_ring_document(const std::string& text,
                                 std::uint32_t default_characteristic,
                                 GroebnerOptions opts) {
  Lexer lex(text);
  std::uint32_t characteristic = default_characteristic;

  if (lex.peek().kind == Token::Kind::ident && lex.peek().text == "char") {
    lex.take();
    if (lex.peek().kind != Token::Kind::integer) lex.fail("expected characteristic");
    const Token t = lex.take();
    if (t.value < 3 || t.value > 0x7FFFFFFF || !PrimeField::is_prime(static_cast<std::uint32_t>(t.value)))
      throw ParseError("characteristic must be an odd prime, got " + t.text, t.line,
                       t.column);
    characteristic = static_cast<std::uint32_t>(t.value);
    expect_semicolon(lex);
  }

  if (!(lex.peek().kind == Token::Kind::ident && lex.peek().text == "vars"))
    lex.fail("expected 'vars' declaration");
  lex.take();
  std::vector<std::string> vars;
  while (true) {
    if (lex.peek().kind != Token::Kind::ident) lex.fail("expected variable name");
    const Token id = lex.take();
    if (id.text == "char" || id.text == "vars" || id.text == "rel" || id.text == "ideal" ||
        id.text == "m")
      throw ParseError("'" + id.text + "' is reserved", id.line, id.column);
    for (const std::string& v : vars)
      if (v == id.text)
        throw ParseError("duplicate variable '" + id.text + "'", id.line, id.column);
    vars.push_back(id.text);
    if (is_punct(lex.peek(), ",")) {
      lex.take();
      continue;
    }
    break;
  }
  expect_semicolon(lex);

  // One variable slot is kept free for the elimination auxiliary.
  if (static_cast<int>(vars.size()) > Monomial::max_vars - 1)
    throw ParseError("at most " + std::to_string(Monomial::max_vars - 1) +
                         " variables are supported",
                     1, 1);

  const auto ctx = std::make_shared<RingCtx>(vars, characteristic);

  std::vector<Polynomial> relations;
  if (lex.peek().kind == Token::Kind::ident && lex.peek().text == "rel") {
    lex.take();
    relations = poly_list(lex, ctx);
    expect_semicolon(lex);
  }

  RingDocument doc;
  doc.ring = QuotientRing::create(ctx, std::move(relations), opts);
  doc.source = text;

  while (lex.peek().kind != Token::Kind::eof) {
    if (!(lex.peek().kind == Token::Kind::ident && lex.peek().text == "ideal"))
      lex.fail("expected 'ideal' declaration");
    lex.take();
    if (lex.peek().kind != Token::Kind::ident) lex.fail("expected ideal name");
    const Token name = lex.take();
    if (doc.named_ideals.count(name.text) || name.text == "m")
      throw ParseError("ideal '" + name.text + "' already defined", name.line,
                       name.column);
    if (!is_punct(lex.peek(), "=")) lex.fail("expected '='");
    lex.take();
    std::vector<Polynomial> gens = poly_list(lex, ctx);
    expect_semicolon(lex);
    doc.named_ideals.emplace(name.text, std::move(gens));
  }
  return doc;
}

Polynomial parse_polynomial(const std::string& text, const RingCtxPtr& ctx) {
  Lexer lex(text);
  Polynomial f = PolyParser(lex, ctx).expr();
  if (lex.peek().kind != Token::Kind::eof) lex.fail("trailing input after polynomial");
  return f;
}

std::string print_monomial(const Monomial& m, const RingCtx& ctx) {
  std::ostringstream out;
  bool first = true;
  for (int v = 0; v < m.nvars(); ++v) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    if (!first) out << "*";
    out << ctx.variables()[static_cast<std::size_t>(v)];
    if (e > 1) out << "^" << e;
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

std::string print_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const RingCtx& ctx = *f.ctx();
  const std::uint32_t p = ctx.field().modulus();
  std::ostringstream out;
  bool first = true;
  for (const Term& t : f.terms()) {
    // Balanced representative: coefficients above p/2 print as negatives.
    long long c = t.coeff.value;
    bool negative = false;
    if (c > p / 2) {
      c = p - c;
      negative = true;
    }
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (t.monomial.is_one()) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      out << print_monomial(t.monomial, ctx);
    }
    first = false;
  }
  return out.str();
}

IdealHandle resolve_ideal(const RingDocument& doc, const std::string& ref) {
  if (ref == "m") return maximal_ideal(doc.ring);
  if (const auto it = doc.named_ideals.find(ref); it != doc.named_ideals.end())
    return IdealHandle(doc.ring, it->second);
  // Inline generator list.
  std::vector<Polynomial> gens;
  Lexer lex(ref);
  while (true) {
    gens.push_back(PolyParser(lex, doc.ring->ctx()).expr());
    if (is_punct(lex.peek(), ",")) {
      lex.take();
      continue;
    }
    break;
  }
  if (lex.peek().kind != Token::Kind::eof) lex.fail("trailing input after ideal");
  return IdealHandle(doc.ring, std::move(gens));
}

} // namespace hilb
