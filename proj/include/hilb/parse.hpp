#pragma once

#include <map>
#include <optional>
#include <string>

#include "hilb/ring.hpp"

namespace hilb {

/// Parsed ring document: the quotient ring plus the `ideal name = ...;`
/// declarations. `m` is reserved as a built-in alias for the irrelevant ideal.
struct RingDocument {
  QuotientRingPtr ring;
  std::map<std::string, std::vector<Polynomial>> named_ideals;
  std::string source;
};

/// Grammar (statements end with ';', whitespace insignificant):
///   char <int>;                       -- optional, defaults to default_char
///   vars <id>(,<id>)*;
///   rel <poly>(,<poly>)*;             -- optional, may be empty: "rel;"
///   ideal <name> = <poly>(,<poly>)*;  -- repeatable
RingDocument parse_ring_document(const std::string& text,
                                 std::uint32_t default_characteristic = 32003,
                                 GroebnerOptions opts = {});

/// Polynomial expression: signed integer coefficients, '*' products,
/// '^' powers, parentheses. Coefficients are reduced mod p.
Polynomial parse_polynomial(const std::string& text, const RingCtxPtr& ctx);

/// Canonical form; parse(print(f)) == f term for term.
std::string print_polynomial(const Polynomial& f);
std::string print_monomial(const Monomial& m, const RingCtx& ctx);

/// Resolves an ideal reference: a name declared in the document, the alias
/// `m`, or an inline comma-separated generator list.
IdealHandle resolve_ideal(const RingDocument& doc, const std::string& ref);

} // namespace hilb
