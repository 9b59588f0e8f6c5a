#include "hilb/monomial.hpp"

namespace hilb {

namespace {

// degrevlex tie-break: at the last differing variable the smaller exponent
// wins, i.e. belongs to the larger monomial.
int degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const int i = kernels::active_backend().last_diff(a.data(), b.data());
  if (i < 0) return 0;
  return a.exponent(i) > b.exponent(i) ? -1 : 1;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) < b.exponent(i) ? -1 : 1;
  }
  return 0;
}

// degrevlex restricted to variables [lo, hi).
int block_degrevlex_compare(const Monomial& a, const Monomial& b, int lo, int hi) {
  unsigned da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += static_cast<unsigned>(a.exponent(i));
    db += static_cast<unsigned>(b.exponent(i));
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) > b.exponent(i) ? -1 : 1;
  }
  return 0;
}

} // namespace

int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw DomainError("monomial comparison across different variable counts");
  switch (order.kind) {
    case MonomialOrder::Kind::degrevlex:
      return degrevlex_compare(a, b);
    case MonomialOrder::Kind::lex:
      return lex_compare(a, b);
    case MonomialOrder::Kind::elimination: {
      if (const int c = block_degrevlex_compare(a, b, order.split, a.nvars()); c != 0)
        return c;
      return block_degrevlex_compare(a, b, 0, order.split);
    }
  }
  throw InternalError("unknown monomial order kind");
}

} // namespace hilb
