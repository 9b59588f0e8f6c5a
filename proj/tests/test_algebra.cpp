#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilb/parse.hpp"

using namespace hilb;

namespace {

RingCtxPtr poly2_ctx() {
  return std::make_shared<RingCtx>(std::vector<std::string>{"x", "y"}, 32003u);
}

} // namespace

TEST_CASE("field axioms on random scalars") {
  const PrimeField f(32003);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 5000; ++t) {
    const FieldScalar a = f.from_int(static_cast<long long>(rng()));
    const FieldScalar b = f.from_int(static_cast<long long>(rng()));
    const FieldScalar c = f.from_int(static_cast<long long>(rng()));
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.add(a, b) == f.add(b, a));
    CHECK(f.mul(a, b) == f.mul(b, a));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    CHECK(f.add(a, f.neg(a)).is_zero());
    if (!a.is_zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
  }
  CHECK_THROWS_AS(f.inv(f.zero()), DomainError);
}

TEST_CASE("arithmetic at the largest supported prime") {
  const PrimeField f(2147483647u); // 2^31 - 1
  const FieldScalar a = f.from_int(2147483646LL);
  CHECK(f.mul(a, a) == f.one()); // (-1)^2
  CHECK(f.mul(a, f.inv(a)) == f.one());
  const FieldScalar b = f.from_int(123456789LL);
  CHECK(f.mul(b, f.inv(b)) == f.one());
  CHECK_NOTHROW(parse_ring_document("char 2147483647; vars x;"));
}

TEST_CASE("non-prime characteristic rejected") {
  CHECK_THROWS_AS(PrimeField(4), DomainError);
  CHECK_THROWS_AS(PrimeField(1), DomainError);
  CHECK_THROWS_AS(PrimeField(32001), DomainError); // 3 * 10667
  CHECK_THROWS_AS(parse_ring_document("char 4; vars x;"), ParseError);
  CHECK_NOTHROW(parse_ring_document("char 32003; vars x;"));
}

TEST_CASE("ring document parsing") {
  const RingDocument doc =
      parse_ring_document("char 32003; vars x,y,z,w; rel x*z, x*w, y*z, y*w;");
  CHECK(doc.ring->ctx()->nvars() == 4);
  CHECK(doc.ring->relations().size() == 4);
  CHECK(doc.ring->ctx()->field().modulus() == 32003);

  const RingDocument trivial = parse_ring_document("char 32003; vars x,y; rel;");
  CHECK(trivial.ring->relations().empty());

  // Named ideals and the m alias.
  const RingDocument with_ideal =
      parse_ring_document("char 32003; vars x,y; rel; ideal q = x^2, y^3;");
  const IdealHandle q = resolve_ideal(with_ideal, "q");
  CHECK(q.gens().size() == 2);
  const IdealHandle m = resolve_ideal(with_ideal, "m");
  CHECK(m.gens().size() == 2);
  const IdealHandle inline_ideal = resolve_ideal(with_ideal, "x + 2*y, y^2");
  CHECK(inline_ideal.gens().size() == 2);

  CHECK_THROWS_AS(parse_ring_document("char 32003; vars x,x;"), ParseError);
  CHECK_THROWS_AS(parse_ring_document("vars x; rel y;"), ParseError);
  CHECK_THROWS_AS(parse_ring_document("char 32003; vars x,y; rel x ^ -2;"), ParseError);
  CHECK_THROWS_AS(parse_ring_document("char 32003; vars m;"), ParseError);
}

TEST_CASE("parse error reports line and column") {
  try {
    parse_ring_document("char 32003;\nvars x,y;\nrel x*q;");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("unknown variable") != std::string::npos);
  }
}

TEST_CASE("polynomial parsing spec examples") {
  const RingCtxPtr ctx = poly2_ctx();
  const Polynomial f = parse_polynomial("x^2 - 3*x*y + y", ctx);
  CHECK(f.term_count() == 3);

  CHECK(parse_polynomial("x - x", ctx).is_zero());
  CHECK(parse_polynomial("2*x + 32001*x", ctx).is_zero()); // 2 + (p-2) = 0 mod p
  CHECK(parse_polynomial("(x+y)^2", ctx) == parse_polynomial("x^2 + 2*x*y + y^2", ctx));
  CHECK(parse_polynomial("0", ctx).is_zero());
  CHECK(parse_polynomial("-x + x", ctx).is_zero());
  CHECK(parse_polynomial("5", ctx).term_count() == 1);
}

TEST_CASE("polynomial arithmetic spec examples") {
  const RingCtxPtr ctx = poly2_ctx();
  const Polynomial x = Polynomial::variable(ctx, 0);
  const Polynomial y = Polynomial::variable(ctx, 1);
  CHECK(x.plus(y).times(x.minus(y)) == parse_polynomial("x^2 - y^2", ctx));
  CHECK(x.plus(y).times(Polynomial::zero(ctx)).is_zero());
  CHECK(x.plus(y).pow(2) == parse_polynomial("x^2 + 2*x*y + y^2", ctx));

  const auto other = poly2_ctx(); // distinct context object
  CHECK_THROWS_AS(x.plus(Polynomial::variable(other, 0)), DomainError);
}

namespace {

Polynomial random_polynomial(std::mt19937_64& rng, const RingCtxPtr& ctx) {
  std::vector<Term> terms;
  const int nterms = 1 + static_cast<int>(rng() % 6);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(ctx->nvars());
    for (int v = 0; v < ctx->nvars(); ++v)
      m.set_exponent(v, static_cast<int>(rng() % 5));
    terms.push_back({m, ctx->field().from_int(static_cast<long long>(rng() % 32003))});
  }
  return Polynomial(ctx, std::move(terms));
}

} // namespace

TEST_CASE("parser round-trip on random polynomials") {
  const auto ctx =
      std::make_shared<RingCtx>(std::vector<std::string>{"x", "y", "z"}, 32003u);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 500; ++t) {
    const Polynomial f = random_polynomial(rng, ctx);
    CHECK(parse_polynomial(print_polynomial(f), ctx) == f);
  }
}

TEST_CASE("printing is canonical") {
  const RingCtxPtr ctx = poly2_ctx();
  CHECK(print_polynomial(parse_polynomial("y + x^2 - 3*x*y", ctx)) ==
        "x^2 - 3*x*y + y");
  CHECK(print_polynomial(Polynomial::zero(ctx)) == "0");
  CHECK(print_polynomial(parse_polynomial("-x", ctx)) == "-x");
  CHECK(print_polynomial(parse_polynomial("32002", ctx)) == "-1");
}
