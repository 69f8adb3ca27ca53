#include "doctest.h"

#include "altzeta/algebra/errors.hpp"
#include "altzeta/algebra/sparse_poly.hpp"
#include "support/random_algebra.hpp"

using namespace altzeta;

TEST_CASE("poly_arith examples") {
  SparsePoly db(sym::db), da(sym::da), y(sym::y);
  CHECK(db.pow(3).derivative(sym::db) == SparsePoly(Rational(3)) * db.pow(2));
  CHECK(y * (y + da) == y.pow(2) + y * da);
  CHECK((y * da + db).substitute(sym::y, SparsePoly()) == db);
  CHECK((y * da + db).substitute("y", SparsePoly()) == db);
  CHECK_THROWS_AS((y * da).substitute("q", SparsePoly()), UnknownGenerator);
}

TEST_CASE("symbol names round-trip") {
  for (Symbol s : {sym::x, sym::da, sym::zeta(7), sym::coeff(3, 4), sym::mzv(2, 5)})
    CHECK(Symbol::parse(s.name()) == s);
  CHECK_THROWS_AS(Symbol::parse("zeta1"), UnknownGenerator);
}

TEST_CASE("sparse polynomial ring axioms on random triples") {
  testing::RandomAlgebra rnd(1234);
  const std::vector<Symbol> gens{sym::y, sym::da, sym::db, sym::zeta(3)};
  for (int t = 0; t < 200; ++t) {
    auto p = rnd.poly(gens, 3, 5), q = rnd.poly(gens, 3, 5), r = rnd.poly(gens, 3, 5);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  testing::RandomAlgebra rnd(77);
  const std::vector<Symbol> gens{sym::a, sym::b};
  for (int t = 0; t < 50; ++t) {
    auto p = rnd.poly(gens, 3, 4), q = rnd.poly(gens, 3, 4);
    auto val = rnd.poly({sym::s, sym::u}, 2, 3);
    CHECK((p * q).substitute(sym::a, val) == p.substitute(sym::a, val) * q.substitute(sym::a, val));
  }
}

TEST_CASE("split and truncated multiplication") {
  SparsePoly p = SparsePoly(sym::s).pow(2) * SparsePoly(sym::u) + SparsePoly(Rational(3));
  auto parts = p.split(sym::s);
  CHECK(parts.size() == 2);
  CHECK(parts[2] == SparsePoly(sym::u));
  auto sq = SparsePoly::multiply_truncated(p, p, [](const Monomial& m) {
    return m.total_degree() <= 3;
  });
  CHECK(sq == SparsePoly(Rational(9)) + SparsePoly(Rational(6)) * SparsePoly(sym::s).pow(2) *
                                            SparsePoly(sym::u));
}
