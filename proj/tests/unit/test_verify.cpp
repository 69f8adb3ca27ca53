#include "doctest.h"

#include <algorithm>
#include <string>

#include "altzeta/special/euler.hpp"
#include "altzeta/special/zeta_ring.hpp"
#include "altzeta/verify/checks.hpp"
#include "altzeta/verify/reduction.hpp"

using namespace altzeta;

namespace {

std::string failures(const CheckReport& r) {
  std::string out;
  for (const auto& s : r.subchecks)
    if (!s.passed) out += s.name + " [" + s.detail + "]; ";
  if (r.first_mismatch) out += "first mismatch at x^" + std::to_string(r.first_mismatch->x_order);
  return out;
}

const SubCheck* find(const CheckReport& r, const std::string& name) {
  auto it = std::find_if(r.subchecks.begin(), r.subchecks.end(), [&](const SubCheck& s) { return s.name == name; });
  return it == r.subchecks.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("main theorem for constant, linear and generic f") {
  const SparsePoly one(Rational(1)), a(sym::a);
  CHECK_MESSAGE(check_main_theorem_for(one, 6).passed, "f = 1");
  CHECK_MESSAGE(check_main_theorem_for(a, 6).passed, "f = a");
  CHECK_MESSAGE(check_main_theorem_for(a * a * SparsePoly(sym::b) + one, 6).passed, "f = a^2 b + 1");
  const auto r = check_main_theorem(6, 4);
  CHECK_MESSAGE(r.passed, failures(r));
}

TEST_CASE("perturbing any one D1 constant breaks the main theorem by x^4") {
  for (int which = 0; which < 5; ++which) {
    D1Constants k;
    Rational* slots[] = {&k.c0, &k.c1, &k.c2, &k.c3, &k.c4};
    *slots[which] = *slots[which] + Rational(1, 20);
    const auto r = check_main_theorem(4, 4, k);
    CHECK_MESSAGE(!r.passed, "constant " << which);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(r.first_mismatch->x_order <= 4);
  }
}

TEST_CASE("goal identity with every intermediate display") {
  const auto r = check_goal_identity(6, 4);
  CHECK_MESSAGE(r.passed, failures(r));
  CHECK(r.subchecks.size() >= 10);
  const SubCheck* differenced = find(r, "L1 o D3 display with differenced partials does not hold");
  REQUIRE(differenced != nullptr);
  CHECK(differenced->passed);
}

TEST_CASE("Euler-polynomial resummation over free symbols") {
  const auto r = check_prop_resummation(6);
  CHECK_MESSAGE(r.passed, failures(r));
}

TEST_CASE("lemma suite on structured and random inputs") {
  for (const auto& r : check_lemma_suite(6, 10)) CHECK_MESSAGE(r.passed, r.name << ": " << failures(r));
}

TEST_CASE("numeric checks") {
  const auto beta = check_beta_identity(30);
  CHECK_MESSAGE(beta.passed, failures(beta));
  const auto cor = check_corollary_numeric(3, 2, 30);
  CHECK_MESSAGE(cor.passed, failures(cor));
  const auto ex = check_example_and_rm(30);
  CHECK_MESSAGE(ex.passed, failures(ex));
}

TEST_CASE("reduction records") {
  SUBCASE("zeta(2 bar)") {
    const auto rec = reduce_identity(0, 1, 30);
    CHECK(rec.corrections.empty());
    CHECK(rec.P == SparsePoly(sym::zeta(2)) * SparsePoly(Rational(-1, 2)));
  }
  SUBCASE("zeta(1, 2 bar)") {
    const auto rec = reduce_identity(1, 1, 30);
    CHECK(rec.P == SparsePoly(sym::zeta(3)) * SparsePoly(Rational(1, 2)));
    REQUIRE(rec.corrections.size() == 1);
    CHECK(rec.corrections[0].n == 2);
    CHECK(rec.corrections[0].coeff == Rational(-1, 2));
    CHECK(rec.corrections[0].ones == 0);
    CHECK(rec.corrections[0].bar == 3);
  }
  SUBCASE("k = 2 has one correction with coefficient from E_{2m-1}") {
    for (int m = 1; m <= 5; ++m) {
      const auto c = corollary_corrections(2, m);
      REQUIRE(c.size() == 1);
      CHECK(c[0].n == m + 1);
      CHECK(c[0].coeff == euler_polynomial(2 * m - 1).coeff(2 * m - 2));
      CHECK(c[0].coeff == Rational(-(2 * m - 1), 2));
    }
  }
  SUBCASE("correction range is m+1 .. m+ceil(k/2)") {
    for (int k = 0; k <= 6; ++k) {
      const auto c = corollary_corrections(k, 2);
      int expected = (k + 1) / 2;
      int nonzero = 0;
      for (const auto& x : c) {
        CHECK(x.n >= 3);
        CHECK(x.n <= 2 + expected);
        CHECK(x.ones == k + 1 - 2 * (x.n - 2));
        ++nonzero;
      }
      CHECK(nonzero <= expected);
    }
  }
  SUBCASE("P is weight-homogeneous") {
    const auto rec = reduce_identity(3, 2, 30);
    CHECK(is_weight_homogeneous(rec.P, 3 + 4));
    CHECK(is_gamma_free(rec.P));
  }
}

TEST_CASE("records serialize deterministically") {
  const auto a = to_json(reduce_identity(2, 2, 30));
  const auto b = to_json(reduce_identity(2, 2, 30));
  CHECK(a == b);
  CHECK(a.find("\"corrections\"") != std::string::npos);
  CHECK(to_latex(reduce_identity(2, 1, 30)).find("\\overline{2}") != std::string::npos);
}

TEST_CASE("residuals shrink by at least 10^5 with ten more digits") {
  for (auto [k, m] : {std::pair{1, 1}, {2, 2}, {3, 1}, {4, 2}}) {
    const double r30 = std::stod(reduce_identity(k, m, 30).residual);
    const double r40 = std::stod(reduce_identity(k, m, 40).residual);
    CHECK_MESSAGE((r30 == 0 || r40 <= r30 * 1e-5), "k=" << k << " m=" << m << ": " << r30 << " -> " << r40);
  }
}
