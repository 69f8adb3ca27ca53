#include <random>

#include "altzeta/algebra/elementary.hpp"
#include "altzeta/operators/exchange.hpp"
#include "altzeta/special/euler.hpp"
#include "altzeta/verify/checks.hpp"
#include "altzeta/verify/series_helpers.hpp"

namespace altzeta {

namespace {

class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed) {}
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational small() {
    int p = pick(-9, 9);
    return Rational(p == 0 ? 1 : p, pick(1, 6));
  }
  LaurentPoly laurent(int lo, int hi) {
    LaurentPoly l;
    for (int e = lo; e <= hi; ++e)
      if (pick(0, 2) != 0) l.add(e, SparsePoly(small()));
    if (l.terms().empty()) l.add(lo, SparsePoly(small()));
    return l;
  }
  SeriesXS series(int order, int lo, int hi) {
    SeriesXS s(order);
    for (int n = 0; n <= order; ++n) s[n] = laurent(lo, hi);
    return s;
  }
  // Polynomial in y and the allowed derivative symbols.
  SparsePoly integrand(bool da, bool db) {
    SparsePoly p;
    for (int t = pick(1, 3); t > 0; --t)
      p.add_term(Monomial{{sym::y, pick(0, 3)}, {sym::da, da ? pick(0, 2) : 0}, {sym::db, db ? pick(0, 2) : 0}},
                 small());
    return p;
  }
  PreLaplaceSeries pre(int order, bool da, bool db) {
    XSeries<SparsePoly> body(order);
    for (int n = 0; n <= order; ++n)
      if (pick(0, 1) == 1 || n == 0) body[n] = integrand(da, db);
    return PreLaplaceSeries(body);
  }
  SparsePoly target(bool with_a) {
    SparsePoly p;
    for (int t = pick(1, 3); t > 0; --t)
      p.add_term(Monomial{{sym::a, with_a ? pick(0, 4) : 0}, {sym::b, pick(0, 4)}}, small());
    return p;
  }

 private:
  std::mt19937 rng_;
};

// Folds repeated comparisons into one sub-check that keeps the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : check_{std::move(name), true, std::nullopt, {}} {}
  void compare(const SeriesXS& lhs, const SeriesXS& rhs, const std::string& what) {
    ++count_;
    if (!check_.passed) return;
    SubCheck c = altzeta::compare(check_.name, lhs, rhs);
    if (!c.passed) {
      check_ = c;
      check_.detail = what;
    }
  }
  template <class F>
  void expect_no_throw(F&& f, const std::string& what) {
    ++count_;
    if (!check_.passed) return;
    try {
      f();
    } catch (const std::exception& e) {
      check_.passed = false;
      check_.detail = what + ": " + e.what();
    }
  }
  SubCheck done() {
    if (check_.passed) check_.detail = std::to_string(count_) + " cases";
    return check_;
  }

 private:
  SubCheck check_;
  int count_ = 0;
};

CheckReport start(const std::string& name, const std::string& anchor, int order) {
  CheckReport r;
  r.name = name;
  r.anchor = anchor;
  r.param("order", order);
  return r;
}

// (v + x)^e as a product of explicit factors, independent of Taylor shifting.
SeriesXS shifted_power(int order, int e) {
  SeriesXS base = e >= 0 ? var_series(order, 1) + x_series(order) : reciprocal_shifted(order);
  SeriesXS out = laurent_constant(order, 1, 0);
  for (int t = 0; t < (e >= 0 ? e : -e); ++t) out = out * base;
  return out;
}

SeriesXS L2_on(const OperatorSeries& L2, const SeriesXS& phi) { return apply(L2, jet_in_b(phi, L2.order())); }

CheckReport translation(int N, int count, Generator& gen) {
  Stopwatch clock;
  auto r = start("translation", "exp(x d/db) acts as translation by x", N);
  Tally t("exp(x d/db) phi(b) = phi(b + x)");
  auto check = [&](const LaurentPoly& p) {
    SeriesXS direct(N);
    for (const auto& [e, c] : p.terms()) direct += shifted_power(N, e).times_coeff(LaurentPoly(c));
    t.compare(translate(p, N), direct, "phi = " + p.to_string());
  };
  check(LaurentPoly::monomial(2, SparsePoly(Rational(1))));
  check(LaurentPoly::monomial(-1, SparsePoly(Rational(1))));
  for (int i = 0; i < count; ++i) check(gen.laurent(-4, 4));
  r.add(t.done());
  r.seconds = clock.seconds();
  return r;
}

CheckReport inversion(int N, int count, Generator& gen) {
  Stopwatch clock;
  auto r = start("inversion", "L1 and L2 are inverse operators", N);
  const OperatorSeries L2 = build_L2(N);
  Tally a("L1 o L2 = id"), b("L2 o L1 = id");
  auto check = [&](const SeriesXS& phi, const std::string& what) {
    a.compare(apply_L1(L2_on(L2, phi)), phi, what);
    b.compare(L2_on(L2, apply_L1(phi)), phi, what);
  };
  check(laurent_constant(N, 1, -1), "phi = 1/s");
  check(laurent_constant(N, 1, 3), "phi = s^3");
  for (int i = 0; i < count; ++i) check(gen.series(N, -4, 4), "random #" + std::to_string(i));
  r.add(a.done());
  r.add(b.done());
  r.seconds = clock.seconds();
  return r;
}

CheckReport exchange(int N, int count, Generator& gen) {
  Stopwatch clock;
  auto r = start("laplace_exchange", "translation in s against the factor exp(-xy) under the Laplace transform", N);
  const SWindow w{-(4 * N + 12), 4 * N + 12};
  Tally plain("plain"), ab("substitution a=-s, b=s"), bs("substitution b=s"), scalar("scalar, b=s");
  {
    XSeries<SparsePoly> f(N);
    f[0] = SparsePoly(sym::y).pow(2) * SparsePoly(sym::da);
    const SparsePoly target = SparsePoly(sym::a).pow(3) * SparsePoly(sym::b) + SparsePoly(sym::b).pow(2);
    ab.expect_no_throw([&] { laplace_exchange(PreLaplaceSeries(f), ExchangeKind::SubstitutedAB, target, w); },
                       "f = y^2 da");
    XSeries<SparsePoly> one(N);
    one[0] = SparsePoly(Rational(1));
    plain.compare(laplace_exchange(PreLaplaceSeries(one), w), reciprocal_shifted(N), "f = 1");
  }
  for (int i = 0; i < count; ++i) {
    const std::string tag = "random #" + std::to_string(i);
    plain.expect_no_throw([&] { laplace_exchange(gen.pre(N, true, true), w); }, tag);
    const auto f1 = gen.pre(N, true, true);
    const auto t1 = gen.target(true);
    ab.expect_no_throw([&] { laplace_exchange(f1, ExchangeKind::SubstitutedAB, t1, w); }, tag);
    const auto f2 = gen.pre(N, false, true);
    const auto t2 = gen.target(false);
    bs.expect_no_throw([&] { laplace_exchange(f2, ExchangeKind::SubstitutedB, t2, w); }, tag);
    const auto f3 = gen.pre(N, false, false);
    scalar.expect_no_throw([&] { laplace_exchange(f3, ExchangeKind::ScalarB, t2, w); }, tag);
  }
  r.add(plain.done());
  r.add(ab.done());
  r.add(bs.done());
  r.add(scalar.done());
  r.seconds = clock.seconds();
  return r;
}

CheckReport laplace_rules(int N, int count, Generator& gen) {
  Stopwatch clock;
  auto r = start("laplace_rules", "Laplace transform rules for y f, f' and f exp(xy)", N);
  const SWindow w{-(4 * N + 12), 4 * N + 12};
  Tally yrule("L{y f} = -d/ds L{f}"), drule("L{f'} = s L{f} - f(0)"), shift("L{f exp(xy)}(s) = L{f}(s - x)");
  for (int i = 0; i < count; ++i) {
    const std::string tag = "random #" + std::to_string(i);
    const auto f = gen.pre(N, true, true);
    const SeriesXS Lf = formal_laplace(f, w).body;
    XSeries<SparsePoly> yf = f.body(), df = f.body();
    SeriesXS neg_d(N), s_minus_0(N);
    for (int n = 0; n <= N; ++n) {
      yf[n] = yf[n] * SparsePoly(sym::y);
      df[n] = df[n].derivative(sym::y);
      neg_d[n] = -Lf[n].derivative();
      s_minus_0[n] = Lf[n].shifted(1) - LaurentPoly(f.body()[n].substitute(sym::y, SparsePoly()));
    }
    yrule.compare(formal_laplace(PreLaplaceSeries(yf), w).body, neg_d, tag);
    drule.compare(formal_laplace(PreLaplaceSeries(df), w).body, s_minus_0, tag);
    shift.compare(formal_laplace(times(f, exp_x_times(SparsePoly(sym::y), N)), w).body, translate(Lf, -1), tag);
  }
  r.add(yrule.done());
  r.add(drule.done());
  r.add(shift.done());
  r.seconds = clock.seconds();
  return r;
}

CheckReport psi_identities(int N) {
  Stopwatch clock;
  auto r = start("psi_omega", "Laplace image of 2/(1+exp(xy)) and the translation identities of Psi and Omega", N);
  const auto po = psi_omega(N);
  const XSeries<Rational> dpsi = psi_omega(N + 1).psi.derivative();
  const SeriesXS psi = scaled_argument(po.psi), omega = scaled_argument(po.omega);
  const SeriesXS dpsi_s = scaled_argument(dpsi);
  const SeriesXS one = laurent_constant(N, 1, 0), two = laurent_constant(N, 2, 0);
  const SeriesXS ratio = one + x_series(N) * laurent_constant(N, 1, -1);  // (x+s)/s
  // x/(x+s) = sum_{n>=1} (-1)^{n-1} x^n s^{-n}
  SeriesXS z(N);
  for (int n = 1; n <= N; ++n) z[n] = LaurentPoly::monomial(-n, SparsePoly(Rational(n % 2 ? 1 : -1)));

  // s L{2/(1+e^{xy})} = Psi(x/s)
  const auto kernel = elementary_series(Elementary::EulerKernel, N);
  XSeries<SparsePoly> body(N);
  for (int n = 0; n <= N; ++n) body[n] = SparsePoly(Monomial(sym::y, n), kernel[n]);
  r.add(compare("s L{2/(1+exp(xy))} = Psi(x/s)",
                s_laplace(PreLaplaceSeries(body), SWindow::for_order(N), Substitution::None).body, psi));

  r.add(compare("Psi(x/(x+s)) = 2 - ((x+s)/s) Psi(x/s)", compose(po.psi, z), two - ratio * psi));
  r.add(compare("exp(x d/ds) Psi(x/s) = 2 - ((x+s)/s) Psi(x/s)", translate(psi), two - ratio * psi));
  r.add(compare("Psi'(x/(x+s)) = -((x+s)/s)^2 Psi(x/s) - ((x+s)/s)^3 Psi'(x/s)", compose(dpsi, z),
                -(ratio * ratio * psi) - ratio * ratio * ratio * dpsi_s));
  r.add(compare("Omega(x/(x+s)) = 2 - ((x+s)/s)^2 Omega(x/s)", compose(po.omega, z),
                two - ratio * ratio * omega));
  const SeriesXS half_inv = laurent_constant(N, Rational(1, 2), -1);
  r.add(compare("exp(x d/ds) (1/(2s)) (-1 + Omega(x/s)) = (1 - ((s+x)/s)^2 Omega(x/s)) / (2(s+x))",
                translate(half_inv * (omega - one)),
                reciprocal_shifted(N) * (one - ratio * ratio * omega) * Rational(1, 2)));
  r.seconds = clock.seconds();
  return r;
}

CheckReport split_and_printing(int N, int count, Generator& gen) {
  Stopwatch clock;
  auto r = start("d1_split", "D1 = D1^0 + D1^1 + D1^2, and the printed form of L1", N);
  const SWindow window = SWindow::for_order(N);
  const D1Split parts = build_D1_split(N, window);
  const OperatorSeries sum = parts.zero + parts.one + parts.two;
  const OperatorSeries D1 = build_D1(N, window);
  r.add(compare("D1 split sums to D1", sum.body, D1.body));
  r.add(compare("D1^0 = 1/(2s)", parts.zero.body,
                SeriesXS::monomial(N, 0, LaurentPoly::monomial(-1, SparsePoly(Rational(1, 2))))));

  const OperatorSeries L1 = build_L1(N);
  Tally t("printed L1 agrees with the structural action");
  for (int i = 0; i < count; ++i) {
    const LaurentPoly p = gen.laurent(-4, 4);
    SeriesXS printed(N);
    for (int n = 0; n <= N; ++n)
      for (const auto& [e, poly] : L1[n].terms())
        for (const auto& [mono, c] : poly.terms()) {
          LaurentPoly d = p;
          for (int k = 0; k < mono.exponent(sym::ds); ++k) d = d.derivative();
          printed[n] += d.shifted(e) * c;
        }
    t.compare(printed, apply_L1(constant_series(N, p)), "random #" + std::to_string(i));
  }
  r.add(t.done());
  r.seconds = clock.seconds();
  return r;
}

}  // namespace

std::vector<CheckReport> check_lemma_suite(int order, int random_count, unsigned seed) {
  Generator gen(seed);
  std::vector<CheckReport> out;
  out.push_back(translation(order, random_count, gen));
  out.push_back(inversion(order, random_count, gen));
  out.push_back(exchange(order, random_count, gen));
  out.push_back(laplace_rules(order, random_count, gen));
  out.push_back(psi_identities(order));
  out.push_back(split_and_printing(order, random_count, gen));
  for (auto& r : out) r.param("random_inputs", random_count);
  return out;
}

}  // namespace altzeta
