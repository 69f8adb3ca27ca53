#include "altzeta/operators/action.hpp"

#include <algorithm>

namespace altzeta {

namespace {

Rational general_binomial(int e, int q) {
  Rational r(1);
  for (int t = 0; t < q; ++t) r = r * Rational(e - t);
  return r / factorial(q);
}

BivariateJet<LaurentPoly> empty_jet(Substitution base, int jet_order) {
  return base == Substitution::BEqualsS ? BivariateJet<LaurentPoly>(0, jet_order)
                                        : BivariateJet<LaurentPoly>(jet_order, jet_order);
}

}  // namespace

FunctionJet polynomial_jet(const SparsePoly& g, Substitution base, int x_order, int jet_order,
                           int window_lo) {
  if (base != Substitution::AMinusSBEqualsS && base != Substitution::BEqualsS)
    throw AlgebraError("polynomial_jet: base must be a=-s,b=s or b=s");
  if (base == Substitution::BEqualsS && g.contains(sym::a))
    throw AlgebraError("polynomial_jet: function of a at base b=s");
  FunctionJet out{XSeries<BivariateJet<LaurentPoly>>(x_order), base};
  for (int n = 0; n <= x_order; ++n) out.body[n] = empty_jet(base, jet_order);
  for (const auto& [mono, c] : g.terms()) {
    const int k = mono.exponent(sym::x);
    if (k > x_order) continue;
    const int i = mono.exponent(sym::a), j = mono.exponent(sym::b);
    const SparsePoly scalar(mono.without(sym::x).without(sym::a).without(sym::b), c);
    auto& jet = out.body[k];
    for (int p = 0; p <= i; ++p)
      for (int q = 0; q <= j; ++q) {
        if (!jet.in_range(p, q)) continue;
        Rational w = binomial(i, p) * binomial(j, q);
        if ((i - p) % 2 != 0) w = -w;
        jet.add(p, q, LaurentPoly::monomial(i - p + j - q, scalar * w, window_lo));
      }
  }
  return out;
}

FunctionJet jet_in_b(const SeriesXS& h, int jet_order, int window_lo) {
  FunctionJet out{XSeries<BivariateJet<LaurentPoly>>(h.order()), Substitution::BEqualsS};
  for (int n = 0; n <= h.order(); ++n) {
    auto jet = empty_jet(Substitution::BEqualsS, jet_order);
    if (!h[n].is_exact()) throw TruncationError("jet_in_b: coefficient is not an exact Laurent polynomial");
    for (const auto& [e, c] : h[n].terms())
      for (int q = 0; q <= jet_order; ++q) {
        Rational w = general_binomial(e, q);
        if (w.is_zero()) continue;
        jet.add(0, q, LaurentPoly::monomial(e - q, c * w, window_lo));
      }
    out.body[n] = std::move(jet);
  }
  return out;
}

FunctionJet constant_jet(const BivariateJet<LaurentPoly>& j, Substitution base, int x_order) {
  FunctionJet out{XSeries<BivariateJet<LaurentPoly>>(x_order), base};
  for (int n = 0; n <= x_order; ++n)
    out.body[n] = BivariateJet<LaurentPoly>(j.order_u(), j.order_v(), j.max_total());
  out.body[0] = j;
  return out;
}

SeriesXS apply(const OperatorSeries& op, const FunctionJet& g) {
  if (op.substitution != g.base)
    throw AlgebraError("apply: operator substitution '" + to_string(op.substitution) +
                       "' does not match target base '" + to_string(g.base) + "'");
  const int order = std::min(op.order(), g.order());
  SeriesXS out(order);
  for (int p = 0; p <= order; ++p)
    for (const auto& [e, poly] : op[p].terms())
      for (const auto& [mono, c] : poly.terms()) {
        const int i = mono.exponent(sym::da), j = mono.exponent(sym::db);
        if (mono.total_degree() != i + j)
          throw AlgebraError("apply: operator coefficient involves '" + mono.to_string() + "'");
        const Rational w = c * factorial(i) * factorial(j);
        for (int q = 0; p + q <= order; ++q) {
          LaurentPoly d = g.body[q].coeff(i, j);
          if (d.is_zero()) continue;
          out[p + q] += d.shifted(e) * w;
        }
      }
  return out;
}

int max_derivative_degree(const OperatorSeries& op) {
  int d = 0;
  for (int n = 0; n <= op.order(); ++n)
    for (const auto& [e, poly] : op[n].terms())
      for (const auto& [mono, c] : poly.terms())
        d = std::max(d, mono.exponent(sym::da) + mono.exponent(sym::db));
  return d;
}

SeriesXS translate(const SeriesXS& phi, int direction) {
  const int order = phi.order();
  SeriesXS out(order);
  for (int q = 0; q <= order; ++q) {
    LaurentPoly d = phi[q];
    for (int i = 0; q + i <= order; ++i) {
      Rational w = Rational(1) / factorial(i);
      if (direction < 0 && i % 2 == 1) w = -w;
      out[q + i] += d * w;
      d = d.derivative();
    }
  }
  return out;
}

SeriesXS translate(const LaurentPoly& p, int order) { return translate(constant_series(order, p)); }

SeriesXS constant_series(int order, const LaurentPoly& c) { return SeriesXS::monomial(order, 0, c); }

SeriesXS reciprocal_shifted(int order, int window_lo) {
  SeriesXS out(order);
  for (int n = 0; n <= order; ++n)
    out[n] = LaurentPoly::monomial(-n - 1, SparsePoly(Rational(n % 2 == 0 ? 1 : -1)), window_lo);
  return out;
}

SeriesXS apply_L1(const SeriesXS& phi) {
  const int order = phi.order();
  const auto half_inv = LaurentPoly::monomial(-1, SparsePoly(Rational(1, 2)));
  SeriesXS direct = phi.map_coeffs([&](const LaurentPoly& c) { return c * half_inv; });
  return direct + translate(phi) * reciprocal_shifted(order) * Rational(1, 2);
}

SeriesXS scaled_argument(const XSeries<Rational>& F, int window_lo) {
  SeriesXS out(F.order());
  for (int k = 0; k <= F.order(); ++k) out[k] = LaurentPoly::monomial(-k, SparsePoly(F[k]), window_lo);
  return out;
}

SeriesXS evaluate_with(const SparsePoly& f, const std::map<Symbol, SeriesXS>& assign, int order) {
  std::map<Symbol, std::vector<SeriesXS>> powers;
  auto power = [&](Symbol s, int e) -> const SeriesXS& {
    auto& v = powers[s];
    if (v.empty()) v.push_back(constant_series(order, LaurentPoly(SparsePoly(Rational(1)))));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * assign.at(s));
    return v[static_cast<std::size_t>(e)];
  };
  SeriesXS out(order);
  for (const auto& [mono, c] : f.terms()) {
    Monomial scalar;
    SeriesXS term = constant_series(order, LaurentPoly(SparsePoly(Rational(1))));
    bool first = true;
    for (const auto& fac : mono.factors()) {
      if (assign.count(fac.symbol)) {
        const auto& p = power(fac.symbol, fac.exponent);
        term = first ? p : term * p;
        first = false;
      } else {
        scalar = scalar * Monomial(fac.symbol, fac.exponent);
      }
    }
    out += term.times_coeff(LaurentPoly(SparsePoly(scalar, c)));
  }
  return out;
}

LaurentPoly as_laurent(const SparsePoly& f, Symbol var) {
  if (f.contains(sym::x)) throw AlgebraError("as_laurent: polynomial involves x");
  LaurentPoly out;
  for (const auto& [e, c] : f.split(var)) out.add(e, c);
  return out;
}

}  // namespace altzeta
