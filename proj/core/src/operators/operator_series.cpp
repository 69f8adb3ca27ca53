#include "altzeta/operators/operator_series.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "json.hpp"

namespace altzeta {

std::string to_string(Substitution s) {
  switch (s) {
    case Substitution::None: return "";
    case Substitution::BEqualsS: return "b=s";
    case Substitution::AMinusSBEqualsS: return "a=-s,b=s";
    case Substitution::SEqualsB: return "s=b";
  }
  return "";
}

PreLaplaceSeries::PreLaplaceSeries(XSeries<SparsePoly> body) : body_(std::move(body)) {
  for (const auto& c : body_.coefficients())
    for (const auto& [mono, q] : c.terms())
      for (const auto& f : mono.factors())
        if (f.symbol != sym::y && f.symbol != sym::da && f.symbol != sym::db)
          throw UnknownGenerator("PreLaplaceSeries: generator '" + f.symbol.name() +
                                 "' outside {y, da, db}");
}

OperatorSeries operator+(const OperatorSeries& p, const OperatorSeries& q) {
  if (p.substitution != q.substitution)
    throw AlgebraError("OperatorSeries: adding operators with different substitutions");
  return {p.body + q.body, p.substitution};
}

OperatorSeries formal_laplace(const PreLaplaceSeries& f, SWindow window) {
  XSeries<LaurentPoly> out(f.order());
  for (int n = 0; n <= f.order(); ++n) {
    LaurentPoly c;
    c.with_floor(window.lo);
    for (const auto& [mono, q] : f.body()[n].terms()) {
      const int k = mono.exponent(sym::y);
      c.add(-(k + 1), SparsePoly(mono.without(sym::y), q * factorial(k)));
    }
    out[n] = std::move(c);
  }
  return {std::move(out), Substitution::None};
}

OperatorSeries s_laplace(const PreLaplaceSeries& f, SWindow window, Substitution subst) {
  auto op = formal_laplace(f, window);
  for (int n = 0; n <= op.order(); ++n) op.body[n] = op.body[n].shifted(1);
  op.substitution = subst;
  return op;
}

namespace {

struct Term {
  int da, db, ds, s;
  Rational c;
};

std::vector<Term> collect_terms(const LaurentPoly& c) {
  std::vector<Term> terms;
  for (const auto& [e, poly] : c.terms())
    for (const auto& [mono, q] : poly.terms())
      terms.push_back({mono.exponent(sym::da), mono.exponent(sym::db), mono.exponent(sym::ds), e, q});
  std::sort(terms.begin(), terms.end(), [](const Term& p, const Term& q) {
    auto key = [](const Term& t) {
      return std::make_tuple(-t.da, t.db == 0, t.db, t.ds == 0, t.ds, t.s);
    };
    return key(p) < key(q);
  });
  return terms;
}

std::string power(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^{" + std::to_string(e) + "}";
}

std::string superscript(int e) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char ch : std::to_string(e)) out += digits[ch - '0'];
  return out;
}

std::string unicode_power(const std::string& base, int e, bool parenthesize) {
  if (e == 1) return base;
  return (parenthesize ? "(" + base + ")" : base) + superscript(e);
}

std::string text_term(const Term& t) {
  const std::string p = mpz_class(abs(t.c.get().get_num())).get_str();
  const std::string q = t.c.get().get_den().get_str();
  std::string num;
  if (t.da > 0) num += unicode_power("∂_a", t.da, true);
  if (t.db > 0) num += unicode_power("∂_b", t.db, true);
  if (t.ds > 0) num += unicode_power("∂_s", t.ds, true);
  if (t.s > 0) num += unicode_power("s", t.s, false);
  if (p != "1" || num.empty()) num = p + num;
  std::string den;
  if (q != "1") den += q;
  if (t.s < 0) den += unicode_power("s", -t.s, false);
  if (den.empty()) return num;
  const bool compound = q != "1" && t.s < 0;
  return num + "/" + (compound ? "(" + den + ")" : den);
}

std::string latex_term(const Term& t) {
  std::vector<std::string> num, den;
  const std::string p = mpz_class(abs(t.c.get().get_num())).get_str();
  const std::string q = t.c.get().get_den().get_str();
  if (t.da > 0) num.push_back(power("\\partial_a", t.da));
  if (t.db > 0) num.push_back(power("\\partial_b", t.db));
  if (t.ds > 0) num.push_back(power("\\partial_s", t.ds));
  if (t.s > 0) num.push_back(power("s", t.s));
  if (p != "1" || num.empty()) num.insert(num.begin(), p);
  if (q != "1") den.push_back(q);
  if (t.s < 0) den.push_back(power("s", -t.s));
  std::string n;
  for (std::size_t i = 0; i < num.size(); ++i) n += (i ? " " : "") + num[i];
  if (den.empty()) return n;
  std::string d;
  for (std::size_t i = 0; i < den.size(); ++i) d += (i ? " " : "") + den[i];
  return "\\frac{" + n + "}{" + d + "}";
}

}  // namespace

std::string format_operator_coefficient(const LaurentPoly& c, OutputFormat format) {
  auto terms = collect_terms(c);
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : terms)
      arr.push_back({{"coeff", t.c.to_fraction()}, {"da", t.da}, {"db", t.db}, {"ds", t.ds}, {"s", t.s}});
    return arr.dump();
  }
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const bool neg = terms[i].c < Rational(0);
    const bool latex = format == OutputFormat::Latex;
    if (i == 0) out += neg ? (latex ? "-" : "−") : "";
    else out += neg ? (latex ? " - " : " − ") : " + ";
    out += format == OutputFormat::Latex ? latex_term(terms[i]) : text_term(terms[i]);
  }
  return out;
}

}  // namespace altzeta
