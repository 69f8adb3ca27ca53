#include "altzeta/verify/reduction.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

#include "altzeta/mzv/errors.hpp"
#include "altzeta/operators/action.hpp"
#include "altzeta/operators/builders.hpp"
#include "altzeta/special/euler.hpp"
#include "altzeta/special/gamma_ratio.hpp"
#include "altzeta/special/zeta_ring.hpp"

namespace altzeta {

LaurentPoly corollary_row(int k, int max_m) {
  if (k < 0 || max_m < 1) throw AlgebraError("corollary_row: need k >= 0 and m >= 1");
  const int order = k + 1;
  const OperatorSeries D1 = build_D1(order), D2 = build_D2(order);
  const int jet = max_derivative_degree(D1);
  const auto G = gamma_ratio_jet(jet, jet, kNoFloor, k + 2 * max_m, jet);
  const SeriesXS total =
      apply(D1, constant_jet(G, Substitution::AMinusSBEqualsS, order)) +
      apply(D2, polynomial_jet(SparsePoly(Rational(1)), Substitution::BEqualsS, order,
                               std::max(1, max_derivative_degree(D2))));
  return total[order];
}

std::vector<Correction> corollary_corrections(int k, int m) {
  std::vector<Correction> out;
  for (int n = m + 1; n <= m + (k + 1) / 2; ++n)
    out.push_back({n, euler_polynomial(2 * n - 3).coeff(2 * m - 2), k + 1 - 2 * (n - m), 2 * n - 1});
  return out;
}

Real corollary_lhs(int k, int m, int digits) {
  Real total = eval_amzv(MzvIndex::ones_then_bar(k, 2 * m), digits);
  for (const auto& c : corollary_corrections(k, m))
    total += eval_amzv(MzvIndex::ones_then_bar(c.ones, c.bar), digits) * c.coeff;
  return total;
}

Real evaluate_zeta_polynomial(const SparsePoly& p, int digits) {
  const mpfr_prec_t bits = bits_for_digits(digits, guard_digits(digits));
  std::map<Symbol, Real> cache;
  return p.evaluate<Real>(
      [&](Symbol s) -> Real {
        auto it = cache.find(s);
        if (it != cache.end()) return it->second;
        Real v(bits);
        if (s == sym::euler_gamma) v = Real::euler_gamma(bits);
        else if (s.kind() == SymbolKind::Zeta) v = eval_zeta(s.index(), digits);
        else throw AlgebraError("evaluate_zeta_polynomial: generator " + s.name() + " has no value");
        cache.emplace(s, v);
        return v;
      },
      [&](const Rational& c) { return Real(c, bits); });
}

IdentityRecord make_record(int k, int m, const LaurentPoly& row, int digits, bool normalize_even) {
  IdentityRecord r;
  r.k = k;
  r.m = m;
  SparsePoly P = row.coeff(2 * m - 1);
  if (!is_gamma_free(P)) throw AlgebraError("reduce: Euler's constant survives in P for k=" +
                                            std::to_string(k) + ", m=" + std::to_string(m));
  if (!is_weight_homogeneous(P, k + 2 * m))
    throw AlgebraError("reduce: P is not of pure weight " + std::to_string(k + 2 * m));
  r.P = normalize_even ? normalize_even_zetas(P) : P;
  r.corrections = corollary_corrections(k, m);

  const Real lhs = corollary_lhs(k, m, digits);
  const Real rhs = evaluate_zeta_polynomial(P, digits);
  const Real residual = abs(lhs - rhs);
  const Real tol = pow10(-(digits - 5), residual.precision());
  r.residual = residual.to_string(3);
  if (residual > tol)
    throw ResidualFailure("reduce: residual " + r.residual + " exceeds 1e-" + std::to_string(digits - 5) +
                          " for k=" + std::to_string(k) + ", m=" + std::to_string(m));
  r.config = {{"digits", std::to_string(digits)},
              {"normalize_even", normalize_even ? "true" : "false"},
              {"weight", std::to_string(k + 2 * m)}};
  return r;
}

IdentityRecord reduce_identity(int k, int m, int digits, bool normalize_even) {
  return make_record(k, m, corollary_row(k, m), digits, normalize_even);
}

namespace {

// P as (sorted zeta multiset, coefficient) pairs in a deterministic order.
std::vector<std::pair<std::vector<int>, Rational>> p_terms(const SparsePoly& P) {
  std::vector<std::pair<std::vector<int>, Rational>> out;
  for (const auto& [mono, c] : P.terms()) out.emplace_back(zeta_indices(mono), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::string index_text(int ones, int bar) {
  std::string s;
  for (int i = 0; i < ones; ++i) s += "1,";
  return s + "-" + std::to_string(bar);
}

std::string index_latex(int ones, int bar) {
  std::string s;
  if (ones > 2) s = "\\{1\\}^{" + std::to_string(ones) + "}, ";
  else
    for (int i = 0; i < ones; ++i) s += "1, ";
  return "\\zeta(" + s + "\\overline{" + std::to_string(bar) + "})";
}

std::string latex_rational(const Rational& c) {
  const Rational a = c < Rational(0) ? -c : c;
  const std::string p = a.to_fraction();
  const auto slash = p.find('/');
  if (slash == std::string::npos || p.substr(slash + 1) == "1") return p.substr(0, slash);
  return "\\frac{" + p.substr(0, slash) + "}{" + p.substr(slash + 1) + "}";
}

std::string text_rational(const Rational& c) {
  const std::string p = (c < Rational(0) ? -c : c).to_fraction();
  return p.ends_with("/1") ? p.substr(0, p.size() - 2) : p;
}

// Appends " + c*term" or " - c*term" (or the leading form) to out.
void append_term(std::string& out, const Rational& c, const std::string& body, bool latex) {
  const bool neg = c < Rational(0);
  if (out.empty()) out += neg ? "-" : "";
  else out += neg ? " - " : " + ";
  const std::string mag = latex ? latex_rational(c) : text_rational(c);
  if (body.empty()) out += mag;
  else if (mag == "1") out += body;
  else out += mag + (latex ? " " : "*") + body;
}

std::string zeta_product(const std::vector<int>& z, bool latex) {
  std::map<int, int> counts;
  for (int n : z) ++counts[n];
  std::string out;
  for (const auto& [n, e] : counts) {
    if (!out.empty()) out += latex ? " " : "*";
    out += latex ? "\\zeta(" + std::to_string(n) + ")" : "zeta(" + std::to_string(n) + ")";
    if (e > 1) out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return out;
}

std::string render(const IdentityRecord& r, bool latex) {
  std::string lhs = latex ? index_latex(r.k, 2 * r.m) : "zeta(" + index_text(r.k, 2 * r.m) + ")";
  std::string rhs;
  for (const auto& [z, c] : p_terms(r.P)) append_term(rhs, c, zeta_product(z, latex), latex);
  for (const auto& c : r.corrections)
    append_term(rhs, -c.coeff, latex ? index_latex(c.ones, c.bar) : "zeta(" + index_text(c.ones, c.bar) + ")",
                latex);
  if (rhs.empty()) rhs = "0";
  return lhs + " = " + rhs;
}

}  // namespace

std::string to_json(const IdentityRecord& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["m"] = r.m;
  nlohmann::json P = nlohmann::json::array();
  for (const auto& [z, c] : p_terms(r.P)) P.push_back({{"zeta", z}, {"coeff", c.to_fraction()}});
  j["P"] = P;
  nlohmann::json corr = nlohmann::json::array();
  for (const auto& c : r.corrections)
    corr.push_back({{"n", c.n}, {"coeff", c.coeff.to_fraction()}, {"target", {{"ones", c.ones}, {"bar", c.bar}}}});
  j["corrections"] = corr;
  j["residual"] = r.residual;
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [key, v] : r.config) config[key] = v;
  j["config"] = config;
  return j.dump();
}

std::string to_latex(const IdentityRecord& r) { return render(r, true); }
std::string to_text(const IdentityRecord& r) { return render(r, false); }

}  // namespace altzeta
