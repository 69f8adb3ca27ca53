#include "altzeta/verify/report.hpp"

#include <cmath>

#include "json.hpp"

namespace altzeta {

void CheckReport::add(SubCheck c) {
  if (subchecks.empty()) passed = true;
  if (!c.passed) {
    passed = false;
    if (!first_mismatch && c.mismatch) first_mismatch = c.mismatch;
  }
  subchecks.push_back(std::move(c));
}

namespace {

nlohmann::ordered_json mismatch_json(const std::optional<Mismatch>& m) {
  if (!m) return nullptr;
  return {{"x_order", m->x_order}, {"s_exponent", m->s_exponent}, {"monomial", m->monomial},
          {"lhs", m->lhs},         {"rhs", m->rhs}};
}

}  // namespace

std::string to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["anchor"] = r.anchor;
  j["status"] = r.passed ? "pass" : "fail";
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["first_mismatch"] = mismatch_json(r.first_mismatch);
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (const auto& c : r.subchecks) {
    nlohmann::ordered_json s;
    s["name"] = c.name;
    s["status"] = c.passed ? "pass" : "fail";
    if (c.mismatch) s["mismatch"] = mismatch_json(c.mismatch);
    if (!c.detail.empty()) s["detail"] = c.detail;
    subs.push_back(s);
  }
  j["subchecks"] = subs;
  if (!r.detail.empty()) j["detail"] = r.detail;
  j["seconds"] = std::round(r.seconds * 1000) / 1000;
  return j.dump();
}

std::optional<Mismatch> first_mismatch(const SeriesXS& lhs, const SeriesXS& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  for (int n = 0; n <= order; ++n) {
    if (lhs[n] == rhs[n]) continue;
    const LaurentPoly d = lhs[n] - rhs[n];
    for (const auto& [e, poly] : d.terms()) {
      if (poly.is_zero()) continue;
      const auto& [mono, c] = *poly.terms().begin();
      const Rational l = lhs[n].coeff(e).coefficient(mono);
      const Rational r = rhs[n].coeff(e).coefficient(mono);
      return Mismatch{n, e, mono.empty() ? "1" : mono.to_string(), l.to_fraction(), r.to_fraction()};
    }
    return Mismatch{n, 0, "1", lhs[n].to_string(), rhs[n].to_string()};
  }
  return std::nullopt;
}

SubCheck compare(const std::string& name, const SeriesXS& lhs, const SeriesXS& rhs) {
  SubCheck c{name, true, first_mismatch(lhs, rhs), {}};
  c.passed = !c.mismatch.has_value();
  if (lhs.order() != rhs.order()) {
    c.passed = false;
    c.detail = "orders differ: " + std::to_string(lhs.order()) + " vs " + std::to_string(rhs.order());
  }
  return c;
}

}  // namespace altzeta
