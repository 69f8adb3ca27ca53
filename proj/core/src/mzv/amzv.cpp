#include "altzeta/mzv/amzv.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace altzeta {

MzvIndex MzvIndex::parse(std::string_view text) {
  MzvIndex idx;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("MzvIndex: cannot parse '" + s + "'");
    }
    if (used != item.size() || v == 0)
      throw std::invalid_argument("MzvIndex: cannot parse '" + s + "'");
    idx.entries.push_back(v);
  }
  if (idx.entries.empty()) throw std::invalid_argument("MzvIndex: empty index");
  return idx;
}

MzvIndex MzvIndex::ones_then_bar(int ones, int last) {
  MzvIndex idx;
  idx.entries.assign(static_cast<std::size_t>(std::max(ones, 0)), 1);
  idx.entries.push_back(-last);
  return idx;
}

int MzvIndex::weight() const {
  int w = 0;
  for (int e : entries) w += std::abs(e);
  return w;
}

bool MzvIndex::convergent() const { return !entries.empty() && entries.back() != 1; }

std::string MzvIndex::to_string() const {
  std::string out;
  for (int e : entries) {
    if (!out.empty()) out += ",";
    out += std::to_string(e);
  }
  return out;
}

int guard_digits(int digits) { return 15 + (digits + 3) / 4; }

Real crvz_sum(const std::vector<Real>& a) {
  const int n = static_cast<int>(a.size());
  const mpfr_prec_t bits = a.empty() ? 128 : a.front().precision();
  Real d = pow(Real(3, bits) + sqrt(Real(8, bits)), n);
  d = (d + Real(1, bits) / d) * Rational(1, 2);
  Real b(-1, bits);
  Real c = -d;
  Real s(0, bits);
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a[static_cast<std::size_t>(k)];
    b = b * Rational(static_cast<long>(k + n) * (k - n), 1) /
        Real(Rational(2 * k + 1, 2) * Rational(k + 1), bits);
  }
  return s / d;
}

Real euler_transform_sum(const std::vector<Real>& a) {
  const mpfr_prec_t bits = a.empty() ? 128 : a.front().precision();
  std::vector<Real> diff = a;
  Real s(0, bits);
  Real scale(Rational(1, 2), bits);
  for (std::size_t j = 0; j < a.size(); ++j) {
    Real t = diff.front() * scale;
    s += (j % 2 == 0) ? t : -t;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
    scale = scale * Rational(1, 2);
  }
  return s;
}

namespace {

bool close(const Real& p, const Real& q, int digits) {
  const mpfr_prec_t bits = std::max(p.precision(), q.precision());
  Real scale = abs(q);
  if (scale < Real(1, bits)) scale = Real(1, bits);
  return abs(p - q) <= pow10(-digits, bits) * scale;
}

}  // namespace

Real accelerate_alternating(const std::function<std::vector<Real>(int count)>& terms, int digits,
                            mpfr_prec_t bits) {
  const int total = digits + guard_digits(digits);
  const int n = static_cast<int>(std::ceil(1.31 * total)) + 5;
  const int n_check = static_cast<int>(std::ceil(1.25 * n));
  auto a = terms(n_check);
  Real fine = crvz_sum(a);
  Real coarse = crvz_sum(std::vector<Real>(a.begin(), a.begin() + n));
  if (close(coarse, fine, digits + 2)) return fine;

  // Euler transform: each term gains about one bit; differencing loses
  // precision, so recompute the terms with room to spare.
  const int m = static_cast<int>(std::ceil(3.33 * total)) + 10;
  const int m_check = static_cast<int>(std::ceil(1.25 * m));
  (void)bits;
  auto e = terms(m_check);
  Real e_fine = euler_transform_sum(e);
  Real e_coarse = euler_transform_sum(std::vector<Real>(e.begin(), e.begin() + m));
  if (close(e_coarse, e_fine, digits + 2)) return e_fine;
  throw AccelerationError("accelerate_alternating: no convergence at " + std::to_string(digits) +
                          " digits");
}

namespace {

void check_digits(int digits) {
  if (digits < 1 || digits > kMaxDigits)
    throw std::domain_error("digits must lie in [1, " + std::to_string(kMaxDigits) + "]");
}

/// Outer terms a'_N = P(N) / N^{|k_d|}, where P(N) is the sum over
/// 0 < n_1 < ... < n_{d-1} < N of the unbarred leading entries, for
/// N = 1..count.
std::vector<Real> outer_terms(const MzvIndex& idx, int count, mpfr_prec_t bits) {
  const int d = idx.depth();
  std::vector<Real> inner(static_cast<std::size_t>(d), Real(0, bits));
  inner[0] = Real(1, bits);
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long N = 1; N <= count; ++N) {
    Real nr(N, bits);
    out.push_back(inner[static_cast<std::size_t>(d - 1)] / pow(nr, std::abs(idx.entries.back())));
    for (int j = d - 1; j >= 1; --j)
      inner[static_cast<std::size_t>(j)] +=
          inner[static_cast<std::size_t>(j - 1)] / pow(nr, idx.entries[static_cast<std::size_t>(j - 1)]);
  }
  return out;
}

void check_shape(const MzvIndex& idx) {
  if (idx.entries.empty()) throw std::invalid_argument("eval_amzv: empty index");
  if (!idx.convergent())
    throw DivergentIndex("eval_amzv: index (" + idx.to_string() + ") diverges: last entry is 1");
  if (idx.depth() == 1) return;
  bool leading_unbarred = std::all_of(idx.entries.begin(), idx.entries.end() - 1,
                                      [](int e) { return e > 0; });
  if (!leading_unbarred || idx.entries.back() > 0)
    throw UnsupportedIndex("eval_amzv: index (" + idx.to_string() +
                           ") is not of the form (k_1,...,k_{d-1}, bar k_d) with k_i unbarred");
}

}  // namespace

Real eval_amzv(const MzvIndex& index, int digits) {
  check_digits(digits);
  check_shape(index);
  if (index.depth() == 1 && index.entries[0] > 0) return eval_zeta(index.entries[0], digits);
  const mpfr_prec_t bits = bits_for_digits(digits, guard_digits(digits));
  // sum_{N>=1} (-1)^N a'_N = -sum_{k>=0} (-1)^k a'_{k+1}
  auto terms = [&](int count) { return outer_terms(index, count, bits); };
  return -accelerate_alternating(terms, digits, bits);
}

Bracket bracket_amzv(const MzvIndex& index, long cutoff) {
  check_shape(index);
  if (index.entries.back() > 0) throw UnsupportedIndex("bracket_amzv: last entry must be barred");
  const mpfr_prec_t bits = 128;
  auto a = outer_terms(index, static_cast<int>(cutoff + 1), bits);
  Real s(0, bits);
  for (long N = 1; N <= cutoff; ++N) {
    const auto& t = a[static_cast<std::size_t>(N - 1)];
    if (N % 2 == 0) s += t;
    else s -= t;
  }
  for (long N = cutoff / 2; N < cutoff + 1; ++N)
    if (a[static_cast<std::size_t>(N)] > a[static_cast<std::size_t>(N - 1)])
      throw AccelerationError("bracket_amzv: outer terms not monotone near the cutoff");
  Real s_next = s + ((cutoff + 1) % 2 == 0 ? a.back() : -a.back());
  if (s < s_next) return {s, s_next};
  return {s_next, s};
}

Real eval_zeta(int n, int digits) {
  check_digits(digits);
  if (n == 1) throw ParameterPole("eval_zeta: pole at 1");
  if (n < 1) throw std::domain_error("eval_zeta: argument must be >= 2");
  Real r(bits_for_digits(digits, guard_digits(digits)));
  mpfr_zeta_ui(r.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  return r;
}

namespace {

void check_gamma_pole(const Real& z, const char* what) {
  if (mpfr_integer_p(z.get()) && z.sign() <= 0)
    throw ParameterPole(std::string(what) + ": pole at non-positive integer");
}

}  // namespace

Real eval_gamma(const Real& z, int digits) {
  check_digits(digits);
  check_gamma_pole(z, "eval_gamma");
  Real r(bits_for_digits(digits, guard_digits(digits)));
  mpfr_gamma(r.get(), z.get(), MPFR_RNDN);
  return r;
}

Real eval_digamma(const Real& z, int digits) {
  check_digits(digits);
  check_gamma_pole(z, "eval_digamma");
  Real r(bits_for_digits(digits, guard_digits(digits)));
  mpfr_digamma(r.get(), z.get(), MPFR_RNDN);
  return r;
}

Real eval_2f1_at_minus1(const Real& a, const Real& b, const Real& c, int digits) {
  check_digits(digits);
  if (mpfr_integer_p(c.get()) && c.sign() <= 0)
    throw ParameterPole("eval_2f1_at_minus1: c is a non-positive integer");
  const mpfr_prec_t bits = bits_for_digits(digits, guard_digits(digits));
  Real aa = a, bb = c - b, cc = c;
  mpfr_prec_round(aa.get(), bits, MPFR_RNDN);
  mpfr_prec_round(bb.get(), bits, MPFR_RNDN);
  mpfr_prec_round(cc.get(), bits, MPFR_RNDN);
  const Real eps = pow10(-(digits + guard_digits(digits)), bits);
  Real term(1, bits), sum(1, bits);
  for (long j = 0; j < 1000000; ++j) {
    Real ratio = (aa + j) * (bb + j) / ((cc + j) * Real(j + 1, bits)) * Rational(1, 2);
    term = term * ratio;
    sum += term;
    if (term.is_zero()) break;
    if (j > 10 && abs(ratio) < Real(Rational(3, 4), bits) && abs(term) < eps * abs(sum)) break;
  }
  Real two(2, bits);
  return pow(two, -aa) * sum;
}

std::vector<std::vector<Real>> hypergeometric_generating_coefficients(int k_max, int n_max,
                                                                      int digits) {
  check_digits(digits);
  if (k_max < 0 || n_max < 0) throw std::domain_error("generating coefficients: negative order");
  const int total = digits + guard_digits(digits);
  const mpfr_prec_t bits = bits_for_digits(total, 10);
  using Grid = std::vector<std::vector<Real>>;
  auto zeros = [&] { return Grid(k_max + 1, std::vector<Real>(n_max + 1, Real(0, bits))); };

  std::vector<Real> poch(static_cast<std::size_t>(k_max) + 1, Real(0, bits));  // (x)_j
  poch[0] = Real(1, bits);
  std::vector<Real> inv(static_cast<std::size_t>(n_max) + 1, Real(0, bits));  // 1/(1-s)_j
  inv[0] = Real(1, bits);
  Grid sum = zeros();
  Real weight(1, bits);  // 2^{-j}
  const Real eps = pow10(-total, bits);
  for (int j = 0; j < 100000; ++j) {
    Real largest(0, bits);
    for (int k = 0; k <= k_max; ++k)
      for (int n = 0; n <= n_max; ++n) {
        Real t = poch[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(n)] * weight;
        sum[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] += t;
        if (abs(t) > largest) largest = abs(t);
      }
    if (j > 20 && largest < eps) break;
    // (x)_{j+1} = (x)_j (x + j)
    for (int k = k_max; k >= 0; --k) {
      Real next = poch[static_cast<std::size_t>(k)] * Real(j, bits);
      if (k > 0) next += poch[static_cast<std::size_t>(k - 1)];
      poch[static_cast<std::size_t>(k)] = next;
    }
    // 1/(1-s)_{j+1} = 1/(1-s)_j * sum_r s^r / (j+1)^{r+1}
    const Real q = Real(1, bits) / Real(j + 1, bits);
    std::vector<Real> next(static_cast<std::size_t>(n_max) + 1, Real(0, bits));
    for (int n = 0; n <= n_max; ++n) {
      Real acc(0, bits);
      Real qp = q;
      for (int r = 0; r <= n; ++r) {
        acc += inv[static_cast<std::size_t>(n - r)] * qp;
        qp = qp * q;
      }
      next[static_cast<std::size_t>(n)] = acc;
    }
    inv = std::move(next);
    weight = weight * Rational(1, 2);
  }
  // 1 - 2^{-x} * sum
  std::vector<Real> two_pow(static_cast<std::size_t>(k_max) + 1, Real(0, bits));
  const Real l2 = -Real::log2(bits);
  two_pow[0] = Real(1, bits);
  for (int k = 1; k <= k_max; ++k)
    two_pow[static_cast<std::size_t>(k)] = two_pow[static_cast<std::size_t>(k - 1)] * l2 / k;
  Grid out = zeros();
  for (int k = 0; k <= k_max; ++k)
    for (int n = 0; n <= n_max; ++n) {
      Real acc(0, bits);
      for (int i = 0; i <= k; ++i)
        acc += two_pow[static_cast<std::size_t>(i)] * sum[static_cast<std::size_t>(k - i)][static_cast<std::size_t>(n)];
      out[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] = -acc;
    }
  out[0][0] += Real(1, bits);
  return out;
}

}  // namespace altzeta
