#pragma once

#include <string>

#include "altzeta/algebra/laurent.hpp"
#include "altzeta/algebra/sparse_poly.hpp"
#include "altzeta/algebra/xseries.hpp"

namespace altzeta {

/// Evaluation attached to an operator and applied only when it acts.
enum class Substitution {
  None,
  BEqualsS,         // |_{b=s}
  AMinusSBEqualsS,  // |_{a=-s, b=s}
  SEqualsB,         // |_{s=b}, the trailing evaluation of L1
};

std::string to_string(Substitution s);

/// Raised when two independently computed sides of an identity differ.
struct IdentityMismatch : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// x-series whose coefficients are polynomials in y, da, db only.
class PreLaplaceSeries {
 public:
  explicit PreLaplaceSeries(XSeries<SparsePoly> body);
  const XSeries<SparsePoly>& body() const { return body_; }
  int order() const { return body_.order(); }

 private:
  XSeries<SparsePoly> body_;
};

/// x-series over Laurent polynomials in s whose coefficients are polynomials
/// in da, db (and ds for the printed form of L1), with a substitution tag.
struct OperatorSeries {
  XSeries<LaurentPoly> body;
  Substitution substitution = Substitution::None;

  int order() const { return body.order(); }
  const LaurentPoly& operator[](int n) const { return body[n]; }

  friend OperatorSeries operator+(const OperatorSeries& p, const OperatorSeries& q);
  friend bool operator==(const OperatorSeries& p, const OperatorSeries& q) {
    return p.substitution == q.substitution && p.body == q.body;
  }
};

/// y^n -> n! s^{-(n+1)} coefficientwise; da, db pass through. Throws
/// WindowError when an s-power would fall below `window.lo`.
OperatorSeries formal_laplace(const PreLaplaceSeries& f, SWindow window);

/// s * L_y{f}(s) with the given substitution tag.
OperatorSeries s_laplace(const PreLaplaceSeries& f, SWindow window, Substitution subst);

enum class OutputFormat { Text, Latex, Json };

/// One operator coefficient in partial-derivative notation. Terms are grouped
/// by descending da-degree; inside a group, terms with db come first in
/// ascending db-degree and the db-free term last. Text uses Unicode
/// (e.g. "∂_a(∂_b)²/(8s)"), Latex uses \partial and \frac.
std::string format_operator_coefficient(const LaurentPoly& c, OutputFormat format);

}  // namespace altzeta
