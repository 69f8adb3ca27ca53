#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altzeta/operators/action.hpp"

namespace altzeta {

/// First coefficient where two sides disagree.
struct Mismatch {
  int x_order = 0;
  int s_exponent = 0;
  std::string monomial;  // monomial of the coefficient ring, "1" for scalars
  std::string lhs;
  std::string rhs;
};

struct SubCheck {
  std::string name;
  bool passed = false;
  std::optional<Mismatch> mismatch;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::string anchor;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<Mismatch> first_mismatch;
  std::vector<SubCheck> subchecks;
  std::string detail;
  double seconds = 0;

  /// Adds a sub-check and folds its status into the report.
  void add(SubCheck c);
  void param(const std::string& key, long value) { params.emplace_back(key, std::to_string(value)); }
  void param(const std::string& key, std::string value) { params.emplace_back(key, std::move(value)); }
};

/// One JSON object on a single line, keys in a fixed order.
std::string to_json(const CheckReport& r);

/// Lowest x-order, then lowest s-exponent, then smallest monomial where the
/// sides differ; nullopt when they agree on every coefficient known to both.
std::optional<Mismatch> first_mismatch(const SeriesXS& lhs, const SeriesXS& rhs);

/// Compares two series and records the result as a sub-check.
SubCheck compare(const std::string& name, const SeriesXS& lhs, const SeriesXS& rhs);

/// Wall-clock timer for report durations.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace altzeta
