#pragma once

#include <algorithm>
#include <string>
#include <utility>

namespace dnq {

/// Outcome of one numeric check: pass iff max_deviation <= tolerance.
struct Verdict {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string detail;  // e.g. the target operator, "4*I"

  Verdict() = default;
  Verdict(std::string check, double deviation, double tol, std::string note = {})
      : name(std::move(check)), max_deviation(deviation), tolerance(tol),
        pass(deviation <= tol), detail(std::move(note)) {}

  /// Folds in another observation (max reduction, order independent).
  void observe(double deviation) {
    max_deviation = std::max(max_deviation, deviation);
    pass = max_deviation <= tolerance;
  }
};

}  // namespace dnq
