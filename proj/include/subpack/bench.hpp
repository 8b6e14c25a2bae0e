#pragma once

#include <chrono>
#include <cstdint>

#include "subpack/closed_form.hpp"
#include "subpack/recursion.hpp"

namespace subpack {

struct BenchResult {
  std::int64_t repetitions = 0;
  double recursion_seconds = 0.0;  // mean wall time per evaluation
  double closed_form_seconds = 0.0;
  std::int64_t mismatches = 0;
  Rational L;
};

/// Times both evaluation paths and compares their outputs on every repetition.
inline BenchResult run_bench(const Parameters& p, std::int64_t repetitions) {
  using clock = std::chrono::steady_clock;
  BenchResult res;
  res.repetitions = repetitions;
  clock::duration rec_total{}, closed_total{};
  for (std::int64_t i = 0; i < repetitions; ++i) {
    auto t0 = clock::now();
    const Rational via_recursion = normalized_L_via_recursion(p);
    auto t1 = clock::now();
    const Rational via_closed = normalized_L_closed_form(p);
    auto t2 = clock::now();
    rec_total += t1 - t0;
    closed_total += t2 - t1;
    if (via_recursion != via_closed) ++res.mismatches;
    res.L = via_closed;
  }
  if (repetitions > 0) {
    const double n = static_cast<double>(repetitions);
    res.recursion_seconds = std::chrono::duration<double>(rec_total).count() / n;
    res.closed_form_seconds = std::chrono::duration<double>(closed_total).count() / n;
  }
  return res;
}

}  // namespace subpack
