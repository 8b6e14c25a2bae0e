#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "subpack/parallel.hpp"
#include "subpack/sweep.hpp"
#include "subpack/verifier.hpp"

namespace subpack {

struct SuiteOptions {
  Grid grid{{2, 16}, {3, 20}, {2, 19}};
  // Overrides every floating tolerance when set.
  std::optional<double> tolerance;
  // Floating identities only run on cells with N and K within these bounds.
  std::int64_t floating_max_N = 16;
  std::int64_t floating_max_K = 20;
  std::int64_t root_sum_max_D = 12;
  std::int64_t root_sum_max_P = 100;
  int random_rationals = 100;
  std::uint64_t seed = 20240601;
  unsigned jobs = std::thread::hardware_concurrency();
};

/// Worst case of one identity across the whole grid.
struct IdentitySummary {
  std::string name;
  Mode mode = Mode::exact;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  double worst_residual = 0.0;
  std::string worst_instance;
  double tolerance = 0.0;
  bool relative = false;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct SuiteResult {
  std::vector<IdentitySummary> identities;
  std::int64_t cells = 0;
  std::int64_t skipped = 0;
  std::int64_t floating_cells = 0;

  bool passed() const {
    for (const auto& s : identities)
      if (!s.passed()) return false;
    return true;
  }
};

inline std::vector<Rational> binomial_sample_points(std::int64_t K, std::int64_t D, int random_count,
                                                    std::uint64_t seed) {
  std::vector<Rational> points{Rational(0), Rational(1), Rational(-1), Rational(2, 3), Rational(-5, 7)};
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(K) << 32) ^ static_cast<std::uint64_t>(D));
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 30);
  for (int i = 0; i < random_count; ++i) points.emplace_back(num(rng), den(rng));
  return points;
}

namespace detail {

inline const std::vector<std::string>& identity_order() {
  static const std::vector<std::string> order{
      "closed_form_equivalence", "reversed_recursion", "binomial_identities",
      "root_of_unity_sum",       "characteristic_roots", "initial_conditions",
      "intermediate_L",          "root_unity_forms",     "ratio_identity",
      "filter_average"};
  return order;
}

inline void absorb(IdentitySummary& s, const VerificationReport& r) {
  s.mode = r.mode;
  s.tolerance = r.tolerance;
  s.relative = s.relative || r.relative;
  ++s.checks;
  if (s.checks == 1 || r.residual > s.worst_residual) {
    s.worst_residual = r.residual;
    s.worst_instance = r.instance;
  }
  if (!r.passed) {
    if (s.failures == 0) s.first_failure = r.instance;
    ++s.failures;
  }
}

}  // namespace detail

inline SuiteResult run_suite(const SuiteOptions& opt) {
  const double tol = opt.tolerance.value_or(kDefaultTolerance);
  const double root_tol = opt.tolerance.value_or(kRootOfUnityTolerance);
  const auto cells = enumerate_grid(opt.grid);

  // One bucket of reports per work item; merged in a fixed order afterwards.
  std::vector<std::vector<VerificationReport>> buckets(cells.valid.size());
  parallel_for(
      cells.valid.size(),
      [&](std::size_t i) {
        const auto& p = cells.valid[i];
        auto& out = buckets[i];
        out.push_back(verify_closed_form_equivalence(p));
        out.push_back(verify_reversed_recursion(p));
        if (p.N() > opt.floating_max_N || p.K() > opt.floating_max_K) return;
        out.push_back(verify_characteristic_roots(p, tol));
        out.push_back(verify_initial_conditions(p, tol));
        out.push_back(verify_intermediate_L(p, tol));
        out.push_back(verify_root_unity_forms(p, tol));
        out.push_back(verify_filter_average(p.D(), derive_shape(p).T, p.N(), tol));
        for (std::int64_t m = 0; m < p.D(); ++m) out.push_back(verify_ratio_identity(p.D(), p.N(), m, tol));
      },
      opt.jobs);

  // Binomial identities depend only on (K, D).
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const auto& p : cells.valid)
    if (p.N() == cells.valid.front().N()) pairs.emplace_back(p.K(), p.D());
  std::vector<std::vector<VerificationReport>> binomial_buckets(pairs.size());
  parallel_for(
      pairs.size(),
      [&](std::size_t i) {
        const auto [K, D] = pairs[i];
        for (const auto& r : binomial_sample_points(K, D, opt.random_rationals, opt.seed))
          binomial_buckets[i].push_back(verify_binomial_identities(r, K, D));
      },
      opt.jobs);

  std::vector<VerificationReport> root_sums;
  for (std::int64_t D = 2; D <= opt.root_sum_max_D; ++D)
    for (std::int64_t P = -opt.root_sum_max_P; P <= opt.root_sum_max_P; ++P)
      root_sums.push_back(verify_root_of_unity_sum(D, P, root_tol));

  std::map<std::string, IdentitySummary> by_name;
  auto take = [&](const VerificationReport& r) {
    auto& s = by_name[r.identity_name];
    s.name = r.identity_name;
    detail::absorb(s, r);
  };
  SuiteResult result;
  result.cells = static_cast<std::int64_t>(cells.valid.size());
  result.skipped = cells.skipped;
  for (const auto& b : buckets) {
    if (b.size() > 2) ++result.floating_cells;
    for (const auto& r : b) take(r);
  }
  for (const auto& b : binomial_buckets)
    for (const auto& r : b) take(r);
  for (const auto& r : root_sums) take(r);

  for (const auto& name : detail::identity_order()) {
    if (auto it = by_name.find(name); it != by_name.end()) result.identities.push_back(it->second);
  }
  return result;
}

}  // namespace subpack
