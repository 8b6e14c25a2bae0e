#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "subpack/closed_form.hpp"
#include "subpack/genfunc.hpp"
#include "subpack/numeric.hpp"
#include "subpack/params.hpp"
#include "subpack/recursion.hpp"

namespace subpack {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kRootOfUnityTolerance = 1e-12;

enum class Mode { exact, floating };

inline const char* to_string(Mode m) { return m == Mode::exact ? "exact" : "floating"; }

/// Outcome of checking one identity on one instance.
///
/// Exact reports pass only with a zero residual. Floating reports pass when
/// the residual is within tolerance; `relative` is set when the residual was
/// normalized by a magnitude larger than one. A non-finite residual is
/// recorded as the largest finite double and always fails.
struct VerificationReport {
  std::string identity_name;
  std::string instance;
  Mode mode = Mode::exact;
  double residual = 0.0;
  bool relative = false;
  double tolerance = 0.0;
  bool passed = false;

  static VerificationReport exact(std::string name, std::string instance, const Rational& residual) {
    VerificationReport r;
    r.identity_name = std::move(name);
    r.instance = std::move(instance);
    r.mode = Mode::exact;
    r.residual = to_double(abs(residual));
    if (!std::isfinite(r.residual)) r.residual = std::numeric_limits<double>::max();
    r.passed = residual == 0;
    return r;
  }

  static VerificationReport floating(std::string name, std::string instance, double residual,
                                     double tolerance, bool relative) {
    VerificationReport r;
    r.identity_name = std::move(name);
    r.instance = std::move(instance);
    r.mode = Mode::floating;
    r.tolerance = tolerance;
    r.relative = relative;
    if (std::isfinite(residual)) {
      r.residual = residual;
      r.passed = residual <= tolerance;
    } else {
      r.residual = std::numeric_limits<double>::max();
      r.passed = false;
    }
    return r;
  }
};

namespace detail {

// Tracks the worst normalized deviation |computed - expected| / max(1, scale).
class ResidualMeter {
 public:
  void add(Complex computed, Complex expected, double scale) {
    const double denom = std::max(1.0, scale);
    if (denom > 1.0) relative_ = true;
    const double r = std::abs(computed - expected) / denom;
    if (!std::isfinite(r) || r > worst_) worst_ = std::isfinite(r) ? r : std::numeric_limits<double>::infinity();
  }
  void add(Complex computed, Complex expected) { add(computed, expected, std::abs(expected)); }

  double worst() const { return worst_; }
  bool relative() const { return relative_; }

 private:
  double worst_ = 0.0;
  bool relative_ = false;
};

inline Complex ipow(Complex z, std::int64_t e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  Complex result = 1.0;
  while (e != 0) {
    if (e & 1) result *= z;
    e >>= 1;
    if (e != 0) z *= z;
  }
  return result;
}

}  // namespace detail

/// omega_m = exp(i 2 pi m / D).
inline Complex root_of_unity(std::int64_t m, std::int64_t D) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(D);
  return {std::cos(angle), std::sin(angle)};
}

/// Positive real s with s^D = N.
inline double positive_root(std::int64_t N, std::int64_t D) {
  return std::exp(std::log(static_cast<double>(N)) / static_cast<double>(D));
}

/// Roots of (1 + 1/r)^D = N and the coefficients that fit the seed values,
/// i.e. the pieces of M_t = sum_m c_m r_m^t.
struct CharacteristicData {
  std::vector<Complex> u;  // omega_m s
  std::vector<Complex> r;  // 1 / (u_m - 1)
  std::vector<Complex> c;  // (N-1)^(K-D) / D * (u_m - 1)^(D-1) / u_m^(D-1)
};

inline CharacteristicData characteristic_data(const Parameters& p) {
  const auto D = p.D();
  const double s = positive_root(p.N(), D);
  const double seed = std::pow(static_cast<double>(p.N() - 1), static_cast<double>(p.K() - D));
  CharacteristicData data;
  for (std::int64_t m = 0; m < D; ++m) {
    const Complex u = root_of_unity(m, D) * s;
    data.u.push_back(u);
    data.r.push_back(1.0 / (u - 1.0));
    data.c.push_back(seed / static_cast<double>(D) * detail::ipow((u - 1.0) / u, D - 1));
  }
  return data;
}

inline VerificationReport verify_reversed_recursion(const Parameters& p) {
  const auto table = solve_recursion(p);
  const ReversedView M(table);
  const auto weights = binomial_row(p.D());
  Rational worst = 0;
  for (std::int64_t t = p.D(); t <= p.K() - 1; ++t) {
    Rational rhs = 0;
    for (std::int64_t i = 0; i <= p.D(); ++i) rhs += weights[i] * M[t - i];
    const Rational diff = abs(Rational(p.N()) * M[t] - rhs);
    if (diff > worst) worst = diff;
  }
  return VerificationReport::exact("reversed_recursion", p.to_string(), worst);
}

/// sum_m omega_m^P is D when D | P and 0 otherwise. Residual is absolute.
inline VerificationReport verify_root_of_unity_sum(std::int64_t D, std::int64_t P,
                                                   double tolerance = kRootOfUnityTolerance) {
  Complex sum = 0.0;
  for (std::int64_t m = 0; m < D; ++m) sum += detail::ipow(root_of_unity(m, D), P);
  const double expected = (P % D == 0) ? static_cast<double>(D) : 0.0;
  detail::ResidualMeter meter;
  meter.add(sum, expected, 1.0);
  return VerificationReport::floating("root_of_unity_sum",
                                      "D=" + std::to_string(D) + ",P=" + std::to_string(P),
                                      meter.worst(), tolerance, meter.relative());
}

inline VerificationReport verify_characteristic_roots(const Parameters& p,
                                                      double tolerance = kDefaultTolerance) {
  const auto data = characteristic_data(p);
  const double N = static_cast<double>(p.N());
  detail::ResidualMeter meter;
  for (const auto& r : data.r) meter.add(detail::ipow(1.0 + 1.0 / r, p.D()), N);
  return VerificationReport::floating("characteristic_roots", p.to_string(), meter.worst(), tolerance,
                                      meter.relative());
}

struct GeneralSolutionTerm {
  Complex value;        // sum_m c_m r_m^t
  double largest_term;  // max_m |c_m r_m^t|
};

/// M_t = sum_m c_m r_m^t for t in [0:count-1].
inline std::vector<GeneralSolutionTerm> general_solution(const CharacteristicData& data, std::int64_t count) {
  std::vector<GeneralSolutionTerm> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t t = 0; t < count; ++t) {
    GeneralSolutionTerm term{0.0, 0.0};
    for (std::size_t m = 0; m < data.r.size(); ++m) {
      const Complex x = data.c[m] * detail::ipow(data.r[m], t);
      term.value += x;
      term.largest_term = std::max(term.largest_term, std::abs(x));
    }
    out.push_back(term);
  }
  return out;
}

/// Compares the general solution with the seeds and with the exact reversed
/// table for every t in [0:K-1]. Where the exact value is zero the deviation
/// is measured against the largest summand.
inline VerificationReport verify_initial_conditions(const Parameters& p,
                                                    double tolerance = kDefaultTolerance) {
  const auto values = general_solution(characteristic_data(p), p.K());
  const auto table = solve_recursion(p);
  const ReversedView M(table);
  const Rational seed = ipow(Rational(p.N() - 1), static_cast<std::uint64_t>(p.K() - p.D()));

  detail::ResidualMeter meter;
  meter.add(values[0].value, to_double(seed));
  for (std::int64_t t = 0; t < p.K(); ++t) {
    const auto& [value, largest_term] = values[static_cast<std::size_t>(t)];
    const double target = (t >= 1 && t < p.D()) ? 0.0 : to_double(M[t]);
    meter.add(value, target, target == 0.0 ? largest_term : std::abs(target));
  }
  return VerificationReport::floating("initial_conditions", p.to_string(), meter.worst(), tolerance,
                                      meter.relative());
}

/// Both binomial sums checked exactly at a rational sample point:
///   sum_{t=0}^{K-1} C(K,t) r^t = (1+r)^K - r^K
///   sum_{t=D}^{K-1} C(K-D,t-D) r^t = r^D ((1+r)^(K-D) - r^(K-D))
inline VerificationReport verify_binomial_identities(const Rational& r, std::int64_t K, std::int64_t D) {
  if (!(K > D && D > 1)) throw DomainError("requires K > D > 1");
  const auto full = binomial_row(K);
  const auto head = binomial_row(K - D);
  const auto uK = static_cast<std::uint64_t>(K);
  const auto uD = static_cast<std::uint64_t>(D);

  Rational lhs1 = 0;
  for (std::int64_t t = 0; t <= K - 1; ++t) lhs1 += full[t] * ipow(r, static_cast<std::uint64_t>(t));
  const Rational rhs1 = ipow(Rational(1) + r, uK) - ipow(r, uK);

  Rational lhs2 = 0;
  for (std::int64_t t = D; t <= K - 1; ++t) lhs2 += head[t - D] * ipow(r, static_cast<std::uint64_t>(t));
  const Rational rhs2 = ipow(r, uD) * (ipow(Rational(1) + r, uK - uD) - ipow(r, uK - uD));

  const Rational d1 = abs(lhs1 - rhs1);
  const Rational d2 = abs(lhs2 - rhs2);
  return VerificationReport::exact(
      "binomial_identities", "r=" + to_string(r) + ",K=" + std::to_string(K) + ",D=" + std::to_string(D),
      d1 > d2 ? d1 : d2);
}

/// (N/D) sum_m c_m (N-1) r_m^D (1+r_m)^(K-D) against the exact L.
inline VerificationReport verify_intermediate_L(const Parameters& p, double tolerance = kDefaultTolerance) {
  const auto data = characteristic_data(p);
  const double N = static_cast<double>(p.N());
  Complex sum = 0.0;
  for (std::size_t m = 0; m < data.r.size(); ++m) {
    const Complex r = data.r[m];
    sum += data.c[m] * (N - 1.0) * detail::ipow(r, p.D()) * detail::ipow(1.0 + r, p.K() - p.D());
  }
  sum *= N / static_cast<double>(p.D());
  detail::ResidualMeter meter;
  meter.add(sum, to_double(normalized_L_via_recursion(p)));
  return VerificationReport::floating("intermediate_L", p.to_string(), meter.worst(), tolerance,
                                      meter.relative());
}

/// The two root-of-unity sums for L:
///   N (N-1)^T / D^2 * sum_m u_m^(T-D) / (u_m - 1)^T
///   (N-1)^T / D^2 * sum_m (1 - omega_m / s)^(-T)
inline VerificationReport verify_root_unity_forms(const Parameters& p, double tolerance = kDefaultTolerance) {
  const auto D = p.D();
  const auto T = derive_shape(p).T;
  const double N = static_cast<double>(p.N());
  const double s = positive_root(p.N(), D);
  const double dd = static_cast<double>(D);
  const double scale = std::pow(N - 1.0, static_cast<double>(T)) / (dd * dd);

  Complex first = 0.0;
  Complex second = 0.0;
  for (std::int64_t m = 0; m < D; ++m) {
    const Complex omega = root_of_unity(m, D);
    const Complex u = omega * s;
    first += detail::ipow(u, T - D) / detail::ipow(u - 1.0, T);
    second += detail::ipow(1.0 - omega / s, -T);
  }
  first *= N * scale;
  second *= scale;

  const double L = to_double(normalized_L_via_recursion(p));
  detail::ResidualMeter meter;
  meter.add(first, L);
  meter.add(second, L);
  return VerificationReport::floating("root_unity_forms", p.to_string(), meter.worst(), tolerance,
                                      meter.relative());
}

/// (1 - 1/N) / (1 - omega_m / s) = sum_{t=0}^{D-1} omega_m^t s^(-t).
inline VerificationReport verify_ratio_identity(std::int64_t D, std::int64_t N, std::int64_t m,
                                                double tolerance = kDefaultTolerance) {
  if (D < 2 || N < 2 || m < 0 || m >= D) throw DomainError("requires D >= 2, N >= 2, 0 <= m < D");
  const Complex omega = root_of_unity(m, D);
  const double s = positive_root(N, D);
  const Complex lhs = (1.0 - 1.0 / static_cast<double>(N)) / (1.0 - omega / s);
  Complex rhs = 0.0;
  for (std::int64_t t = 0; t < D; ++t) rhs += detail::ipow(omega / s, t);
  detail::ResidualMeter meter;
  meter.add(lhs, rhs);
  return VerificationReport::floating(
      "ratio_identity", "D=" + std::to_string(D) + ",N=" + std::to_string(N) + ",m=" + std::to_string(m),
      meter.worst(), tolerance, meter.relative());
}

/// (1/D) sum_m (1 - 1/N)^T / (1 - omega_m / s)^T = sum_{k=0}^{S} a_{kD} N^(-k),
/// with the right side summed exactly and rounded once.
inline VerificationReport verify_filter_average(std::int64_t D, std::int64_t T, std::int64_t N,
                                                double tolerance = kDefaultTolerance) {
  if (D < 2 || T < 1 || N < 2) throw DomainError("requires D >= 2, T >= 1, N >= 2");
  const double s = positive_root(N, D);
  const double base = std::pow(1.0 - 1.0 / static_cast<double>(N), static_cast<double>(T));
  Complex lhs = 0.0;
  for (std::int64_t m = 0; m < D; ++m) lhs += base / detail::ipow(1.0 - root_of_unity(m, D) / s, T);
  lhs /= static_cast<double>(D);

  const auto filtered = filtered_coefficients(expand_coefficients(D, T));
  Rational rhs = 0;
  for (std::size_t k = 0; k < filtered.size(); ++k) {
    rhs += Rational(filtered[k], ipow(BigInt(N), k));
  }
  detail::ResidualMeter meter;
  meter.add(lhs, to_double(rhs));
  return VerificationReport::floating(
      "filter_average", "D=" + std::to_string(D) + ",T=" + std::to_string(T) + ",N=" + std::to_string(N),
      meter.worst(), tolerance, meter.relative());
}

/// Exact agreement between the recursion oracle and the closed-form polynomial.
inline VerificationReport verify_closed_form_equivalence(const Parameters& p) {
  return VerificationReport::exact("closed_form_equivalence", p.to_string(),
                                   normalized_L_closed_form(p) - normalized_L_via_recursion(p));
}

}  // namespace subpack
