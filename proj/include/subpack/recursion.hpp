#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "subpack/numeric.hpp"
#include "subpack/params.hpp"

namespace subpack {

/// Exact solution L_1, ..., L_K of the backward recursion
///
///   L_K = (N-1)^(K-D),   L_{K-D+1} = ... = L_{K-1} = 0,
///   (N-1) L_j = sum_{i=1}^{D} C(D,i) L_{i+j},   j = K-D, ..., 1.
///
/// Indexing at the public boundary is 1-based: at(j) is L_j.
class SequenceTable {
 public:
  SequenceTable(Parameters params, std::vector<Rational> values)
      : params_(params), values_(std::move(values)) {}

  const Parameters& params() const { return params_; }

  const Rational& at(std::int64_t j) const {
    if (j < 1 || j > params_.K()) throw std::out_of_range("SequenceTable index outside [1:K]");
    return values_[static_cast<std::size_t>(j - 1)];
  }

  // values()[j - 1] is L_j.
  std::span<const Rational> values() const { return values_; }

 private:
  Parameters params_;
  std::vector<Rational> values_;
};

// M_t = L_{K-t} for t in [0:K-1]. Borrows the table; the table must outlive the view.
class ReversedView {
 public:
  explicit ReversedView(const SequenceTable& table) : values_(table.values()) {}

  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

  const Rational& operator[](std::int64_t t) const {
    if (t < 0 || t >= size()) throw std::out_of_range("ReversedView index outside [0:K-1]");
    return values_[values_.size() - 1 - static_cast<std::size_t>(t)];
  }

  std::vector<Rational> to_vector() const {
    std::vector<Rational> out;
    out.reserve(values_.size());
    for (std::int64_t t = 0; t < size(); ++t) out.push_back((*this)[t]);
    return out;
  }

 private:
  std::span<const Rational> values_;
};

inline ReversedView reversed_view(const SequenceTable& table) { return ReversedView(table); }

inline SequenceTable solve_recursion(const Parameters& p) {
  const std::int64_t K = p.K();
  const std::int64_t D = p.D();
  const auto weights = binomial_row(D);
  const BigInt n_minus_1 = p.N() - 1;

  // Slot 0 is unused so that L[j] reads as L_j.
  std::vector<Rational> L(static_cast<std::size_t>(K) + 1, Rational(0));
  L[K] = Rational(ipow(n_minus_1, static_cast<std::uint64_t>(K - D)));
  for (std::int64_t j = K - D; j >= 1; --j) {
    Rational acc = 0;
    for (std::int64_t i = 1; i <= D; ++i) {
      if (L[j + i] != 0) acc += weights[i] * L[j + i];
    }
    L[j] = acc / n_minus_1;
  }
  L.erase(L.begin());
  return SequenceTable(p, std::move(L));
}

/// L = (N/D) sum_{t=1}^{K} C(K,t) L_t - (N/D) sum_{t=1}^{K-D} C(K-D,t) L_t.
inline Rational normalized_L_from_table(const SequenceTable& table) {
  const auto& p = table.params();
  const std::int64_t K = p.K();
  const std::int64_t D = p.D();
  const auto full = binomial_row(K);
  const auto head = binomial_row(K - D);

  Rational sum = 0;
  for (std::int64_t t = 1; t <= K; ++t) sum += full[t] * table.at(t);
  for (std::int64_t t = 1; t <= K - D; ++t) sum -= head[t] * table.at(t);
  return sum * Rational(p.N(), D);
}

inline Rational normalized_L_via_recursion(const Parameters& p) {
  return normalized_L_from_table(solve_recursion(p));
}

}  // namespace subpack
