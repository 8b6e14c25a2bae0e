#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subpack {

// Raised when (N, K, D) falls outside K > D > 1, N > 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Validated scheme parameters: N servers, K messages, D demanded messages.
///
/// The only way to obtain a Parameters value is through make(), so every
/// instance satisfies K > D > 1 and N > 1.
class Parameters {
 public:
  static Parameters make(std::int64_t servers, std::int64_t messages, std::int64_t demands) {
    if (demands <= 1) throw DomainError("requires D > 1");
    if (messages <= demands) throw DomainError("requires K > D");
    if (servers <= 1) throw DomainError("requires N > 1");
    return Parameters(servers, messages, demands);
  }

  std::int64_t N() const { return n_; }
  std::int64_t K() const { return k_; }
  std::int64_t D() const { return d_; }

  std::string to_string() const {
    return "N=" + std::to_string(n_) + ",K=" + std::to_string(k_) + ",D=" + std::to_string(d_);
  }

  friend bool operator==(const Parameters&, const Parameters&) = default;

 private:
  Parameters(std::int64_t n, std::int64_t k, std::int64_t d) : n_(n), k_(k), d_(d) {}

  std::int64_t n_;
  std::int64_t k_;
  std::int64_t d_;
};

inline Parameters make_parameters(std::int64_t N, std::int64_t K, std::int64_t D) {
  return Parameters::make(N, K, D);
}

struct DerivedShape {
  std::int64_t T;  // K - D + 1
  std::int64_t S;  // floor(T (D - 1) / D)

  friend bool operator==(const DerivedShape&, const DerivedShape&) = default;
};

inline DerivedShape shape_of(std::int64_t D, std::int64_t T) {
  return DerivedShape{T, T * (D - 1) / D};
}

inline DerivedShape derive_shape(const Parameters& p) {
  return shape_of(p.D(), p.K() - p.D() + 1);
}

}  // namespace subpack
