#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace wellmix {

// A finite field GF(p^k) with exact arithmetic. Elements are canonical
// integer indices in [0, q): the base-p digit vector of an element (its
// coefficients over the power basis 1, t, t^2, ...) packed as
// sum_i digit_i * p^i. Index 0 is the additive identity, index 1 the
// multiplicative identity. Immutable after construction; all operations
// are pure and safe to call concurrently.
class Field {
 public:
  // Builds GF(p^k). For k > 1 the modulus is a degree-k coefficient vector
  // (ascending powers, length k+1) that must be irreducible over GF(p);
  // when omitted, the lexicographically smallest monic irreducible is
  // found by deterministic exhaustive search. For k = 1 the modulus is
  // ignored.
  static Field make(std::uint64_t p, std::uint32_t k,
                    std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  std::uint64_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  // n := log2 q. Non-integral for fields that are not powers of two.
  double log2q() const;

  // Smallest width in bits that stores any element index.
  std::uint32_t element_bits() const;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws DivisionByZero on 0
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  // Horner evaluation of s_0 + s_1 x + ... + s_d x^d. coeffs holds d+1
  // element indices, constant term first.
  std::uint64_t eval_poly(std::span<const std::uint64_t> coeffs, std::uint64_t x) const;

  nlohmann::json to_json() const;
  static Field from_json(const nlohmann::json& j);

  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field() = default;

  void check_element(std::uint64_t a) const;

  std::uint64_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> modulus_;  // ascending powers; empty for k = 1
};

}  // namespace wellmix
