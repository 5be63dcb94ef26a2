#include "wellmix/field.hpp"

#include <algorithm>
#include <cmath>

#include "wellmix/errors.hpp"

namespace wellmix {

namespace {

constexpr std::uint64_t kMaxCardinality = 1ULL << 20;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

// Dense polynomial arithmetic over GF(p), coefficients ascending. Used for
// modulus validation and extension-field element operations.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return out;
}

// Remainder of a modulo monic b.
Poly poly_rem(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t sub = (lead * b[i]) % p;
        a[shift + i] = (a[shift + i] + p - sub) % p;
      }
    }
    a.pop_back();
    trim(a);
    if (a.size() <= db && (a.empty() || a.size() - 1 < db)) break;
  }
  trim(a);
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

std::uint64_t mod_inverse_prime(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid in the prime field.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    std::swap(t -= quot * new_t, new_t);
    std::swap(r -= quot * new_r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// Makes a polynomial monic; requires a nonzero leading coefficient.
Poly make_monic(Poly a, std::uint64_t p) {
  const std::uint64_t lead = a.back();
  if (lead != 1) {
    const std::uint64_t li = mod_inverse_prime(lead, p);
    for (auto& c : a) c = (c * li) % p;
  }
  return a;
}

// Irreducibility over GF(p) by exhaustive trial division with all monic
// polynomials of degree 1 .. deg/2.
bool is_irreducible(const Poly& monic, std::uint64_t p) {
  const std::size_t deg = monic.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    // Enumerate divisors c_0 + c_1 t + ... + t^dd.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      Poly div(dd + 1, 0);
      std::uint64_t e = enc;
      for (std::size_t i = 0; i < dd; ++i) {
        div[i] = e % p;
        e /= p;
      }
      div[dd] = 1;
      if (poly_is_zero(poly_rem(monic, div, p))) return false;
    }
  }
  return true;
}

Poly decode_digits(std::uint64_t idx, std::uint64_t p, std::uint32_t k) {
  Poly out(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = idx % p;
    idx /= p;
  }
  return out;
}

std::uint64_t encode_digits(const Poly& digits, std::uint64_t p, std::uint32_t k) {
  std::uint64_t idx = 0;
  for (std::uint32_t i = k; i-- > 0;) {
    idx = idx * p + (i < digits.size() ? digits[i] : 0);
  }
  return idx;
}

}  // namespace

Field Field::make(std::uint64_t p, std::uint32_t k,
                  std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw DegreeMismatchError("extension degree k must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (q > kMaxCardinality / p) {
      throw TooLargeToMaterializeError("field cardinality p^k exceeds 2^20");
    }
    q *= p;
  }

  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;

  if (k == 1) return f;

  if (modulus.has_value()) {
    Poly m = *modulus;
    for (auto c : m) {
      if (c >= p) throw DegreeMismatchError("modulus coefficient out of range [0, p)");
    }
    trim(m);
    if (m.size() != static_cast<std::size_t>(k) + 1) {
      throw DegreeMismatchError("modulus must have degree exactly k = " + std::to_string(k));
    }
    const Poly monic = make_monic(m, p);
    if (!is_irreducible(monic, p)) {
      throw ReducibleModulusError("modulus is reducible over GF(" + std::to_string(p) + ")");
    }
    f.modulus_ = monic;
    return f;
  }

  // Deterministic default: smallest monic irreducible of degree k by
  // lexicographic order of the coefficient vector (c_0, ..., c_{k-1}, 1).
  std::vector<std::uint64_t> tail(k, 0);
  for (;;) {
    Poly cand(tail.begin(), tail.end());
    cand.push_back(1);
    if (is_irreducible(cand, p)) {
      f.modulus_ = cand;
      return f;
    }
    // Next tuple in lexicographic order: increment the last coordinate.
    std::size_t i = k;
    while (i-- > 0) {
      if (++tail[i] < p) break;
      tail[i] = 0;
      if (i == 0) throw ReducibleModulusError("no irreducible modulus found");  // unreachable
    }
  }
}

double Field::log2q() const { return std::log2(static_cast<double>(q_)); }

std::uint32_t Field::element_bits() const {
  std::uint32_t bits = 0;
  while ((1ULL << bits) < q_) ++bits;
  return bits == 0 ? 1 : bits;
}

void Field::check_element(std::uint64_t a) const {
  if (a >= q_) {
    throw InvalidVertexIdError("element index " + std::to_string(a) + " outside [0, " +
                               std::to_string(q_) + ")");
  }
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
  check_element(a);
  check_element(b);
  if (k_ == 1) return (a + b) % p_;
  const Poly da = decode_digits(a, p_, k_);
  const Poly db = decode_digits(b, p_, k_);
  Poly out(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) out[i] = (da[i] + db[i]) % p_;
  return encode_digits(out, p_, k_);
}

std::uint64_t Field::neg(std::uint64_t a) const {
  check_element(a);
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Poly d = decode_digits(a, p_, k_);
  for (auto& c : d) c = c == 0 ? 0 : p_ - c;
  return encode_digits(d, p_, k_);
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
  check_element(a);
  check_element(b);
  if (k_ == 1) return (a * b) % p_;
  const Poly pa = decode_digits(a, p_, k_);
  const Poly pb = decode_digits(b, p_, k_);
  Poly prod = poly_mul(pa, pb, p_);
  prod = poly_rem(std::move(prod), modulus_, p_);
  return encode_digits(prod, p_, k_);
}

std::uint64_t Field::inv(std::uint64_t a) const {
  check_element(a);
  if (a == 0) throw DivisionByZeroError("inverse of the additive identity");
  if (k_ == 1) return mod_inverse_prime(a, p_);
  // a^(q-2) = a^{-1} in GF(q).
  return pow(a, q_ - 2);
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  check_element(a);
  std::uint64_t result = 1;
  std::uint64_t base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t Field::eval_poly(std::span<const std::uint64_t> coeffs, std::uint64_t x) const {
  if (coeffs.empty()) throw DegreeMismatchError("polynomial needs at least one coefficient");
  check_element(x);
  std::uint64_t acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = add(mul(acc, x), coeffs[i]);
  }
  return acc;
}

nlohmann::json Field::to_json() const {
  return nlohmann::json{{"p", p_}, {"k", k_}, {"modulus", modulus_}, {"q", q_}};
}

Field Field::from_json(const nlohmann::json& j) {
  const auto p = j.at("p").get<std::uint64_t>();
  const auto k = j.at("k").get<std::uint32_t>();
  std::optional<std::vector<std::uint64_t>> modulus;
  if (j.contains("modulus") && !j.at("modulus").empty()) {
    modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
  }
  return make(p, k, std::move(modulus));
}

}  // namespace wellmix
