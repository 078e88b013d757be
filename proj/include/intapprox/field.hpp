#ifndef INTAPPROX_FIELD_HPP
#define INTAPPROX_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace intapprox {

using Residue = std::uint32_t;

/// The prime field GF(p). Only small primes (2 <= p < 2^16) are supported so
/// that a product of two residues always fits in 32 bits.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxPrime = 1u << 16;

  constexpr FieldSpec() = default;

  explicit FieldSpec(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= kMaxPrime || !is_prime(p)) {
      throw std::invalid_argument("field modulus must be a prime below 65536, got " +
                                  std::to_string(p));
    }
  }

  constexpr std::uint32_t p() const noexcept { return p_; }
  constexpr bool is_gf2() const noexcept { return p_ == 2; }

  constexpr Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  constexpr Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  constexpr Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  constexpr Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }

  // Multiplicative inverse by the extended Euclidean algorithm; a must be nonzero.
  Residue inv(Residue a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a % p_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Residue>(t);
  }

  // Maps any integer to its canonical residue in [0, p).
  constexpr Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }

  friend constexpr bool operator==(FieldSpec a, FieldSpec b) noexcept { return a.p_ == b.p_; }

 private:
  static constexpr bool is_prime(std::uint32_t v) noexcept {
    if (v < 2) return false;
    for (std::uint32_t d = 2; d * d <= v; ++d) {
      if (v % d == 0) return false;
    }
    return true;
  }

  std::uint32_t p_ = 2;
};

}  // namespace intapprox

#endif  // INTAPPROX_FIELD_HPP
