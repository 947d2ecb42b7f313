#pragma once

#include <cstdint>
#include <compare>

#include "qpr/coefficient.hpp"
#include "qpr/errors.hpp"

namespace qpr {

bool is_prime(std::uint64_t n);

/// Reduces a/b modulo p. Throws DomainError when p divides b.
std::uint32_t reduce_mod(const Rational& value, std::uint32_t p);

/// Element of F_p carrying its modulus; mixing moduli throws DomainError.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t residue, std::uint32_t modulus);

  std::uint32_t residue() const { return residue_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const;

  friend bool operator==(Fp a, Fp b) = default;

 private:
  std::uint32_t residue_ = 0;
  std::uint32_t modulus_ = 0;
};

/// Field descriptor for generic code over F_p.
struct PrimeField {
  using value_type = Fp;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t p;

  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp from_rational(const Rational& value) const { return Fp(reduce_mod(value, p), p); }
  Fp from_int(long value) const;
  /// Throws DomainError unless `value` lives in this field.
  void check(const Fp& value) const;

  // Raw residue arithmetic for the enumeration kernels.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t inv(std::uint32_t a) const;
};

struct RationalField {
  using value_type = Rational;

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_rational(const Rational& value) const { return value; }
  Rational from_int(long value) const { return value; }
  void check(const Rational&) const {}
};

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(const Fp& value) { return value.is_zero(); }

}  // namespace qpr
