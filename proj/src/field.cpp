#include "qpr/field.hpp"

#include <string>

namespace qpr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::uint32_t reduce_mod(const Rational& value, std::uint32_t p) {
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  mpz_class modulus = p;
  mpz_class d = den % modulus;
  if (d == 0) {
    throw DomainError("cannot reduce " + value.get_str() + " modulo " + std::to_string(p) +
                      ": denominator divisible by p");
  }
  mpz_class n = num % modulus;
  if (n < 0) n += modulus;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
  mpz_class r = (n * inv) % modulus;
  return static_cast<std::uint32_t>(r.get_ui());
}

Fp::Fp(std::uint64_t residue, std::uint32_t modulus)
    : residue_(modulus == 0 ? 0 : static_cast<std::uint32_t>(residue % modulus)),
      modulus_(modulus) {
  if (modulus == 0) throw DomainError("F_p element with modulus 0");
}

namespace {
void same_field(const Fp& a, const Fp& b) {
  if (a.modulus() != b.modulus()) {
    throw DomainError("mixed prime fields F_" + std::to_string(a.modulus()) + " and F_" +
                      std::to_string(b.modulus()));
  }
}
}  // namespace

Fp operator+(Fp a, Fp b) {
  same_field(a, b);
  return Fp(static_cast<std::uint64_t>(a.residue_) + b.residue_, a.modulus_);
}

Fp operator-(Fp a, Fp b) {
  same_field(a, b);
  return Fp(static_cast<std::uint64_t>(a.residue_) + a.modulus_ - b.residue_, a.modulus_);
}

Fp operator*(Fp a, Fp b) {
  same_field(a, b);
  return Fp(static_cast<std::uint64_t>(a.residue_) * b.residue_, a.modulus_);
}

Fp Fp::operator-() const { return Fp(residue_ == 0 ? 0 : modulus_ - residue_, modulus_); }

Fp Fp::inverse() const {
  if (residue_ == 0) throw DomainError("division by zero in F_" + std::to_string(modulus_));
  return Fp(PrimeField(modulus_).inv(residue_), modulus_);
}

PrimeField::PrimeField(std::uint32_t prime) : p(prime) {
  if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
}

Fp PrimeField::from_int(long value) const {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return Fp(static_cast<std::uint64_t>(r), p);
}

void PrimeField::check(const Fp& value) const {
  if (value.modulus() != p) {
    throw DomainError("value from F_" + std::to_string(value.modulus()) + " used in F_" +
                      std::to_string(p));
  }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  // Fermat: a^(p-2).
  std::uint32_t result = 1;
  std::uint32_t base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

}  // namespace qpr
