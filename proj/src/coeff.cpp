#include "retract/coeff.hpp"

#include <stdexcept>

#include "retract/errors.hpp"

namespace retract {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t q = 3; q <= p / q; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

Domain Domain::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("GF(" + std::to_string(p) + "): modulus is not prime");
  return Domain(DomainKind::PrimeField, p);
}

std::string Domain::name() const {
  switch (kind_) {
    case DomainKind::Rationals:
      return "QQ";
    case DomainKind::Integers:
      return "ZZ";
    case DomainKind::PrimeField:
      return "GF(" + std::to_string(p_) + ")";
  }
  return "";
}

bool Domain::contains(const Coeff& c) const {
  switch (kind_) {
    case DomainKind::Rationals:
      return true;
    case DomainKind::Integers:
      return c.get_den() == 1;
    case DomainKind::PrimeField:
      return c.get_den() == 1 && c.get_num() >= 0 && c.get_num() < mpz_class(static_cast<unsigned long>(p_));
  }
  return false;
}

Coeff Domain::reduce(const Coeff& c) const {
  if (kind_ != DomainKind::PrimeField) return c;
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = c.get_num() % p;
  if (num < 0) num += p;
  if (c.get_den() != 1) {
    mpz_class den = c.get_den() % p;
    if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  return Coeff(num);
}

Coeff Domain::from_rational(const Coeff& c) const {
  if (kind_ == DomainKind::Integers && c.get_den() != 1) {
    throw std::domain_error(c.get_str() + " is not an integer");
  }
  return reduce(c);
}

bool Domain::is_unit(const Coeff& c) const {
  if (is_field()) return reduce(c) != 0;
  return c == 1 || c == -1;
}

Coeff Domain::inverse(const Coeff& c) const {
  if (!is_unit(c)) throw NotAUnit(to_string(c) + " is not a unit of " + name());
  return reduce(Coeff(1) / c);
}

Coeff Domain::pow(const Coeff& c, const mpz_class& e) const {
  Coeff base = e < 0 ? inverse(c) : c;
  mpz_class k = abs(e);
  Coeff result(1);
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

std::string Domain::to_string(const Coeff& c) const {
  Coeff v = c;
  v.canonicalize();
  return v.get_str();
}

}  // namespace retract
