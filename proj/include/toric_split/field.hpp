#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "toric_split/errors.hpp"

namespace toric_split {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

/// Coefficient field descriptor: F_p for a word-sized prime p, or Q when the
/// characteristic is 0.
class Field {
 public:
  static Field rationals() { return Field(0); }

  static Field prime(std::uint64_t p) {
    if (!is_prime(p) || p > 0xFFFFFFFFull) {
      throw InputError("field characteristic must be 0 or a word-sized prime, got " +
                       std::to_string(p));
    }
    return Field(static_cast<std::uint32_t>(p));
  }

  /// 0 selects Q, anything else must be prime.
  static Field from_characteristic(std::uint64_t p) { return p == 0 ? rationals() : prime(p); }

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

  /// True when division by `order` is possible in this field.
  bool inverts(std::uint64_t order) const { return p_ == 0 || order % p_ != 0; }

  friend bool operator==(const Field&, const Field&) = default;

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Residue arithmetic in [0, p) with Fermat inversion.
class PrimeArithmetic {
 public:
  using value_type = std::uint32_t;

  explicit PrimeArithmetic(std::uint32_t p) : p_(p) {}

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw CoefficientDomainError("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  value_type pow(value_type base, std::uint64_t e) const {
    std::uint64_t result = 1 % p_;
    std::uint64_t b = base % p_;
    while (e) {
      if (e & 1) result = result * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }

  /// Reduces an exact rational; the denominator must be a unit mod p.
  value_type from_rational(const Rational& q) const {
    unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
    if (den == 0) {
      throw CoefficientDomainError("rational " + q.get_str() + " has no image in F_" +
                                   std::to_string(p_));
    }
    unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
    return div(static_cast<value_type>(num), static_cast<value_type>(den));
  }

 private:
  std::uint32_t p_;
};

/// Arithmetic in Q on GMP rationals.
class RationalArithmetic {
 public:
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type div(const value_type& a, const value_type& b) const {
    if (sgn(b) == 0) throw CoefficientDomainError("division by zero in Q");
    return a / b;
  }
  value_type from_rational(const Rational& q) const { return q; }
};

}  // namespace toric_split
