#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace chern {

/// Arbitrary-precision integer. All integer quantities in the library live here.
using ExactInt = mpz_class;

/// Arbitrary-precision rational, kept canonical (lowest terms, positive
/// denominator) by every constructor in this library.
using ExactRat = mpq_class;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a value that must be an integer turns out not to be one.
/// Never a user error; it means a formula was misapplied.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotPrimeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

ExactRat make_rat(const ExactInt& num, const ExactInt& den);

/// Returns the value of r if it is an integer, otherwise throws IntegralityError.
ExactInt require_integral(const ExactRat& r, const char* what);

/// A prime, checked by trial division on construction.
class PrimeParam {
 public:
  explicit PrimeParam(const ExactInt& ell);
  explicit PrimeParam(long ell) : PrimeParam(ExactInt(ell)) {}

  const ExactInt& value() const { return ell_; }
  unsigned long ulong() const { return ell_.get_ui(); }

  friend bool operator==(const PrimeParam&, const PrimeParam&) = default;

 private:
  ExactInt ell_;
};

bool is_prime(const ExactInt& x);

/// ℓ-adic valuation; zero has infinite valuation and compares above every
/// finite one.
class Valuation {
 public:
  static Valuation finite(unsigned long v) { return Valuation(v, false); }
  static Valuation infinite() { return Valuation(0, true); }

  bool is_infinite() const { return infinite_; }
  /// Throws PreconditionError on the infinite marker.
  unsigned long value() const;

  std::string to_string() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  Valuation(unsigned long v, bool inf) : value_(v), infinite_(inf) {}
  unsigned long value_;
  bool infinite_;
};

/// C(n, k). Zero for k < 0 or 0 <= n < k. Negative n uses the usual
/// extension C(n, k) = (-1)^k C(k - n - 1, k).
ExactInt binomial(const ExactInt& n, const ExactInt& k);
ExactInt binomial(long n, long k);

Valuation padic_valuation(const PrimeParam& p, const ExactInt& x);

/// Number of carries when adding a and b in base p.
ExactInt kummer_carries(const PrimeParam& p, const ExactInt& a, const ExactInt& b);

/// C(n, k) mod p as the product of base-p digit binomials.
ExactInt lucas_binomial_mod(const PrimeParam& p, const ExactInt& n, const ExactInt& k);

std::string to_string(const ExactInt& x);
std::string to_string(const ExactRat& x);

}  // namespace chern
