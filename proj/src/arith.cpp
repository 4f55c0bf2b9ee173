#include "chern/arith.hpp"

#include <string>

namespace chern {

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  ExactRat r(num, den);
  r.canonicalize();
  return r;
}

ExactInt require_integral(const ExactRat& r, const char* what) {
  if (r.get_den() != 1)
    throw IntegralityError(std::string(what) + " is not integral: " + to_string(r));
  return r.get_num();
}

bool is_prime(const ExactInt& x) {
  if (x < 2) return false;
  for (ExactInt d = 2; d * d <= x; ++d)
    if (mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) return false;
  return true;
}

PrimeParam::PrimeParam(const ExactInt& ell) : ell_(ell) {
  if (!is_prime(ell_)) throw NotPrimeError(ell_.get_str() + " is not prime");
  if (!ell_.fits_ulong_p()) throw PreconditionError("prime too large");
}

unsigned long Valuation::value() const {
  if (infinite_) throw PreconditionError("infinite valuation has no finite value");
  return value_;
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

ExactInt binomial(const ExactInt& n, const ExactInt& k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  if (!k.fits_ulong_p()) throw PreconditionError("binomial: k too large");
  ExactInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return out;
}

ExactInt binomial(long n, long k) { return binomial(ExactInt(n), ExactInt(k)); }

Valuation padic_valuation(const PrimeParam& p, const ExactInt& x) {
  if (x == 0) return Valuation::infinite();
  ExactInt rest;
  auto e = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.value().get_mpz_t());
  return Valuation::finite(e);
}

ExactInt kummer_carries(const PrimeParam& p, const ExactInt& a, const ExactInt& b) {
  if (a < 0 || b < 0) throw PreconditionError("kummer_carries: negative argument");
  const ExactInt& base = p.value();
  ExactInt x = a, y = b, carries = 0;
  int carry = 0;
  while (x != 0 || y != 0 || carry != 0) {
    ExactInt digit_sum = x % base + y % base + carry;
    carry = digit_sum >= base ? 1 : 0;
    carries += carry;
    x /= base;
    y /= base;
  }
  return carries;
}

ExactInt lucas_binomial_mod(const PrimeParam& p, const ExactInt& n, const ExactInt& k) {
  if (n < 0 || k < 0) throw PreconditionError("lucas_binomial_mod: negative argument");
  const ExactInt& base = p.value();
  ExactInt x = n, y = k, acc = 1;
  while (y != 0) {
    ExactInt nd = x % base, kd = y % base;
    if (kd > nd) return 0;
    acc = (acc * binomial(nd, kd)) % base;
    x /= base;
    y /= base;
  }
  return acc % base;
}

std::string to_string(const ExactInt& x) { return x.get_str(); }
std::string to_string(const ExactRat& x) { return x.get_str(); }

}  // namespace chern
