#include "chern/symfunc.hpp"

namespace chern {

ChCoefficients& ChCoefficients::operator+=(const ChCoefficients& o) {
  deg0 += o.deg0;
  deg2_c2 += o.deg2_c2;
  deg3_c3 += o.deg3_c3;
  return *this;
}

ChCoefficients& ChCoefficients::operator-=(const ChCoefficients& o) {
  deg0 -= o.deg0;
  deg2_c2 -= o.deg2_c2;
  deg3_c3 -= o.deg3_c3;
  return *this;
}

ChCoefficients operator*(const ExactRat& s, const ChCoefficients& a) {
  return {ExactRat(s * a.deg0), ExactRat(s * a.deg2_c2), ExactRat(s * a.deg3_c3)};
}

const ExactInt& ChernData::degree(int d) const {
  switch (d) {
    case 0: return rank;
    case 2: return c2;
    case 3: return c3;
    default: throw PreconditionError("ChernData carries degrees 0, 2 and 3 only");
  }
}

ChernData& ChernData::operator+=(const ChernData& o) {
  rank += o.rank;
  c2 += o.c2;
  c3 += o.c3;
  return *this;
}

ChernData& ChernData::operator-=(const ChernData& o) {
  rank -= o.rank;
  c2 -= o.c2;
  c3 -= o.c3;
  return *this;
}

ChernData operator*(const ExactInt& s, const ChernData& a) {
  return {ExactInt(s * a.rank), ExactInt(s * a.c2), ExactInt(s * a.c3)};
}

ChCoefficients monomials_to_chern_basis(const MonomialSymCoeffs& m) {
  ChCoefficients out;
  out.deg0 = 0;
  out.deg2_c2 = -2 * m.m2 + m.m11;
  out.deg3_c3 = 3 * m.m3 - 3 * m.m21 + m.m111;
  return out;
}

ChCoefficients ch_of_elementary(const ExactInt& n, const ExactInt& i) {
  if (i < 1 || i > n - 1) throw PreconditionError("ch_of_elementary: need 1 <= i <= n-1");
  // Expanding (t_{l1} + ... + t_{li})^d / d! over all i-subsets, a monomial
  // supported on r fixed indices appears in C(n-r, i-r) subsets.
  const ExactInt b1 = binomial(n - 1, i - 1);
  const ExactInt b2 = binomial(n - 2, i - 2);
  const ExactInt b3 = binomial(n - 3, i - 3);
  MonomialSymCoeffs m;
  m.m2 = make_rat(b1, 2);
  m.m11 = b2;
  m.m3 = make_rat(b1, 6);
  m.m21 = make_rat(b2, 2);
  m.m111 = b3;
  ChCoefficients out = monomials_to_chern_basis(m);
  out.deg0 = binomial(n, i);
  return out;
}

ChCoefficients ch_of_elementary(long n, long i) { return ch_of_elementary(ExactInt(n), ExactInt(i)); }

ChCoefficients ch_of_power_sum(const ExactInt& n, const ExactInt& j) {
  if (j < 1) throw PreconditionError("ch_of_power_sum: need j >= 1");
  MonomialSymCoeffs m;
  m.m2 = make_rat(j * j, 2);
  m.m3 = make_rat(j * j * j, 6);
  ChCoefficients out = monomials_to_chern_basis(m);
  out.deg0 = n;
  return out;
}

ChCoefficients ch_of_power_sum(long n, long j) { return ch_of_power_sum(ExactInt(n), ExactInt(j)); }

ChCoefficients ch_product(const ChCoefficients& a, const ChCoefficients& b) {
  ChCoefficients out;
  out.deg0 = a.deg0 * b.deg0;
  out.deg2_c2 = a.deg0 * b.deg2_c2 + a.deg2_c2 * b.deg0;
  out.deg3_c3 = a.deg0 * b.deg3_c3 + a.deg3_c3 * b.deg0;
  return out;
}

ChernData to_chern(const ChCoefficients& c) {
  return {require_integral(c.deg0, "rank"), require_integral(-c.deg2_c2, "C2"),
          require_integral(2 * c.deg3_c3, "C3")};
}

}  // namespace chern
