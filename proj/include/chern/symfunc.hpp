#pragma once

// Chern characters truncated at complex degree 3, after pullback to BSL_n.
// Since H^2(BSL_n) = 0 the first Chern class is absent from every type here;
// H^4 and H^6 are each a single copy of Z, spanned by c2 and c3.

#include "chern/arith.hpp"

namespace chern {

/// Degree <= 3 part of a Chern character in H*(BSL_n; Q):
/// deg0 + deg2_c2 * c2 + deg3_c3 * c3.
struct ChCoefficients {
  ExactRat deg0;
  ExactRat deg2_c2;
  ExactRat deg3_c3;

  static ChCoefficients unit() { return {1, 0, 0}; }

  ChCoefficients& operator+=(const ChCoefficients& o);
  ChCoefficients& operator-=(const ChCoefficients& o);
  friend ChCoefficients operator+(ChCoefficients a, const ChCoefficients& b) { return a += b; }
  friend ChCoefficients operator-(ChCoefficients a, const ChCoefficients& b) { return a -= b; }
  friend ChCoefficients operator*(const ExactRat& s, const ChCoefficients& a);
  friend bool operator==(const ChCoefficients&, const ChCoefficients&) = default;
};

/// (rank, C2, C3) with C_i read as a multiple of c_i.
struct ChernData {
  ExactInt rank;
  ExactInt c2;
  ExactInt c3;

  const ExactInt& degree(int d) const;

  ChernData& operator+=(const ChernData& o);
  ChernData& operator-=(const ChernData& o);
  friend ChernData operator+(ChernData a, const ChernData& b) { return a += b; }
  friend ChernData operator-(ChernData a, const ChernData& b) { return a -= b; }
  friend ChernData operator*(const ExactInt& s, const ChernData& a);
  friend bool operator==(const ChernData&, const ChernData&) = default;
};

/// Coefficients on the monomial symmetric functions of degree 2 and 3:
/// m2 = sum t_a^2, m11 = sum_{a<b} t_a t_b, m3 = sum t_a^3,
/// m21 = sum_{a!=b} t_a^2 t_b, m111 = sum_{a<b<c} t_a t_b t_c.
struct MonomialSymCoeffs {
  ExactRat m2;
  ExactRat m11;
  ExactRat m3;
  ExactRat m21;
  ExactRat m111;
};

/// Rewrites monomial symmetric functions in c2, c3 using c1 = 0:
/// m2 -> -2c2, m11 -> c2, m3 -> 3c3, m21 -> -3c3, m111 -> c3.
/// deg0 of the result is zero.
ChCoefficients monomials_to_chern_basis(const MonomialSymCoeffs& m);

/// ch of the i-th exterior power of the standard representation of SL_n.
ChCoefficients ch_of_elementary(const ExactInt& n, const ExactInt& i);
ChCoefficients ch_of_elementary(long n, long i);

/// ch of the virtual representation with character sum t_a^j.
ChCoefficients ch_of_power_sum(const ExactInt& n, const ExactInt& j);
ChCoefficients ch_of_power_sum(long n, long j);

/// Truncated product. The degree 1 x 2 cross term is absent since c1 = 0.
ChCoefficients ch_product(const ChCoefficients& a, const ChCoefficients& b);

/// Reads off (rank, C2, C3) from ch = rank - C2 + C3/2.
/// Throws IntegralityError when any entry is not an integer.
ChernData to_chern(const ChCoefficients& c);

}  // namespace chern
