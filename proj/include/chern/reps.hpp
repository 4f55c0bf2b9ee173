#pragma once

// The representation ring of G = SL_n / mu_ell, n = k * ell, through its
// integral basis of monomials e_{a1} ... e_{ar} in exterior powers of the
// standard representation with a1 + ... + ar divisible by ell.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "chern/arith.hpp"
#include "chern/symfunc.hpp"

namespace chern {

/// A monomial or power sum that does not descend to SL_n / mu_ell.
class DescentError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// (ell, k) with n = k * ell and ell' = 4 for ell = 2, ell otherwise.
/// n is a machine integer: it indexes tables and multisets.
class GroupParams {
 public:
  GroupParams(const PrimeParam& ell, long k);
  GroupParams(long ell, long k) : GroupParams(PrimeParam(ell), k) {}

  const PrimeParam& prime() const { return ell_; }
  long ell() const { return static_cast<long>(ell_.ulong()); }
  long k() const { return k_; }
  long n() const { return n_; }
  long ell_prime() const { return ell_prime_; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  PrimeParam ell_;
  long k_;
  long n_;
  long ell_prime_;
};

/// Sorted multiset S of parts in 1..n-1 with ell | sum(S); stands for the
/// product of e_a over a in S. The empty multiset is the trivial representation.
class BasisElement {
 public:
  BasisElement() = default;
  /// Validates range and the descent condition; throws DescentError.
  BasisElement(const GroupParams& params, std::vector<int> parts);

  /// Skips validation. For enumerators that build valid multisets by construction.
  static BasisElement trusted(std::vector<int> sorted_parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// "e1^2e5"; the empty multiset renders as "1".
  std::string to_string() const;

  /// Size first, then lexicographic on the sorted parts.
  friend std::strong_ordering operator<=>(const BasisElement& a, const BasisElement& b);
  friend bool operator==(const BasisElement&, const BasisElement&) = default;

 private:
  std::vector<int> parts_;
};

/// Z-linear combination of basis elements and power sums p_j.
class VirtualRep {
 public:
  VirtualRep() = default;

  static VirtualRep of(const BasisElement& s) { return VirtualRep().add(s, 1); }
  static VirtualRep power_sum(long j) { return VirtualRep().add_power_sum(j, 1); }

  VirtualRep& add(const BasisElement& s, const ExactInt& mult);
  VirtualRep& add_power_sum(long j, const ExactInt& mult);
  VirtualRep& add_trivial(const ExactInt& mult) { return add(BasisElement(), mult); }

  VirtualRep& operator+=(const VirtualRep& o);
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator*(const ExactInt& s, const VirtualRep& v);
  friend VirtualRep operator-(const VirtualRep& a, const VirtualRep& b) {
    return a + ExactInt(-1) * b;
  }

  const std::map<BasisElement, ExactInt>& terms() const { return terms_; }
  const std::map<long, ExactInt>& power_sums() const { return power_sums_; }
  bool empty() const { return terms_.empty() && power_sums_.empty(); }

  /// Power sums, then basis elements in basis order, then the trivial
  /// multiple as a bare integer: "p2 - e4 + 9".
  std::string to_string() const;

  friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

 private:
  std::map<BasisElement, ExactInt> terms_;
  std::map<long, ExactInt> power_sums_;
};

ExactInt rank_of(const GroupParams& params, const BasisElement& s);

/// Sum over occurrences a in S of C(n-2, a-1) * prod_{b != a} C(n, b).
ExactInt c2_of(const GroupParams& params, const BasisElement& s);

/// Sum over occurrences a in S of C(n-2, a-1)(n-2a)/(n-2) * prod_{b != a} C(n, b).
/// For n <= 2 the value is computed through the Chern character engine.
ExactInt c3_of(const GroupParams& params, const BasisElement& s);

/// Z-linear extension of (rank_of, c2_of, c3_of), with rank(p_j) = n and
/// C_i(p_j) = j^i. Throws DescentError for p_j with ell not dividing j.
ChernData chern_of_virtual(const GroupParams& params, const VirtualRep& v);

/// Same data via the splitting-principle engine: product of ch(e_a).
ChernData chern_via_engine(const GroupParams& params, const BasisElement& s);

/// Every basis element with |S| <= max_size, ordered by size then
/// lexicographically. Includes the empty multiset.
std::vector<BasisElement> enumerate_basis(const GroupParams& params, long max_size);

/// Per-part tables rank(e_a), C2(e_a), C3(e_a) for a = 1..n-1, so that the
/// data of a monomial follows from the derivation property.
class ElementaryTable {
 public:
  explicit ElementaryTable(const GroupParams& params);

  const GroupParams& params() const { return params_; }
  const ExactInt& rank(int a) const { return rank_[a]; }
  const ExactInt& c2(int a) const { return c2_[a]; }
  const ExactInt& c3(int a) const { return c3_[a]; }

  ChernData chern_of(const BasisElement& s) const;

 private:
  GroupParams params_;
  std::vector<ExactInt> rank_;
  std::vector<ExactInt> c2_;
  std::vector<ExactInt> c3_;
};

}  // namespace chern
