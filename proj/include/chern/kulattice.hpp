#pragma once

// Image of ku^6(BG) in H^6(BSL_n; Z) = Z*c3, computed as half of the group
// of C3 values over virtual representations with rank 0 and C2 = 0.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chern/arith.hpp"
#include "chern/indices.hpp"
#include "chern/reps.hpp"
#include "chern/symfunc.hpp"

namespace chern {

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using IntRow = std::vector<ExactInt>;

/// Row-style Hermite normal form. Only nonzero rows are kept, ordered by
/// pivot column; pivots are positive and entries above a pivot lie in
/// [0, pivot).
struct HNFMatrix {
  std::size_t columns = 0;
  std::vector<IntRow> rows;

  /// Column of the leading nonzero entry of each row.
  std::vector<std::size_t> pivots() const;
  bool empty() const { return rows.empty(); }
};

/// H together with an integer matrix U such that H = U * A.
struct HNFCertificate {
  HNFMatrix form;
  std::vector<IntRow> transform;
};

/// All rows must share one width. An empty input gives an empty matrix.
HNFMatrix hnf(std::span<const IntRow> rows);
HNFCertificate hnf_with_transform(std::span<const IntRow> rows);

/// Whether v is an integer combination of the rows of h.
bool in_row_lattice(const HNFMatrix& h, const IntRow& v);

struct ChernLattice {
  std::vector<ChernData> rows;
  std::vector<VirtualRep> provenance;

  void add(VirtualRep rep, ChernData data);
};

/// Rows for every basis element up to max_size (the trivial representation
/// first) followed by p_ell.
ChernLattice build_lattice(const BasisEvaluation& eval);
ChernLattice build_lattice(const GroupParams& params, long max_size);

/// Generator d >= 0 of {C3(v) : v in the lattice, rank(v) = 0, C2(v) = 0}.
/// The lattice must contain the trivial representation (1, 0, 0).
ExactInt constrained_c3_subgroup(const ChernLattice& lat);

/// constrained_c3_subgroup(lat) / 2; throws InvariantViolation if it is odd.
ExactInt ku6_from_lattice(const ChernLattice& lat);

ExactInt ku6_image_index(const GroupParams& params, long max_size);

struct KuReport {
  GroupParams params;
  long bound_used;
  ExactInt constrained_generator;  // d
  ExactInt ku6_generator;          // d / 2
  std::optional<ExactInt> chow3_generator;  // needs bound_used >= 3
  std::vector<Witness> witnesses;  // rank 0, C2 = 0 combinations, first few
  bool witnesses_generate;         // gcd of all such combinations' C3 equals d
  std::optional<ExactInt> paper_target;
  std::string chain;
};

KuReport ku_report(const GroupParams& params, long max_size);

std::optional<ExactInt> expected_ku6_generator(const GroupParams& params);

}  // namespace chern
