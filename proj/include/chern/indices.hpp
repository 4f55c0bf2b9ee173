#pragma once

// Image subgroups of Ch^2 and Ch^3 inside Z*c2 and Z*c3, the image of
// H^4(BG), divisibility audits and the counterexample test.

#include <optional>
#include <string>
#include <vector>

#include "chern/arith.hpp"
#include "chern/reps.hpp"
#include "chern/symfunc.hpp"

namespace chern {

inline constexpr long kDefaultMaxSize = 4;
inline constexpr std::size_t kMaxListedWitnesses = 8;

/// Chern data of every basis element up to a size bound, plus p_ell.
struct BasisEvaluation {
  GroupParams params;
  long bound;
  std::vector<BasisElement> basis;
  std::vector<ChernData> values;
  ChernData power_sum;  // data of p_ell
};

/// Uses the parallel kernels.
BasisEvaluation evaluate_basis(const GroupParams& params, long max_size);

struct Witness {
  VirtualRep rep;
  ChernData data;
  Valuation valuation;
};

struct IndexReport {
  GroupParams params;
  int degree;
  long bound_used;
  ExactInt image_generator;  // d with image = dZ
  bool stabilized;           // same generator at bound_used - 1
  std::vector<Witness> witnesses;  // first few achieving the minimal valuation
  std::size_t witness_count;       // all elements achieving it
  std::optional<ExactInt> paper_target;
  std::string caveat;
};

struct AuditReport {
  GroupParams params;
  int degree;
  unsigned long claimed_min_valuation;
  std::vector<BasisElement> violations;
  std::vector<ChernData> violation_data;
  std::size_t checked_count;

  bool passed() const { return violations.empty(); }
};

struct WitnessResult {
  enum class Kind { designated, exhaustive, none_below_cube };

  GroupParams params;
  int degree;
  Kind kind;
  std::optional<Witness> witness;  // empty only for none_below_cube
  ExactInt index_generator;
  bool verified;  // witness valuation equals the generator's valuation
};

struct CounterexampleReport {
  GroupParams params;
  ExactInt h4_index;
  IndexReport chow2;
  bool counterexample;  // chow2 generator > h4 generator
};

/// The generator the case tables predict, when there is one.
std::optional<ExactInt> expected_generator(const GroupParams& params, int degree);

IndexReport chow_index(const BasisEvaluation& eval, int degree);
IndexReport chow2_index(const GroupParams& params, long max_size);
IndexReport chow3_index(const GroupParams& params, long max_size);

/// ell' / gcd(k, ell').
ExactInt h4_image_index(const GroupParams& params);

AuditReport divisibility_audit(const BasisEvaluation& eval, int degree, unsigned long claimed_valuation);
AuditReport divisibility_audit(const GroupParams& params, int degree, unsigned long claimed_valuation,
                               long max_size);

WitnessResult find_witness(const GroupParams& params, int degree, long max_size = kDefaultMaxSize);

CounterexampleReport detect_counterexample(const GroupParams& params, long max_size);

}  // namespace chern
