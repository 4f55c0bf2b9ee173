#include "chern/indices.hpp"

#include <algorithm>
#include <numeric>

#include "chern/kernels.hpp"

namespace chern {

namespace {

void require_degree(int degree) {
  if (degree != 2 && degree != 3) throw PreconditionError("degree must be 2 or 3");
}

std::size_t count_up_to_size(const std::vector<BasisElement>& basis, std::size_t size) {
  auto it = std::partition_point(basis.begin(), basis.end(),
                                 [size](const BasisElement& s) { return s.size() <= size; });
  return static_cast<std::size_t>(it - basis.begin());
}

Witness witness_for(const GroupParams& params, VirtualRep rep, ChernData data, int degree) {
  auto v = padic_valuation(params.prime(), data.degree(degree));
  return {std::move(rep), std::move(data), v};
}

}  // namespace

BasisEvaluation evaluate_basis(const GroupParams& params, long max_size) {
  BasisEvaluation eval{params, max_size, enumerate_basis(params, max_size), {}, {}};
  ElementaryTable table(params);
  eval.values = kernels::evaluate_parallel(table, eval.basis);
  eval.power_sum = chern_of_virtual(params, VirtualRep::power_sum(params.ell()));
  return eval;
}

std::optional<ExactInt> expected_generator(const GroupParams& params, int degree) {
  require_degree(degree);
  const long ell = params.ell(), k = params.k();
  if (degree == 2) return ExactInt(ell == 2 && k % 2 == 1 ? 4 : ell);
  if (ell != 2) return ExactInt(ell == 3 && k % 3 == 1 ? 27 : ell * ell);
  if (k == 3) return ExactInt(2);
  return std::nullopt;
}

IndexReport chow_index(const BasisEvaluation& eval, int degree) {
  require_degree(degree);
  if (eval.bound < degree)
    throw PreconditionError("degree " + std::to_string(degree) + " index needs max_size >= " +
                            std::to_string(degree));
  const GroupParams& params = eval.params;
  const std::span<const ChernData> all(eval.values);
  const std::size_t prev_count = count_up_to_size(eval.basis, static_cast<std::size_t>(eval.bound - 1));

  const ExactInt& cap = eval.power_sum.degree(degree);
  ExactInt g = gcd(kernels::gcd_parallel(all, degree), cap);
  ExactInt g_prev = gcd(kernels::gcd_parallel(all.first(prev_count), degree), cap);

  IndexReport report{params, degree, eval.bound, g, g != 0 && g == g_prev, {}, 0,
                     expected_generator(params, degree), {}};

  const Valuation target = padic_valuation(params.prime(), g);
  auto consider = [&](const VirtualRep& rep, const ChernData& data) {
    if (padic_valuation(params.prime(), data.degree(degree)) != target) return;
    ++report.witness_count;
    if (report.witnesses.size() < kMaxListedWitnesses)
      report.witnesses.push_back(witness_for(params, rep, data, degree));
  };
  for (std::size_t i = 0; i < eval.basis.size(); ++i) consider(VirtualRep::of(eval.basis[i]), eval.values[i]);
  consider(VirtualRep::power_sum(params.ell()), eval.power_sum);

  if (degree == 3) {
    report.caveat = params.ell() == 2
                        ? "index of im Ch^3; im CH^3 contains it with index at most 2 and may be finer"
                        : "index of im Ch^3, equal to the im CH^3 index for odd ell";
  }
  return report;
}

IndexReport chow2_index(const GroupParams& params, long max_size) {
  if (max_size < 2) throw PreconditionError("chow2_index needs max_size >= 2");
  return chow_index(evaluate_basis(params, max_size), 2);
}

IndexReport chow3_index(const GroupParams& params, long max_size) {
  if (max_size < 3) throw PreconditionError("chow3_index needs max_size >= 3");
  return chow_index(evaluate_basis(params, max_size), 3);
}

ExactInt h4_image_index(const GroupParams& params) {
  const long lp = params.ell_prime();
  return ExactInt(lp / std::gcd(params.k(), lp));
}

AuditReport divisibility_audit(const BasisEvaluation& eval, int degree, unsigned long claimed_valuation) {
  require_degree(degree);
  AuditReport report{eval.params, degree, claimed_valuation, {}, {}, eval.basis.size()};
  for (std::size_t i : kernels::violations_parallel(eval.params.prime(), eval.values, degree, claimed_valuation)) {
    report.violations.push_back(eval.basis[i]);
    report.violation_data.push_back(eval.values[i]);
  }
  return report;
}

AuditReport divisibility_audit(const GroupParams& params, int degree, unsigned long claimed_valuation,
                               long max_size) {
  return divisibility_audit(evaluate_basis(params, max_size), degree, claimed_valuation);
}

WitnessResult find_witness(const GroupParams& params, int degree, long max_size) {
  require_degree(degree);
  const long ell = params.ell(), k = params.k();

  std::optional<BasisElement> designated;
  bool none_below_cube = false;
  if (ell != 2) {
    const long r = k % ell;
    if (degree == 2) {
      designated = r == 1 ? BasisElement(params, {1, static_cast<int>(ell - 1)})
                          : BasisElement(params, {static_cast<int>(ell)});
    } else if (r == 2) {
      designated = BasisElement(params, {1, static_cast<int>(ell - 1)});
    } else if (r == 1 && ell > 3) {
      designated = BasisElement(params, {1, 1, static_cast<int>(ell - 2)});
    } else if (r == 1) {
      none_below_cube = true;
    } else {
      designated = BasisElement(params, {static_cast<int>(ell)});
    }
  }

  long bound = std::max<long>(max_size, degree);
  if (designated) bound = std::max<long>(bound, static_cast<long>(designated->size()));
  const BasisEvaluation eval = evaluate_basis(params, bound);
  const IndexReport index = chow_index(eval, degree);
  const Valuation target = padic_valuation(params.prime(), index.image_generator);

  WitnessResult result{params, degree, WitnessResult::Kind::exhaustive, std::nullopt, index.image_generator, false};
  if (none_below_cube) {
    result.kind = WitnessResult::Kind::none_below_cube;
    result.verified = target == Valuation::finite(3);
    return result;
  }
  if (designated) {
    result.kind = WitnessResult::Kind::designated;
    result.witness = witness_for(params, VirtualRep::of(*designated),
                                 chern_of_virtual(params, VirtualRep::of(*designated)), degree);
  } else {
    for (std::size_t i = 0; i < eval.basis.size() && !result.witness; ++i)
      if (padic_valuation(params.prime(), eval.values[i].degree(degree)) == target)
        result.witness = witness_for(params, VirtualRep::of(eval.basis[i]), eval.values[i], degree);
    if (!result.witness)
      result.witness = witness_for(params, VirtualRep::power_sum(ell), eval.power_sum, degree);
  }
  result.verified = result.witness->valuation == target;
  return result;
}

CounterexampleReport detect_counterexample(const GroupParams& params, long max_size) {
  IndexReport chow2 = chow2_index(params, max_size);
  ExactInt h4 = h4_image_index(params);
  const bool flag = chow2.image_generator > h4;
  return {params, std::move(h4), std::move(chow2), flag};
}

}  // namespace chern
