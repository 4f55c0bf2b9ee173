#include "chern/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chern::kernels {

std::vector<ChernData> evaluate_serial(const ElementaryTable& table, std::span<const BasisElement> basis) {
  std::vector<ChernData> out;
  out.reserve(basis.size());
  for (const auto& s : basis) out.push_back(table.chern_of(s));
  return out;
}

std::vector<ChernData> evaluate_parallel(const ElementaryTable& table, std::span<const BasisElement> basis) {
  std::vector<ChernData> out(basis.size());
  const auto count = static_cast<std::ptrdiff_t>(basis.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = table.chern_of(basis[i]);
  return out;
}

ExactInt gcd_serial(std::span<const ChernData> values, int degree) {
  ExactInt g = 0;
  for (const auto& v : values) g = gcd(g, v.degree(degree));
  return g;
}

ExactInt gcd_parallel(std::span<const ChernData> values, int degree) {
  ExactInt g = 0;
  const auto count = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel
  {
    ExactInt local = 0;
#pragma omp for nowait schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) local = gcd(local, values[i].degree(degree));
#pragma omp critical(chern_gcd_merge)
    g = gcd(g, local);
  }
  return g;
}

std::vector<std::size_t> violations_serial(const PrimeParam& p, std::span<const ChernData> values, int degree,
                                           unsigned long claimed) {
  const auto bar = Valuation::finite(claimed);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (padic_valuation(p, values[i].degree(degree)) < bar) out.push_back(i);
  return out;
}

std::vector<std::size_t> violations_parallel(const PrimeParam& p, std::span<const ChernData> values, int degree,
                                             unsigned long claimed) {
  const auto bar = Valuation::finite(claimed);
  std::vector<std::size_t> out;
  const auto count = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel
  {
    std::vector<std::size_t> local;
#pragma omp for nowait schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i)
      if (padic_valuation(p, values[i].degree(degree)) < bar) local.push_back(static_cast<std::size_t>(i));
#pragma omp critical(chern_violation_merge)
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace chern::kernels
