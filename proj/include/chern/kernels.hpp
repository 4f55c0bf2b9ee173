#pragma once

// Data-parallel evaluation of Chern data over an enumerated basis, plus the
// order-independent reductions the index and audit code needs. Each kernel
// has a serial reference twin; the tests hold the pair equal.

#include <cstddef>
#include <span>
#include <vector>

#include "chern/arith.hpp"
#include "chern/reps.hpp"
#include "chern/symfunc.hpp"

namespace chern::kernels {

std::vector<ChernData> evaluate_serial(const ElementaryTable& table, std::span<const BasisElement> basis);
std::vector<ChernData> evaluate_parallel(const ElementaryTable& table, std::span<const BasisElement> basis);

/// Non-negative gcd of the degree-d entries; 0 for an empty range.
ExactInt gcd_serial(std::span<const ChernData> values, int degree);
ExactInt gcd_parallel(std::span<const ChernData> values, int degree);

/// Indices i with padic_valuation(p, values[i].degree(d)) < claimed, ascending.
std::vector<std::size_t> violations_serial(const PrimeParam& p, std::span<const ChernData> values, int degree,
                                           unsigned long claimed);
std::vector<std::size_t> violations_parallel(const PrimeParam& p, std::span<const ChernData> values, int degree,
                                             unsigned long claimed);

/// Number of worker threads the parallel kernels will use.
int thread_count();

}  // namespace chern::kernels
