// Serial vs OpenMP kernels on the largest sweep cells.
//   bench_kernels [max_size]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "chern/kernels.hpp"

using namespace chern;

namespace {

template <class F>
double time_ms(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const long max_size = argc > 1 ? std::atol(argv[1]) : 4;
  std::printf("threads %d, max_size %ld\n", kernels::thread_count(), max_size);
  std::printf("%4s %3s %9s %12s %12s %12s %12s\n", "ell", "k", "elements", "eval_ser_ms", "eval_omp_ms",
              "gcd_ser_ms", "gcd_omp_ms");
  for (auto [ell, k] : {std::pair{2L, 8L}, {3L, 8L}, {5L, 8L}, {7L, 8L}}) {
    const GroupParams p(ell, k);
    const ElementaryTable table(p);
    const auto basis = enumerate_basis(p, max_size);
    const auto values = kernels::evaluate_serial(table, basis);
    if (values != kernels::evaluate_parallel(table, basis)) {
      std::fprintf(stderr, "kernel mismatch at ell=%ld k=%ld\n", ell, k);
      return 1;
    }
    const double es = time_ms([&] { (void)kernels::evaluate_serial(table, basis); }, 3);
    const double ep = time_ms([&] { (void)kernels::evaluate_parallel(table, basis); }, 3);
    const double gs = time_ms([&] { (void)kernels::gcd_serial(values, 3); }, 3);
    const double gp = time_ms([&] { (void)kernels::gcd_parallel(values, 3); }, 3);
    std::printf("%4ld %3ld %9zu %12.2f %12.2f %12.2f %12.2f\n", ell, k, basis.size(), es, ep, gs, gp);
  }
  return 0;
}
