// Times a full genus-table build under each polynomial multiplication strategy.
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "cubicmaps/cubic_recursion.hpp"
#include "cubicmaps/polynomial.hpp"

int main(int argc, char** argv) {
  using namespace cubicmaps;
  const long max_n = argc > 1 ? std::atol(argv[1]) : 200;
  if (max_n < 1) {
    std::cerr << "usage: bench_convolution [max_n]\n";
    return 2;
  }
  std::optional<HTable> reference;
  std::cout << "strategy,max_n,seconds\n";
  for (auto s : {MulStrategy::schoolbook, MulStrategy::karatsuba, MulStrategy::kronecker}) {
    BuildOptions opt;
    opt.strategy = s;
    const auto t0 = std::chrono::steady_clock::now();
    HTable t = build_h_table(max_n, opt);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::cout << to_string(s) << ',' << max_n << ',' << std::setprecision(4) << dt.count() << '\n';
    if (!reference) {
      reference = std::move(t);
    } else if (!(t == *reference)) {
      std::cerr << "tables differ under " << to_string(s) << '\n';
      return 1;
    }
  }
  return 0;
}
