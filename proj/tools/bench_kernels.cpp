// Times the convolution behind comp_sum under each available kernel.
//
//   supercong_bench [--p 13] [--r 3] [--n 7] [--m 2] [--reps 3]

#include "supercong/compsum.hpp"
#include "supercong/kernels.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  using namespace supercong;
  u64 p = 13, m = 2;
  unsigned r = 3, n = 7, reps = 3;
  CLI::App app{"convolution kernel timings"};
  app.add_option("--p", p, "prime")->capture_default_str();
  app.add_option("--r", r, "exponent")->capture_default_str();
  app.add_option("--n", n, "parts")->capture_default_str();
  app.add_option("--m", m, "multiplier")->capture_default_str();
  app.add_option("--reps", reps, "repetitions")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  auto spec = CompSumSpec::unbounded(n, m, p, r);
  std::cout << "unbounded " << n << "-part sum at N=" << spec.target << " mod " << p << "^" << r << "\n";
  std::optional<u64> reference;
  for (const auto& k : kernels::available()) {
    kernels::select(k.name);
    double best = 1e300;
    u64 value = 0;
    for (unsigned i = 0; i < reps; ++i) {
      auto start = std::chrono::steady_clock::now();
      value = comp_sum(spec).value();
      std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
      best = std::min(best, dt.count());
    }
    if (!reference) reference = value;
    std::cout << "  " << k.name << ": " << best << " ms, value " << value
              << (value == *reference ? "" : "  MISMATCH") << "\n";
  }
  return 0;
}
