#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "fbl/linalg.hpp"

namespace fbl {

// Deterministic random source. Gaussian variates are produced by an explicit
// Box-Muller transform over raw mt19937_64 bits so that a given seed yields
// the same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    do { u = uniform01(); } while (u <= 0.0);
    double v = uniform01();
    double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * M_PI * v);
    has_spare_ = true;
    return r * std::cos(2.0 * M_PI * v);
  }

  cd cgaussian() {
    double re = gaussian();
    double im = gaussian();
    return cd(re, im) / std::sqrt(2.0);
  }

  Vec cgaussian_vector(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = cgaussian();
    return v;
  }

  // Uniform integer in [0, n).
  int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fbl
