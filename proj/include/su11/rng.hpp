#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace su11 {

// Philox4x64-10 counter-based generator.  Each (seed, trial) pair owns an
// independent stream, so trials can be farmed out to threads in any order
// while the sampled coefficients stay a pure function of (seed, trial).
struct Philox4x64 {
  static std::array<std::uint64_t, 4> block(const std::uint64_t ctr[4],
                                            const std::uint64_t key[2]);
};

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64();

  // Uniform on (0, 1]; never returns 0, so logs are safe.
  double next_uniform();

  // Standard complex Gaussian: E a = 0, E|a|^2 = 1, real/imag parts
  // independent N(0, 1/2).  Box-Muller in polar form, one draw per
  // two uniforms.
  std::complex<double> next_complex_gaussian();

 private:
  void refill();

  std::uint64_t key_[2];
  std::uint64_t ctr_[4];
  std::array<std::uint64_t, 4> buf_{};
  int pos_;
};

}  // namespace su11
