#include "su11/rng.hpp"

#include <cmath>
#include <numbers>

namespace su11 {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

// Fixed stream salt; the second key word distinguishes this library's
// streams from a bare Philox keyed on the seed alone.
constexpr std::uint64_t kKeySalt = 0x243F6A8885A308D3ull;

inline void mul_hi_lo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

}  // namespace

std::array<std::uint64_t, 4> Philox4x64::block(const std::uint64_t ctr[4],
                                               const std::uint64_t key[2]) {
  std::uint64_t c0 = ctr[0], c1 = ctr[1], c2 = ctr[2], c3 = ctr[3];
  std::uint64_t k0 = key[0], k1 = key[1];
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mul_hi_lo(kMul0, c0, hi0, lo0);
    mul_hi_lo(kMul1, c2, hi1, lo1);
    c0 = hi1 ^ c1 ^ k0;
    c1 = lo1;
    c2 = hi0 ^ c3 ^ k1;
    c3 = lo0;
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return {c0, c1, c2, c3};
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : key_{seed, kKeySalt}, ctr_{0, trial, 0, 0}, pos_(4) {}

void TrialRng::refill() {
  buf_ = Philox4x64::block(ctr_, key_);
  ++ctr_[0];
  if (ctr_[0] == 0) ++ctr_[2];  // 2^64 blocks per trial is never reached
  pos_ = 0;
}

std::uint64_t TrialRng::next_u64() {
  if (pos_ == 4) refill();
  return buf_[pos_++];
}

double TrialRng::next_uniform() {
  // 53 high bits, shifted into (0, 1].
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
}

std::complex<double> TrialRng::next_complex_gaussian() {
  double u1 = next_uniform();
  double u2 = next_uniform();
  double radius = std::sqrt(-std::log(u1));
  double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace su11
