#include "rankmatch/rng.hpp"

#include <stdexcept>

namespace rankmatch {

namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo,
                      std::uint32_t& hi) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  lo = static_cast<std::uint32_t>(p);
  hi = static_cast<std::uint32_t>(p >> 32);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr,
                         const std::array<std::uint32_t, 2>& key) {
  std::uint32_t lo0, hi0, lo1, hi1;
  mul_hi_lo(kPhiloxM4x32A, ctr[0], lo0, hi0);
  mul_hi_lo(kPhiloxM4x32B, ctr[2], lo1, hi1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

PhiloxRng::PhiloxRng(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      stream_{static_cast<std::uint32_t>(stream),
              static_cast<std::uint32_t>(stream >> 32)} {}

void PhiloxRng::refill() {
  std::array<std::uint32_t, 4> ctr = {static_cast<std::uint32_t>(block_),
                                      static_cast<std::uint32_t>(block_ >> 32),
                                      stream_[0], stream_[1]};
  std::array<std::uint32_t, 2> key = key_;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW32A;
      key[1] += kPhiloxW32B;
    }
    philox_round(ctr, key);
  }
  buffer_ = ctr;
  buffered_ = 4;
  ++block_;
}

std::uint32_t PhiloxRng::next_u32() {
  if (buffered_ == 0) refill();
  return buffer_[--buffered_];
}

std::uint64_t PhiloxRng::next_u64() {
  const std::uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

std::uint32_t PhiloxRng::uniform_below(std::uint32_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  // Rejection sampling over the largest multiple of `bound`.
  const std::uint32_t limit = ~0u - (~0u % bound + 1) % bound;
  for (;;) {
    const std::uint32_t r = next_u32();
    if (r <= limit) return r % bound;
  }
}

void fisher_yates(std::span<std::int32_t> items, PhiloxRng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::uint32_t j = rng.uniform_below(static_cast<std::uint32_t>(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace rankmatch
