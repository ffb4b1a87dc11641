#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace rankmatch {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
//
// A stream is addressed by (seed, stream id); the value at any position
// depends only on (seed, stream, position).  Experiments key one stream per
// Monte Carlo sample, so a run sharded across any number of workers draws
// exactly the same variates as a serial run.
class PhiloxRng {
 public:
  PhiloxRng(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Unbiased uniform draw from [0, bound); bound >= 1.
  std::uint32_t uniform_below(std::uint32_t bound);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_ = 0;
};

// In-place uniform shuffle (Fisher-Yates, drawing from `rng`).
void fisher_yates(std::span<std::int32_t> items, PhiloxRng& rng);

}  // namespace rankmatch
