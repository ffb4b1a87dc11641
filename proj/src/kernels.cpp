#include "rankmatch/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace rankmatch::kernels {

std::uint32_t min_key_scan_scalar(const std::int32_t* nodes, std::size_t count,
                                  const std::uint32_t* key) {
  std::uint32_t best = kKeyAbsent;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t k = key[nodes[i]];
    if (k < best) best = k;
  }
  return best;
}

#if defined(__x86_64__) || defined(__i386__)

__attribute__((target("avx2"))) std::uint32_t min_key_scan_avx2(
    const std::int32_t* nodes, std::size_t count, const std::uint32_t* key) {
  __m256i best8 = _mm256_set1_epi32(-1);  // all lanes = kKeyAbsent
  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __m256i idx =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(nodes + i));
    const __m256i k = _mm256_i32gather_epi32(
        reinterpret_cast<const int*>(key), idx, 4);
    best8 = _mm256_min_epu32(best8, k);
  }
  __m128i best4 = _mm_min_epu32(_mm256_castsi256_si128(best8),
                                _mm256_extracti128_si256(best8, 1));
  best4 = _mm_min_epu32(best4, _mm_shuffle_epi32(best4, 0x4E));
  best4 = _mm_min_epu32(best4, _mm_shuffle_epi32(best4, 0xB1));
  std::uint32_t best = static_cast<std::uint32_t>(_mm_cvtsi128_si32(best4));
  for (; i < count; ++i) {
    const std::uint32_t k = key[nodes[i]];
    if (k < best) best = k;
  }
  return best;
}

#endif  // x86

#if defined(__aarch64__)

std::uint32_t min_key_scan_neon(const std::int32_t* nodes, std::size_t count,
                                const std::uint32_t* key) {
  uint32x4_t best4 = vdupq_n_u32(kKeyAbsent);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    std::uint32_t lanes[4] = {key[nodes[i]], key[nodes[i + 1]],
                              key[nodes[i + 2]], key[nodes[i + 3]]};
    best4 = vminq_u32(best4, vld1q_u32(lanes));
  }
  std::uint32_t best = vminvq_u32(best4);
  for (; i < count; ++i) {
    const std::uint32_t k = key[nodes[i]];
    if (k < best) best = k;
  }
  return best;
}

#endif  // aarch64

namespace {

struct Dispatch {
  MinKeyScanFn fn;
  const char* name;
};

Dispatch pick_min_key_scan() {
  const char* forced = std::getenv("RANKMATCH_KERNEL");
  if (forced != nullptr) {
    const std::string want(forced);
    if (want == "scalar") return {min_key_scan_scalar, "scalar"};
#if defined(__x86_64__) || defined(__i386__)
    if (want == "avx2") {
      if (!__builtin_cpu_supports("avx2"))
        throw std::runtime_error("RANKMATCH_KERNEL=avx2: cpu lacks avx2");
      return {min_key_scan_avx2, "avx2"};
    }
#endif
#if defined(__aarch64__)
    if (want == "neon") return {min_key_scan_neon, "neon"};
#endif
    throw std::runtime_error("RANKMATCH_KERNEL: unknown variant '" + want +
                             "'");
  }
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) return {min_key_scan_avx2, "avx2"};
#endif
#if defined(__aarch64__)
  return {min_key_scan_neon, "neon"};
#endif
  return {min_key_scan_scalar, "scalar"};
}

const Dispatch& dispatch() {
  static const Dispatch d = pick_min_key_scan();
  return d;
}

}  // namespace

MinKeyScanFn min_key_scan() { return dispatch().fn; }

const char* min_key_scan_name() { return dispatch().name; }

}  // namespace rankmatch::kernels
