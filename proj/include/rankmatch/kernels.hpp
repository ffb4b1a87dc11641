#pragma once

#include <cstddef>
#include <cstdint>

// Inner-loop kernels with a scalar reference implementation and SIMD
// variants selected at runtime.  Every variant must be bit-equivalent to the
// scalar kernel; tests/test_kernels.cpp enforces that on random inputs.
namespace rankmatch::kernels {

// Key value meaning "not a candidate" (matched node).  Valid rank keys are
// strictly below this.
inline constexpr std::uint32_t kKeyAbsent = 0xFFFFFFFFu;

// Minimum of key[nodes[i]] over i in [0, count); kKeyAbsent when count == 0
// or every key is kKeyAbsent.  This is the hot loop of a Ranking run: the
// candidate partner of a node is its unmatched neighbor of minimum rank.
std::uint32_t min_key_scan_scalar(const std::int32_t* nodes, std::size_t count,
                                  const std::uint32_t* key);

#if defined(__x86_64__) || defined(__i386__)
std::uint32_t min_key_scan_avx2(const std::int32_t* nodes, std::size_t count,
                                const std::uint32_t* key);
#endif
#if defined(__aarch64__)
std::uint32_t min_key_scan_neon(const std::int32_t* nodes, std::size_t count,
                                const std::uint32_t* key);
#endif

using MinKeyScanFn = std::uint32_t (*)(const std::int32_t*, std::size_t,
                                       const std::uint32_t*);

// Dispatched kernel: best variant the CPU supports, overridable with
// RANKMATCH_KERNEL=scalar|avx2|neon (checked once, at first use).
MinKeyScanFn min_key_scan();

// Name of the dispatched variant ("scalar", "avx2", "neon").
const char* min_key_scan_name();

}  // namespace rankmatch::kernels
