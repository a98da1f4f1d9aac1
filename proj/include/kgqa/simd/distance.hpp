#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace kgqa::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// Whether the kernel was compiled in and the CPU supports it.
bool isa_available(Isa isa);

/// Kernel chosen at first use: the best available one, unless the
/// KGQA_SIMD environment variable names another available kernel
/// ("scalar", "avx2", "neon").
Isa active_isa();

/// Sum of squared differences of two int32 vectors, accumulated exactly in
/// 64-bit integers, so every kernel returns the same value. Entries must
/// stay below 2^30 in magnitude.
double squared_distance(const std::int32_t* a, const std::int32_t* b, std::size_t n);
double squared_distance(Isa isa, const std::int32_t* a, const std::int32_t* b, std::size_t n);

namespace detail {
std::int64_t squared_distance_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n);
std::int64_t squared_distance_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n);
std::int64_t squared_distance_neon(const std::int32_t* a, const std::int32_t* b, std::size_t n);
}  // namespace detail

}  // namespace kgqa::simd
