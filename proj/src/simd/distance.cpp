#include "kgqa/simd/distance.hpp"

#include <cstdlib>
#include <string>

namespace kgqa::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "scalar";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(KGQA_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(KGQA_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

namespace {

Isa choose() {
  if (const char* env = std::getenv("KGQA_SIMD")) {
    std::string want(env);
    for (auto isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == isa_name(isa) && isa_available(isa)) return isa;
    }
  }
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = choose();
  return isa;
}

namespace detail {

std::int64_t squared_distance_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - b[i];
    sum += d * d;
  }
  return sum;
}

#if !defined(KGQA_HAVE_AVX2)
std::int64_t squared_distance_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  return squared_distance_scalar(a, b, n);
}
#endif

#if !defined(KGQA_HAVE_NEON)
std::int64_t squared_distance_neon(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  return squared_distance_scalar(a, b, n);
}
#endif

}  // namespace detail

double squared_distance(Isa isa, const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  if (!isa_available(isa)) isa = Isa::Scalar;
  switch (isa) {
    case Isa::Avx2: return static_cast<double>(detail::squared_distance_avx2(a, b, n));
    case Isa::Neon: return static_cast<double>(detail::squared_distance_neon(a, b, n));
    case Isa::Scalar: break;
  }
  return static_cast<double>(detail::squared_distance_scalar(a, b, n));
}

double squared_distance(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  return squared_distance(active_isa(), a, b, n);
}

}  // namespace kgqa::simd
