#pragma once

#include <cstddef>
#include <cstdint>

// Dense int64 kernels for the integer-valued rings (fusion rules, based
// modules, Kazhdan-Lusztig operators). Matrices are row-major.
//
// Every kernel reports overflow instead of wrapping: a false return means the
// exact result does not fit in int64 and the output buffer is unspecified.

namespace fiatkit::simd {

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);
/// Best backend supported by the running CPU (cached).
Backend detected_backend();
/// Backend used by the dispatching entry points; FIATKIT_SIMD=scalar forces
/// the reference path.
Backend active_backend();

/// c (n x m) = a (n x k) * b (k x m).
bool matmul_i64(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, std::size_t n, std::size_t k,
                std::size_t m);
/// Three-term step on n x n matrices: c = a1 * a - b.
bool mul_sub_i64(const std::int64_t* a1, const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                 std::size_t n);
/// Smallest entry of v (INT64_MAX for empty input).
std::int64_t min_i64(const std::int64_t* v, std::size_t len);

namespace scalar {
bool matmul_i64(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, std::size_t n, std::size_t k,
                std::size_t m);
bool mul_sub_i64(const std::int64_t* a1, const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                 std::size_t n);
std::int64_t min_i64(const std::int64_t* v, std::size_t len);
}  // namespace scalar

#if defined(FIATKIT_HAVE_AVX2)
namespace avx2 {
bool matmul_i64(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, std::size_t n, std::size_t k,
                std::size_t m);
bool mul_sub_i64(const std::int64_t* a1, const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                 std::size_t n);
std::int64_t min_i64(const std::int64_t* v, std::size_t len);
}  // namespace avx2
#endif

#if defined(FIATKIT_HAVE_NEON)
namespace neon {
bool matmul_i64(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, std::size_t n, std::size_t k,
                std::size_t m);
bool mul_sub_i64(const std::int64_t* a1, const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                 std::size_t n);
std::int64_t min_i64(const std::int64_t* v, std::size_t len);
}  // namespace neon
#endif

/// True when every product sum of length k of entries bounded by amax, bmax
/// fits in int64 and both bounds fit in int32 (the vector fast path).
bool fits_narrow_product(std::int64_t amax, std::int64_t bmax, std::size_t k);
std::int64_t max_abs_i64(const std::int64_t* v, std::size_t len);

}  // namespace fiatkit::simd
