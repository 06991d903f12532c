#include "fiatkit/simd/int_kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <limits>

namespace fiatkit::simd {

namespace scalar {

bool matmul_i64(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, std::size_t n, std::size_t k,
                std::size_t m) {
    std::fill(c, c + n * m, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            const std::int64_t x = a[i * k + l];
            if (x == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                std::int64_t p;
                if (__builtin_mul_overflow(x, b[l * m + j], &p)) return false;
                if (__builtin_add_overflow(c[i * m + j], p, &c[i * m + j])) return false;
            }
        }
    return true;
}

bool mul_sub_i64(const std::int64_t* a1, const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                 std::size_t n) {
    if (!matmul_i64(a1, a, c, n, n, n)) return false;
    for (std::size_t i = 0; i < n * n; ++i)
        if (__builtin_sub_overflow(c[i], b[i], &c[i])) return false;
    return true;
}

std::int64_t min_i64(const std::int64_t* v, std::size_t len) {
    std::int64_t r = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < len; ++i) r = std::min(r, v[i]);
    return r;
}

}  // namespace scalar

std::int64_t max_abs_i64(const std::int64_t* v, std::size_t len) {
    std::int64_t r = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (v[i] == std::numeric_limits<std::int64_t>::min()) return std::numeric_limits<std::int64_t>::max();
        r = std::max(r, v[i] < 0 ? -v[i] : v[i]);
    }
    return r;
}

bool fits_narrow_product(std::int64_t amax, std::int64_t bmax, std::size_t k) {
    constexpr std::int64_t narrow = std::numeric_limits<std::int32_t>::max();
    if (amax > narrow || bmax > narrow) return false;
    const __int128 bound = static_cast<__int128>(amax) * bmax * static_cast<__int128>(k);
    return bound < static_cast<__int128>(std::numeric_limits<std::int64_t>::max()) / 2;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
        default: return "scalar";
    }
}

Backend detected_backend() {
    static const Backend b = [] {
#if defined(FIATKIT_HAVE_AVX2)
        __builtin_cpu_init();
        if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#elif defined(FIATKIT_HAVE_NEON)
        return Backend::neon;
#endif
        return Backend::scalar;
    }();
    return b;
}

Backend active_backend() {
    static const Backend b = [] {
        const char* env = std::getenv("FIATKIT_SIMD");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) return Backend::scalar;
        return detected_backend();
    }();
    return b;
}

bool matmul_i64(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, std::size_t n, std::size_t k,
                std::size_t m) {
    switch (active_backend()) {
#if defined(FIATKIT_HAVE_AVX2)
        case Backend::avx2: return avx2::matmul_i64(a, b, c, n, k, m);
#endif
#if defined(FIATKIT_HAVE_NEON)
        case Backend::neon: return neon::matmul_i64(a, b, c, n, k, m);
#endif
        default: return scalar::matmul_i64(a, b, c, n, k, m);
    }
}

bool mul_sub_i64(const std::int64_t* a1, const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                 std::size_t n) {
    switch (active_backend()) {
#if defined(FIATKIT_HAVE_AVX2)
        case Backend::avx2: return avx2::mul_sub_i64(a1, a, b, c, n);
#endif
#if defined(FIATKIT_HAVE_NEON)
        case Backend::neon: return neon::mul_sub_i64(a1, a, b, c, n);
#endif
        default: return scalar::mul_sub_i64(a1, a, b, c, n);
    }
}

std::int64_t min_i64(const std::int64_t* v, std::size_t len) {
    switch (active_backend()) {
#if defined(FIATKIT_HAVE_AVX2)
        case Backend::avx2: return avx2::min_i64(v, len);
#endif
#if defined(FIATKIT_HAVE_NEON)
        case Backend::neon: return neon::min_i64(v, len);
#endif
        default: return scalar::min_i64(v, len);
    }
}

}  // namespace fiatkit::simd
