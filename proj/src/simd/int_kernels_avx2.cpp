#include "fiatkit/simd/int_kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <limits>

namespace fiatkit::simd::avx2 {
namespace {

// Entries fit in int32 and no partial sum can overflow; _mm256_mul_epi32
// multiplies the sign-extended low halves of each 64-bit lane exactly.
void matmul_narrow(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, std::size_t n, std::size_t k,
                   std::size_t m) {
    std::fill(c, c + n * m, 0);
    const std::size_t m4 = m & ~std::size_t{3};
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t* crow = c + i * m;
        for (std::size_t l = 0; l < k; ++l) {
            const std::int64_t x = a[i * k + l];
            if (x == 0) continue;
            const std::int64_t* brow = b + l * m;
            const __m256i vx = _mm256_set1_epi64x(x);
            std::size_t j = 0;
            for (; j < m4; j += 4) {
                __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(brow + j));
                __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(crow + j));
                vc = _mm256_add_epi64(vc, _mm256_mul_epi32(vx, vb));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(crow + j), vc);
            }
            for (; j < m; ++j) crow[j] += x * brow[j];
        }
    }
}

}  // namespace

bool matmul_i64(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, std::size_t n, std::size_t k,
                std::size_t m) {
    if (!fits_narrow_product(max_abs_i64(a, n * k), max_abs_i64(b, k * m), k))
        return scalar::matmul_i64(a, b, c, n, k, m);
    matmul_narrow(a, b, c, n, k, m);
    return true;
}

bool mul_sub_i64(const std::int64_t* a1, const std::int64_t* a, const std::int64_t* b, std::int64_t* c,
                 std::size_t n) {
    constexpr std::int64_t quarter = std::numeric_limits<std::int64_t>::max() / 4;
    if (!fits_narrow_product(max_abs_i64(a1, n * n), max_abs_i64(a, n * n), n) || max_abs_i64(b, n * n) > quarter)
        return scalar::mul_sub_i64(a1, a, b, c, n);
    matmul_narrow(a1, a, c, n, n, n);
    const std::size_t len = n * n;
    const std::size_t len4 = len & ~std::size_t{3};
    std::size_t i = 0;
    for (; i < len4; i += 4) {
        __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(c + i), _mm256_sub_epi64(vc, vb));
    }
    for (; i < len; ++i) c[i] -= b[i];
    return true;
}

std::int64_t min_i64(const std::int64_t* v, std::size_t len) {
    std::int64_t r = std::numeric_limits<std::int64_t>::max();
    const std::size_t len4 = len & ~std::size_t{3};
    std::size_t i = 0;
    if (len4 > 0) {
        __m256i vm = _mm256_set1_epi64x(r);
        for (; i < len4; i += 4) {
            __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
            vm = _mm256_blendv_epi8(vm, x, _mm256_cmpgt_epi64(vm, x));
        }
        alignas(32) std::int64_t lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vm);
        r = std::min({lanes[0], lanes[1], lanes[2], lanes[3]});
    }
    for (; i < len; ++i) r = std::min(r, v[i]);
    return r;
}

}  // namespace fiatkit::simd::avx2
