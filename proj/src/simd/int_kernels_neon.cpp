#include "fiatkit/simd/int_kernels.hpp"

#include <arm_neon.h>

#include <algorithm>
#include <limits>

namespace fiatkit::simd::neon {
namespace {

// Narrow path: entries fit in int32, products accumulate with vmlal_s32.
void matmul_narrow(const std::int64_t* a, const std::int64_t* b, std::int64_t* c, std::size_t n, std::size_t k,
                   std::size_t m) {
    std::fill(c, c + n * m, 0);
    const std::size_t m2 = m & ~std::size_t{1};
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t* crow = c + i * m;
        for (std::size_t l = 0; l < k; ++l) {
            const std::int64_t x = a[i * k + l];
            if (x == 0) continue;
            const std::int64_t* brow = b + l * m;
            const int32x2_t vx = vdup_n_s32(static_cast<std::int32_t>(x));
            std::size_t j = 0;
            for (; j < m2; j += 2) {
                const int32x2_t vb = vmovn_s64(vld1q_s64(brow + j));
                vst1q_s64(crow + j, vmlal_s32(vld1q_s64(crow + j), vx, vb));
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
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) vst1q_s64(c + i, vsubq_s64(vld1q_s64(c + i), vld1q_s64(b + i)));
    for (; i < len; ++i) c[i] -= b[i];
    return true;
}

std::int64_t min_i64(const std::int64_t* v, std::size_t len) {
    std::int64_t r = std::numeric_limits<std::int64_t>::max();
    std::size_t i = 0;
    if (len >= 2) {
        int64x2_t vm = vdupq_n_s64(r);
        for (; i + 2 <= len; i += 2) {
            const int64x2_t x = vld1q_s64(v + i);
            vm = vbslq_s64(vcgtq_s64(vm, x), x, vm);
        }
        r = std::min(vgetq_lane_s64(vm, 0), vgetq_lane_s64(vm, 1));
    }
    for (; i < len; ++i) r = std::min(r, v[i]);
    return r;
}

}  // namespace fiatkit::simd::neon
