#include "doctest.h"

#include "fiatkit/simd/int_kernels.hpp"

#include <limits>
#include <random>
#include <vector>

using namespace fiatkit::simd;

namespace {

using Kernel = bool (*)(const std::int64_t*, const std::int64_t*, std::int64_t*, std::size_t, std::size_t,
                        std::size_t);
using Step = bool (*)(const std::int64_t*, const std::int64_t*, const std::int64_t*, std::int64_t*, std::size_t);
using MinFn = std::int64_t (*)(const std::int64_t*, std::size_t);

struct Variant {
    const char* name;
    Kernel matmul;
    Step step;
    MinFn min;
};

std::vector<Variant> variants() {
    std::vector<Variant> v;
#if defined(FIATKIT_HAVE_AVX2)
    if (detected_backend() == Backend::avx2) v.push_back({"avx2", avx2::matmul_i64, avx2::mul_sub_i64, avx2::min_i64});
#endif
#if defined(FIATKIT_HAVE_NEON)
    v.push_back({"neon", neon::matmul_i64, neon::mul_sub_i64, neon::min_i64});
#endif
    v.push_back({"dispatch", matmul_i64, mul_sub_i64, min_i64});
    return v;
}

std::vector<std::int64_t> random_block(std::size_t len, std::int64_t bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> pick(-bound, bound);
    std::vector<std::int64_t> v(len);
    for (auto& x : v) x = pick(rng);
    return v;
}

}  // namespace

TEST_CASE("scalar reference kernels on a hand example") {
    // [[1,2],[3,4]] * [[0,1],[1,0]] = [[2,1],[4,3]]
    std::vector<std::int64_t> a{1, 2, 3, 4}, b{0, 1, 1, 0}, c(4), prev{1, 1, 1, 1};
    REQUIRE(scalar::matmul_i64(a.data(), b.data(), c.data(), 2, 2, 2));
    CHECK(c == std::vector<std::int64_t>{2, 1, 4, 3});
    REQUIRE(scalar::mul_sub_i64(a.data(), b.data(), prev.data(), c.data(), 2));
    CHECK(c == std::vector<std::int64_t>{1, 0, 3, 2});
    CHECK(scalar::min_i64(c.data(), c.size()) == 0);
}

TEST_CASE("scalar reference detects overflow") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
    std::vector<std::int64_t> a{big, big}, b{1, 1}, c(1);
    CHECK_FALSE(scalar::matmul_i64(a.data(), b.data(), c.data(), 1, 2, 1));
    std::vector<std::int64_t> sq{big}, out(1);
    CHECK_FALSE(scalar::matmul_i64(sq.data(), sq.data(), out.data(), 1, 1, 1));
}

TEST_CASE("vector variants agree with the scalar reference") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> dim(1, 19);
    const std::int64_t bounds[] = {1, 3, 1000, 1LL << 20, 1LL << 40};
    for (const auto& var : variants()) {
        CAPTURE(var.name);
        for (std::int64_t bound : bounds)
            for (int trial = 0; trial < 40; ++trial) {
                const std::size_t n = dim(rng), k = dim(rng), m = dim(rng);
                auto a = random_block(n * k, bound, rng), b = random_block(k * m, bound, rng);
                std::vector<std::int64_t> c_ref(n * m), c_var(n * m);
                const bool ok_ref = scalar::matmul_i64(a.data(), b.data(), c_ref.data(), n, k, m);
                const bool ok_var = var.matmul(a.data(), b.data(), c_var.data(), n, k, m);
                CHECK(ok_ref == ok_var);
                if (ok_ref) CHECK(c_ref == c_var);

                auto sq1 = random_block(n * n, bound, rng), sq2 = random_block(n * n, bound, rng),
                     sq3 = random_block(n * n, bound, rng);
                std::vector<std::int64_t> s_ref(n * n), s_var(n * n);
                const bool st_ref = scalar::mul_sub_i64(sq1.data(), sq2.data(), sq3.data(), s_ref.data(), n);
                const bool st_var = var.step(sq1.data(), sq2.data(), sq3.data(), s_var.data(), n);
                CHECK(st_ref == st_var);
                if (st_ref) CHECK(s_ref == s_var);

                CHECK(scalar::min_i64(a.data(), a.size()) == var.min(a.data(), a.size()));
            }
        CHECK(var.min(nullptr, 0) == std::numeric_limits<std::int64_t>::max());
    }
}

TEST_CASE("narrow product bound") {
    CHECK(fits_narrow_product(1, 1, 10));
    CHECK_FALSE(fits_narrow_product(1LL << 32, 1, 1));
    CHECK_FALSE(fits_narrow_product(1LL << 30, 1LL << 30, 1LL << 4));
    CHECK(max_abs_i64(nullptr, 0) == 0);
    std::int64_t v[] = {std::numeric_limits<std::int64_t>::min()};
    CHECK(max_abs_i64(v, 1) == std::numeric_limits<std::int64_t>::max());
}
