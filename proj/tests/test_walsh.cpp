#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bentlab/walsh.hpp"

#include <random>

using bentlab::Eisenstein;
using bentlab::FieldCtx;
using bentlab::FunctionTable;

namespace {

FunctionTable random_table(const FieldCtx& ctx, std::mt19937_64& rng) {
    FunctionTable f;
    f.n = ctx.n();
    f.values.resize(ctx.q());
    std::uniform_int_distribution<int> pick(0, 2);
    for (auto& v : f.values) v = static_cast<uint8_t>(pick(rng));
    return f;
}

long long pow3(int n) {
    long long r = 1;
    while (n-- > 0) r *= 3;
    return r;
}

}  // namespace

TEST_CASE("constant functions") {
    auto ctx = FieldCtx::build(3, 3);
    FunctionTable zero{3, std::vector<uint8_t>(27, 0)};

    auto spec = walsh_spectrum(zero, *ctx);
    CHECK(spec.coeffs[0] == Eisenstein{27, 0});
    for (long long b = 1; b < 27; ++b) CHECK(spec.coeffs[b] == Eisenstein{0, 0});

    FunctionTable two{3, std::vector<uint8_t>(27, 2)};
    auto spec2 = walsh_spectrum(two, *ctx);
    Eisenstein expected = bentlab::omega_pow(2);
    expected = {27 * expected.x, 27 * expected.y};
    CHECK(spec2.coeffs[0] == expected);
    for (long long b = 1; b < 27; ++b) CHECK(spec2.coeffs[b] == Eisenstein{0, 0});
}

TEST_CASE("quadratic-form component on F_9 matches the closed form") {
    auto ctx = FieldCtx::build(3, 2);
    FunctionTable f;
    f.n = 2;
    f.values.resize(9);
    for (long long x = 0; x < 9; ++x)
        f.values[x] = static_cast<uint8_t>(ctx->trace_abs(ctx->pow(x, 4)));

    CHECK(walsh_point(f, 0, *ctx) == Eisenstein{-3, 0});

    auto spec = walsh_spectrum(f, *ctx);
    for (long long b = 0; b < 9; ++b) {
        // -3 w^{-Tr_1(b^4 * 2^{-1})}, and 2^{-1} = 2 in F_3
        long long arg = ctx->mul(ctx->pow(b, 4), ctx->inv(ctx->scalar(2)));
        Eisenstein unit = bentlab::omega_pow(-((arg == 0) ? 0 : ctx->subfield_trace(arg, 1)));
        CHECK(spec.coeffs[b] == Eisenstein{-3 * unit.x, -3 * unit.y});
        CHECK(walsh_point(f, b, *ctx) == spec.coeffs[b]);
    }
}

TEST_CASE("fast transform equals pointwise sums exactly") {
    std::mt19937_64 rng(2024);
    for (int n = 1; n <= 5; ++n) {
        auto ctx = FieldCtx::build(3, n);
        for (int rep = 0; rep < 6; ++rep) {
            auto f = random_table(*ctx, rng);
            auto spec = walsh_spectrum(f, *ctx);
            for (long long b = 0; b < ctx->q(); ++b)
                REQUIRE(spec.coeffs[b] == walsh_point(f, b, *ctx));
        }
    }
}

TEST_CASE("Parseval sum is 3^{2n} for arbitrary tables") {
    std::mt19937_64 rng(99);
    for (int n : {1, 2, 4}) {
        auto ctx = FieldCtx::build(3, n);
        for (int rep = 0; rep < 10; ++rep) {
            auto spec = walsh_spectrum(random_table(*ctx, rng), *ctx);
            CHECK(parseval_sum(spec) == pow3(2 * n));
        }
    }
}

TEST_CASE("adding a linear form permutes the spectrum") {
    std::mt19937_64 rng(7);
    auto ctx = FieldCtx::build(3, 3);
    std::uniform_int_distribution<long long> pick(0, ctx->q() - 1);
    for (int rep = 0; rep < 10; ++rep) {
        auto f = random_table(*ctx, rng);
        long long c = pick(rng);
        FunctionTable shifted = f;
        for (long long x = 0; x < ctx->q(); ++x)
            shifted.values[x] =
                static_cast<uint8_t>((f.values[x] + ctx->trace_abs(ctx->mul(c, x))) % 3);
        auto base = walsh_spectrum(f, *ctx);
        auto spec = walsh_spectrum(shifted, *ctx);
        for (long long b = 0; b < ctx->q(); ++b)
            CHECK(spec.coeffs[b] == base.coeffs[ctx->sub(b, c)]);
    }
}

TEST_CASE("determinism: repeated runs are bit-identical") {
    std::mt19937_64 rng(31);
    auto ctx = FieldCtx::build(3, 5);
    auto f = random_table(*ctx, rng);
    auto a = walsh_spectrum(f, *ctx);
    auto b = walsh_spectrum(f, *ctx);
    CHECK(a.coeffs == b.coeffs);
}

TEST_CASE("dimension mismatch is rejected") {
    auto ctx = FieldCtx::build(3, 2);
    FunctionTable f{3, std::vector<uint8_t>(27, 0)};
    CHECK_THROWS_AS((void)walsh_point(f, 0, *ctx), std::invalid_argument);
    CHECK_THROWS_AS((void)walsh_spectrum(f, *ctx), std::invalid_argument);
}

TEST_CASE("csv dump format") {
    auto ctx = FieldCtx::build(3, 1);
    FunctionTable f{1, {0, 0, 0}};
    auto spec = walsh_spectrum(f, *ctx);
    CHECK(spec.to_csv() == "b_index,x,y\n0,3,0\n1,0,0\n2,0,0\n");
}
