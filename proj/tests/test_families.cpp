#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bentlab/classify.hpp"
#include "bentlab/families.hpp"

#include <numeric>
#include <random>

using namespace bentlab;

TEST_CASE("monomial tables") {
    auto ctx = FieldCtx::build(3, 2);

    SUBCASE("zero coefficient gives the zero table") {
        auto f = families::monomial_table(0, 4, *ctx);
        for (auto v : f.values) CHECK(v == 0);
    }

    SUBCASE("0^d := 0 even for d = 0") {
        auto f = families::monomial_table(1, 0, *ctx);
        CHECK(f.values[0] == 0);
        for (long long x = 1; x < 9; ++x) CHECK(f.values[x] == ctx->trace_abs(1));
    }

    SUBCASE("direct evaluation") {
        auto f = families::monomial_table(1, 4, *ctx);
        for (long long x = 0; x < 9; ++x)
            CHECK(f.values[x] == ctx->trace_abs(x == 0 ? 0 : ctx->pow(x, 4)));
    }
}

TEST_CASE("hk parameter derivation") {
    SUBCASE("k = 1") {
        auto ctx = FieldCtx::build(3, 2);
        auto spec = families::hk_params(1, *ctx);
        CHECK(spec.n == 2);
        CHECK(spec.d == 6);
        CHECK(ctx->discrete_log(spec.a) == 1);  // a = xi
    }
    SUBCASE("k = 3") {
        auto ctx = FieldCtx::build(3, 6);
        auto spec = families::hk_params(3, *ctx);
        CHECK(spec.n == 6);
        CHECK(spec.d == 210);  // 182 + 27 + 1
        CHECK(ctx->discrete_log(spec.a) == 7);
    }
    SUBCASE("even k is rejected") {
        auto ctx = FieldCtx::build(3, 4);
        CHECK_THROWS_AS((void)families::hk_params(2, *ctx), std::invalid_argument);
    }
}

TEST_CASE("closed-form quadratic-family coefficients") {
    auto ctx = FieldCtx::build(3, 2);

    CHECK(families::kasami_expected_walsh(1, 1, 0, *ctx) == Eisenstein{-3, 0});
    // b = 1: -3 w^{-Tr_1(2^{-1})} = -3 w^{-2} = -3 w
    CHECK(families::kasami_expected_walsh(1, 1, ctx->one(), *ctx) == Eisenstein{0, -3});

    // a = xi^2 has a + a^3 = 0 (a^2 = -1), the degenerate case
    CHECK_THROWS_AS((void)families::kasami_expected_walsh(ctx->element_from_log(2), 1, 0, *ctx),
                    std::domain_error);

    SUBCASE("matches the computed spectrum at every (a, b) over F_9") {
        for (long long a = 1; a < 9; ++a) {
            bool degenerate = ctx->add(a, ctx->pow(a, 3)) == 0;
            auto spec = walsh_spectrum(families::monomial_table(a, 4, *ctx), *ctx);
            if (degenerate) {
                CHECK_FALSE(classify_direct(spec).is_bent);
                continue;
            }
            for (long long b = 0; b < 9; ++b)
                CHECK(spec.coeffs[b] == families::kasami_expected_walsh(a, 1, b, *ctx));
        }
    }
}

TEST_CASE("conjectured dual-value set") {
    auto ctx = FieldCtx::build(3, 2);

    SUBCASE("b = 0 collapses to a single value") {
        auto [plus, minus] = families::conjectured_hk_dual(1, 0, *ctx);
        CHECK(plus == Eisenstein{-3, 0});
        CHECK(minus == Eisenstein{-3, 0});
    }

    SUBCASE("candidate values are unit multiples of -3^k") {
        for (long long b = 0; b < 9; ++b) {
            auto [plus, minus] = families::conjectured_hk_dual(1, b, *ctx);
            CHECK(plus.norm_sq() == 9);
            CHECK(minus.norm_sq() == 9);
            CHECK(plus.conj() == minus);
        }
    }
}

TEST_CASE("dual-value candidate check at k = 1") {
    auto ctx = FieldCtx::build(3, 2);
    auto report = families::verify_conjecture_dual(1, *ctx);
    CHECK(report.all_match);
    // The sign alternates with b here: no single choice works globally.
    CHECK_FALSE(report.globally_uniform_sign);
    CHECK(report.per_b_sign[0] == families::SignMatch::kBoth);
    bool saw_plus = false, saw_minus = false;
    for (auto s : report.per_b_sign) {
        saw_plus = saw_plus || s == families::SignMatch::kPlusOnly;
        saw_minus = saw_minus || s == families::SignMatch::kMinusOnly;
    }
    CHECK(saw_plus);
    CHECK(saw_minus);
}

TEST_CASE("class-sum decomposition at k = 1, all nonzero b") {
    auto ctx = FieldCtx::build(3, 2);
    for (long long b = 1; b < 9; ++b) CHECK(families::hk_decomposition_check(1, b, *ctx));
    CHECK_THROWS_AS((void)families::hk_decomposition_check(1, 0, *ctx), std::invalid_argument);
}

TEST_CASE("class-sum decomposition at k = 3, sampled b") {
    auto ctx = FieldCtx::build(3, 6);
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 25; ++rep) {
        long long b = 1 + static_cast<long long>(rng() % (ctx->q() - 1));
        CHECK(families::hk_decomposition_check(3, b, *ctx));
    }
}

TEST_CASE("verdicts do not depend on the choice of primitive element") {
    // Same theorems under the other primitive quadratic, x^2 + 2x + 2.
    auto alt = FieldCtx::build_with_modulus(3, 2, {2, 2, 1});

    SUBCASE("twisted family") {
        auto spec = families::hk_params(1, *alt);
        auto walsh = walsh_spectrum(families::monomial_table(spec.a, spec.d, *alt), *alt);
        auto cls = classify_direct(walsh);
        CHECK(cls.is_weakly_regular);
        CHECK(walsh.coeffs[0] == Eisenstein{-3, 0});
        CHECK(families::verify_conjecture_dual(1, *alt).all_match);
    }

    SUBCASE("quadratic family closed form") {
        for (long long a = 1; a < 9; ++a) {
            if (alt->add(a, alt->pow(a, 3)) == 0) continue;
            auto spec = walsh_spectrum(families::monomial_table(a, 4, *alt), *alt);
            for (long long b = 0; b < 9; ++b)
                CHECK(spec.coeffs[b] == families::kasami_expected_walsh(a, 1, b, *alt));
        }
    }

    SUBCASE("twisted family at k = 3 under the second primitive sextic") {
        auto alt6 = FieldCtx::build_with_modulus(3, 6, {2, 2, 0, 0, 0, 0, 1});
        auto spec = families::hk_params(3, *alt6);
        auto walsh = walsh_spectrum(families::monomial_table(spec.a, spec.d, *alt6), *alt6);
        CHECK(classify_direct(walsh).is_weakly_regular);
        CHECK(walsh.coeffs[0] == Eisenstein{-27, 0});
        CHECK(families::verify_conjecture_dual(3, *alt6).all_match);
    }
}

TEST_CASE("weak regularity across the coprime-exponent family, small grid") {
    // Odd k only: even k with gcd(k, n) = 1 does not give planar power maps
    // (x^5 over F_27 already fails), so the bent family is indexed by odd k.
    for (int n = 2; n <= 4; ++n) {
        auto ctx = FieldCtx::build(3, n);
        for (int k = 1; k < 2 * n; k += 2) {
            if (std::gcd(k, n) != 1) continue;
            long long d = 1;
            for (int i = 0; i < k; ++i) d *= 3;
            d = (d + 1) / 2;
            for (long long a = 1; a < ctx->q(); ++a) {
                auto spec = walsh_spectrum(families::monomial_table(a, d, *ctx), *ctx);
                REQUIRE(classify_direct(spec).is_weakly_regular);
            }
        }
    }
}
