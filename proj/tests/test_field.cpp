#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bentlab/field.hpp"

#include <map>
#include <numeric>
#include <random>

using bentlab::FieldCtx;

namespace {

// Independent oracle: find the canonical primitive modulus by simulating
// powers of x with plain polynomial arithmetic, trying every monic polynomial
// in ascending (c_{n-1},...,c_0) order and testing the order of x directly.
std::vector<int> scan_oracle(int p, int n) {
    long long q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    std::vector<int> tuple(n, 0);
    for (;;) {
        std::vector<int> mod(n + 1, 0);
        mod[n] = 1;
        for (int i = 0; i < n; ++i) mod[n - 1 - i] = tuple[i];
        // multiply-by-x walk; primitive iff first return to 1 is at q-1
        std::vector<int> cur(n, 0);
        cur[0] = 1;
        long long order = 0;
        for (long long t = 1; t <= q - 1; ++t) {
            int top = cur[n - 1];
            for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top)
                for (int i = 0; i < n; ++i) cur[i] = ((cur[i] - top * mod[i]) % p + p) % p;
            bool one = cur[0] == 1;
            for (int i = 1; i < n; ++i) one = one && cur[i] == 0;
            if (one) {
                order = t;
                break;
            }
        }
        if (order == q - 1) return mod;
        int i = n - 1;
        while (i >= 0 && tuple[i] == p - 1) tuple[i--] = 0;
        REQUIRE(i >= 0);
        ++tuple[i];
    }
}

}  // namespace

TEST_CASE("canonical modulus matches the exhaustive-scan oracle") {
    CHECK(bentlab::canonical_primitive_modulus(3, 1) == scan_oracle(3, 1));
    CHECK(bentlab::canonical_primitive_modulus(3, 2) == scan_oracle(3, 2));
    CHECK(bentlab::canonical_primitive_modulus(3, 3) == scan_oracle(3, 3));
    CHECK(bentlab::canonical_primitive_modulus(11, 1) == scan_oracle(11, 1));
    CHECK(bentlab::canonical_primitive_modulus(11, 2) == scan_oracle(11, 2));

    // x^2 + x + 2 for F_9: little-endian (2, 1, 1)
    CHECK(bentlab::canonical_primitive_modulus(3, 2) == std::vector<int>{2, 1, 1});
}

TEST_CASE("build rejects bad parameters") {
    CHECK_THROWS_AS((void)FieldCtx::build(2, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)FieldCtx::build(9, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)FieldCtx::build(3, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)FieldCtx::build(3, 40), std::invalid_argument);  // over the cap
    CHECK_THROWS_AS((void)FieldCtx::build_with_modulus(3, 2, {1, 1, 1}),
                    std::invalid_argument);  // x^2+x+1 is not primitive
}

TEST_CASE("F_9 element arithmetic and discrete logs") {
    auto ctx = FieldCtx::build(3, 2);
    CHECK(ctx->q() == 9);

    CHECK(ctx->discrete_log(ctx->one()) == 0);
    CHECK(ctx->discrete_log(ctx->xi()) == 1);
    // 2 = -1 = xi^4 under x^2 + x + 2
    CHECK(ctx->discrete_log(ctx->scalar(2)) == 4);
    CHECK_THROWS_AS((void)ctx->discrete_log(0), std::domain_error);

    CHECK(ctx->add(ctx->one(), ctx->scalar(2)) == 0);
    CHECK(ctx->mul(ctx->xi(), 0) == 0);
    CHECK(ctx->inv(ctx->scalar(2)) == ctx->scalar(2));
    CHECK_THROWS_AS((void)ctx->inv(0), std::domain_error);
}

TEST_CASE("exp/log tables are mutually inverse and xi has full order") {
    for (auto [p, n] : {std::pair{3, 2}, {3, 4}, {11, 2}}) {
        auto ctx = FieldCtx::build(p, n);
        for (long long t = 0; t < ctx->q() - 1; ++t)
            REQUIRE(ctx->discrete_log(ctx->element_from_log(t)) == t);
        // first return to 1 at q-1 exactly
        long long cur = ctx->xi();
        for (long long t = 1; t < ctx->q() - 1; ++t) {
            REQUIRE(cur != ctx->one());
            cur = ctx->mul(cur, ctx->xi());
        }
        CHECK(cur == ctx->one());
    }
}

TEST_CASE("absolute trace values in F_9") {
    auto ctx = FieldCtx::build(3, 2);
    CHECK(ctx->trace_abs(0) == 0);
    CHECK(ctx->trace_abs(ctx->one()) == 2);  // n * 1
    CHECK(ctx->trace_abs(ctx->xi()) == 2);   // xi + xi^3 = 2 under x^2+x+2
}

TEST_CASE("trace is additive and Frobenius-invariant") {
    std::mt19937_64 rng(7);
    for (auto [p, n] : {std::pair{3, 3}, {3, 5}, {11, 2}}) {
        auto ctx = FieldCtx::build(p, n);
        std::uniform_int_distribution<long long> pick(0, ctx->q() - 1);
        for (int i = 0; i < 500; ++i) {
            long long x = pick(rng), y = pick(rng);
            CHECK(ctx->trace_abs(ctx->add(x, y)) ==
                  (ctx->trace_abs(x) + ctx->trace_abs(y)) % p);
            CHECK(ctx->trace_abs(ctx->frobenius(x)) == ctx->trace_abs(x));
        }
    }
}

TEST_CASE("relative trace") {
    auto ctx = FieldCtx::build(3, 2);

    SUBCASE("subfield elements double") {
        for (int c = 0; c < 3; ++c)
            CHECK(ctx->trace_rel(ctx->scalar(c), 1) == ctx->scalar(2 * c));
    }

    SUBCASE("agrees with absolute trace at k = 1") {
        for (long long x = 0; x < 9; ++x)
            CHECK(ctx->trace_rel(x, 1) == ctx->scalar(ctx->trace_abs(x)));
    }

    SUBCASE("rejects k not dividing n") {
        auto c6 = FieldCtx::build(3, 6);
        CHECK_THROWS_AS((void)c6->trace_rel(1, 4), std::invalid_argument);
    }

    SUBCASE("a(I+1) form at a = xi^{(3^k+1)/4}") {
        for (int k : {1, 3}) {
            auto c = FieldCtx::build(3, 2 * k);
            long long pk = 1;
            for (int i = 0; i < k; ++i) pk *= 3;
            long long a = c->element_from_log((pk + 1) / 4);
            long long big_i = c->element_from_log((c->q() - 1) / 4);
            CHECK(c->trace_rel(a, k) == c->mul(a, c->add(big_i, 1)));
        }
    }
}

TEST_CASE("trace tower: Tr_k after relative trace equals Tr_n") {
    for (int k : {1, 2, 3}) {
        auto ctx = FieldCtx::build(3, 2 * k);
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long long> pick(0, ctx->q() - 1);
        for (int i = 0; i < 200; ++i) {
            long long x = pick(rng);
            CHECK(ctx->subfield_trace(ctx->trace_rel(x, k), k) == ctx->trace_abs(x));
        }
    }
}

TEST_CASE("fiber profiles of power maps") {
    auto ctx = FieldCtx::build(3, 2);

    SUBCASE("d = 1 is a bijection") {
        auto profile = ctx->fiber_profile(1);
        REQUIRE(profile.size() == 1);
        CHECK(profile.at(1) == 8);
    }

    SUBCASE("d = 4 on F_9 has all fibers of size 4 over F_3^*") {
        auto profile = ctx->fiber_profile(4);
        REQUIRE(profile.size() == 1);
        CHECK(profile.at(4) == 2);
    }

    SUBCASE("fiber size is gcd(d, q-1) throughout") {
        auto c = FieldCtx::build(3, 3);
        for (long long dd = 1; dd < 26; ++dd) {
            auto profile = c->fiber_profile(dd);
            long long g = std::gcd(dd, c->q() - 1);
            REQUIRE(profile.size() == 1);
            CHECK(profile.begin()->first == g);
            CHECK(profile.begin()->second == (c->q() - 1) / g);
        }
    }
}

TEST_CASE("addition agrees with an independent Zech-logarithm route") {
    // Build exp tables with test-local polynomial arithmetic, derive Zech
    // logs tau(t) = log(1 + xi^t), and recombine sums multiplicatively:
    // xi^s + xi^t = xi^s * (1 + xi^{t-s}).
    for (auto [p, n] : {std::pair{3, 2}, {3, 3}, {11, 1}}) {
        auto ctx = FieldCtx::build(p, n);
        long long q = ctx->q();
        auto mod = ctx->modulus();
        std::vector<std::vector<int>> exp_poly(q - 1, std::vector<int>(n, 0));
        exp_poly[0][0] = 1;
        for (long long t = 1; t < q - 1; ++t) {
            auto cur = exp_poly[t - 1];
            int top = cur[n - 1];
            for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top)
                for (int i = 0; i < n; ++i) cur[i] = ((cur[i] - top * mod[i]) % p + p) % p;
            exp_poly[t] = cur;
        }
        std::map<std::vector<int>, long long> log_poly;
        for (long long t = 0; t < q - 1; ++t) log_poly[exp_poly[t]] = t;

        std::vector<long long> zech(q - 1);  // -1 encodes 1 + xi^t = 0
        for (long long t = 0; t < q - 1; ++t) {
            auto sum = exp_poly[t];
            sum[0] = (sum[0] + 1) % p;
            bool zero = true;
            for (int c : sum) zero = zero && c == 0;
            zech[t] = zero ? -1 : log_poly.at(sum);
        }

        for (long long s = 0; s < q - 1; ++s)
            for (long long t = 0; t < q - 1; ++t) {
                long long diff = ((t - s) % (q - 1) + (q - 1)) % (q - 1);
                long long expected =
                    zech[diff] < 0 ? 0 : ctx->element_from_log(s + zech[diff]);
                REQUIRE(ctx->add(ctx->element_from_log(s), ctx->element_from_log(t)) ==
                        expected);
            }
    }
}

TEST_CASE("modulus override reproduces the same abstract field") {
    // x^2 + 2x + 2 is the other primitive quadratic: xi differs but the
    // abstract field is the same.
    auto alt = FieldCtx::build_with_modulus(3, 2, {2, 2, 1});
    CHECK(alt->trace_abs(alt->one()) == 2);
    long long cur = alt->xi();
    int order = 1;
    while (cur != alt->one()) {
        cur = alt->mul(cur, alt->xi());
        ++order;
    }
    CHECK(order == 8);
}

TEST_CASE("dump line format") {
    auto ctx = FieldCtx::build(3, 2);
    CHECK(ctx->dump_line() == "3 2 1 1 2");
}
