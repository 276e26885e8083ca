#include "bentlab/families.hpp"

#include "bentlab/cyclotomy.hpp"

#include <stdexcept>

namespace bentlab::families {

namespace {

long long pow3(int n) {
    long long r = 1;
    while (n-- > 0) r *= 3;
    return r;
}

void require_hk_setting(int k, const FieldCtx& ctx) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("hk: k must be odd and positive");
    if (ctx.p() != 3 || ctx.n() != 2 * k)
        throw std::invalid_argument("hk: field must be F_{3^{2k}}");
}

// a1 = a(I+1) with a = xi^{(3^k+1)/4}, I = xi^{(3^n-1)/4}. Nonzero and in
// F_{3^k} whenever the parameters are valid; both are asserted.
long long hk_a1(int k, const FieldCtx& ctx) {
    long long a = ctx.element_from_log((pow3(k) + 1) / 4);
    long long big_i = ctx.element_from_log((ctx.q() - 1) / 4);
    long long a1 = ctx.mul(a, ctx.add(big_i, 1));
    if (a1 == 0) throw std::logic_error("hk: a(I+1) vanished");
    if (ctx.frobenius(a1, k) != a1) throw std::logic_error("hk: a(I+1) not in subfield");
    return a1;
}

}  // namespace

FunctionTable monomial_table(long long a, long long d, const FieldCtx& ctx) {
    FunctionTable f;
    f.n = ctx.n();
    f.values.resize(ctx.q());
    f.values[0] = 0;  // 0^d := 0, also for d = 0
    for (long long x = 1; x < ctx.q(); ++x)
        f.values[x] = static_cast<uint8_t>(ctx.trace_abs(ctx.mul(a, ctx.pow(x, d))));
    return f;
}

FamilySpec hk_params(int k, const FieldCtx& ctx) {
    require_hk_setting(k, ctx);
    FamilySpec spec;
    spec.k = k;
    spec.n = 2 * k;
    spec.d = (ctx.q() - 1) / 4 + pow3(k) + 1;
    spec.a = ctx.element_from_log((pow3(k) + 1) / 4);
    return spec;
}

Eisenstein kasami_expected_walsh(long long a, int k, long long b, const FieldCtx& ctx) {
    if (ctx.p() != 3 || ctx.n() != 2 * k)
        throw std::invalid_argument("kasami: field must be F_{3^{2k}}");
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= ctx.p();
    long long denom = ctx.add(a, ctx.pow(a, pk));
    if (denom == 0)
        throw std::domain_error("kasami: a + a^{p^k} = 0, function is not bent");
    long long arg = ctx.mul(ctx.pow(b, pk + 1), ctx.inv(denom));
    int t = (arg == 0) ? 0 : ctx.subfield_trace(arg, k);
    Eisenstein unit = omega_pow(-t);
    return Eisenstein{-pk * unit.x, -pk * unit.y};
}

std::pair<Eisenstein, Eisenstein> conjectured_hk_dual(int k, long long b,
                                                      const FieldCtx& ctx) {
    require_hk_setting(k, ctx);
    long long a1 = hk_a1(k, ctx);
    long long arg = ctx.mul(ctx.pow(b, pow3(k) + 1), ctx.inv(a1));
    int t = (arg == 0) ? 0 : ctx.subfield_trace(arg, k);
    long long m = pow3(k);
    Eisenstein plus = omega_pow(t), minus = omega_pow(-t);
    return {Eisenstein{-m * plus.x, -m * plus.y}, Eisenstein{-m * minus.x, -m * minus.y}};
}

ConjectureDualReport verify_conjecture_dual(int k, const FieldCtx& ctx) {
    require_hk_setting(k, ctx);
    FamilySpec spec = hk_params(k, ctx);
    WalshSpectrum s = walsh_spectrum(monomial_table(spec.a, spec.d, ctx), ctx);

    ConjectureDualReport report;
    report.k = k;
    report.per_b_sign.resize(ctx.q());
    report.all_match = true;
    bool plus_all = true, minus_all = true;
    for (long long b = 0; b < ctx.q(); ++b) {
        auto [plus, minus] = conjectured_hk_dual(k, b, ctx);
        bool p_ok = s.coeffs[b] == plus;
        bool m_ok = s.coeffs[b] == minus;
        report.per_b_sign[b] = p_ok && m_ok  ? SignMatch::kBoth
                               : p_ok        ? SignMatch::kPlusOnly
                               : m_ok        ? SignMatch::kMinusOnly
                                             : SignMatch::kNeither;
        report.all_match = report.all_match && (p_ok || m_ok);
        plus_all = plus_all && p_ok;
        minus_all = minus_all && m_ok;
    }
    report.globally_uniform_sign = plus_all || minus_all;
    return report;
}

bool hk_decomposition_check(int k, long long b, const FieldCtx& ctx) {
    require_hk_setting(k, ctx);
    if (b == 0) throw std::invalid_argument("hk_decomposition_check: b must be nonzero");
    const long long m = pow3(k);
    long long a1 = hk_a1(k, ctx);
    long long beta = ctx.pow(ctx.mul(b, ctx.inv(a1)), m);  // Frobenius inverse
    long long c = ctx.mul(a1, ctx.pow(beta, m + 1));
    long long j = ctx.discrete_log(ctx.inv(beta)) % 4;

    // Non-owning view of the caller's field for the class sums.
    auto shared = std::shared_ptr<const FieldCtx>(&ctx, [](const FieldCtx*) {});
    CyclotomyCtx classes(shared, 4);

    CycInt tj[4];
    for (int i = 0; i < 4; ++i) tj[i] = classes.tj_sum(c, j + i);

    // True coefficient by direct summation.
    FamilySpec spec = hk_params(k, ctx);
    Eisenstein s_b = walsh_point(monomial_table(spec.a, spec.d, ctx), b, ctx);

    CycInt mid = CycInt(3, BigInt(1)) + tj[0] + tj[1] + tj[2].conj() + tj[3].conj();

    int trc = ctx.subfield_trace(c, k);
    CycInt one(3, BigInt(1));
    CycInt closed = (one - CycInt::unit(3, trc)) *
                        (tj[0] + tj[1] + CycInt(3, BigInt((m + 1) / 2))) -
                    CycInt(3, BigInt(m));

    CycInt truth = CycInt::from_eisenstein(s_b);
    return truth == mid && truth == closed;
}

}  // namespace bentlab::families
