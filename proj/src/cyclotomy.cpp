#include "bentlab/cyclotomy.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace bentlab {

CyclotomyCtx::CyclotomyCtx(std::shared_ptr<const FieldCtx> ctx, long long e)
    : ctx_(std::move(ctx)), e_(e) {
    if (e < 2 || (ctx_->q() - 1) % e != 0)
        throw std::invalid_argument("CyclotomyCtx: e must divide q-1");
    f_ = (ctx_->q() - 1) / e;
}

long long CyclotomyCtx::class_of(long long x) const {
    return ctx_->discrete_log(x) % e_;
}

long long CyclotomyCtx::cyclotomic_number(long long i, long long j) const {
    i = ((i % e_) + e_) % e_;
    j = ((j % e_) + e_) % e_;
    long long count = 0;
    for (long long t = 0; t < f_; ++t) {
        long long x = ctx_->element_from_log(e_ * t + i);
        long long x1 = ctx_->add(x, 1);
        if (x1 != 0 && class_of(x1) == j) ++count;
    }
    return count;
}

std::vector<std::vector<long long>> CyclotomyCtx::cyclotomic_number_matrix() const {
    std::vector<std::vector<long long>> m(e_, std::vector<long long>(e_, 0));
    for (long long t = 0; t < ctx_->q() - 1; ++t) {
        long long x1 = ctx_->add(ctx_->element_from_log(t), 1);
        if (x1 != 0) ++m[t % e_][class_of(x1)];
    }
    return m;
}

std::vector<CycInt> CyclotomyCtx::periods_direct() const {
    const int p = ctx_->p();
    // Histogram trace residues per class, then assemble in Z[zeta_p].
    std::vector<std::vector<long long>> counts(e_, std::vector<long long>(p, 0));
    for (long long idx = 1; idx < ctx_->q(); ++idx)
        ++counts[(idx - 1) % e_][ctx_->trace_abs(idx)];
    std::vector<CycInt> periods;
    periods.reserve(e_);
    for (long long i = 0; i < e_; ++i) {
        CycInt eta(p);
        for (int r = 0; r < p; ++r)
            if (counts[i][r]) eta += CycInt::unit(p, r) * CycInt(p, BigInt(counts[i][r]));
        periods.push_back(eta);
    }
    return periods;
}

void CyclotomyCtx::require_conjugate_setting() const {
    const int p = ctx_->p(), n = ctx_->n();
    if (e_ != 4) throw std::invalid_argument("cyclotomy: requires e = 4");
    if (p % 8 != 3) throw std::invalid_argument("cyclotomy: requires p = 3 mod 8");
    if (n % 2 != 0 || (n / 2) % 2 != 1)
        throw std::invalid_argument("cyclotomy: requires n = 2k with k odd");
}

CycInt CyclotomyCtx::le1_sum(long long c, long long z, long long j) const {
    require_conjugate_setting();
    const int p = ctx_->p(), k = ctx_->n() / 2;
    if (z == 0) throw std::invalid_argument("le1_sum: z must be nonzero");
    if (c == 0 || ctx_->frobenius(c, k) != c)
        throw std::invalid_argument("le1_sum: c must be a nonzero subfield element");
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;

    j = ((j % 4) + 4) % 4;
    long long czk = ctx_->mul(c, ctx_->pow(z, pk));
    std::vector<long long> counts(p, 0);
    for (long long t = 0; t < f_; ++t) {
        long long y = ctx_->element_from_log(4 * t + j);
        ++counts[ctx_->trace_abs(ctx_->mul(czk, y))];
    }
    CycInt sum(p);
    for (int r = 0; r < p; ++r)
        if (counts[r]) sum += CycInt::unit(p, r) * CycInt(p, BigInt(counts[r]));

    long long expected = (class_of(z) == (j + 2) % 4) ? (3 * pk - 1) / 4 : -(pk + 1) / 4;
    if (sum != CycInt(p, BigInt(expected))) throw std::logic_error("le1_sum: closed form violated");
    return sum;
}

CycInt CyclotomyCtx::tj_sum(long long c, long long j) const {
    require_conjugate_setting();
    const int p = ctx_->p(), k = ctx_->n() / 2;
    if (ctx_->frobenius(c, k) != c)
        throw std::invalid_argument("tj_sum: c must be a subfield element");
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;

    j = ((j % 4) + 4) % 4;
    int trc = (c == 0) ? 0 : ctx_->subfield_trace(c, k);
    std::vector<long long> counts(p, 0);
    for (long long t = 0; t < f_; ++t) {
        long long x = ctx_->element_from_log(4 * t + j);
        long long x1 = ctx_->add(x, 1);
        long long inner = ctx_->mul(c, ctx_->pow(x1, pk + 1));  // in F_{p^k}
        int trace = (inner == 0) ? 0 : ctx_->subfield_trace(inner, k);
        ++counts[((trace - trc) % p + p) % p];
    }
    CycInt sum(p);
    for (int r = 0; r < p; ++r)
        if (counts[r]) sum += CycInt::unit(p, r) * CycInt(p, BigInt(counts[r]));
    return sum;
}

bool CyclotomyCtx::eq12_check(long long c) const {
    require_conjugate_setting();
    const int p = ctx_->p(), k = ctx_->n() / 2;
    if (c == 0) throw std::invalid_argument("eq12_check: c must be nonzero");
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    CycInt total(p, BigInt(1));
    for (int j = 0; j < 4; ++j) total += tj_sum(c, j);
    CycInt expected =
        CycInt(p, BigInt(-pk)) * CycInt::unit(p, -ctx_->subfield_trace(c, k));
    return total == expected;
}

bool CyclotomyCtx::conjugate_identity_check(long long c, long long j) const {
    require_conjugate_setting();
    const int p = ctx_->p(), k = ctx_->n() / 2;
    if (c == 0 || ctx_->frobenius(c, k) != c)
        throw std::invalid_argument("conjugate_identity_check: bad c");
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    CycInt tj = tj_sum(c, j);
    CycInt tj2 = tj_sum(c, j + 2);
    CycInt omega_trc = CycInt::unit(p, ctx_->subfield_trace(c, k));
    CycInt lhs = -(tj.conj());
    CycInt rhs = omega_trc * tj2 +
                 CycInt(p, BigInt((pk + 1) / 4)) * (omega_trc + CycInt(p, BigInt(1)));
    return lhs == rhs;
}

bool CyclotomyCtx::simplecase_check() const {
    const int p = ctx_->p(), n = ctx_->n();
    if (e_ != 4 || p % 4 != 3 || n % 2 != 0 || (n / 2) % 2 != 1)
        throw std::invalid_argument("simplecase_check: requires e=4, p=3 mod 4, n=2k, k odd");
    const int k = n / 2;
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    // The image group F_{p^k}^* consists of the powers of eta = xi^{pk+1};
    // an image eta^s is a square there iff s is even.
    std::vector<long long> hits(ctx_->q(), 0);
    for (long long i = 0; i < 4; ++i) {
        std::fill(hits.begin(), hits.end(), 0);
        for (long long t = 0; t < f_; ++t)
            ++hits[ctx_->pow(ctx_->element_from_log(4 * t + i), pk + 1)];
        long long expected_fiber = (pk + 1) / 2;
        bool want_square = (i % 2 == 0);
        for (long long y = 0; y < ctx_->q(); ++y) {
            if (hits[y] == 0) continue;
            if (hits[y] != expected_fiber) return false;
            long long dl = ctx_->discrete_log(y);
            if (dl % (pk + 1) != 0) return false;  // image must lie in F_{p^k}^*
            bool is_square = (dl / (pk + 1)) % 2 == 0;
            if (is_square != want_square) return false;
        }
    }
    return true;
}

std::vector<long long> uniform_periods_predict(int p, int n, long long e) {
    if (e < 2) throw std::invalid_argument("uniform_periods_predict: e < 2");
    int j = 0;
    long long pj = 1;
    for (int cand = 1; cand <= n; ++cand) {
        pj = pj * p % e;
        if (pj == e - 1) {
            j = cand;
            break;
        }
    }
    if (j == 0)
        throw std::invalid_argument("uniform_periods_predict: no j with p^j = -1 mod e");
    if (n % (2 * j) != 0)
        throw std::invalid_argument("uniform_periods_predict: n is not 2*j*gamma");
    long long gamma = n / (2 * j);
    long long p_jg = 1;
    for (int i = 0; i < j * gamma; ++i) p_jg *= p;

    long long pj_full = 1;
    for (int i = 0; i < j; ++i) pj_full *= p;
    bool case1 = (gamma % 2 == 1) && (p % 2 == 1) && (((pj_full + 1) / e) % 2 == 1);

    std::vector<long long> eta(e);
    if (case1) {
        for (long long i = 0; i < e; ++i) eta[i] = (i == e / 2) ? ((e - 1) * p_jg - 1) / e
                                                                : (-1 - p_jg) / e;
    } else {
        long long sign = (gamma % 2 == 0) ? 1 : -1;
        for (long long i = 0; i < e; ++i)
            eta[i] = (i == 0) ? (-1 - sign * (e - 1) * p_jg) / e : (sign * p_jg - 1) / e;
    }
    return eta;
}

std::complex<double> gauss_sum_numeric(const FieldCtx& ctx, long long chi_exponent) {
    const long long m = ctx.q() - 1;
    const double two_pi = 2.0 * M_PI;
    const long long e = ((chi_exponent % m) + m) % m;
    std::complex<double> g = 0;
    for (long long t = 0; t < m; ++t) {
        double mult_angle = two_pi * static_cast<double>(e) * t / m;
        double add_angle = two_pi * ctx.trace_abs(ctx.element_from_log(t)) / ctx.p();
        g += std::polar(1.0, mult_angle + add_angle);
    }
    return g;
}

double gauss_inversion_max_error(const FieldCtx& ctx, int count, unsigned long long seed) {
    const long long m = ctx.q() - 1;
    std::vector<std::complex<double>> g(m);
    for (long long e = 0; e < m; ++e) g[e] = gauss_sum_numeric(ctx, e);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> pick(0, m - 1);
    const double two_pi = 2.0 * M_PI;
    double max_err = 0;
    for (int i = 0; i < count; ++i) {
        long long tc = pick(rng);  // c = xi^tc
        std::complex<double> acc = 0;
        for (long long e = 0; e < m; ++e)
            acc += g[e] * std::polar(1.0, -two_pi * static_cast<double>(e) * tc / m);
        acc /= static_cast<double>(m);
        std::complex<double> psi =
            std::polar(1.0, two_pi * ctx.trace_abs(ctx.element_from_log(tc)) / ctx.p());
        max_err = std::max(max_err, std::abs(acc - psi));
    }
    return max_err;
}

}  // namespace bentlab
