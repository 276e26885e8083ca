#pragma once

#include "bentlab/cycint.hpp"
#include "bentlab/field.hpp"

#include <complex>
#include <vector>

namespace bentlab {

/// Cyclotomic classes of order e in F_q^*: C_i = xi^i * (xi^e), each of size
/// f = (q-1)/e. Class membership is a discrete-log residue, so O(1).
class CyclotomyCtx {
public:
    CyclotomyCtx(std::shared_ptr<const FieldCtx> ctx, long long e);

    const FieldCtx& field() const { return *ctx_; }
    long long e() const { return e_; }
    long long f() const { return f_; }

    /// Class index of a nonzero element.
    long long class_of(long long x) const;

    /// Cyclotomic number (i, j) = |{x in C_i : x + 1 in C_j}|.
    long long cyclotomic_number(long long i, long long j) const;
    std::vector<std::vector<long long>> cyclotomic_number_matrix() const;

    /// Periods eta_i = sum over C_i of w^{Tr_n(x)}, exact in Z[zeta_p].
    std::vector<CycInt> periods_direct() const;

    /// Exponential sum of Lemma-style shape sum_{y in C_j} w^{Tr_n(c z^{p^k} y)}
    /// for subfield c != 0 (n = 2k, k odd, p = 3 mod 8). The value is the
    /// two-valued closed form ((3p^k-1)/4 if z in C_{j+2}, else -(p^k+1)/4);
    /// the exact sum is compared against it and a mismatch throws.
    CycInt le1_sum(long long c, long long z, long long j) const;

    /// T_j = sum_{x in C_j} w^{Tr_k(c(x+1)^{p^k+1} - c)} for subfield c,
    /// exact in Z[zeta_p]. Requires e = 4, n = 2k, p = 3 mod 8, k odd.
    CycInt tj_sum(long long c, long long j) const;

    /// 1 + T_0 + T_1 + T_2 + T_3 == -p^k w^{-Tr_k(c)} for c != 0.
    bool eq12_check(long long c) const;

    /// -conj(T_j) == w^{Tr_k(c)} T_{j+2} + (p^k+1)/4 (w^{Tr_k(c)} + 1).
    bool conjugate_identity_check(long long c, long long j) const;

    /// Exhaustive check that x -> x^{p^k+1} maps each C_i ((p^k+1)/2)-to-1
    /// onto squares of F_{p^k}^* for i in {0,2} and non-squares for {1,3}.
    bool simplecase_check() const;

private:
    void require_conjugate_setting() const;
    std::shared_ptr<const FieldCtx> ctx_;
    long long e_, f_;
};

/// Closed-form cyclotomic periods under uniform cyclotomy: requires the
/// smallest j with p^j = -1 mod e to exist and n = 2*j*gamma. Returns the
/// e periods as plain integers. Throws when the hypothesis fails.
std::vector<long long> uniform_periods_predict(int p, int n, long long e);

/// Numeric Gauss sum g(chi_m) = sum_{a != 0} chi_m(a) w^{Tr(a)} where
/// chi_m(xi^t) = e^{2 pi i m t / (q-1)}.
std::complex<double> gauss_sum_numeric(const FieldCtx& ctx, long long chi_exponent);

/// max over sampled c of |psi(c) - (1/(q-1)) sum_chi g(chi) chi^{-1}(c)|,
/// toward the Fourier-inversion identity. Samples `count` values of c from
/// the given seed.
double gauss_inversion_max_error(const FieldCtx& ctx, int count, unsigned long long seed);

}  // namespace bentlab
