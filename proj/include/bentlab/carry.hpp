#pragma once

#include <vector>

namespace bentlab::carry {

/// Digits of the canonical residue of an integer mod p^n - 1.
///
/// Convention: multiples of p^n - 1 reduce to the all-zero vector, never to
/// all-(p-1); this matches w(a) = 0 for (p^n-1) | a and is the single most
/// bug-prone convention in this module.
struct DigitVector {
    int p = 0;
    int n = 0;
    std::vector<int> digits;  // little-endian, each in [0, p-1]

    long long value() const;
    int weight() const;
};

/// p^n - 1 as unsigned (up to 3^40 - 1 for the constants below).
unsigned long long modulus(int p, int n);

/// True mathematical residue in [0, p^n - 1).
unsigned long long canonical_residue(long long a, unsigned long long m);

DigitVector to_digits(long long a, int p, int n);

/// p-ary weight of a mod p^n - 1: digit sum of the canonical residue.
int weight(long long a, int p, int n);

/// The constants z = (3^{2k}-1)/8, u = 2z, v = 3u with their digit patterns
/// (z alternates 1,0; u doubles; v is u shifted) and the congruences
/// 3u = -u = v mod 3^{2k}-1, plus 3^k u = v for odd k. All are verified at
/// construction; violations throw.
struct UvzConstants {
    int k = 0;
    DigitVector z, u, v;
};
UvzConstants uvz_constants(int k);

/// One modular add-with-carry instance: s = sum t_j a^{(j)} mod p^n - 1.
struct AwcInstance {
    int p = 0;
    int n = 0;
    std::vector<int> coeffs;         // t_j, all nonzero
    std::vector<long long> addends;  // a^{(j)}
};

/// Unique periodic carry sequence: p*c_i + s_i = c_{i-1} + sum t_j a_i^{(j)}
/// with c_{-1} = c_{n-1}. carries holds c_0..c_{n-1}.
struct AwcSolution {
    DigitVector s;
    std::vector<long long> carries;
    long long t_plus = 0;   // sum of positive t_j
    long long t_minus = 0;  // sum of negative t_j

    long long carry_before(int i) const;  // c_{i-1}, cyclic
    long long carry_weight() const;       // c_0 + ... + c_{n-1}
};

/// Closed-form solver: c_{j-1} = r(j)/(p^n-1) for r_i = -s_i + sum t_j a_i^{(j)}.
/// The recurrence, the carry bounds, and the weight identity
/// (p-1) w(c) = sum t_j w(a^{(j)}) - w(s) are asserted on every solve;
/// a failure is an internal bug, never valid-input behavior.
AwcSolution awc_solve(const AwcInstance& inst);

/// Alternative route: carries via convolution with the inverse of (p - x)
/// mod x^n - 1. Must equal awc_solve's carries exactly.
std::vector<long long> awc_poly_solve(const AwcInstance& inst);

/// Exhaustive scan of the two weight inequality left-hand sides
///   L1(b) = w(b) + w(-(3^k+1)b - (3^{2k}-1)/4)
///   L2(b) = w(b) + w(-(3^k+1)b - 3(3^{2k}-1)/4)
/// over all b mod 3^{2k}-1.
struct WtinequScan {
    int k = 0;
    int min_lhs1 = 0, min_lhs2 = 0;
    long long argmin1 = 0, argmin2 = 0;      // smallest attaining b
    std::vector<long long> histogram1, histogram2;  // value -> count
    bool multisets_equal = false;
};
WtinequScan wtinequ_scan(int k, int workers = 1);

/// w(a) + w(b) + w(s) + w(t) with s = -a-b+v, t = -a-b+u mod 3^{2k}-1.
int genwi_check(long long a, long long b, int k);

struct GenwiScan {
    int k = 0;
    int min_lhs = 0;
    long long arg_a = 0, arg_b = 0;  // lexicographically smallest attaining pair
};
GenwiScan genwi_exhaustive(int k, int workers = 1);

/// Generalized form for arbitrary u, v with positionwise-disjoint digit
/// supports (u_i = 0 or v_i = 0). Throws if supports overlap.
int gengenwi_check(long long a, long long b, const DigitVector& u, const DigitVector& v);

/// w(3^k * s mod 3^{2k}-1) == w(s): cyclic digit shift preserves weight.
bool shift_weight_invariance(long long s, int k);

}  // namespace bentlab::carry
