#include "bentlab/carry.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>

namespace bentlab::carry {

namespace {

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long m) {
    return static_cast<unsigned long long>(static_cast<unsigned __int128>(a) * b % m);
}

int check_workers(int workers) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    return std::min(workers, 64);
}

}  // namespace

long long DigitVector::value() const {
    long long v = 0;
    for (int i = n - 1; i >= 0; --i) v = v * p + digits[i];
    return v;
}

int DigitVector::weight() const {
    int w = 0;
    for (int d : digits) w += d;
    return w;
}

unsigned long long modulus(int p, int n) {
    if (p < 2 || n < 1) throw std::invalid_argument("modulus: need p >= 2, n >= 1");
    unsigned long long q = 1;
    for (int i = 0; i < n; ++i) {
        if (q > UINT64_MAX / static_cast<unsigned>(p))
            throw std::overflow_error("modulus: p^n does not fit 64 bits");
        q *= static_cast<unsigned>(p);
    }
    return q - 1;
}

unsigned long long canonical_residue(long long a, unsigned long long m) {
    if (a >= 0) return static_cast<unsigned long long>(a) % m;
    // -a without overflow at INT64_MIN
    unsigned long long mag = static_cast<unsigned long long>(-(a + 1)) + 1;
    unsigned long long r = mag % m;
    return r == 0 ? 0 : m - r;
}

DigitVector to_digits(long long a, int p, int n) {
    unsigned long long r = canonical_residue(a, modulus(p, n));
    DigitVector d;
    d.p = p;
    d.n = n;
    d.digits.resize(n);
    for (int i = 0; i < n; ++i) {
        d.digits[i] = static_cast<int>(r % static_cast<unsigned>(p));
        r /= static_cast<unsigned>(p);
    }
    return d;
}

int weight(long long a, int p, int n) {
    unsigned long long r = canonical_residue(a, modulus(p, n));
    int w = 0;
    while (r) {
        w += static_cast<int>(r % static_cast<unsigned>(p));
        r /= static_cast<unsigned>(p);
    }
    return w;
}

UvzConstants uvz_constants(int k) {
    if (k < 1 || k > 20) throw std::invalid_argument("uvz_constants: need 1 <= k <= 20");
    const int n = 2 * k;
    const unsigned long long m = modulus(3, n);
    const unsigned long long z = m / 8;
    const unsigned long long u = 2 * z;
    const unsigned long long v = 3 * u;

    UvzConstants c;
    c.k = k;
    c.z = to_digits(static_cast<long long>(z), 3, n);
    c.u = to_digits(static_cast<long long>(u), 3, n);
    c.v = to_digits(static_cast<long long>(v), 3, n);

    for (int i = 0; i < n; ++i) {
        int zi = (i % 2 == 0) ? 1 : 0;
        if (c.z.digits[i] != zi || c.u.digits[i] != 2 * zi ||
            c.v.digits[i] != c.u.digits[(i + n - 1) % n])
            throw std::logic_error("uvz_constants: digit pattern violated");
    }
    if (c.u.weight() != 2 * k || c.v.weight() != 2 * k || c.z.weight() != k)
        throw std::logic_error("uvz_constants: weight identity violated");
    // 4u = u + v = 3^{2k} - 1, so 3u = -u = v mod 3^{2k}-1.
    if (mulmod(3, u, m) != v % m || (m - u % m) % m != v % m)
        throw std::logic_error("uvz_constants: congruence 3u = -u = v violated");
    if (k % 2 == 1) {
        unsigned long long pk = 1;
        for (int i = 0; i < k; ++i) pk *= 3;
        if (mulmod(pk, u, m) != v % m || mulmod(pk, v, m) != u % m)
            throw std::logic_error("uvz_constants: odd-k shift congruence violated");
    }
    return c;
}

long long AwcSolution::carry_before(int i) const {
    int n = static_cast<int>(carries.size());
    return carries[((i - 1) % n + n) % n];
}

long long AwcSolution::carry_weight() const {
    long long w = 0;
    for (long long c : carries) w += c;
    return w;
}

AwcSolution awc_solve(const AwcInstance& inst) {
    const int p = inst.p, n = inst.n;
    const int m = static_cast<int>(inst.coeffs.size());
    if (m < 1 || inst.addends.size() != inst.coeffs.size())
        throw std::invalid_argument("awc_solve: need m >= 1 coefficients with addends");
    for (int t : inst.coeffs)
        if (t == 0) throw std::invalid_argument("awc_solve: coefficients must be nonzero");
    const unsigned long long mod = modulus(p, n);
    if (mod > static_cast<unsigned long long>(INT64_MAX))
        throw std::invalid_argument("awc_solve: p^n - 1 too large");
    const long long mod_s = static_cast<long long>(mod);

    AwcSolution sol;
    std::vector<DigitVector> addend_digits;
    addend_digits.reserve(m);
    __int128 total = 0;
    for (int j = 0; j < m; ++j) {
        long long aj = static_cast<long long>(canonical_residue(inst.addends[j], mod));
        addend_digits.push_back(to_digits(aj, p, n));
        total += static_cast<__int128>(inst.coeffs[j]) * aj;
        if (inst.coeffs[j] > 0)
            sol.t_plus += inst.coeffs[j];
        else
            sol.t_minus += inst.coeffs[j];
    }
    long long s_val = static_cast<long long>((total % mod_s + mod_s) % mod_s);
    sol.s = to_digits(s_val, p, n);

    // r_i = -s_i + sum_j t_j a_i^{(j)}; then c_{j-1} = r(j) / (p^n - 1),
    // where r(j) = sum_i r_{i+j} p^i (indices mod n).
    std::vector<long long> r(n);
    for (int i = 0; i < n; ++i) {
        long long ri = -sol.s.digits[i];
        for (int j = 0; j < m; ++j) ri += static_cast<long long>(inst.coeffs[j]) * addend_digits[j].digits[i];
        r[i] = ri;
    }
    sol.carries.resize(n);
    for (int j = 0; j < n; ++j) {
        __int128 rj = 0;
        __int128 pw = 1;
        for (int i = 0; i < n; ++i) {
            rj += pw * r[(i + j) % n];
            pw *= p;
        }
        if (rj % mod_s != 0) throw std::logic_error("awc_solve: r(j) not divisible by p^n - 1");
        sol.carries[(j + n - 1) % n] = static_cast<long long>(rj / mod_s);
    }

    // Recurrence and bounds, per the closed form's defining properties.
    bool some_nonzero = false;
    for (const auto& ad : addend_digits)
        some_nonzero = some_nonzero || ad.value() != 0;
    for (int i = 0; i < n; ++i) {
        long long rhs = sol.carry_before(i);
        for (int j = 0; j < m; ++j) rhs += static_cast<long long>(inst.coeffs[j]) * addend_digits[j].digits[i];
        if (static_cast<long long>(p) * sol.carries[i] + sol.s.digits[i] != rhs)
            throw std::logic_error("awc_solve: recurrence violated");
        if (sol.carries[i] < sol.t_minus - 1 || sol.carries[i] > sol.t_plus)
            throw std::logic_error("awc_solve: carry bounds violated");
        if (some_nonzero && (sol.carries[i] < sol.t_minus || sol.carries[i] > sol.t_plus - 1))
            throw std::logic_error("awc_solve: strict carry bounds violated");
    }

    // (p-1) w(c) = sum_j t_j w(a^{(j)}) - w(s)
    long long lhs = static_cast<long long>(p - 1) * sol.carry_weight();
    long long rhs = -sol.s.weight();
    for (int j = 0; j < m; ++j) rhs += static_cast<long long>(inst.coeffs[j]) * addend_digits[j].weight();
    if (lhs != rhs) throw std::logic_error("awc_solve: weight identity violated");

    return sol;
}

std::vector<long long> awc_poly_solve(const AwcInstance& inst) {
    const int p = inst.p, n = inst.n;
    const unsigned long long mod = modulus(p, n);
    const long long mod_s = static_cast<long long>(mod);
    AwcSolution base = awc_solve(inst);  // digits of s and the addends

    std::vector<long long> r(n);
    for (int i = 0; i < n; ++i) {
        long long ri = -base.s.digits[i];
        for (size_t j = 0; j < inst.coeffs.size(); ++j)
            ri += static_cast<long long>(inst.coeffs[j]) *
                  to_digits(inst.addends[j], p, n).digits[i];
        r[i] = ri;
    }

    // gamma(x) = (p^{n-1} + p^{n-2} x + ... + x^{n-1}) / (p^n - 1) inverts
    // (p - x) mod x^n - 1; c(x) = sum_i r_i gamma(x) x^i.
    std::vector<__int128> pw(n);
    pw[0] = 1;
    for (int i = 1; i < n; ++i) pw[i] = pw[i - 1] * p;
    std::vector<long long> carries(n);
    for (int l = 0; l < n; ++l) {
        __int128 num = 0;
        for (int i = 0; i < n; ++i) {
            int shift = ((l - i) % n + n) % n;
            num += r[i] * pw[n - 1 - shift];
        }
        if (num % mod_s != 0) throw std::logic_error("awc_poly_solve: non-integer carry");
        carries[l] = static_cast<long long>(num / mod_s);
    }
    return carries;
}

WtinequScan wtinequ_scan(int k, int workers) {
    if (k < 1 || k > 7) throw std::invalid_argument("wtinequ_scan: need 1 <= k <= 7");
    workers = check_workers(workers);
    const int n = 2 * k;
    const long long m = static_cast<long long>(modulus(3, n));
    const long long u = m / 4;
    const long long v = 3 * (m / 4);
    long long mult = 1;
    for (int i = 0; i < k; ++i) mult *= 3;
    mult += 1;  // 3^k + 1

    struct Part {
        int min1 = 1 << 30, min2 = 1 << 30;
        long long arg1 = -1, arg2 = -1;
        std::vector<long long> h1, h2;
    };
    std::vector<Part> parts(workers);
    auto run = [&](int w) {
        Part& part = parts[w];
        part.h1.assign(8 * k + 1, 0);
        part.h2.assign(8 * k + 1, 0);
        for (long long b = w; b < m; b += workers) {
            int wb = weight(b, 3, n);
            int l1 = wb + weight(-(mult * b + u), 3, n);
            int l2 = wb + weight(-(mult * b + v), 3, n);
            ++part.h1[l1];
            ++part.h2[l2];
            if (l1 < part.min1 || (l1 == part.min1 && b < part.arg1)) {
                part.min1 = l1;
                part.arg1 = b;
            }
            if (l2 < part.min2 || (l2 == part.min2 && b < part.arg2)) {
                part.min2 = l2;
                part.arg2 = b;
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }

    WtinequScan scan;
    scan.k = k;
    scan.histogram1.assign(8 * k + 1, 0);
    scan.histogram2.assign(8 * k + 1, 0);
    scan.min_lhs1 = scan.min_lhs2 = 1 << 30;
    scan.argmin1 = scan.argmin2 = -1;
    for (const auto& part : parts) {
        for (size_t i = 0; i < part.h1.size(); ++i) {
            scan.histogram1[i] += part.h1[i];
            scan.histogram2[i] += part.h2[i];
        }
        if (part.arg1 >= 0 && (part.min1 < scan.min_lhs1 ||
                               (part.min1 == scan.min_lhs1 && part.arg1 < scan.argmin1))) {
            scan.min_lhs1 = part.min1;
            scan.argmin1 = part.arg1;
        }
        if (part.arg2 >= 0 && (part.min2 < scan.min_lhs2 ||
                               (part.min2 == scan.min_lhs2 && part.arg2 < scan.argmin2))) {
            scan.min_lhs2 = part.min2;
            scan.argmin2 = part.arg2;
        }
    }
    scan.multisets_equal = scan.histogram1 == scan.histogram2;
    return scan;
}

int genwi_check(long long a, long long b, int k) {
    if (k < 1 || k > 15) throw std::invalid_argument("genwi_check: need 1 <= k <= 15");
    const int n = 2 * k;
    const long long m = static_cast<long long>(modulus(3, n));
    const long long u = m / 4;
    const long long v = 3 * (m / 4);
    long long ar = static_cast<long long>(canonical_residue(a, m));
    long long br = static_cast<long long>(canonical_residue(b, m));
    return weight(ar, 3, n) + weight(br, 3, n) + weight(v - ar - br, 3, n) +
           weight(u - ar - br, 3, n);
}

GenwiScan genwi_exhaustive(int k, int workers) {
    if (k < 1 || k > 3) throw std::invalid_argument("genwi_exhaustive: need 1 <= k <= 3");
    workers = check_workers(workers);
    const int n = 2 * k;
    const long long m = static_cast<long long>(modulus(3, n));
    const long long u = m / 4;
    const long long v = 3 * (m / 4);

    std::vector<int> wt(m);
    for (long long x = 0; x < m; ++x) wt[x] = weight(x, 3, n);

    struct Part {
        int min = 1 << 30;
        long long a = -1, b = -1;
    };
    std::vector<Part> parts(workers);
    auto run = [&](int w) {
        Part& part = parts[w];
        for (long long a = w; a < m; a += workers) {
            for (long long b = 0; b < m; ++b) {
                long long s = v - a - b, t = u - a - b;
                s %= m;
                if (s < 0) s += m;
                t %= m;
                if (t < 0) t += m;
                int lhs = wt[a] + wt[b] + wt[s] + wt[t];
                if (lhs < part.min) {
                    part.min = lhs;
                    part.a = a;
                    part.b = b;
                }
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }

    GenwiScan scan;
    scan.k = k;
    scan.min_lhs = 1 << 30;
    scan.arg_a = scan.arg_b = -1;
    for (const auto& part : parts) {
        if (part.a < 0) continue;
        if (part.min < scan.min_lhs ||
            (part.min == scan.min_lhs &&
             (part.a < scan.arg_a || (part.a == scan.arg_a && part.b < scan.arg_b)))) {
            scan.min_lhs = part.min;
            scan.arg_a = part.a;
            scan.arg_b = part.b;
        }
    }
    return scan;
}

int gengenwi_check(long long a, long long b, const DigitVector& u, const DigitVector& v) {
    if (u.p != 3 || v.p != 3 || u.n != v.n)
        throw std::invalid_argument("gengenwi_check: u, v must be ternary of equal length");
    for (int i = 0; i < u.n; ++i)
        if (u.digits[i] != 0 && v.digits[i] != 0)
            throw std::invalid_argument("gengenwi_check: digit supports overlap");
    const int n = u.n;
    const long long m = static_cast<long long>(modulus(3, n));
    // u, v count mod 3^n - 1: the all-2s vector is the zero residue, and its
    // weight is 0 by the canonical-digit convention.
    long long ar = static_cast<long long>(canonical_residue(a, m));
    long long br = static_cast<long long>(canonical_residue(b, m));
    return weight(ar, 3, n) + weight(br, 3, n) + weight(v.value() - ar - br, 3, n) +
           weight(u.value() - ar - br, 3, n);
}

bool shift_weight_invariance(long long s, int k) {
    if (k < 1 || k > 20) throw std::invalid_argument("shift_weight_invariance: bad k");
    const int n = 2 * k;
    const unsigned long long m = modulus(3, n);
    unsigned long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= 3;
    unsigned long long sr = canonical_residue(s, m);
    unsigned long long shifted = mulmod(pk, sr, m);
    return weight(static_cast<long long>(shifted), 3, n) ==
           weight(static_cast<long long>(sr), 3, n);
}

}  // namespace bentlab::carry
