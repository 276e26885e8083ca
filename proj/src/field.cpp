#include "bentlab/field.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace bentlab {

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Little-endian dense polynomials over Z_p, used only for modulus selection.
using Poly = std::vector<int>;

int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

// Remainder of a (destroyed) by monic divisor b.
Poly poly_mod(Poly a, const Poly& b, int p) {
    int db = degree(b);
    for (int i = degree(a); i >= db; --i) {
        int c = a[i];
        if (!c) continue;
        for (int j = 0; j <= db; ++j) {
            int k = i - db + j;
            a[k] = (a[k] - c * b[j]) % p;
            if (a[k] < 0) a[k] += p;
        }
    }
    a.resize(db);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), mod, p);
}

Poly poly_powmod(Poly base, long long e, const Poly& mod, int p) {
    Poly r(degree(mod), 0);
    r[0] = 1;
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

bool is_one(const Poly& f) {
    if (f.empty() || f[0] != 1) return false;
    for (size_t i = 1; i < f.size(); ++i)
        if (f[i]) return false;
    return true;
}

// Brute-force irreducibility: trial division by every monic polynomial of
// degree 1..n/2.
bool is_irreducible(const Poly& f, int p) {
    int n = degree(f);
    if (n == 1) return true;
    if (f[0] == 0) return false;
    for (int d = 1; 2 * d <= n; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        Poly div(d + 1, 0);
        div[d] = 1;
        for (long long code = 0; code < count; ++code) {
            long long c = code;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(c % p);
                c /= p;
            }
            if (degree(poly_mod(f, div, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<long long> prime_factors(long long m) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            fs.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) fs.push_back(m);
    return fs;
}

// x has multiplicative order exactly q-1 modulo f.
bool root_is_primitive(const Poly& f, int p, long long q,
                       const std::vector<long long>& qm1_factors) {
    int n = degree(f);
    Poly x(n, 0);
    if (n == 1) {
        x[0] = (p - f[0]) % p;  // the root itself
        if (x[0] == 0) return false;
    } else {
        if (f[0] == 0) return false;  // x divides f, not invertible
        x[1] = 1;
    }
    if (!is_one(poly_powmod(x, q - 1, f, p))) return false;
    for (long long r : qm1_factors)
        if (is_one(poly_powmod(x, (q - 1) / r, f, p))) return false;
    return true;
}

}  // namespace

std::vector<int> canonical_primitive_modulus(int p, int n) {
    long long q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    auto factors = prime_factors(q - 1);
    // Ascending lexicographic order on the tuple (c_{n-1}, ..., c_0).
    std::vector<int> tuple(n, 0);
    for (;;) {
        Poly f(n + 1, 0);
        f[n] = 1;
        for (int i = 0; i < n; ++i) f[n - 1 - i] = tuple[i];
        if (is_irreducible(f, p) && root_is_primitive(f, p, q, factors)) return f;
        int i = n - 1;
        while (i >= 0 && tuple[i] == p - 1) tuple[i--] = 0;
        if (i < 0) throw std::logic_error("no primitive polynomial found");
        ++tuple[i];
    }
}

std::shared_ptr<const FieldCtx> FieldCtx::build(int p, int n) {
    if (!is_odd_prime(p)) throw std::invalid_argument("FieldCtx: p must be an odd prime");
    if (n < 1) throw std::invalid_argument("FieldCtx: n must be >= 1");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw std::invalid_argument("FieldCtx: p^n exceeds field cap");
    }
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->n_ = n;
    ctx->q_ = q;
    ctx->modulus_ = canonical_primitive_modulus(p, n);
    ctx->build_tables();
    return ctx;
}

std::shared_ptr<const FieldCtx> FieldCtx::build_with_modulus(int p, int n,
                                                             std::vector<int> modulus) {
    if (!is_odd_prime(p)) throw std::invalid_argument("FieldCtx: p must be an odd prime");
    if (n < 1) throw std::invalid_argument("FieldCtx: n must be >= 1");
    if (modulus.size() != static_cast<size_t>(n + 1) || modulus[n] != 1)
        throw std::invalid_argument("FieldCtx: modulus must be monic of degree n");
    for (int c : modulus)
        if (c < 0 || c >= p) throw std::invalid_argument("FieldCtx: modulus coefficients out of range");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw std::invalid_argument("FieldCtx: p^n exceeds field cap");
    }
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->n_ = n;
    ctx->q_ = q;
    ctx->modulus_ = std::move(modulus);
    ctx->build_tables();  // throws if the modulus is not primitive
    return ctx;
}

void FieldCtx::build_tables() {
    const int p = p_, n = n_;
    const long long q = q_;
    exp_.assign(q - 1, 0);
    log_.assign(q, -1);

    // Walk xi^0, xi^1, ... by multiply-by-x with reduction; a repeat before
    // step q-1 means the modulus is not primitive.
    std::vector<int> cur(n, 0);
    cur[0] = 1;
    std::vector<uint32_t> pw(n + 1, 1);
    for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * static_cast<uint32_t>(p);
    for (long long t = 0; t < q - 1; ++t) {
        uint32_t code = 0;
        for (int i = n - 1; i >= 0; --i) code = code * p + cur[i];
        if (log_[code] != -1) throw std::invalid_argument("FieldCtx: modulus is not primitive");
        exp_[t] = code;
        log_[code] = static_cast<int32_t>(t);
        // cur *= x
        int top = cur[n - 1];
        for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top) {
            for (int i = 0; i < n; ++i) {
                cur[i] = (cur[i] - top * modulus_[i]) % p;
                if (cur[i] < 0) cur[i] += p;
            }
        }
    }
    bool closed = (cur[0] == 1);
    for (int i = 1; i < n; ++i) closed = closed && cur[i] == 0;
    if (!closed) throw std::logic_error("FieldCtx: exp table did not close at order q-1");

    // Absolute trace per element: the trace lies in the prime subfield, whose
    // polynomial-basis coordinate vector is (c, 0, ..., 0), so only constant
    // coordinates of the Frobenius orbit need summing.
    trace_.assign(q, 0);
    for (long long idx = 1; idx < q; ++idx) {
        long long t = idx - 1;
        int s = 0;
        long long tt = t;
        for (int i = 0; i < n; ++i) {
            s += static_cast<int>(exp_[tt] % p);
            tt = tt * p % (q - 1);
        }
        trace_[idx] = static_cast<uint8_t>(s % p);
    }
}

long long FieldCtx::check_index(long long a) const {
    if (a < 0 || a >= q_) throw std::out_of_range("FieldCtx: element index out of range");
    return a;
}

long long FieldCtx::element_from_log(long long t) const {
    long long m = q_ - 1;
    return ((t % m) + m) % m + 1;
}

long long FieldCtx::scalar(int c) const {
    c %= p_;
    if (c < 0) c += p_;
    return index_of_code(static_cast<uint32_t>(c));
}

long long FieldCtx::add(long long a, long long b) const {
    uint32_t ca = code_of(check_index(a));
    uint32_t cb = code_of(check_index(b));
    uint32_t out = 0, mul = 1;
    for (int i = 0; i < n_; ++i) {
        int s = static_cast<int>(ca % p_) + static_cast<int>(cb % p_);
        if (s >= p_) s -= p_;
        out += static_cast<uint32_t>(s) * mul;
        ca /= p_;
        cb /= p_;
        mul *= p_;
    }
    return index_of_code(out);
}

long long FieldCtx::neg(long long a) const {
    check_index(a);
    if (a == 0) return 0;
    if (p_ == 2) return a;
    // -1 = xi^{(q-1)/2}
    return mul(a, element_from_log((q_ - 1) / 2));
}

long long FieldCtx::mul(long long a, long long b) const {
    check_index(a);
    check_index(b);
    if (a == 0 || b == 0) return 0;
    return (a - 1 + b - 1) % (q_ - 1) + 1;
}

long long FieldCtx::inv(long long a) const {
    check_index(a);
    if (a == 0) throw std::domain_error("FieldCtx: inverse of zero");
    return (q_ - 1 - (a - 1)) % (q_ - 1) + 1;
}

long long FieldCtx::pow(long long a, long long e) const {
    check_index(a);
    if (a == 0) {
        if (e < 0) throw std::domain_error("FieldCtx: negative power of zero");
        return e == 0 ? 1 : 0;  // 0^0 := 1 for the generic op; tables use 0^d := 0
    }
    long long m = q_ - 1;
    long long t = (a - 1) % m;
    long long er = ((e % m) + m) % m;
    return static_cast<long long>(static_cast<unsigned __int128>(t) * er % m) + 1;
}

long long FieldCtx::frobenius(long long a, int times) const {
    check_index(a);
    if (a == 0) return 0;
    long long e = 1;
    for (int i = 0; i < ((times % n_) + n_) % n_; ++i) e = e * p_ % (q_ - 1);
    return pow(a, e);
}

long long FieldCtx::discrete_log(long long a) const {
    check_index(a);
    if (a == 0) throw std::domain_error("FieldCtx: discrete log of zero");
    return a - 1;
}

long long FieldCtx::trace_rel(long long a, int k) const {
    check_index(a);
    if (k < 1 || n_ % k != 0) throw std::invalid_argument("trace_rel: k must divide n");
    long long acc = 0;
    long long cur = a;
    for (int i = 0; i < n_ / k; ++i) {
        acc = add(acc, cur);
        cur = frobenius(cur, k);
    }
    return acc;
}

int FieldCtx::subfield_trace(long long a, int k) const {
    check_index(a);
    if (k < 1 || n_ % k != 0) throw std::invalid_argument("subfield_trace: k must divide n");
    if (frobenius(a, k) != a)
        throw std::invalid_argument("subfield_trace: element not in F_{p^k}");
    long long acc = 0;
    long long cur = a;
    for (int i = 0; i < k; ++i) {
        acc = add(acc, cur);
        cur = frobenius(cur);
    }
    // acc is in the prime subfield: constant coordinate only
    return static_cast<int>(code_of(acc) % p_);
}

std::map<long long, long long> FieldCtx::fiber_profile(long long d) const {
    std::vector<int32_t> hits(q_, 0);
    for (long long a = 1; a < q_; ++a) ++hits[pow(a, d)];
    std::map<long long, long long> profile;
    for (long long a = 0; a < q_; ++a)
        if (hits[a]) ++profile[hits[a]];
    return profile;
}

std::string FieldCtx::dump_line() const {
    std::string s = std::to_string(p_) + " " + std::to_string(n_);
    for (int i = n_; i >= 0; --i) s += " " + std::to_string(modulus_[i]);
    return s;
}

}  // namespace bentlab
