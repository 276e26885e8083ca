#include "bentlab/cycint.hpp"

#include <cmath>
#include <cstdio>

namespace bentlab {

long long Eisenstein::norm_sq() const {
    __int128 n = static_cast<__int128>(x) * x + static_cast<__int128>(y) * y -
                 static_cast<__int128>(x) * y;
    if (n > static_cast<__int128>(INT64_MAX))
        throw std::overflow_error("Eisenstein::norm_sq overflow");
    return static_cast<long long>(n);
}

std::string Eisenstein::str() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%lld%+lld", x, y);
    return std::string(buf) + "ω";
}

Eisenstein omega_pow(long long t) {
    switch (((t % 3) + 3) % 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        default: return {-1, -1};
    }
}

long long lambda_valuation(const Eisenstein& z) {
    if (z.is_zero()) return kLambdaValuationInfinity;
    // z / (1-w) = z * (2+w) / 3, exact iff both coordinates of z*(2+w)
    // are divisible by 3.
    Eisenstein cur = z;
    long long m = 0;
    for (;;) {
        Eisenstein t = cur * Eisenstein{2, 1};
        if (t.x % 3 != 0 || t.y % 3 != 0) return m;
        cur = {t.x / 3, t.y / 3};
        ++m;
    }
}

Eisenstein divide_sqrt_m3_pow(Eisenstein z, int m) {
    if (m < 0) throw std::invalid_argument("divide_sqrt_m3_pow: m < 0");
    for (int i = 0; i < m; ++i) {
        // z / (1+2w) = z * (-1-2w) / 3
        Eisenstein t = z * Eisenstein{-1, -2};
        if (t.x % 3 != 0 || t.y % 3 != 0)
            throw std::domain_error("divide_sqrt_m3_pow: not divisible by 1+2w");
        z = {t.x / 3, t.y / 3};
    }
    return z;
}

std::optional<std::pair<int, int>> unit_decompose(const Eisenstein& z) {
    // The unit group of Z[w] is {+-1, +-w, +-w^2}.
    for (int sigma : {1, -1}) {
        for (int j = 0; j < 3; ++j) {
            Eisenstein u = omega_pow(j);
            if (sigma < 0) u = -u;
            if (z == u) return std::make_pair(sigma, j);
        }
    }
    return std::nullopt;
}

int CycInt::check_p(int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("CycInt: p must be an odd prime");
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) throw std::invalid_argument("CycInt: p must be an odd prime");
    return p;
}

CycInt::CycInt(int p, std::vector<BigInt> coeffs) : p_(check_p(p)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<size_t>(p_ - 1))
        throw std::invalid_argument("CycInt: coefficient vector must have length p-1");
}

CycInt CycInt::unit(int p, long long t) {
    CycInt z(p);
    long long r = ((t % p) + p) % p;
    if (r < p - 1) {
        z.coeffs_[r] = 1;
    } else {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& c : z.coeffs_) c = -1;
    }
    return z;
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycInt: mismatched p");
    CycInt r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    if (p_ != o.p_) throw std::invalid_argument("CycInt: mismatched p");
    for (int i = 0; i < p_ - 1; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycInt: mismatched p");
    CycInt r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycInt: mismatched p");
    // Accumulate with exponents mod p, then eliminate zeta^{p-1}.
    std::vector<BigInt> acc(p_);
    for (int i = 0; i < p_ - 1; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < p_ - 1; ++j) {
            if (o.coeffs_[j] == 0) continue;
            acc[(i + j) % p_] += coeffs_[i] * o.coeffs_[j];
        }
    }
    CycInt r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.coeffs_[i] = acc[i] - acc[p_ - 1];
    return r;
}

CycInt CycInt::conj() const {
    std::vector<BigInt> acc(p_);
    for (int i = 0; i < p_ - 1; ++i) acc[(p_ - i) % p_] = coeffs_[i];
    CycInt r(p_);
    for (int i = 0; i < p_ - 1; ++i) r.coeffs_[i] = acc[i] - acc[p_ - 1];
    return r;
}

bool CycInt::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::complex<double> CycInt::embed() const {
    std::complex<double> z = 0;
    for (int i = 0; i < p_ - 1; ++i) {
        if (coeffs_[i] == 0) continue;
        double angle = 2.0 * M_PI * i / p_;
        z += coeffs_[i].convert_to<double>() * std::polar(1.0, angle);
    }
    return z;
}

CycInt CycInt::from_eisenstein(const Eisenstein& z) {
    std::vector<BigInt> coeffs{BigInt(z.x), BigInt(z.y)};
    return CycInt(3, std::move(coeffs));
}

Eisenstein CycInt::to_eisenstein() const {
    if (p_ != 3) throw std::invalid_argument("to_eisenstein: p != 3");
    return {coeffs_[0].convert_to<long long>(), coeffs_[1].convert_to<long long>()};
}

std::string CycInt::str() const {
    std::string s = "[";
    for (int i = 0; i < p_ - 1; ++i) {
        if (i) s += ",";
        s += coeffs_[i].str();
    }
    return s + "]";
}

}  // namespace bentlab
