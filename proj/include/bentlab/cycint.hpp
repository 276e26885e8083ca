#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bentlab {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[w] for w = e^{2*pi*i/3}, stored as x + y*w with w^2 = -1 - w.
/// Coordinates are 64-bit; this is the compact carrier used for Walsh spectra,
/// where values are bounded by 3^n. Use CycInt when coefficients can grow.
struct Eisenstein {
    long long x = 0;
    long long y = 0;

    constexpr Eisenstein() = default;
    constexpr Eisenstein(long long x_, long long y_) : x(x_), y(y_) {}

    constexpr bool operator==(const Eisenstein&) const = default;

    constexpr Eisenstein operator+(const Eisenstein& o) const { return {x + o.x, y + o.y}; }
    constexpr Eisenstein operator-(const Eisenstein& o) const { return {x - o.x, y - o.y}; }
    constexpr Eisenstein operator-() const { return {-x, -y}; }

    constexpr Eisenstein operator*(const Eisenstein& o) const {
        // (x1 + y1 w)(x2 + y2 w), reduced via w^2 = -1 - w
        return {x * o.x - y * o.y, x * o.y + y * o.x - y * o.y};
    }

    constexpr Eisenstein& operator+=(const Eisenstein& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr Eisenstein& operator-=(const Eisenstein& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }

    /// Complex conjugate: w -> w^2.
    constexpr Eisenstein conj() const { return {x - y, -y}; }

    /// Multiplication by w and w^2 as coordinate shuffles.
    constexpr Eisenstein mul_omega() const { return {-y, x - y}; }
    constexpr Eisenstein mul_omega_sq() const { return {y - x, -x}; }

    constexpr bool is_zero() const { return x == 0 && y == 0; }

    /// |z|^2 = x^2 + y^2 - xy, a non-negative rational integer.
    long long norm_sq() const;

    std::string str() const;  // "x+yw" rendering, e.g. "-3+0w" with w spelled as omega
};

/// w^t for t taken mod 3.
Eisenstein omega_pow(long long t);

constexpr long long kLambdaValuationInfinity = -1;

/// Largest m with (1-w)^m | z; kLambdaValuationInfinity encodes +inf (z = 0).
/// nu_lambda(3) = 2, and nu_3 = nu_lambda / 2 as a half-integer.
long long lambda_valuation(const Eisenstein& z);

/// Exact quotient z / (1+2w)^m, where 1+2w is the canonical square root of -3
/// ((1+2w)^2 = -3). Throws std::domain_error when z is not divisible.
Eisenstein divide_sqrt_m3_pow(Eisenstein z, int m);

/// Decomposition of a root of unity: z = sigma * w^j with sigma in {-1,+1},
/// j in {0,1,2}. Empty optional when z is not one of the six units.
std::optional<std::pair<int, int>> unit_decompose(const Eisenstein& z);

/// Element of Z[zeta_p] for an odd prime p, reduced modulo
/// 1 + zeta + ... + zeta^{p-1} = 0: value = sum coeffs[i] * zeta^i, i < p-1.
/// Coefficients are arbitrary-precision integers, so sums and products of
/// character sums never overflow.
class CycInt {
public:
    CycInt() : p_(3), coeffs_(2) {}
    explicit CycInt(int p) : p_(check_p(p)), coeffs_(p - 1) {}
    CycInt(int p, const BigInt& constant) : CycInt(p) { coeffs_[0] = constant; }
    CycInt(int p, std::vector<BigInt> coeffs);

    int p() const { return p_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// zeta^t, t arbitrary.
    static CycInt unit(int p, long long t);

    bool operator==(const CycInt&) const = default;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt& operator+=(const CycInt& o);

    /// Galois conjugation zeta -> zeta^{-1} (coefficient permutation, exact).
    CycInt conj() const;

    bool is_zero() const;

    /// Numeric embedding at zeta = e^{2*pi*i/p}.
    std::complex<double> embed() const;

    static CycInt from_eisenstein(const Eisenstein& z);
    Eisenstein to_eisenstein() const;  // requires p == 3 and 64-bit coefficients

    std::string str() const;

private:
    static int check_p(int p);
    int p_;
    std::vector<BigInt> coeffs_;  // length p-1
};

}  // namespace bentlab
