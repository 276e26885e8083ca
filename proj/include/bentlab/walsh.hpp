#pragma once

#include "bentlab/cycint.hpp"
#include "bentlab/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bentlab {

/// Table of a function F_{3^n} -> F_3, indexed by field-element index.
struct FunctionTable {
    int n = 0;
    std::vector<uint8_t> values;  // entries in {0,1,2}, length 3^n

    long long size() const { return static_cast<long long>(values.size()); }
};

/// Exact Walsh spectrum: S_f(b) for every b, as Eisenstein integers.
/// Parseval (sum of |S(b)|^2 = 3^{2n}) is asserted at construction time.
struct WalshSpectrum {
    int n = 0;
    std::vector<Eisenstein> coeffs;  // indexed by element index of b

    /// CSV dump, header "b_index,x,y", one row per b ascending.
    std::string to_csv() const;
};

/// Single Walsh coefficient S_f(b) = sum_x w^{f(x) - Tr_n(bx)} by direct
/// summation. The independent reference for the fast transform.
Eisenstein walsh_point(const FunctionTable& f, long long b, const FieldCtx& ctx);

/// Full spectrum via n exact radix-3 butterfly passes over trace-dual
/// coordinates. Agrees with walsh_point at every b, bit-identically.
WalshSpectrum walsh_spectrum(const FunctionTable& f, const FieldCtx& ctx);

/// Exact Parseval sum over a spectrum; equals 3^{2n} for any function table.
long long parseval_sum(const WalshSpectrum& spec);

}  // namespace bentlab
