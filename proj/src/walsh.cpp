#include "bentlab/walsh.hpp"

#include <stdexcept>

namespace bentlab {

namespace {

void check_dims(const FunctionTable& f, const FieldCtx& ctx) {
    if (ctx.p() != 3) throw std::invalid_argument("walsh: field characteristic must be 3");
    if (f.n != ctx.n() || f.size() != ctx.q())
        throw std::invalid_argument("walsh: table length does not match field");
}

long long pow3(int n) {
    long long r = 1;
    while (n-- > 0) r *= 3;
    return r;
}

}  // namespace

std::string WalshSpectrum::to_csv() const {
    std::string out = "b_index,x,y\n";
    for (size_t b = 0; b < coeffs.size(); ++b) {
        out += std::to_string(b);
        out += ',';
        out += std::to_string(coeffs[b].x);
        out += ',';
        out += std::to_string(coeffs[b].y);
        out += '\n';
    }
    return out;
}

Eisenstein walsh_point(const FunctionTable& f, long long b, const FieldCtx& ctx) {
    check_dims(f, ctx);
    const long long q = ctx.q();
    long long counts[3] = {0, 0, 0};
    for (long long x = 0; x < q; ++x) {
        int e = (f.values[x] + 3 - ctx.trace_abs(ctx.mul(b, x))) % 3;
        ++counts[e];
    }
    return Eisenstein{counts[0] - counts[2], counts[1] - counts[2]};
}

WalshSpectrum walsh_spectrum(const FunctionTable& f, const FieldCtx& ctx) {
    check_dims(f, ctx);
    const int n = ctx.n();
    const long long q = ctx.q();

    // Gram matrix of the trace form on the polynomial basis. Mapping b's
    // coordinates through it yields trace-dual coordinates beta with
    // Tr(bx) = sum_i beta_i x_i, turning the sum into a plain (Z_3)^n DFT.
    std::vector<int> gram(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gram[i * n + j] = ctx.trace_abs(ctx.element_from_log(i + j));

    // Load f in coordinate-code order.
    std::vector<Eisenstein> data(q);
    for (long long x = 0; x < q; ++x) data[ctx.code_of(x)] = omega_pow(f.values[x]);

    // n radix-3 passes with kernel w^{-jt}: out_j = sum_t z_t w^{-jt}.
    long long stride = 1;
    for (int dim = 0; dim < n; ++dim) {
        for (long long hi = 0; hi < q; hi += 3 * stride) {
            for (long long lo = 0; lo < stride; ++lo) {
                Eisenstein& a0 = data[hi + lo];
                Eisenstein& a1 = data[hi + lo + stride];
                Eisenstein& a2 = data[hi + lo + 2 * stride];
                Eisenstein z0 = a0, z1 = a1, z2 = a2;
                a0 = z0 + z1 + z2;
                a1 = z0 + z1.mul_omega_sq() + z2.mul_omega();
                a2 = z0 + z1.mul_omega() + z2.mul_omega_sq();
            }
        }
        stride *= 3;
    }

    // Permute to b-index order through the dual-coordinate map.
    WalshSpectrum spec;
    spec.n = n;
    spec.coeffs.resize(q);
    std::vector<int> digits(n), dual(n);
    for (long long b = 0; b < q; ++b) {
        uint32_t code = ctx.code_of(b);
        for (int i = 0; i < n; ++i) {
            digits[i] = code % 3;
            code /= 3;
        }
        long long dual_code = 0;
        for (int j = n - 1; j >= 0; --j) {
            int s = 0;
            for (int i = 0; i < n; ++i) s += gram[j * n + i] * digits[i];
            dual_code = dual_code * 3 + s % 3;
        }
        spec.coeffs[b] = data[dual_code];
    }

    if (parseval_sum(spec) != pow3(2 * n))
        throw std::logic_error("walsh_spectrum: Parseval identity failed");
    return spec;
}

long long parseval_sum(const WalshSpectrum& spec) {
    __int128 acc = 0;
    for (const auto& z : spec.coeffs) acc += z.norm_sq();
    if (acc > static_cast<__int128>(INT64_MAX))
        throw std::overflow_error("parseval_sum overflow");
    return static_cast<long long>(acc);
}

}  // namespace bentlab
