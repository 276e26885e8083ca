#include "bentlab/classify.hpp"

#include "bentlab/carry.hpp"

#include <stdexcept>

namespace bentlab {

namespace {

long long pow3(int n) {
    long long r = 1;
    while (n-- > 0) r *= 3;
    return r;
}

void check_spectrum(const WalshSpectrum& spec) {
    if (spec.coeffs.size() != static_cast<size_t>(pow3(spec.n)))
        throw std::invalid_argument("classify: spectrum dimension invalid");
}

}  // namespace

Classification classify_direct(const WalshSpectrum& spec) {
    check_spectrum(spec);
    const int n = spec.n;
    const long long q = pow3(n);

    Classification cls;
    cls.parity_branch = (n % 2 == 0) ? "(-3)^(n/2)" : "(1+2w)^n";

    for (const auto& z : spec.coeffs)
        if (z.norm_sq() != q) return cls;
    cls.is_bent = true;

    FunctionTable dual;
    dual.n = n;
    dual.values.resize(q);
    int sigma = 0;
    for (long long b = 0; b < q; ++b) {
        Eisenstein unit;
        try {
            unit = divide_sqrt_m3_pow(spec.coeffs[b], n);
        } catch (const std::domain_error&) {
            return cls;
        }
        auto dec = unit_decompose(unit);
        if (!dec) return cls;
        if (sigma == 0) sigma = dec->first;
        if (dec->first != sigma) return cls;
        dual.values[b] = static_cast<uint8_t>(dec->second);
    }
    cls.is_weakly_regular = true;
    cls.sigma = sigma;
    cls.dual = std::move(dual);
    // Regular means u = 1: for even n, S(b)/3^{n/2} = sigma*(-1)^{n/2}*w^{dual}.
    cls.is_regular = (n % 2 == 0) && (sigma * ((n / 2) % 2 == 0 ? 1 : -1) == 1);
    return cls;
}

std::pair<HouClassification, ValuationReport> classify_hou(const WalshSpectrum& spec) {
    check_spectrum(spec);
    const int n = spec.n;
    const long long q = pow3(n);

    ValuationReport report;
    report.n = n;
    report.lambda_val.resize(q);
    report.lambda_val_diff.resize(q - 1);
    for (long long b = 0; b < q; ++b) report.lambda_val[b] = lambda_valuation(spec.coeffs[b]);
    report.lambda_val_zero = report.lambda_val[0];
    for (long long b = 1; b < q; ++b)
        report.lambda_val_diff[b - 1] = lambda_valuation(spec.coeffs[b] - spec.coeffs[0]);

    HouClassification hou;
    // nu_3(S(b)) = n/2  <=>  nu_lambda(S(b)) = n
    hou.is_bent = true;
    for (long long b = 0; b < q; ++b)
        if (report.lambda_val[b] != n) hou.is_bent = false;
    // nu_3(S(0)) = n/2 and nu_3(S(b)-S(0)) > n/2, taking +inf as > n
    hou.is_weakly_regular = (report.lambda_val_zero == n);
    for (long long b = 1; b < q && hou.is_weakly_regular; ++b) {
        long long v = report.lambda_val_diff[b - 1];
        if (v != kLambdaValuationInfinity && v <= n) hou.is_weakly_regular = false;
    }
    hou.criterion_ii_without_i = hou.is_weakly_regular && !hou.is_bent;
    return {hou, report};
}

FunctionTable extract_dual(const WalshSpectrum& spec, const Classification& cls,
                           const FieldCtx& ctx) {
    if (!cls.is_weakly_regular || !cls.dual)
        throw std::invalid_argument("extract_dual: function is not weakly regular");
    // Re-derive the exponents from the coefficients so the table cannot
    // drift from the spectrum it describes.
    FunctionTable dual;
    dual.n = spec.n;
    dual.values.resize(spec.coeffs.size());
    for (size_t b = 0; b < spec.coeffs.size(); ++b) {
        auto dec = unit_decompose(divide_sqrt_m3_pow(spec.coeffs[b], spec.n));
        if (!dec || dec->first != cls.sigma)
            throw std::invalid_argument("extract_dual: classification does not match spectrum");
        dual.values[b] = static_cast<uint8_t>(dec->second);
    }
    if (dual.values != cls.dual->values)
        throw std::invalid_argument("extract_dual: classification does not match spectrum");
    // The dual of a weakly regular bent function is weakly regular bent.
    auto dual_cls = classify_direct(walsh_spectrum(dual, ctx));
    if (!dual_cls.is_weakly_regular)
        throw std::logic_error("extract_dual: dual failed weak-regularity check");
    return dual;
}

bool is_planar(const std::vector<long long>& f_table, const FieldCtx& ctx) {
    const long long q = ctx.q();
    if (f_table.size() != static_cast<size_t>(q))
        throw std::invalid_argument("is_planar: table length does not match field");
    std::vector<uint8_t> hit(q);
    for (long long a = 1; a < q; ++a) {
        std::fill(hit.begin(), hit.end(), 0);
        long long fa = f_table[a];
        bool bijective = true;
        for (long long x = 0; x < q && bijective; ++x) {
            long long v = ctx.sub(f_table[ctx.add(x, a)], ctx.add(f_table[x], fa));
            if (hit[v]) bijective = false;
            hit[v] = 1;
        }
        if (!bijective) return false;
    }
    return true;
}

bool planar_bent_crosscheck(const std::vector<long long>& f_table, const FieldCtx& ctx) {
    const long long q = ctx.q();
    bool planar = is_planar(f_table, ctx);
    bool all_bent = true;
    for (long long a = 1; a < q && all_bent; ++a) {
        FunctionTable component;
        component.n = ctx.n();
        component.values.resize(q);
        for (long long x = 0; x < q; ++x)
            component.values[x] = static_cast<uint8_t>(ctx.trace_abs(ctx.mul(a, f_table[x])));
        all_bent = classify_direct(walsh_spectrum(component, ctx)).is_bent;
    }
    return planar == all_bent;
}

int monomial_degree(long long d, int n) {
    return carry::weight(d, 3, n);
}

}  // namespace bentlab
