#pragma once

#include "bentlab/walsh.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bentlab {

/// Verdicts of the direct (root-of-unity) classification route.
///
/// When weakly regular, every coefficient satisfies
///   S_f(b) = sigma * (1+2w)^n * w^{dual(b)}
/// exactly, with (1+2w)^2 = -3. For even n this reads
/// sigma * (-3)^{n/2} * w^{dual(b)}. The absolute sign of sigma depends on
/// the square-root branch convention (1+2w for sqrt(-3)) and is reported as
/// such in certificates.
struct Classification {
    bool is_bent = false;
    bool is_regular = false;
    bool is_weakly_regular = false;
    int sigma = 0;              // +1/-1, meaningful iff weakly regular
    std::string parity_branch;  // normalizer description, depends on n mod 2
    std::optional<FunctionTable> dual;
};

/// Valuation data consumed by the divisibility route. Values are lambda-adic
/// (nu_lambda = 2 * nu_3, so the half-integers of the 3-adic statement become
/// integers); kLambdaValuationInfinity encodes +inf.
struct ValuationReport {
    int n = 0;
    std::vector<long long> lambda_val;       // per b: nu_lambda(S(b))
    long long lambda_val_zero = 0;           // nu_lambda(S(0))
    std::vector<long long> lambda_val_diff;  // per b != 0: nu_lambda(S(b)-S(0))
};

/// Verdicts of the valuation route.
struct HouClassification {
    bool is_bent = false;            // nu_3(S(b)) = n/2 for all b
    bool is_weakly_regular = false;  // nu_3(S(0)) = n/2 and nu_3(S(b)-S(0)) > n/2
    /// The weak-regularity criterion is stated standalone; this flags inputs
    /// where it holds but the bent criterion fails (never silently resolved).
    bool criterion_ii_without_i = false;
};

/// Direct route: bent iff |S(b)|^2 = 3^n for all b; weakly regular iff the
/// exact quotients S(b)/(1+2w)^n are all roots of unity with a constant sign;
/// regular additionally requires the normalized value to be w^{dual(b)} with
/// u = 1 (even n and sigma*(-1)^{n/2} = +1).
Classification classify_direct(const WalshSpectrum& spec);

std::pair<HouClassification, ValuationReport> classify_hou(const WalshSpectrum& spec);

/// Dual table f* with u*3^{-n/2}*S_f(b) = w^{f*(b)}. Requires weak
/// regularity; the extracted dual is itself verified weakly regular bent.
FunctionTable extract_dual(const WalshSpectrum& spec, const Classification& cls,
                           const FieldCtx& ctx);

/// F is planar iff x -> F(x+a) - F(x) - F(a) is bijective for every a != 0.
/// `f_table` maps element index to element index.
bool is_planar(const std::vector<long long>& f_table, const FieldCtx& ctx);

/// Equivalence check: planarity of F holds iff every component Tr_n(aF(x)),
/// a != 0, is bent. Returns the biconditional, which must always be true;
/// false indicates a genuine failure.
bool planar_bent_crosscheck(const std::vector<long long>& f_table, const FieldCtx& ctx);

/// Algebraic degree of the monomial component Tr_n(a x^d) (coefficient
/// nonvanishing): the ternary weight of d mod 3^n - 1.
int monomial_degree(long long d, int n);

}  // namespace bentlab
