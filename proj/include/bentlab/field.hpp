#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bentlab {

/// Exact arithmetic in F_{p^n} for an odd prime p, built on dense exp/log
/// tables under a canonical primitive modulus.
///
/// Elements are addressed by index: 0 is the zero element and index i >= 1 is
/// xi^{i-1}, where xi (the residue class of x) is primitive by construction.
/// Multiplication is therefore index addition mod q-1; addition goes through
/// cached coordinate vectors packed as base-p codes.
///
/// A context is immutable after construction; all operations are pure reads
/// and safe to share across threads.
class FieldCtx {
public:
    static constexpr long long kMaxFieldSize = 50'000'000;  // covers 3^14 and 19^6

    /// Canonical field: the modulus is the lexicographically smallest monic
    /// primitive polynomial under ascending (c_{n-1},...,c_0) tuple order,
    /// so certificates are reproducible across runs.
    static std::shared_ptr<const FieldCtx> build(int p, int n);

    /// Same tables under an explicit monic modulus (little-endian c_0..c_n,
    /// c_n = 1). The modulus must still be primitive; construction verifies.
    static std::shared_ptr<const FieldCtx> build_with_modulus(int p, int n,
                                                              std::vector<int> modulus);

    int p() const { return p_; }
    int n() const { return n_; }
    long long q() const { return q_; }
    /// Little-endian coefficients c_0..c_n of the modulus.
    const std::vector<int>& modulus() const { return modulus_; }

    long long zero() const { return 0; }
    long long one() const { return 1; }
    long long xi() const { return 2; }  // valid: q >= 3 so xi != 1

    /// xi^t for arbitrary t.
    long long element_from_log(long long t) const;
    /// Prime-subfield element c*1 for c in Z_p.
    long long scalar(int c) const;

    long long add(long long a, long long b) const;
    long long neg(long long a) const;
    long long sub(long long a, long long b) const { return add(a, neg(b)); }
    long long mul(long long a, long long b) const;
    long long inv(long long a) const;
    long long pow(long long a, long long e) const;
    long long frobenius(long long a, int times = 1) const;

    /// t with xi^t = a, defined for a != 0.
    long long discrete_log(long long a) const;

    /// Absolute trace a + a^p + ... + a^{p^{n-1}} as an integer in [0, p).
    int trace_abs(long long a) const { return trace_[check_index(a)]; }

    /// Relative trace onto F_{p^k}: sum of a^{p^{ki}}, i < n/k. Requires k | n.
    /// The result is an F_{p^n} element fixed by Frobenius^k.
    long long trace_rel(long long a, int k) const;

    /// Absolute trace of F_{p^k} (viewed inside F_{p^n}) as an integer:
    /// a + a^p + ... + a^{p^{k-1}}. Requires a fixed by Frobenius^k.
    int subfield_trace(long long a, int k) const;

    /// Multiset of fiber sizes of x -> x^d on F_q^*, as {size: count}.
    std::map<long long, long long> fiber_profile(long long d) const;

    /// Coordinates of an element in the polynomial basis 1, xi, ..., xi^{n-1},
    /// packed as a base-p integer (digit 0 = constant coefficient).
    uint32_t code_of(long long a) const { return a == 0 ? 0 : exp_[a - 1]; }
    long long index_of_code(uint32_t code) const { return code == 0 ? 0 : log_[code] + 1; }

    /// One-line text dump "p n c_n ... c_0" for certificate embedding.
    std::string dump_line() const;

private:
    FieldCtx() = default;
    void build_tables();
    long long check_index(long long a) const;

    int p_ = 0;
    int n_ = 0;
    long long q_ = 0;
    std::vector<int> modulus_;      // little-endian, length n+1, monic
    std::vector<uint32_t> exp_;     // t -> code of xi^t, size q-1
    std::vector<int32_t> log_;      // code -> t, size q (log_[0] unused)
    std::vector<uint8_t> trace_;    // element index -> absolute trace
};

/// Lexicographically smallest monic primitive polynomial of degree n over Z_p
/// (little-endian c_0..c_n). Exposed for cross-checking against the
/// exhaustive-scan oracle in tests.
std::vector<int> canonical_primitive_modulus(int p, int n);

}  // namespace bentlab
