#pragma once

#include <json.hpp>

#include <string>

namespace bentlab::cert {

inline constexpr const char* kToolVersion = "bentlab 0.1.0";

/// Machine-readable verification certificate. Serializes to canonical JSON
/// (sorted keys; floating values rendered as fixed-precision strings), so a
/// rerun of the same command with the same parameters and seed reproduces it
/// byte-identically apart from the timing field.
class Certificate {
public:
    explicit Certificate(const std::string& command);

    /// Parameter fields under "params".
    void set_param(const std::string& key, const nlohmann::json& value);

    /// Named verdicts; any failed verdict drives the exit code to 1.
    void add_verdict(const std::string& name, bool pass,
                     const nlohmann::json& details = nlohmann::json());

    /// Provenance of sampled (as opposed to exhaustive) checks.
    void set_sampling(long long samples, unsigned long long seed);
    void set_exhaustive();

    void set_timing_ms(double ms);

    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }

    const nlohmann::json& json() const { return j_; }
    /// Canonical text; timing is included but excluded from any hashing use.
    std::string text() const;

    static Certificate parse(const std::string& text);

    /// Fixed-precision rendering used for every float in certificates.
    static std::string render_float(double value);

private:
    Certificate() = default;
    nlohmann::json j_;
};

}  // namespace bentlab::cert
