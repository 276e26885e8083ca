#include "bentlab/certificate.hpp"

#include <cstdio>

namespace bentlab::cert {

Certificate::Certificate(const std::string& command) {
    j_["tool"] = kToolVersion;
    j_["command"] = command;
    j_["params"] = nlohmann::json::object();
    j_["verdicts"] = nlohmann::json::array();
    j_["provenance"] = nlohmann::json::object();
    j_["timing_ms"] = nullptr;
}

void Certificate::set_param(const std::string& key, const nlohmann::json& value) {
    j_["params"][key] = value;
}

void Certificate::add_verdict(const std::string& name, bool pass,
                              const nlohmann::json& details) {
    nlohmann::json v;
    v["name"] = name;
    v["pass"] = pass;
    if (!details.is_null()) v["details"] = details;
    j_["verdicts"].push_back(v);
}

void Certificate::set_sampling(long long samples, unsigned long long seed) {
    j_["provenance"]["exhaustive"] = false;
    j_["provenance"]["samples"] = samples;
    j_["provenance"]["seed"] = seed;
}

void Certificate::set_exhaustive() {
    j_["provenance"]["exhaustive"] = true;
}

void Certificate::set_timing_ms(double ms) {
    j_["timing_ms"] = render_float(ms);
}

bool Certificate::all_pass() const {
    for (const auto& v : j_["verdicts"])
        if (!v["pass"].get<bool>()) return false;
    return true;
}

std::string Certificate::text() const {
    // nlohmann objects keep keys sorted, so dump() is canonical.
    return j_.dump(2) + "\n";
}

Certificate Certificate::parse(const std::string& text) {
    Certificate c;
    c.j_ = nlohmann::json::parse(text);
    return c;
}

std::string Certificate::render_float(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9e", value);
    return buf;
}

}  // namespace bentlab::cert
