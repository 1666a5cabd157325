#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "random.hpp"
#include "scalar.hpp"

namespace g2kit {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr const char* kReportSchema = "g2kit.check-report/1";

struct CheckReport {
    std::string check;
    std::string claim;  // the statement under test, in our words
    json parameters = json::object();
    bool pass = false;
    json metrics = json::object();
    json witness = nullptr;
    std::string config_hash;

    // record a boolean sub-result and fold it into pass
    bool require(const std::string& name, bool ok) {
        metrics[name] = ok;
        if (!ok) failed.push_back(name);
        return ok;
    }
    void finish() { pass = failed.empty(); }

    json to_json() const {
        json j;
        j["schema"] = kReportSchema;
        j["check"] = check;
        j["anchor"] = {{"claim", claim}};
        j["parameters"] = parameters;
        j["pass"] = pass;
        j["metrics"] = metrics;
        j["witness"] = failed.empty() ? witness : json{{"failed", failed}, {"data", witness}};
        j["toolkit_version"] = kToolkitVersion;
        j["config_hash"] = config_hash;
        return j;
    }

    std::vector<std::string> failed;
};

// exact values only; rationals as "n/d"
inline json exact(const Rational& q) { return q.str(); }
inline json exact(const Fp& x) { return std::to_string(x.residue()); }
template <class E>
json exact(const std::vector<E>& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(exact(x));
    return a;
}

struct CheckConfig {
    std::vector<Rational> lambdas{Rational(1), Rational(2), Rational(3), Rational(5), Rational(-2), Rational(1, 2)};
    std::vector<std::uint32_t> primes{101, 103, 107};
    std::vector<std::uint32_t> enum_primes{5, 7, 11};
    std::size_t samples = 0;  // 0 means the per-check default
    std::uint64_t seed = 42;
    std::size_t max_pairs = 200000;
    unsigned max_degree = 20;

    std::size_t samples_or(std::size_t d) const { return samples ? samples : d; }
    json to_json() const {
        json j;
        j["lambdas"] = exact(lambdas);
        j["primes"] = primes;
        j["enum_primes"] = enum_primes;
        j["samples"] = samples;
        j["seed"] = std::to_string(seed);
        j["max_pairs"] = max_pairs;
        j["max_degree"] = max_degree;
        return j;
    }
};

inline std::string config_hash(const json& config) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(config.dump())));
    return buf;
}

}  // namespace g2kit
