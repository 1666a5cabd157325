#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "g2kit/registry.hpp"

using namespace g2kit;

namespace {

constexpr int kPass = 0, kFail = 1, kConfigError = 2;

Rational parse_lambda(const std::string& s) {
    try {
        mpq_class q(s, 10);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw InvalidParameter("lambda must be an integer or n/d, got '" + s + "'");
    }
}

int list_checks() {
    for (auto& e : check_registry()) {
        std::cout << e.name << "\n    " << e.claim << "\n";
        if (!e.deps.empty()) {
            std::cout << "    after:";
            for (auto& d : e.deps) std::cout << " " << d;
            std::cout << "\n";
        }
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"g2kit: exact checks for G2 and its Grassmannian hyperplane sections"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list the registered checks");

    auto* run = app.add_subcommand("run", "run a check (or all) and write JSON reports");
    std::string check;
    std::vector<std::string> lambdas;
    std::vector<std::uint32_t> primes, enum_primes;
    std::uint64_t seed = CheckConfig{}.seed;
    std::size_t samples = 0;
    unsigned jobs = 1;
    std::string json_path;
    bool no_cache = false;
    run->add_option("--check", check, "check name or 'all'")->required();
    run->add_option("--lambda", lambdas, "lambda values (integers or n/d); repeatable");
    run->add_option("--prime", primes, "primes for the modular checks; repeatable");
    run->add_option("--enum-prime", enum_primes, "small primes for exhaustive point counts; repeatable");
    run->add_option("--seed", seed, "rng seed");
    run->add_option("--samples", samples, "override the per-check sample count");
    run->add_option("--jobs", jobs, "independent checks run in parallel")->check(CLI::PositiveNumber);
    run->add_option("--json", json_path, "write the report(s) here instead of stdout");
    run->add_flag("--no-cache", no_cache, "do not read or write the Groebner basis cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kConfigError;
    }

    if (*list) return list_checks();

    CheckConfig cfg;
    std::vector<std::string> names;
    try {
        if (!lambdas.empty()) {
            cfg.lambdas.clear();
            for (auto& s : lambdas) cfg.lambdas.push_back(parse_lambda(s));
        }
        if (!primes.empty()) cfg.primes = primes;
        if (!enum_primes.empty()) cfg.enum_primes = enum_primes;
        cfg.seed = seed;
        cfg.samples = samples;
        if (check == "all") {
            for (auto& e : check_registry()) names.push_back(e.name);
        } else {
            names.push_back(find_check(check).name);
        }
        names = dependency_order(names);
        for (auto& n : names) validate_config(find_check(n), cfg);
    } catch (const Error& e) {
        std::cerr << "g2kit: configuration error: " << e.what() << "\n";
        return kConfigError;
    }

    GbCache::global().configure(!no_cache);

    std::vector<CheckReport> reports;
    try {
        reports = run_checks(names, cfg, jobs, [](const CheckReport& r, double secs) {
            std::fprintf(stderr, "%s %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", r.check.c_str(), secs);
        });
    } catch (const Error& e) {
        std::cerr << "g2kit: configuration error: " << e.what() << "\n";
        return kConfigError;
    }

    json out;
    if (check == "all") {
        out = json::array();
        for (auto& r : reports) out.push_back(r.to_json());
    } else {
        out = reports.front().to_json();
    }
    std::string text = out.dump(2) + "\n";
    if (json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) {
            std::cerr << "g2kit: cannot write " << json_path << "\n";
            return kConfigError;
        }
        f << text;
    }

    bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
    std::size_t passed = std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
    std::fprintf(stderr, "%zu/%zu checks passed\n", passed, reports.size());
    return ok ? kPass : kFail;
}
