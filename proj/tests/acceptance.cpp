// Acceptance run: one line per criterion. Every comparison is exact (integers, ranks,
// exact-string degrees), so the only pinned tolerances are the wall-clock budgets below.

#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "g2kit/registry.hpp"

using namespace g2kit;

namespace {

constexpr double kExactTolerance = 0.0;  // no numeric slack anywhere

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::vector<std::string> checks;
    // extra assertions on the reports, each a (label, ok) pair
    std::function<std::vector<std::pair<std::string, bool>>(std::map<std::string, CheckReport>&)> extra;
};

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

const json& cases(const CheckReport& r) { return r.metrics.at("cases"); }

bool all_per_prime(const json& m, const std::function<bool(const json&)>& f, std::size_t want) {
    auto& pp = m.at("per_prime");
    if (pp.size() != want) return false;
    for (auto& e : pp)
        if (!f(e)) return false;
    return true;
}

std::vector<Criterion> criteria() {
    using V = std::vector<std::pair<std::string, bool>>;
    using M = std::map<std::string, CheckReport>;
    std::vector<Criterion> c;

    c.push_back({1, "ideal equality for six lambdas, both families, Q and F_101", 30,
                 {"embedding.ideal-equality"}, [](M& r) {
                     auto& cs = cases(r["embedding.ideal-equality"]);
                     return V{{"24 cases", cs.size() == 24}};
                 }});
    c.push_back({2, "rank-12 quadric spaces, 50 random members each", 10, {"quadric.rank12.g27", "quadric.rank12.g36"},
                 [](M& r) {
                     bool ok = true;
                     for (auto n : {"quadric.rank12.g27", "quadric.rank12.g36"})
                         for (auto& cs : cases(r[n])) {
                             auto& m = cs.at("metrics");
                             ok = ok && m.at("space_dim") == 7 && m.at("random_member_ranks") == json{{"12", 50}};
                         }
                     return V{{"dim 7 and 50 members of rank 12", ok}};
                 }});
    c.push_back({3, "Grassmannian calibration (10,42) and (9,42) over 3 primes", 120, {"groebner.calibration"},
                 [](M& r) {
                     auto& m = cases(r["groebner.calibration"])[0].at("metrics");
                     bool ok = all_per_prime(m, [](const json& e) {
                         int want = e.at("grassmannian") == "G(2,7)" ? 10 : 9;
                         return e.at("pdim") == want && e.at("degree") == "42";
                     }, 6);
                     return V{{"profiles", ok}};
                 }});
    c.push_back({4, "residual profiles (4,18),(3,24) in G(3,6) and (5,18),(5,24) in G(2,7) over 3 primes", 600,
                 {"quadric.residual.g27", "quadric.residual.g36"}, [](M& r) {
                     auto g27 = all_per_prime(cases(r["quadric.residual.g27"])[0].at("metrics"), [](const json& e) {
                         return e.at("profile") == json::parse(R"([5,"18"])") &&
                                e.at("opposite_profile") == json::parse(R"([5,"24"])");
                     }, 3);
                     auto g36 = all_per_prime(cases(r["quadric.residual.g36"])[0].at("metrics"), [](const json& e) {
                         return e.at("profile") == json::parse(R"([4,"18"])") &&
                                e.at("opposite_profile") == json::parse(R"([3,"24"])");
                     }, 3);
                     return V{{"G(2,7) profiles", g27}, {"G(3,6) profiles", g36}};
                 }});
    c.push_back({5, "singular-locus fingerprints (p^2+p+1)^2 and (p+1)^3 for p in {5,7}", 60,
                 {"quadric.singular-locus.g27", "quadric.singular-locus.g36"}, [](M& r) {
                     auto g27 = all_per_prime(cases(r["quadric.singular-locus.g27"])[0].at("metrics"), [](const json& e) {
                         std::uint64_t p = e.at("p");
                         return e.at("kernel_pdim") == 8 && e.at("points") == ipow(p * p + p + 1, 2);
                     }, 2);
                     auto g36 = all_per_prime(cases(r["quadric.singular-locus.g36"])[0].at("metrics"), [](const json& e) {
                         std::uint64_t p = e.at("p");
                         return e.at("kernel_pdim") == 7 && e.at("points") == ipow(p + 1, 3);
                     }, 2);
                     return V{{"G(2,7) counts", g27}, {"G(3,6) counts", g36}};
                 }});
    c.push_back({6, "projection pencils and their degeneracy profiles over 3 primes", 120,
                 {"quadric.projection.g27", "quadric.projection.g36", "quadric.pencil-profile"}, [](M& r) {
                     bool dims = true;
                     for (auto n : {"quadric.projection.g27", "quadric.projection.g36"})
                         dims = dims && all_per_prime(cases(r[n])[0].at("metrics"),
                                                      [](const json& e) { return e.at("quadric_space_dim") == 2; }, 3);
                     bool prof = all_per_prime(cases(r["quadric.pencil-profile"])[0].at("metrics"), [](const json& e) {
                         bool g36 = e.at("grassmannian") == "G(3,6)";
                         auto& roots = e.at("roots");
                         if (roots.size() != (g36 ? 3u : 2u)) return false;
                         for (auto& t : roots)
                             if (t.at("rank") != (g36 ? 8 : 6)) return false;
                         return true;
                     }, 6);
                     return V{{"pencil dimension 2", dims}, {"3 x rank 8 and 2 x rank 6", prof}};
                 }});
    c.push_back({7, "Veronese scroll locus, p in {7,11}, both sides, lambda in {1,2}", 60,
                 {"embedding.scroll-locus", "embedding.veronese-quadrics"}, [](M& r) {
                     auto& cs = cases(r["embedding.scroll-locus"]);
                     bool counts = cs.size() == 8;
                     std::set<std::uint32_t> seen;
                     for (auto& e : cs) {
                         std::uint64_t p = e.at("parameters").at("p");
                         seen.insert(static_cast<std::uint32_t>(p));
                         auto& m = e.at("metrics");
                         counts = counts && m.at("rank_drop_points") == p * p + p + 1 &&
                                  m.at("solution_dims") == json{{"2", p * p + p + 1}};
                     }
                     bool quad = true;
                     for (auto& e : cases(r["embedding.veronese-quadrics"]))
                         quad = quad && e.at("metrics").at("quadric_space_dim") == 6;
                     return V{{"p^2+p+1 drop points with line solutions", counts && seen == std::set<std::uint32_t>{7, 11}},
                              {"6 quadrics", quad}};
                 }});
    c.push_back({8, "Pi_6 misses G(3,U*): certificates over 3 primes and an empty P^6(F_7) scan", 60,
                 {"embedding.pi6-avoids-grassmannian"}, [](M& r) {
                     auto& m = cases(r["embedding.pi6-avoids-grassmannian"])[0].at("metrics");
                     bool cert = m.at("certificates").size() == 3;
                     for (auto& e : m.at("certificates")) cert = cert && e.at("empty") == true;
                     return V{{"3 certificates", cert},
                              {"scan over P^6(F_7)", m.at("scan_zero_count") == 0 && m.at("scan_points") == 137257}};
                 }});
    c.push_back({9, "tangent cone and section presentations with the displayed matrices; controls fail", 5,
                 {"g2.tangent-cone", "g2.sections"}, [](M&) { return V{}; }});
    c.push_back({10, "delta_2 on the Cartan is a scalar times the 12 roots; short and long zeros disjoint", 5,
                 {"g2.cartan-roots", "g2.cartan-pencil"}, [](M& r) {
                     auto& m = cases(r["g2.cartan-roots"])[0].at("metrics");
                     return V{{"20 of 20 points", m.at("points") == 20 && m.at("agreeing") == 20}};
                 }});
    c.push_back({11, "Cremona agreement for lambda in {1,2}, p in {101,103}; ScrollCase exactly on the Veronese", 120,
                 {"cremona.agreement", "cremona.scroll-case"}, [](M& r) {
                     auto& cs = cases(r["cremona.agreement"]);
                     bool ok = cs.size() == 4;
                     for (auto& e : cs) {
                         auto& m = e.at("metrics");
                         ok = ok && m.at("held_out_proportional").get<int>() >= 12 &&
                              m.at("inverse_returns_u") == true && e.at("parameters").at("fit_on") == 8;
                     }
                     return V{{"fit on 8, >= 12 held out, inverse on all", ok}};
                 }});
    c.push_back({12, "property suites and byte-identical reruns under the default seed", 60, {"properties.algebra"},
                 [](M&) {
                     CheckConfig cfg;
                     std::vector<std::string> names = {"properties.algebra", "g2.cartan-roots", "quadric.rank12.g27",
                                                       "cremona.agreement"};
                     bool same = true, roundtrip = true;
                     std::vector<std::string> first;
                     for (auto& n : names) {
                         auto a = run_check(find_check(n), cfg).to_json().dump();
                         auto b = run_check(find_check(n), cfg).to_json().dump();
                         same = same && a == b;
                         roundtrip = roundtrip && json::parse(a).dump() == a;
                         first.push_back(a);
                     }
                     // the schedule must not change any byte
                     auto par = run_checks(dependency_order(names), cfg, 3);
                     auto order = dependency_order(names);
                     bool parallel = true;
                     for (std::size_t i = 0; i < order.size(); ++i) {
                         auto k = std::find(names.begin(), names.end(), order[i]) - names.begin();
                         parallel = parallel && par[i].to_json().dump() == first[k];
                     }
                     return V{{"reruns identical", same}, {"reload identical", roundtrip}, {"parallel identical", parallel}};
                 }});
    return c;
}

}  // namespace

int main() {
    CheckConfig cfg;
    std::set<std::string> wanted;
    auto cs = criteria();
    for (auto& c : cs) wanted.insert(c.checks.begin(), c.checks.end());
    std::map<std::string, double> secs;
    std::map<std::string, CheckReport> reports;
    auto order = dependency_order({wanted.begin(), wanted.end()});
    auto done = run_checks(order, cfg, 1, [&](const CheckReport& r, double s) {
        secs[r.check] = s;
        std::fprintf(stderr, "  ran %s: %s (%.1f s)\n", r.check.c_str(), r.pass ? "pass" : "FAIL", s);
    });
    for (auto& r : done) reports[r.check] = r;

    int passed = 0;
    for (auto& c : cs) {
        std::vector<std::string> why;
        double t = 0;
        for (auto& n : c.checks) {
            t += secs[n];
            if (!reports[n].pass) {
                std::string f;
                for (auto& x : reports[n].failed) f += (f.empty() ? "" : ", ") + x;
                why.push_back(n + " [" + f + "]");
            }
        }
        auto t0 = std::chrono::steady_clock::now();
        for (auto& [label, ok] : c.extra(reports))
            if (!ok) why.push_back(label);
        t += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (t > c.budget_s + kExactTolerance) why.push_back("over budget");
        bool ok = why.empty();
        passed += ok;
        std::printf("criterion %2d %s  %s  (%.1f s of %.0f s)", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), t,
                    c.budget_s);
        if (!ok) {
            std::printf("  failed:");
            for (auto& w : why) std::printf(" %s;", w.c_str());
        }
        std::printf("\n");
    }
    std::printf("criteria evaluated: %zu\ncriteria passed: %d/%zu\n", cs.size(), passed, cs.size());
    return 0;
}
