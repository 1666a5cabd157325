#pragma once

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cremona.hpp"
#include "embedding.hpp"
#include "g2_checks.hpp"
#include "properties.hpp"
#include "quadric_geometry.hpp"
#include "report.hpp"
#include "scroll.hpp"

namespace g2kit {

struct CheckEntry {
    std::string name;
    std::string claim;
    std::vector<std::string> deps;
    bool uses_lambda = false;
    std::function<CheckReport(const CheckConfig&, Rng&)> run;
};

namespace registry_detail {

inline json case_json(const CheckReport& r) {
    json j;
    j["check"] = r.check;
    j["parameters"] = r.parameters;
    j["pass"] = r.pass;
    j["metrics"] = r.metrics;
    if (!r.failed.empty()) j["failed"] = r.failed;
    if (!r.witness.is_null()) j["witness"] = r.witness;
    return j;
}

// one report per registry entry; the library checks it runs become its cases
struct Collector {
    CheckReport rep;
    std::size_t passed = 0, total = 0;

    Collector(const std::string& name, const std::string& claim) {
        rep.check = name;
        rep.claim = claim;
        rep.metrics["cases"] = json::array();
    }
    void add(const CheckReport& r, const std::string& label = "") {
        auto j = case_json(r);
        if (!label.empty()) j["label"] = label;
        rep.metrics["cases"].push_back(j);
        ++total;
        passed += r.pass;
        if (!r.pass) rep.failed.push_back(label.empty() ? r.check : label);
    }
    // a negative control has to fail
    void control(const CheckReport& r, const std::string& label) {
        auto j = case_json(r);
        j["label"] = label;
        j["control"] = true;
        rep.metrics["controls"].push_back(j);
        rep.require("control " + label + " fails", !r.pass);
    }
    CheckReport done() {
        rep.metrics["cases_passed"] = passed;
        rep.metrics["cases_total"] = total;
        rep.finish();
        return rep;
    }
};

inline std::vector<Rational> first_lambdas(const CheckConfig& c, std::size_t n) {
    return {c.lambdas.begin(), c.lambdas.begin() + std::min(n, c.lambdas.size())};
}

inline std::vector<std::uint32_t> first_primes(const CheckConfig& c, std::size_t n) {
    return {c.primes.begin(), c.primes.begin() + std::min(n, c.primes.size())};
}

// enumeration primes in [lo, hi]
inline std::vector<std::uint32_t> enum_primes(const CheckConfig& c, std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (auto p : c.enum_primes)
        if (p >= lo && p <= hi) out.push_back(p);
    return out;
}

inline json lambdas_json(const std::vector<Rational>& ls) { return exact(ls); }

}  // namespace registry_detail

inline const std::vector<CheckEntry>& check_registry() {
    using namespace registry_detail;
    using embedding::Family;
    using quadrics::Which;
    static const std::vector<CheckEntry> reg = [] {
        std::vector<CheckEntry> r;

        r.push_back({"cremona.agreement",
                     "the conic construction u -> V(u) is the Cremona map of the quadrics through the Veronese surface, "
                     "up to one projective-linear identification, and the construction is involutive",
                     {"embedding.veronese-quadrics"}, true, [](const CheckConfig& c, Rng& rng) {
                         Collector col("cremona.agreement", "");
                         auto ls = first_lambdas(c, 2);
                         auto ps = first_primes(c, 2);
                         for (auto& l : ls)
                             for (auto p : ps) col.add(cremona::cremona_agreement(l, p, c.samples_or(20), rng));
                         col.control(cremona::cremona_agreement(ls[0], ps[0], c.samples_or(20), rng, true),
                                     "random quadrics");
                         col.rep.parameters = {{"lambdas", lambdas_json(ls)}, {"primes", ps}};
                         return col.done();
                     }});
        r.push_back({"cremona.scroll-case",
                     "the Schubert section through u is a plane off the Veronese surface and jumps exactly on it",
                     {"embedding.scroll-locus"}, true, [](const CheckConfig& c, Rng& rng) {
                         Collector col("cremona.scroll-case", "");
                         auto ls = first_lambdas(c, 2);
                         auto ps = enum_primes(c, 7, 11);
                         for (auto& l : ls)
                             for (auto p : ps) col.add(cremona::scroll_case_locus(l, p, rng, 20, c.primes.front()));
                         col.rep.parameters = {{"lambdas", lambdas_json(ls)}, {"enum_primes", ps}};
                         return col.done();
                     }});
        r.push_back({"embedding.example-spaces",
                     "the seven equations of H^lambda_12 cut out the span of the first family",
                     {}, true, [](const CheckConfig& c, Rng&) {
                         Collector col("embedding.example-spaces", "");
                         Rationals Q;
                         for (auto& l : c.lambdas) col.add(embedding::example_spaces(Q, l), "Q lambda=" + l.str());
                         col.rep.parameters = {{"lambdas", lambdas_json(c.lambdas)}, {"field", "Q"}};
                         return col.done();
                     }});
        r.push_back({"embedding.ideal-equality",
                     "for each lambda != 0, -1 the pulled-back Pluecker quadrics generate the ideal of the "
                     "hyperplane section, for both families, over Q and F_p",
                     {}, true, [](const CheckConfig& c, Rng&) {
                         Collector col("embedding.ideal-equality", "");
                         Rationals Q;
                         PrimeField F(c.primes.front());
                         for (auto fam : {Family::one, Family::two})
                             for (auto& l : c.lambdas) {
                                 auto tag = "family " + std::to_string(embedding::family_number(fam)) + " lambda=" + l.str();
                                 col.add(embedding::verify_ideal_equality(Q, fam, l), tag + " Q");
                                 col.add(embedding::verify_ideal_equality(F, fam, l), tag + " " + F.name());
                             }
                         // at lambda = 1 the literal entry coincides with the corrected one
                         auto lit = std::find_if(c.lambdas.begin(), c.lambdas.end(), [](auto& l) { return !(l == Rational(1)); });
                         if (lit != c.lambdas.end())
                             col.control(embedding::verify_ideal_equality(Q, Family::two, *lit, {true}),
                                         "literal family-2 entry lambda=" + lit->str());
                         col.rep.parameters = {{"lambdas", lambdas_json(c.lambdas)}, {"fields", {"Q", F.name()}}};
                         return col.done();
                     }});
        r.push_back({"embedding.injectivity",
                     "the linear data separate points of the hyperplane section for both families",
                     {"embedding.ideal-equality"}, true, [](const CheckConfig& c, Rng& rng) {
                         Collector col("embedding.injectivity", "");
                         PrimeField F(c.primes.front());
                         auto ls = first_lambdas(c, 2);
                         for (auto fam : {Family::one, Family::two})
                             for (auto& l : ls)
                                 col.add(embedding::embedding_injectivity_probe(F, fam, l, c.samples_or(30), rng));
                         col.rep.parameters = {{"lambdas", lambdas_json(ls)}, {"field", F.name()}};
                         return col.done();
                     }});
        r.push_back({"embedding.pi6-avoids-grassmannian",
                     "Pi^lambda_6 does not meet G(3, U^*): unit ideal over each prime and an empty exhaustive scan",
                     {}, true, [](const CheckConfig& c, Rng& rng) {
                         Collector col("embedding.pi6-avoids-grassmannian", "");
                         auto ls = first_lambdas(c, 1);
                         scroll::Pi6Options o;
                         o.primes = c.primes;
                         o.gb = {c.max_pairs, c.max_degree};
                         auto scan = enum_primes(c, 7, 7);
                         o.scan_prime = scan.empty() ? c.enum_primes.front() : scan.front();
                         for (auto& l : ls) col.add(scroll::pi6_avoids_dual_grassmannian(l, rng, o));
                         o.negative_control = true;
                         col.control(scroll::pi6_avoids_dual_grassmannian(ls[0], rng, o), "covector on G(3,U*)");
                         col.rep.parameters = {{"lambdas", lambdas_json(ls)}, {"primes", c.primes}};
                         return col.done();
                     }});
        r.push_back({"embedding.scroll-locus",
                     "the rank-drop locus of v against Pi^lambda_6 is a Veronese surface with p^2+p+1 points, "
                     "on both sides, each point with a line of solutions",
                     {}, true, [](const CheckConfig& c, Rng&) {
                         Collector col("embedding.scroll-locus", "");
                         auto ls = first_lambdas(c, 2);
                         auto ps = enum_primes(c, 7, 11);
                         for (auto& l : ls)
                             for (auto p : ps)
                                 for (auto s : {scroll::Side::U, scroll::Side::Ustar})
                                     col.add(scroll::scroll_rank_locus(p, l, s));
                         col.rep.parameters = {{"lambdas", lambdas_json(ls)}, {"enum_primes", ps}};
                         return col.done();
                     }});
        r.push_back({"embedding.veronese-quadrics",
                     "the quadrics through the rank-drop locus form a 6-dimensional system on both sides",
                     {"embedding.scroll-locus"}, true, [](const CheckConfig& c, Rng& rng) {
                         Collector col("embedding.veronese-quadrics", "");
                         auto ls = first_lambdas(c, 2);
                         std::vector<std::uint32_t> ps = enum_primes(c, 7, 11);
                         ps.push_back(c.primes.front());
                         for (auto& l : ls)
                             for (auto p : ps)
                                 for (auto s : {scroll::Side::U, scroll::Side::Ustar})
                                     col.add(scroll::veronese_quadrics(p, l, s, rng));
                         col.rep.parameters = {{"lambdas", lambdas_json(ls)}, {"primes", ps}};
                         return col.done();
                     }});
        r.push_back({"g2.cartan-pencil",
                     "the Cartan line meets the short-root and long-root zero sets in disjoint points",
                     {}, false, [](const CheckConfig& c, Rng&) {
                         Collector col("g2.cartan-pencil", "");
                         Rationals Q;
                         col.add(g2kit::cartan_pencil_avoids_baselocus(Q), "Q");
                         col.add(g2kit::cartan_pencil_avoids_baselocus(PrimeField(c.primes.front())), "F_p");
                         col.control(g2kit::cartan_pencil_avoids_baselocus(Q, true), "perturbed line");
                         return col.done();
                     }});
        r.push_back({"g2.cartan-roots",
                     "delta_2 on the Cartan subalgebra is a fixed scalar times the product of the 12 roots",
                     {}, false, [](const CheckConfig& c, Rng& rng) {
                         Collector col("g2.cartan-roots", "");
                         Rationals Q;
                         col.add(g2kit::cartan_root_factorization(Q, rng, c.samples_or(20)), "Q");
                         return col.done();
                     }});
        r.push_back({"g2.killing-quadric",
                     "the invariant quadric is proportional to tr(ad(x)^2) and vanishes on the orbit",
                     {}, false, [](const CheckConfig& c, Rng& rng) {
                         Collector col("g2.killing-quadric", "");
                         Rationals Q;
                         col.add(g2kit::killing_quadric_check(Q, rng, c.samples_or(20)), "Q");
                         col.add(g2kit::killing_quadric_check(PrimeField(c.primes.front()), rng, c.samples_or(20)), "F_p");
                         return col.done();
                     }});
        r.push_back({"g2.model-agreement",
                     "the Pfaffian model in P^13 and the isotropic model in G(2,7) define the same variety",
                     {}, false, [](const CheckConfig&, Rng& rng) {
                         Collector col("g2.model-agreement", "");
                         Rationals Q;
                         col.add(g2kit::model_agreement(Q, rng), "Q");
                         return col.done();
                     }});
        r.push_back({"g2.sections",
                     "the sections of G2 in G(2,U) for U = {x6 = 0} and U = {x0 = 0} have the displayed "
                     "determinantal presentations",
                     {"g2.model-agreement"}, false, [](const CheckConfig&, Rng&) {
                         Collector col("g2.sections", "");
                         Rationals Q;
                         col.add(g2kit::section_presentations(Q, SectionCase::nondegenerate), "x6=0");
                         col.add(g2kit::section_presentations(Q, SectionCase::degenerate), "x0=0");
                         col.control(g2kit::section_presentations(Q, SectionCase::nondegenerate, true), "x6=0 perturbed");
                         col.control(g2kit::section_presentations(Q, SectionCase::degenerate, true), "x0=0 perturbed");
                         return col.done();
                     }});
        r.push_back({"g2.tangent-cone",
                     "at the point x05 = 1 the tangent-space section is a cone over a twisted cubic given by the "
                     "displayed 2x3 minors",
                     {"g2.model-agreement"}, false, [](const CheckConfig&, Rng&) {
                         Collector col("g2.tangent-cone", "");
                         Rationals Q;
                         col.add(g2kit::tangent_cone_at_point(Q), "literal");
                         return col.done();
                     }});
        r.push_back({"groebner.calibration",
                     "Hilbert profiles give G(2,7) and G(3,6) dimensions 10 and 9 and degree 42",
                     {}, false, [](const CheckConfig& c, Rng&) {
                         Collector col("groebner.calibration", "");
                         col.add(quadrics::grassmannian_calibration(c.primes, {c.max_pairs, c.max_degree}));
                         return col.done();
                     }});
        r.push_back({"properties.algebra",
                     "field axioms, exterior-algebra identities, Pf^2 = det and slice invariance hold on random inputs",
                     {}, false, [](const CheckConfig& c, Rng& rng) {
                         Collector col("properties.algebra", "");
                         col.add(properties::property_suite(rng, c.primes.front()));
                         return col.done();
                     }});
        r.push_back({"quadric.pencil-profile",
                     "the G(3,6) projection pencil has three rank-8 members, the G(2,7) pencil two rank-6 members",
                     {"quadric.projection.g27", "quadric.projection.g36"}, true, [](const CheckConfig& c, Rng& rng) {
                         Collector col("quadric.pencil-profile", "");
                         col.add(quadrics::pencil_degeneracy_profile(c.lambdas.front(), c.primes, c.samples_or(300), rng));
                         return col.done();
                     }});
        for (auto w : {Which::g27, Which::g36}) {
            auto tag = quadrics::which_tag(w);
            auto gname = quadrics::which_name(w);
            r.push_back({"quadric.projection." + tag,
                         "projecting " + gname + " from the span of its Segre variety lands in a pencil of quadrics",
                         {"quadric.singular-locus." + tag}, w == Which::g36, [w, tag](const CheckConfig& c, Rng& rng) {
                             Collector col("quadric.projection." + tag, "");
                             col.add(quadrics::projection_pencil(w, c.lambdas.front(), c.primes, c.samples_or(300), rng));
                             return col.done();
                         }});
            r.push_back({"quadric.rank12." + tag,
                         "the 7-dimensional space of quadrics through " + gname + " in its ambient has only "
                         "rank-12 members",
                         {w == Which::g27 ? "g2.model-agreement" : "embedding.ideal-equality"}, w == Which::g36,
                         [w](const CheckConfig& c, Rng& rng) {
                             Collector col("quadric.rank12." + quadrics::which_tag(w), "");
                             Rationals Q;
                             PrimeField F(c.primes.front());
                             auto ls = w == Which::g36 ? c.lambdas : first_lambdas(c, 1);
                             for (auto& l : ls) {
                                 col.add(quadrics::rank12_space(F, w, l, rng, 50), F.name() + " lambda=" + l.str());
                                 col.add(quadrics::rank12_space(Q, w, l, rng, 50, 40), "Q lambda=" + l.str());
                             }
                             return col.done();
                         }});
            r.push_back({"quadric.residual." + tag,
                         w == Which::g27 ? "a maximal isotropic space through the Segre cuts G(2,7) in the Segre and "
                                           "fourfolds of degree 18 and 24"
                                         : "a maximal isotropic space through the Segre cuts G(3,6) in a fourfold of "
                                           "degree 18 and, for the other family, a threefold of degree 24",
                         {"quadric.singular-locus." + tag, "groebner.calibration"}, w == Which::g36,
                         [w](const CheckConfig& c, Rng& rng) {
                             Collector col("quadric.residual." + quadrics::which_tag(w), "");
                             col.add(quadrics::residual_section_profile(w, c.lambdas.front(), c.primes, rng,
                                                                        {c.max_pairs, c.max_degree}));
                             return col.done();
                         }});
            r.push_back({"quadric.singular-locus." + tag,
                         w == Which::g27 ? "the singular locus of a rank-12 member meets G(2,7) in P2 x P2"
                                         : "the singular locus of a rank-12 member meets G(3,6) in P1 x P1 x P1",
                         {"quadric.rank12." + tag}, w == Which::g36, [w](const CheckConfig& c, Rng& rng) {
                             Collector col("quadric.singular-locus." + quadrics::which_tag(w), "");
                             col.add(quadrics::singular_locus_intersection(w, c.lambdas.front(), enum_primes(c, 5, 7),
                                                                           rng, c.primes.front()));
                             return col.done();
                         }});
        }
        std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.name < b.name; });
        for (auto& e : r)
            if (e.claim.empty()) throw InvalidParameter("registry entry without claim: " + e.name);
        return r;
    }();
    return reg;
}

inline const CheckEntry& find_check(const std::string& name) {
    for (auto& e : check_registry())
        if (e.name == name) return e;
    throw UnknownCheck(name);
}

// names in dependency order, alphabetical among the ready ones
inline std::vector<std::string> dependency_order(const std::vector<std::string>& names) {
    std::set<std::string> want(names.begin(), names.end()), done;
    std::vector<std::string> out;
    while (out.size() < want.size()) {
        bool moved = false;
        for (auto& n : want) {
            if (done.count(n)) continue;
            bool ready = true;
            for (auto& d : find_check(n).deps) ready = ready && (!want.count(d) || done.count(d));
            if (!ready) continue;
            out.push_back(n);
            done.insert(n);
            moved = true;
            break;
        }
        if (!moved) throw InvalidParameter("dependency cycle in the check registry");
    }
    return out;
}

// reject configurations before any work starts
inline void validate_config(const CheckEntry& e, const CheckConfig& c) {
    if (c.primes.empty()) throw InvalidParameter("at least one prime is needed");
    if (c.lambdas.empty()) throw InvalidParameter("at least one lambda is needed");
    for (auto p : c.primes) {
        PrimeField check(p);
        if (p < 5) throw InvalidParameter("primes must be at least 5 (got " + std::to_string(p) + ")");
    }
    for (auto p : c.enum_primes) {
        PrimeField check(p);
        if (p < 5) throw InvalidParameter("enumeration primes must be at least 5 (got " + std::to_string(p) + ")");
    }
    if (!e.uses_lambda) return;
    for (auto& l : c.lambdas) {
        if (l == Rational(0) || l == Rational(-1))
            throw InvalidParameter(e.name + " holds for each λ≠0,−1; got λ = " + l.str());
        for (auto p : c.primes) embedding::lambda_value(PrimeField(p), embedding::Family::one, l);
    }
}

inline CheckReport run_check(const CheckEntry& e, const CheckConfig& c) {
    validate_config(e, c);
    auto rng = derive_rng(c.seed, e.name);
    auto rep = e.run(c, rng);
    rep.claim = e.claim;
    json cfg = c.to_json();
    cfg["check"] = e.name;
    if (rep.parameters.empty()) rep.parameters = json::object();
    rep.parameters["seed"] = std::to_string(c.seed);
    rep.config_hash = config_hash(cfg);
    return rep;
}

// runs names (already in dependency order) on up to jobs threads; a check starts once its deps finished
inline std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const CheckConfig& c, unsigned jobs,
                                           const std::function<void(const CheckReport&, double)>& on_done = {}) {
    std::vector<CheckReport> out(names.size());
    std::vector<int> state(names.size(), 0);  // 0 waiting, 1 running, 2 done
    std::vector<std::string> errors(names.size());
    std::mutex mu;
    std::condition_variable cv;
    auto pick = [&]() -> long {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (state[i]) continue;
            bool ready = true;
            for (auto& d : find_check(names[i]).deps)
                for (std::size_t j = 0; j < names.size(); ++j)
                    if (names[j] == d && state[j] != 2) ready = false;
            if (ready) return static_cast<long>(i);
        }
        return -1;
    };
    auto worker = [&]() {
        std::unique_lock<std::mutex> lock(mu);
        for (;;) {
            long i;
            cv.wait(lock, [&] {
                i = pick();
                return i >= 0 || std::all_of(state.begin(), state.end(), [](int s) { return s != 0; });
            });
            if (i < 0) return;
            state[i] = 1;
            lock.unlock();
            auto t0 = std::chrono::steady_clock::now();
            CheckReport rep;
            std::string err;
            try {
                rep = run_check(find_check(names[i]), c);
            } catch (const InvalidParameter& ex) {
                err = ex.what();
            } catch (const NotPrime& ex) {
                err = ex.what();
            } catch (const std::exception& ex) {
                // a check that breaks down is a failure, not a configuration problem
                auto& e = find_check(names[i]);
                rep.check = e.name;
                rep.claim = e.claim;
                rep.pass = false;
                rep.witness = {{"error", ex.what()}};
                rep.failed.push_back("error");
            }
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            lock.lock();
            if (err.empty()) {
                out[i] = rep;
                if (on_done) on_done(rep, secs);
            } else {
                errors[i] = err;
            }
            state[i] = 2;
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!errors[i].empty()) throw InvalidParameter(names[i] + ": " + errors[i]);
    return out;
}

}  // namespace g2kit
