#pragma once

#include <optional>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "modp.hpp"
#include "projective.hpp"
#include "report.hpp"
#include "scroll.hpp"

namespace g2kit {

// Conics on F^lambda as Schubert sections F(u,3,U) n <F>, and the Cremona map u -> V they define.
namespace cremona {

struct ConicWitness {
    Rational lambda;
    std::vector<Fp> u;
    Matrix<PrimeField> plane;           // 3 x 20, rows span F(u,3,U) n H
    std::vector<Matrix<PrimeField>> points;  // sampled conic points as 3 x 6 frames
    std::vector<Fp> V;                  // covector of Lambda_1 + Lambda_2 + Lambda_3
    std::size_t conic_points = 0;       // all F_p-points of the conic
    std::size_t conic_rank = 0;         // rank of the restricted quadric, 3 when smooth
    bool smooth() const { return conic_rank == 3; }

    json to_json() const {
        json j;
        j["lambda"] = lambda.str();
        j["u"] = exact(u);
        j["conic_points"] = conic_points;
        j["conic_rank"] = conic_rank;
        j["V"] = exact(V);
        return j;
    }
};

inline Matrix<PrimeField> section_plane(const PrimeField& K, const std::vector<Fp>& u, const Fp& l) {
    auto S = schubert_contains(K, u, 3);  // 10 x 20
    auto H = embedding::h12_equations(K, l);
    auto C = kernel(H * S.transpose());   // coefficient vectors c with H (c S)^T = 0
    return C * S;
}

inline std::size_t section_dimension(const PrimeField& K, const std::vector<Fp>& u, const Fp& l) {
    return section_plane(K, u, l).rows();
}

// the Pluecker quadrics restricted to a 3-dim span, as raw upper triangles
inline std::vector<std::array<std::uint32_t, 6>> restricted_conics(const Matrix<PrimeField>& B) {
    const PrimeField& K = B.field();
    std::vector<std::array<std::uint32_t, 6>> out;
    for (auto& q : plucker_ideal(K, 3, 6, embedding::plucker_ring())) {
        auto S = QuadraticForm<PrimeField>::from_poly(q);
        auto R = B * S.matrix() * B.transpose();
        std::array<std::uint32_t, 6> t{};
        std::size_t c = 0;
        bool nz = false;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j, ++c) {
                auto v = i == j ? R(i, i) : R(i, j) + R(j, i);
                t[c] = v.residue();
                nz |= !v.is_zero();
            }
        if (nz) out.push_back(t);
    }
    return out;
}

inline std::vector<Fp> covector_of(const Matrix<PrimeField>& V) {
    auto k = kernel(V);
    if (k.rows() != 1) throw RankDeficient("span is not a hyperplane (dim " + std::to_string(V.cols() - k.rows()) + ")");
    return normalize_projective(k.row(0));
}

// points of the conic in the plane; at most `keep` frames are returned but all points are counted
inline ConicWitness conic_through(const std::vector<Fp>& u, const Rational& lam, std::uint32_t p, std::size_t keep = 3) {
    if (p < 5) throw InvalidParameter("conic sampling needs p >= 5");
    PrimeField K(p);
    auto l = embedding::lambda_value(K, embedding::Family::one, lam);
    auto B = section_plane(K, u, l);
    if (B.rows() > 3) throw ScrollCase("F(u,3,U) meets <F> in a P^" + std::to_string(B.rows() - 1));
    if (B.rows() < 3) throw RankDeficient("section smaller than a plane");
    auto Q = restricted_conics(B);
    ConicWitness w{lam, u, B, {}, {}, 0, 0};
    {
        Matrix<PrimeField> rows(K, 0, 6);
        for (auto& t : Q) rows.append_row(modp::lift(std::vector<std::uint32_t>(t.begin(), t.end()), p));
        if (rank(rows) != 1)
            throw RankDeficient("the section carries " + std::to_string(rank(rows)) + " independent conics");
        auto& t = Q[0];
        auto h = K.from_int(2).inverse();
        auto f = [&](std::uint32_t x) { return Fp::raw(x, p); };
        Matrix<PrimeField> C(K, 3, 3);
        C(0, 0) = f(t[0]);
        C(1, 1) = f(t[3]);
        C(2, 2) = f(t[5]);
        C(0, 1) = C(1, 0) = h * f(t[1]);
        C(0, 2) = C(2, 0) = h * f(t[2]);
        C(1, 2) = C(2, 1) = h * f(t[4]);
        w.conic_rank = rank(C);
    }
    for_each_projective_point(3, p, [&](const std::vector<std::uint32_t>& y) {
        for (auto& t : Q) {
            std::uint64_t a = (std::uint64_t(t[0]) * y[0] % p * y[0] + std::uint64_t(t[1]) * y[0] % p * y[1] +
                               std::uint64_t(t[2]) * y[0] % p * y[2] + std::uint64_t(t[3]) * y[1] % p * y[1] +
                               std::uint64_t(t[4]) * y[1] % p * y[2] + std::uint64_t(t[5]) * y[2] % p * y[2]) %
                              p;
            if (a) return;
        }
        ++w.conic_points;
        if (w.points.size() >= keep) return;
        std::vector<Fp> x(20, K.zero());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t c = 0; c < 20; ++c) x[c] += Fp::raw(y[i], p) * B(i, c);
        w.points.push_back(subspace_of_blade(ExtVector<PrimeField>(K, 6, 3, x)));
    });
    if (w.points.size() < 3)
        throw TooFewRationalPoints(std::to_string(w.conic_points) + " points on the conic over F_" + std::to_string(p));
    Matrix<PrimeField> V(K, 0, 6);
    for (auto& f : w.points) V = V.stack(f);
    w.V = covector_of(row_space(V));
    return w;
}

inline bool contains_vector(const Matrix<PrimeField>& frame, const std::vector<Fp>& u) {
    Matrix<PrimeField> t = frame;
    t.append_row(u);
    return rank(t) == rank(frame);
}

inline std::vector<Fp> evaluate_system(const std::vector<MPoly<PrimeField>>& qs, const std::vector<Fp>& x) {
    std::vector<Fp> out;
    for (auto& q : qs) out.push_back(q.eval(x));
    return out;
}

// L with L a proportional to b for each pair: (L a)_i b_j - (L a)_j b_i = 0
inline Matrix<PrimeField> proportionality_system(const PrimeField& K, const std::vector<std::vector<Fp>>& a,
                                                 const std::vector<std::vector<Fp>>& b) {
    const std::size_t n = b[0].size(), m = a[0].size();
    Matrix<PrimeField> E(K, 0, n * m);
    for (std::size_t t = 0; t < a.size(); ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                std::vector<Fp> row(n * m, K.zero());
                for (std::size_t k = 0; k < m; ++k) {
                    row[i * m + k] += a[t][k] * b[t][j];
                    row[j * m + k] -= a[t][k] * b[t][i];
                }
                E.append_row(row);
            }
    return E;
}

struct Identification {
    bool found = false;
    std::size_t solution_dim = 0;
    Matrix<PrimeField> L;
};

inline Identification fit_identification(const PrimeField& K, const std::vector<std::vector<Fp>>& a,
                                         const std::vector<std::vector<Fp>>& b) {
    auto ker = kernel(proportionality_system(K, a, b));
    Identification id{false, ker.rows(), Matrix<PrimeField>(K, 0, 0)};
    if (ker.rows() != 1) return id;
    const std::size_t n = b[0].size(), m = a[0].size();
    Matrix<PrimeField> L(K, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) L(i, k) = ker(0, i * m + k);
    id.L = L;
    id.found = rank(L) == n;  // a projective-linear identification must be invertible
    return id;
}

inline std::vector<Fp> random_point(const PrimeField& K, std::size_t n, Rng& rng) {
    for (;;) {
        auto v = random_vector(K, n, rng);
        if (!is_zero_vector(v)) return normalize_projective(v);
    }
}

struct Trial {
    std::vector<Fp> u, v_geo, v_quad, back;
};

inline CheckReport cremona_agreement(const Rational& lam, std::uint32_t p, std::size_t trials, Rng& rng,
                                     bool random_quadrics = false, std::size_t fit_on = 8) {
    CheckReport rep;
    rep.check = "cremona.agreement";
    rep.claim = "u -> V(u) read off the conic F(u,3,U) n F is the Cremona map given by the quadrics through the "
                "Veronese surface, and the quadrics through the dual Veronese invert it";
    rep.parameters = {{"lambda", lam.str()}, {"p", p}, {"trials", trials}, {"fit_on", fit_on}};
    if (random_quadrics) rep.parameters["control"] = "random quadrics";
    if (trials < 12) throw InvalidParameter("cremona agreement needs at least 12 trials");
    if (trials <= fit_on) throw InvalidParameter("no held-out trials");
    PrimeField K(p);
    auto V1 = scroll::veronese_system(p, lam, scroll::Side::U, rng);
    auto V2 = scroll::veronese_system(p, lam, scroll::Side::Ustar, rng);
    rep.metrics["veronese_quadrics"] = {V1.quadrics.size(), V2.quadrics.size()};
    rep.require("six_quadrics_each_side", V1.quadrics.size() == 6 && V2.quadrics.size() == 6);
    auto forward = V1.quadrics;
    if (random_quadrics) {
        forward.clear();
        auto mons = monomials_of_degree(6, 2);
        for (int i = 0; i < 6; ++i) {
            MPoly<PrimeField> q(K, scroll::quadric_vars());
            for (auto& m : mons) q.add_term(m, random_element(K, rng));
            forward.push_back(q);
        }
    }
    std::vector<Trial> T;
    std::size_t scroll_skips = 0, singular_skips = 0, structure_ok = 0, resample_ok = 0;
    while (T.size() < trials) {
        auto u = random_point(K, 6, rng);
        std::optional<ConicWitness> w;
        try {
            w = conic_through(u, lam, p, 6);
        } catch (const ScrollCase&) {
            ++scroll_skips;
            continue;
        } catch (const TooFewRationalPoints&) {
            ++singular_skips;
            continue;
        }
        if (!w->smooth()) {
            ++singular_skips;
            continue;
        }
        bool ok = true;
        for (auto& f : w->points) ok &= contains_vector(f, u);
        Matrix<PrimeField> S(K, 0, 6);
        for (std::size_t i = 0; i < 3; ++i) S = S.stack(w->points[i]);
        ok &= rank(S) == 5;
        structure_ok += ok;
        // a different triple of conic points gives the same V
        Matrix<PrimeField> S2(K, 0, 6);
        for (std::size_t i = 3; i < 6 && i < w->points.size(); ++i) S2 = S2.stack(w->points[i]);
        if (w->points.size() >= 6) resample_ok += proportional(covector_of(row_space(S2)), w->V);
        T.push_back({u, w->V, evaluate_system(forward, u), {}});
    }
    rep.metrics["scroll_case_skips"] = scroll_skips;
    rep.metrics["singular_conic_skips"] = singular_skips;
    rep.require("conic_structure", structure_ok == trials);
    rep.require("resampling_invariant", resample_ok == trials);
    std::vector<std::vector<Fp>> a, b;
    for (std::size_t i = 0; i < fit_on; ++i) {
        a.push_back(T[i].v_quad);
        b.push_back(T[i].v_geo);
    }
    auto id = fit_identification(K, a, b);
    rep.metrics["fit_solution_dim"] = id.solution_dim;
    std::size_t held = 0, held_ok = 0;
    if (id.found)
        for (std::size_t i = fit_on; i < T.size(); ++i) {
            ++held;
            held_ok += proportional(id.L.apply(T[i].v_quad), T[i].v_geo);
        }
    rep.metrics["held_out"] = held;
    rep.metrics["held_out_proportional"] = held_ok;
    rep.require("consistent_identification", id.found);
    rep.require("held_out_agree", id.found && held_ok == held && held >= 12);
    // inverse: the dual Veronese quadrics at V(u), identified back to u
    std::vector<std::vector<Fp>> c, d;
    for (auto& t : T) t.back = evaluate_system(V2.quadrics, t.v_geo);
    for (std::size_t i = 0; i < fit_on; ++i) {
        c.push_back(T[i].back);
        d.push_back(T[i].u);
    }
    auto inv = fit_identification(K, c, d);
    std::size_t back_ok = 0;
    if (inv.found)
        for (auto& t : T) back_ok += proportional(inv.L.apply(t.back), t.u);
    rep.metrics["inverse_solution_dim"] = inv.solution_dim;
    rep.metrics["inverse_proportional"] = back_ok;
    rep.require("inverse_returns_u", inv.found && back_ok == T.size());
    if (!id.found) rep.witness = {{"error", NoConsistentIdentification("solution space of dimension " +
                                                                      std::to_string(id.solution_dim)).what()}};
    rep.finish();
    return rep;
}

// over a small prime: F(u,3,U) n <F> is bigger than a plane exactly on the rank-drop Veronese
inline CheckReport scroll_case_locus(const Rational& lam, std::uint32_t p, Rng& rng, std::size_t walk_points = 40,
                                     std::uint32_t walk_prime = 101) {
    CheckReport rep;
    rep.check = "cremona.scroll-case";
    rep.claim = "the Schubert section F(u,3,U) n <F> is a plane unless u lies on the Veronese surface, where it "
                "grows and the conic becomes a cubic scroll";
    rep.parameters = {{"lambda", lam.str()}, {"p", p}, {"walk_prime", walk_prime}, {"walk_points", walk_points}};
    PrimeField K(p);
    auto l = embedding::lambda_value(K, embedding::Family::one, lam);
    auto L = scroll::enumerate_locus(p, lam, scroll::Side::U);
    std::set<std::vector<std::uint32_t>> locus(L.points.begin(), L.points.end());
    std::size_t big = 0, mismatch = 0, planes = 0;
    std::map<std::size_t, std::size_t> dims;
    for_each_projective_point(6, p, [&](const std::vector<std::uint32_t>& v) {
        auto d = section_dimension(K, modp::lift(v, p), l);
        ++dims[d];
        bool on = locus.count(v) > 0;
        big += d > 3;
        planes += d == 3;
        mismatch += (d > 3) != on;
    });
    json h = json::object();
    for (auto& [d, c] : dims) h["P^" + std::to_string(d - 1)] = c;
    rep.metrics["section_dims"] = h;
    rep.metrics["veronese_points"] = locus.size();
    rep.metrics["scroll_case_points"] = big;
    rep.require("scroll_case_exactly_on_veronese", mismatch == 0 && big == locus.size());
    rep.require("planes_elsewhere", planes + big == projective_count(5, p));
    // at a large prime, walked Veronese points all raise ScrollCase
    auto S = scroll::sample_locus(walk_prime, lam, scroll::Side::U, rng, walk_points);
    std::size_t raised = 0, tried = 0;
    for (auto& v : S) {
        if (tried == walk_points) break;
        ++tried;
        try {
            conic_through(modp::lift(v, walk_prime), lam, walk_prime);
        } catch (const ScrollCase&) {
            ++raised;
        }
    }
    rep.metrics["walked_points"] = tried;
    rep.metrics["walked_scroll_cases"] = raised;
    rep.require("walked_points_raise_scroll_case", tried > 0 && raised == tried);
    rep.finish();
    return rep;
}

}  // namespace cremona

}  // namespace g2kit
