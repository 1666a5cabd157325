#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "groebner.hpp"
#include "modp.hpp"
#include "projective.hpp"
#include "report.hpp"

namespace g2kit {

// Pi^lambda_6 inside P(Lambda^3 U^*) and its two scroll structures over Veronese surfaces.
namespace scroll {

// side Ustar: v in U^* and l -> v ^ l in Lambda^4 U^*;
// side U: u in U and l -> iota_u l in Lambda^2 U^*
enum class Side { U, Ustar };

inline std::string side_name(Side s) { return s == Side::U ? "P(U)" : "P(U*)"; }

inline Side parse_side(const std::string& s) {
    if (s == "U" || s == "P(U)") return Side::U;
    if (s == "U*" || s == "Ustar" || s == "P(U*)") return Side::Ustar;
    throw InvalidParameter("side must be U or U*");
}

inline Fp lambda_mod(std::uint32_t p, const Rational& lam) {
    PrimeField K(p);
    return embedding::lambda_value(K, embedding::Family::one, lam);
}

// the bilinear map (v, c) -> B(v, sum_r c_r h_r) with h_r the covectors of Pi_6;
// t[(i * 7 + r) * 15 + o] is output coordinate o of B(e_i, h_r)
struct Bilinear {
    std::uint32_t p;
    Side side;
    std::vector<std::uint32_t> t;
    std::uint32_t at(std::size_t i, std::size_t r, std::size_t o) const { return t[(i * 7 + r) * 15 + o]; }

    // 15 x 7: the linear system in l = sum c_r h_r for fixed v
    modp::Dense system_for_v(const std::vector<std::uint32_t>& v) const {
        modp::Dense M(p, 15, 7);
        std::vector<std::uint64_t> acc(15 * 7, 0);
        for (std::size_t i = 0; i < 6; ++i) {
            if (!v[i]) continue;
            for (std::size_t r = 0; r < 7; ++r)
                for (std::size_t o = 0; o < 15; ++o) acc[o * 7 + r] += std::uint64_t(v[i]) * at(i, r, o);
        }
        for (std::size_t q = 0; q < acc.size(); ++q) M.a[q] = static_cast<std::uint32_t>(acc[q] % p);
        return M;
    }
    // 15 x 6: the linear system in v for fixed l
    modp::Dense system_for_l(const std::vector<std::uint32_t>& c) const {
        modp::Dense M(p, 15, 6);
        std::vector<std::uint64_t> acc(15 * 6, 0);
        for (std::size_t r = 0; r < 7; ++r) {
            if (!c[r]) continue;
            for (std::size_t i = 0; i < 6; ++i)
                for (std::size_t o = 0; o < 15; ++o) acc[o * 6 + i] += std::uint64_t(c[r]) * at(i, r, o);
        }
        for (std::size_t q = 0; q < acc.size(); ++q) M.a[q] = static_cast<std::uint32_t>(acc[q] % p);
        return M;
    }
};

inline Bilinear bilinear(std::uint32_t p, const Rational& lam, Side side) {
    PrimeField K(p);
    auto l = lambda_mod(p, lam);
    auto H = embedding::h12_equations(K, l);
    Bilinear B{p, side, std::vector<std::uint32_t>(6 * 7 * 15, 0)};
    for (std::size_t r = 0; r < 7; ++r) {
        ExtVector<PrimeField> h(K, 6, 3, H.row(r));
        for (std::size_t i = 0; i < 6; ++i) {
            std::vector<Fp> e(6, K.zero());
            e[i] = K.one();
            auto img = side == Side::Ustar ? wedge(ExtVector<PrimeField>::vector(K, e), h) : contract(e, h);
            for (std::size_t o = 0; o < 15; ++o) B.t[(i * 7 + r) * 15 + o] = img.coords()[o].residue();
        }
    }
    return B;
}

struct Locus {
    std::uint32_t p;
    Side side;
    std::vector<std::vector<std::uint32_t>> points;  // normalized
    std::map<std::size_t, std::size_t> kernel_dims;  // solution dimension -> count
};

// all v in P^5(F_p) where the system has a nonzero solution l in Pi_6
inline Locus enumerate_locus(std::uint32_t p, const Rational& lam, Side side) {
    auto B = bilinear(p, lam, side);
    Locus L{p, side, {}, {}};
    for_each_projective_point(6, p, [&](const std::vector<std::uint32_t>& v) {
        auto r = modp::rank(B.system_for_v(v));
        if (r < 7) {
            L.points.push_back(v);
            ++L.kernel_dims[7 - r];
        }
    });
    return L;
}

inline CheckReport scroll_rank_locus(std::uint32_t p, const Rational& lam, Side side) {
    CheckReport rep;
    rep.check = "embedding.scroll-locus";
    rep.claim = "the points v for which v and Pi^lambda_6 admit a nonzero solution form a Veronese surface, "
                "and the solutions over each such point form a line";
    rep.parameters = {{"lambda", lam.str()}, {"p", p}, {"side", side_name(side)}};
    if (p < 5) throw InvalidParameter("p must be at least 5");
    auto L = enumerate_locus(p, lam, side);
    const std::uint64_t expect = veronese_count(p);
    json dims = json::object();
    for (auto [d, c] : L.kernel_dims) dims[std::to_string(d)] = c;
    rep.metrics["rank_drop_points"] = L.points.size();
    rep.metrics["veronese_point_count"] = expect;
    rep.metrics["p2_plus_p_plus_1"] = std::uint64_t(p) * p + p + 1;
    rep.metrics["solution_dims"] = dims;
    rep.require("count_matches_veronese", L.points.size() == expect);
    rep.require("solutions_are_lines", L.kernel_dims.size() == 1 && L.kernel_dims.count(2) == 1);
    rep.finish();
    return rep;
}

// ---- sampling the locus at large p ----

// a degenerate form l in Pi_6 (one with a nonzero solution v), found on random P^3's
// inside Pi_6: along lines of the P^3, det of a random 6 x 15 compression of the 15 x 6
// system is a sextic in the line parameter, and its roots are confirmed by the full rank test.
// The degenerate forms make up a threefold, so a P^3 meets it in finitely many points.
inline std::optional<std::vector<std::uint32_t>> find_degenerate_form(const Bilinear& B, Rng& rng,
                                                                       unsigned max_slices = 64) {
    const std::uint32_t p = B.p;
    PrimeField K(p);
    auto rnd = [&] { return random_element(K, rng).residue(); };
    // inverse Vandermonde at s = 0..6, from rref of [V | I]
    Matrix<PrimeField> Vd(K, 7, 14);
    for (long s = 0; s < 7; ++s) {
        auto pw = K.one();
        for (std::size_t j = 0; j < 7; ++j) {
            Vd(static_cast<std::size_t>(s), j) = pw;
            pw *= K.from_int(s);
        }
        Vd(static_cast<std::size_t>(s), 7 + static_cast<std::size_t>(s)) = K.one();
    }
    auto Vr = rref(Vd).reduced;
    auto Vinv = [&](std::size_t j, std::size_t q) { return Vr(j, 7 + q); };
    std::optional<std::vector<std::uint32_t>> found;
    for (unsigned sl = 0; sl < max_slices && !found; ++sl) {
        // compression Rm (6 x 15) folded into the tensor
        std::vector<std::uint32_t> R(6 * 15);
        for (auto& x : R) x = rnd();
        std::vector<std::uint32_t> Tc(6 * 7 * 6, 0);  // [(i * 7 + r) * 6 + o']
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t r = 0; r < 7; ++r)
                for (std::size_t o2 = 0; o2 < 6; ++o2) {
                    std::uint64_t acc = 0;
                    for (std::size_t o = 0; o < 15; ++o) acc += std::uint64_t(R[o2 * 15 + o]) * B.at(i, r, o) % p;
                    Tc[(i * 7 + r) * 6 + o2] = static_cast<std::uint32_t>(acc % p);
                }
        auto cdet = [&](const std::vector<std::uint32_t>& c) {
            modp::Dense M(p, 6, 6);
            for (std::size_t o2 = 0; o2 < 6; ++o2)
                for (std::size_t i = 0; i < 6; ++i) {
                    std::uint64_t acc = 0;
                    for (std::size_t r = 0; r < 7; ++r) acc += std::uint64_t(c[r]) * Tc[(i * 7 + r) * 6 + o2];
                    M(o2, i) = static_cast<std::uint32_t>(acc % p);
                }
            return modp::det(M);
        };
        auto confirm = [&](const std::vector<std::uint32_t>& c) {
            if (!found && modp::kernel(B.system_for_l(c)).size() == 1) found = c;
        };
        std::array<std::vector<std::uint32_t>, 4> b;
        for (auto& x : b) {
            x.resize(7);
            for (auto& y : x) y = rnd();
        }
        auto combo = [&](const std::vector<std::uint32_t>& w) {
            std::vector<std::uint32_t> c(7);
            for (std::size_t r = 0; r < 7; ++r) {
                std::uint64_t acc = 0;
                for (std::size_t j = 0; j < 4; ++j) acc += std::uint64_t(w[j]) * b[j][r];
                c[r] = static_cast<std::uint32_t>(acc % p);
            }
            return c;
        };
        auto c0 = combo({1, 0, 0, 0});
        if (cdet(c0) == 0) confirm(c0);
        for_each_projective_point(3, p, [&](const std::vector<std::uint32_t>& d) {
            if (found) return;
            auto c1 = combo({0, d[0], d[1], d[2]});
            if (cdet(c1) == 0) confirm(c1);
            std::vector<Fp> vals;
            auto at = [&](std::uint64_t s) {
                std::vector<std::uint32_t> c(7);
                for (std::size_t r = 0; r < 7; ++r) c[r] = static_cast<std::uint32_t>((c0[r] + s * c1[r]) % p);
                return c;
            };
            for (std::uint64_t s = 0; s < 7; ++s) vals.push_back(Fp::raw(cdet(at(s)), p));
            std::vector<std::uint64_t> coef(7, 0);
            bool all_zero = true;
            for (std::size_t j = 0; j < 7; ++j) {
                auto acc = K.zero();
                for (std::size_t q = 0; q < 7; ++q) acc += Vinv(j, q) * vals[q];
                coef[j] = acc.residue();
                all_zero = all_zero && coef[j] == 0;
            }
            for (std::uint64_t s = 1; s < p; ++s) {
                std::uint64_t acc = 0;
                for (std::size_t j = 7; j-- > 0;) acc = (acc * s + coef[j]) % p;
                if (acc == 0 || all_zero) confirm(at(s));
                if (found) return;
            }
        });
    }
    return found;
}

// Points of the locus at large p. The degenerate forms are the same for both sides, and
// each lies on one solution line per side; walking form -> v -> its line -> forms -> u on the
// other side -> ... spreads over the whole surface from a single seed.
inline std::set<std::vector<std::uint32_t>> sample_locus(std::uint32_t p, const Rational& lam, Side side, Rng& rng,
                                                          std::size_t want = 120, std::size_t per_line = 3) {
    std::array<Bilinear, 2> B{bilinear(p, lam, Side::Ustar), bilinear(p, lam, Side::U)};
    const std::size_t mine = side == Side::Ustar ? 0 : 1;
    auto seed = find_degenerate_form(B[mine], rng);
    if (!seed) throw SamplingExhausted("no degenerate form found on random P^3 slices");
    PrimeField K(p);
    std::set<std::vector<std::uint32_t>> found, seen[2];
    std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> queue{{*seed, 0}};
    std::size_t steps = 0;
    while (!queue.empty() && found.size() < want && steps++ < 50 * want) {
        auto pick = rng() % queue.size();
        auto [c, s] = queue[pick];
        queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(pick));
        auto ker = modp::kernel(B[s].system_for_l(c));
        if (ker.size() != 1) continue;
        auto v = ker[0];
        modp::normalize(v, p);
        if (!seen[s].insert(v).second) continue;
        auto line = modp::kernel(B[s].system_for_v(v));
        if (line.size() != 2) continue;
        if (s == mine) found.insert(v);
        for (std::size_t q = 0; q < per_line; ++q) {
            std::uint64_t x = random_element(K, rng).residue(), y = random_element(K, rng).residue();
            std::vector<std::uint32_t> c2(7);
            for (std::size_t r = 0; r < 7; ++r) c2[r] = static_cast<std::uint32_t>((x * line[0][r] + y * line[1][r]) % p);
            if (std::all_of(c2.begin(), c2.end(), [](std::uint32_t t) { return t == 0; })) continue;
            queue.push_back({c2, 1 - s});
        }
    }
    return found;
}

// ---- quadrics through the locus ----

inline VarSet quadric_vars() {
    static const VarSet v({"u1", "u2", "u3", "u4", "u5", "u6"});
    return v;
}

// coefficient rows (over the degree-2 monomials of 6 variables) of quadrics through the points
template <class Pts>
Matrix<PrimeField> quadrics_through(std::uint32_t p, const Pts& pts) {
    PrimeField K(p);
    auto mons = monomials_of_degree(6, 2);
    Matrix<PrimeField> M(K, 0, mons.size());
    for (auto& v : pts) {
        std::vector<Fp> row;
        for (auto& m : mons) {
            std::uint64_t acc = 1;
            for (std::size_t i = 0; i < 6; ++i)
                for (unsigned e = 0; e < m.e[i]; ++e) acc = acc * v[i] % p;
            row.push_back(Fp::raw(static_cast<std::uint32_t>(acc), p));
        }
        M.append_row(row);
    }
    return kernel(M);
}

inline std::vector<MPoly<PrimeField>> quadric_system(std::uint32_t p, const Matrix<PrimeField>& rows) {
    PrimeField K(p);
    std::vector<MPoly<PrimeField>> out;
    for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back(poly_from_row(K, quadric_vars(), rows.row(r), 2));
    return out;
}

struct VeroneseSystem {
    std::uint32_t p;
    Side side;
    std::size_t points = 0;
    bool enumerated = false;
    std::vector<MPoly<PrimeField>> quadrics;
};

inline constexpr std::uint32_t kEnumerationLimit = 13;

inline VeroneseSystem veronese_system(std::uint32_t p, const Rational& lam, Side side, Rng& rng) {
    VeroneseSystem V{p, side, 0, false, {}};
    Matrix<PrimeField> Q(PrimeField(p), 0, 21);
    if (p <= kEnumerationLimit) {
        auto L = enumerate_locus(p, lam, side);
        V.points = L.points.size();
        V.enumerated = true;
        Q = quadrics_through(p, L.points);
    } else {
        auto S = sample_locus(p, lam, side, rng);
        V.points = S.size();
        Q = quadrics_through(p, S);
    }
    V.quadrics = quadric_system(p, Q);
    return V;
}

inline CheckReport veronese_quadrics(std::uint32_t p, const Rational& lam, Side side, Rng& rng) {
    CheckReport rep;
    rep.check = "embedding.veronese-quadrics";
    rep.claim = "the quadrics through the rank-drop locus form a 6-dimensional system, the ideal of a Veronese surface";
    rep.parameters = {{"lambda", lam.str()}, {"p", p}, {"side", side_name(side)}};
    auto V = veronese_system(p, lam, side, rng);
    rep.metrics["points"] = V.points;
    rep.metrics["method"] = V.enumerated ? "enumeration" : "seeded-walk";
    rep.metrics["quadric_space_dim"] = V.quadrics.size();
    // control: as many random points impose independent conditions
    std::vector<std::vector<std::uint32_t>> rnd;
    PrimeField K(p);
    for (std::size_t q = 0; q < V.points; ++q) {
        std::vector<std::uint32_t> v(6);
        for (auto& x : v) x = random_element(K, rng).residue();
        rnd.push_back(v);
    }
    auto ctrl = quadrics_through(p, rnd).rows();
    rep.metrics["random_points_quadric_dim"] = ctrl;
    rep.require("dimension_6", V.quadrics.size() == 6);
    rep.require("enough_points", V.points >= 21);
    rep.require("random_control_is_0", ctrl == 0);
    rep.finish();
    return rep;
}

// ---- Pi_6 misses the Grassmannian G(3, U^*) ----

inline VarSet pi6_vars() {
    static const VarSet v({"c1", "c2", "c3", "c4", "c5", "c6", "c7"});
    return v;
}

// the Plucker quadrics restricted to the span of the rows of `basis` (7 x 20)
inline std::vector<MPoly<PrimeField>> restricted_quadrics(const Matrix<PrimeField>& basis) {
    const auto& K = basis.field();
    std::vector<MPoly<PrimeField>> images;
    for (std::size_t I = 0; I < 20; ++I) {
        MPoly<PrimeField> f(K, pi6_vars());
        for (std::size_t r = 0; r < basis.rows(); ++r)
            if (!basis(r, I).is_zero()) f.add_term(Monomial::var(7, r), basis(r, I));
        images.push_back(f);
    }
    std::vector<MPoly<PrimeField>> out;
    for (auto& q : plucker_ideal(K, 3, 6, embedding::plucker_ring())) {
        auto r = linear_substitute(q, images);
        if (!r.is_zero()) out.push_back(r);
    }
    return out;
}

// F_p-points of P^6 on which all restricted quadrics vanish
inline std::size_t scan_zeros(const Matrix<PrimeField>& basis, std::size_t stop_after = SIZE_MAX,
                              std::vector<std::uint32_t>* first = nullptr) {
    const std::uint32_t p = basis.field().p();
    auto qs = plucker_ideal(basis.field(), 3, 6, embedding::plucker_ring());
    struct T {
        std::size_t a, b;
        std::uint32_t c;
    };
    std::vector<std::vector<T>> terms;
    for (auto& q : qs) {
        terms.emplace_back();
        for (auto& [m, c] : q.terms()) {
            std::vector<std::size_t> ab;
            for (std::size_t v = 0; v < 20; ++v)
                for (unsigned e = 0; e < m.e[v]; ++e) ab.push_back(v);
            terms.back().push_back({ab[0], ab[1], c.residue()});
        }
    }
    std::size_t hits = 0;
    for_each_projective_point(basis.rows(), p, [&](const std::vector<std::uint32_t>& c) {
        if (hits >= stop_after) return;
        std::vector<std::uint64_t> x(20, 0);
        for (std::size_t r = 0; r < basis.rows(); ++r)
            if (c[r])
                for (std::size_t I = 0; I < 20; ++I) x[I] = (x[I] + std::uint64_t(c[r]) * basis(r, I).residue()) % p;
        for (auto& q : terms) {
            std::uint64_t acc = 0;
            for (auto& t : q) acc = (acc + x[t.a] * x[t.b] % p * t.c) % p;
            if (acc) return;
        }
        if (!hits && first) *first = c;
        ++hits;
    });
    return hits;
}

struct Pi6Options {
    std::vector<std::uint32_t> primes{101, 103, 107};
    std::uint32_t scan_prime = 7;
    GbOptions gb{};
    bool negative_control = false;  // swap one covector for a point of G(3, U^*)
};

inline CheckReport pi6_avoids_dual_grassmannian(const Rational& lam, Rng& rng, Pi6Options opt = {}) {
    CheckReport rep;
    rep.check = "embedding.pi6-avoids-grassmannian";
    rep.claim = "Pi^lambda_6 does not meet the Grassmannian G(3, U^*)";
    rep.parameters = {{"lambda", lam.str()}, {"primes", opt.primes}, {"scan_prime", opt.scan_prime},
                      {"negative_control", opt.negative_control}};
    embedding::require_admissible(embedding::Family::one, lam);
    auto basis_for = [&](std::uint32_t p) {
        PrimeField K(p);
        auto H = embedding::h12_equations(K, lambda_mod(p, lam));
        if (opt.negative_control) {
            auto w = sample_grassmannian(K, 3, 6, rng).plucker;
            for (std::size_t I = 0; I < 20; ++I) H(6, I) = w[I];
        }
        return H;
    };
    json per_prime = json::array();
    bool all_empty = true;
    for (auto p : opt.primes) {
        auto basis = basis_for(p);
        auto cert = projective_emptiness(restricted_quadrics(basis), opt.gb);
        json e{{"p", p}, {"empty", cert.empty}, {"hilbert_numerator", cert.profile.numerator_string()}};
        if (cert.empty)
            e["pure_powers"] = cert.pure_power_exponents;
        else if (opt.negative_control)
            e["witness"] = std::vector<std::uint32_t>{0, 0, 0, 0, 0, 0, 1};  // the planted point
        per_prime.push_back(e);
        all_empty = all_empty && cert.empty;
    }
    rep.metrics["certificates"] = per_prime;
    std::vector<std::uint32_t> first;
    auto zeros = scan_zeros(basis_for(opt.scan_prime), SIZE_MAX, &first);
    rep.metrics["scan_zero_count"] = zeros;
    rep.metrics["scan_points"] = projective_count(6, opt.scan_prime);
    rep.require("empty_over_all_primes", all_empty);
    rep.require("scan_finds_no_point", zeros == 0);
    if (zeros) rep.witness = {{"p", opt.scan_prime}, {"point", first}};
    rep.finish();
    return rep;
}

}  // namespace scroll

}  // namespace g2kit
