#pragma once

#include <array>
#include <type_traits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exterior.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "random.hpp"

namespace g2kit {

// Lie algebra g2 inside gl(7), coordinates a..n
namespace lie {

enum Coord { a, b, c, d, e, f, g, h, i, j, k, l, m, n };
constexpr std::size_t kDim = 14;

inline const VarSet& vars() {
    static const VarSet v({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n"});
    return v;
}

// entry (r, s) of A(x) as integer combination of coordinates
struct Entry {
    std::vector<std::pair<int, int>> terms;  // (coefficient, coordinate)
};

inline const std::array<std::array<Entry, 7>, 7>& shape() {
    static const auto table = [] {
        std::array<std::array<Entry, 7>, 7> t{};
        auto set = [&](int r, int s, std::vector<std::pair<int, int>> v) { t[r][s].terms = std::move(v); };
        set(0, 0, {{1, g}}), set(0, 1, {{1, h}}), set(0, 2, {{1, i}}), set(0, 4, {{1, f}}), set(0, 5, {{-1, e}}), set(0, 6, {{1, a}});
        set(1, 0, {{1, j}}), set(1, 1, {{1, k}}), set(1, 2, {{1, l}}), set(1, 3, {{-1, f}}), set(1, 5, {{1, d}}), set(1, 6, {{1, b}});
        set(2, 0, {{1, m}}), set(2, 1, {{1, n}}), set(2, 2, {{-1, g}, {-1, k}}), set(2, 3, {{1, e}}), set(2, 4, {{-1, d}}), set(2, 6, {{1, c}});
        set(3, 1, {{-1, c}}), set(3, 2, {{1, b}}), set(3, 3, {{-1, g}}), set(3, 4, {{-1, j}}), set(3, 5, {{-1, m}}), set(3, 6, {{1, d}});
        set(4, 0, {{1, c}}), set(4, 2, {{-1, a}}), set(4, 3, {{-1, h}}), set(4, 4, {{-1, k}}), set(4, 5, {{-1, n}}), set(4, 6, {{1, e}});
        set(5, 0, {{-1, b}}), set(5, 1, {{1, a}}), set(5, 3, {{-1, i}}), set(5, 4, {{-1, l}}), set(5, 5, {{1, g}, {1, k}}), set(5, 6, {{1, f}});
        set(6, 0, {{2, d}}), set(6, 1, {{2, e}}), set(6, 2, {{2, f}}), set(6, 3, {{2, a}}), set(6, 4, {{2, b}}), set(6, 5, {{2, c}});
        return t;
    }();
    return table;
}

template <class F>
Matrix<F> matrix(const F& K, const std::vector<typename F::Element>& x) {
    if (x.size() != kDim) throw ShapeMismatch("Lie element needs 14 coordinates");
    Matrix<F> A(K, 7, 7);
    const auto& t = shape();
    for (int r = 0; r < 7; ++r)
        for (int s = 0; s < 7; ++s)
            for (auto [cf, v] : t[r][s].terms) A(r, s) += K.from_int(cf) * x[v];
    return A;
}

// inverse of matrix(); throws when M is not of the displayed shape
template <class F>
std::vector<typename F::Element> coords(const Matrix<F>& M) {
    std::vector<typename F::Element> x = {M(0, 6), M(1, 6), M(2, 6), M(1, 5), -M(0, 5), M(0, 4), M(0, 0),
                                          M(0, 1), M(0, 2), M(1, 0), M(1, 1), M(1, 2), M(2, 0), M(2, 1)};
    if (!(matrix(M.field(), x) == M)) throw BracketEscapesAlgebra("matrix is not of the g2 shape");
    return x;
}

template <class F>
std::vector<typename F::Element> unit(const F& K, std::size_t v) {
    std::vector<typename F::Element> x(kDim, K.zero());
    x[v] = K.one();
    return x;
}

template <class F>
std::vector<typename F::Element> bracket(const F& K, const std::vector<typename F::Element>& x,
                                         const std::vector<typename F::Element>& y) {
    auto A = matrix(K, x), B = matrix(K, y);
    return coords(A * B - B * A);
}

// column v holds ad(x)(e_v)
template <class F>
Matrix<F> adjoint_matrix(const F& K, const std::vector<typename F::Element>& x) {
    Matrix<F> ad(K, kDim, kDim);
    for (std::size_t v = 0; v < kDim; ++v) {
        auto col = bracket(K, x, unit(K, v));
        for (std::size_t r = 0; r < kDim; ++r) ad(r, v) = col[r];
    }
    return ad;
}

// invariant form 4 tr(A(x)A(y)): 48(ad+be+cf) + 8(g^2+k^2+(g+k)^2) + 16(hj+im+ln)
template <class F>
QuadraticForm<F> killing_quadric(const F& K) {
    Matrix<F> S(K, kDim, kDim);
    for (std::size_t u = 0; u < kDim; ++u)
        for (std::size_t v = 0; v < kDim; ++v)
            S(u, v) = K.from_int(4) * (matrix(K, unit(K, u)) * matrix(K, unit(K, v))).trace();
    return QuadraticForm<F>(S);
}

// the printed literal 48(ad+be+cf) + 16(g^2+k^2+(g+k)^2+jh+im+nl); not ad-invariant
template <class F>
QuadraticForm<F> displayed_killing_quadric(const F& K) {
    auto x = [&](int v) { return MPoly<F>::var(K, vars(), v); };
    auto q = K.from_int(48) * (x(a) * x(d) + x(b) * x(e) + x(c) * x(f)) +
             K.from_int(16) * (x(g) * x(g) + x(k) * x(k) + (x(g) + x(k)) * (x(g) + x(k)) + x(j) * x(h) +
                               x(i) * x(m) + x(n) * x(l));
    return QuadraticForm<F>::from_poly(q);
}

template <class F>
std::vector<typename F::Element> cartan_point(const F& K, const typename F::Element& gg, const typename F::Element& kk) {
    auto x = std::vector<typename F::Element>(kDim, K.zero());
    x[g] = gg;
    x[k] = kk;
    return x;
}

// t^2 coefficient of det(t - ad(x))
template <class F>
typename F::Element delta2(const F& K, const std::vector<typename F::Element>& x) {
    return char_poly(adjoint_matrix(K, x))[2];
}

template <class F>
typename F::Element delta2_on_cartan(const F& K, const typename F::Element& gg, const typename F::Element& kk) {
    return delta2(K, cartan_point(K, gg, kk));
}

// root as linear form cg*g + ck*k on the Cartan
struct Root {
    int cg, ck;
};

inline std::vector<Root> short_roots() { return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}; }
inline std::vector<Root> long_roots() { return {{1, -1}, {-1, 1}, {2, 1}, {-2, -1}, {1, 2}, {-1, -2}}; }

template <class F>
typename F::Element root_product(const F& K, const std::vector<Root>& roots, const typename F::Element& gg,
                                 const typename F::Element& kk) {
    auto r = K.one();
    for (auto& rt : roots) r *= K.from_int(rt.cg) * gg + K.from_int(rt.ck) * kk;
    return r;
}

// the zero of cg*g + ck*k on P^1(g:k), normalized
inline std::pair<long, long> root_zero(const Root& r) {
    long g0 = r.ck, k0 = -r.cg;
    if (g0 < 0 || (g0 == 0 && k0 < 0)) {
        g0 = -g0;
        k0 = -k0;
    }
    return {g0, k0};
}

// exp(s E) for nilpotent E, exact; requires (index-1)! invertible
template <class F>
Matrix<F> exp_nilpotent(const Matrix<F>& E, const typename F::Element& s) {
    const F& K = E.field();
    const std::size_t n = E.rows();
    std::vector<Matrix<F>> pw{Matrix<F>::identity(K, n)};
    while (!pw.back().is_zero()) {
        if (pw.size() > n) throw NotNilpotent("matrix is not nilpotent");
        pw.push_back(pw.back() * E);
    }
    Matrix<F> r(K, n, n);
    auto coeff = K.one();
    for (std::size_t q = 0; q + 1 < pw.size(); ++q) {
        if (q > 0) {
            auto qq = K.from_int(static_cast<long>(q));
            if (qq.is_zero()) throw InvalidParameter("characteristic too small for this exponential");
            coeff = coeff * s / qq;
        }
        r = r + coeff * pw[q];
    }
    return r;
}

// the 12 root-vector coordinates (everything except the Cartan g, k)
inline const std::vector<std::size_t>& root_coordinates() {
    static const std::vector<std::size_t> r = {a, b, c, d, e, f, h, i, j, l, m, n};
    return r;
}

}  // namespace lie

// Pfaffian model of G2 in P^13, coordinates a..n
namespace pfaffian_model {

using lie::Coord;

template <class F>
PolyMatrix<F> matrix(const F& K) {
    const VarSet& V = lie::vars();
    auto x = [&](int v) { return MPoly<F>::var(K, V, v); };
    MPoly<F> z(K, V);
    using namespace lie;
    PolyMatrix<F> M = {
        {z, -x(f), x(e), x(g), x(h), x(i), x(a)},
        {x(f), z, -x(d), x(j), x(k), x(l), x(b)},
        {-x(e), x(d), z, x(m), x(n), -x(g) - x(k), x(c)},
        {-x(g), -x(j), -x(m), z, x(c), -x(b), x(d)},
        {-x(h), -x(k), -x(n), -x(c), z, x(a), x(e)},
        {-x(i), -x(l), x(g) + x(k), x(b), -x(a), z, x(f)},
        {-x(a), -x(b), -x(c), -x(d), -x(e), -x(f), z},
    };
    return M;
}

template <class F>
std::vector<MPoly<F>> ideal(const F& K) {
    return pfaffian_ideal(matrix(K), 4);
}

// skew matrix P(y) at a point
template <class F>
Matrix<F> evaluate(const F& K, const std::vector<typename F::Element>& y) {
    auto M = matrix(K);
    Matrix<F> P(K, 7, 7);
    for (int r = 0; r < 7; ++r)
        for (int s = 0; s < 7; ++s) P(r, s) = M[r][s].eval(y);
    return P;
}

// model coordinates of a skew matrix in the span of the model
template <class F>
std::vector<typename F::Element> coords(const Matrix<F>& P) {
    using namespace lie;
    std::vector<typename F::Element> y = {P(0, 6), P(1, 6), P(2, 6), P(3, 6), P(4, 6), P(5, 6), P(0, 3),
                                          P(0, 4), P(0, 5), P(1, 3), P(1, 4), P(1, 5), P(2, 3), P(2, 4)};
    if (!(evaluate(P.field(), y) == P)) throw BracketEscapesAlgebra("skew matrix not in the span of the model");
    return y;
}

// Lie coordinates -> model coordinates. The unique equivariant identification (up to scale)
// between ad and the congruence action alpha -> -(A^T alpha + alpha A).
template <class F>
Matrix<F> lie_to_model(const F& K) {
    using namespace lie;
    Matrix<F> L(K, kDim, kDim);
    const std::vector<std::tuple<int, int, int>> entries = {
        {a, d, -1}, {b, e, -1}, {c, f, -1}, {d, a, -1}, {e, b, -1}, {f, c, -1}, {g, g, 1},
        {h, j, 1},  {i, m, 1},  {j, h, 1},  {k, k, 1},  {l, n, 1},  {m, i, 1},  {n, l, 1}};
    for (auto [r, s, v] : entries) L(r, s) = K.from_int(v);
    return L;
}

// solution space of the equivariance equations, one 196-vector (row-major L) per row
template <class F>
Matrix<F> equivariant_identifications(const F& K) {
    using lie::kDim;
    // unknown L (14x14): P(L ad_x y) = -(A(x)^T P(L y) + P(L y) A(x)) for basis x, y
    const std::size_t N = kDim * kDim;
    Matrix<F> eqs(K, 0, N);
    // model basis matrices
    std::vector<Matrix<F>> Pb;
    for (std::size_t v = 0; v < kDim; ++v) Pb.push_back(evaluate(K, lie::unit(K, v)));
    for (std::size_t xs = 0; xs < kDim; ++xs) {
        auto A = lie::matrix(K, lie::unit(K, xs));
        auto ad = lie::adjoint_matrix(K, lie::unit(K, xs));
        for (std::size_t ys = 0; ys < kDim; ++ys) {
            // lhs = sum_r (L ad e_y)_r Pb[r] = sum_{r,s} L(r,s) ad(s,ys) Pb[r]
            // rhs = -sum_r L(r,ys) (A^T Pb[r] + Pb[r] A)
            for (int p = 0; p < 7; ++p)
                for (int q = p + 1; q < 7; ++q) {
                    std::vector<typename F::Element> row(N, K.zero());
                    for (std::size_t r = 0; r < kDim; ++r) {
                        for (std::size_t s = 0; s < kDim; ++s)
                            if (!ad(s, ys).is_zero()) row[r * kDim + s] += ad(s, ys) * Pb[r](p, q);
                        auto T = A.transpose() * Pb[r] + Pb[r] * A;
                        row[r * kDim + ys] += T(p, q);
                    }
                    if (!is_zero_vector(row)) eqs.append_row(row);
                }
        }
    }
    return kernel(eqs);
}

// congruence action of g in GL(7) on model points: alpha -> g^-T alpha g^-1
template <class F>
std::vector<typename F::Element> act(const Matrix<F>& ginv, const std::vector<typename F::Element>& y) {
    auto P = evaluate(ginv.field(), y);
    return coords(ginv.transpose() * P * ginv);
}

// first coordinate point of P^13 on which all Pfaffians vanish
template <class F>
std::vector<typename F::Element> seed_point(const F& K) {
    auto I = ideal(K);
    for (std::size_t v = 0; v < lie::kDim; ++v) {
        auto y = lie::unit(K, v);
        bool on = true;
        for (auto& q : I) on = on && q.eval(y).is_zero();
        if (on) return y;
    }
    throw SamplingDegenerate("no coordinate point on the model");
}

template <class F>
struct GroupSample {
    Matrix<F> g, ginv;
};

// product of exponentials of random multiples of the 12 root vectors
template <class F>
GroupSample<F> random_group_element(const F& K, Rng& rng, long width = 2) {
    auto g = Matrix<F>::identity(K, 7), ginv = Matrix<F>::identity(K, 7);
    for (auto v : lie::root_coordinates()) {
        auto E = lie::matrix(K, lie::unit(K, v));
        typename F::Element s;
        if constexpr (std::is_same_v<F, Rationals>)
            s = random_element(K, rng, width);
        else
            s = random_element(K, rng);
        if (s.is_zero()) continue;
        g = g * lie::exp_nilpotent(E, s);
        ginv = lie::exp_nilpotent(E, -s) * ginv;
    }
    return {g, ginv};
}

template <class F>
std::vector<typename F::Element> sample_point(const F& K, Rng& rng, int max_tries = 16) {
    auto I = ideal(K);
    auto seed = seed_point(K);
    for (int t = 0; t < max_tries; ++t) {
        auto gs = random_group_element(K, rng);
        auto y = act(gs.ginv, seed);
        bool on = true;
        for (auto& q : I) on = on && q.eval(y).is_zero();
        if (on && !is_zero_vector(y)) return y;
    }
    throw SamplingDegenerate("orbit samples left the model");
}

}  // namespace pfaffian_model

// model of G2 in G(2,7): Pfaffians of (x_ij) restricted to the 2-vectors killed by omega*
namespace isotropic_model {

inline const VarSet& vars() {
    static const VarSet v = plucker_vars(2, 7, 0);
    return v;
}

template <class F>
ExtVector<F> omega_star(const F& K) {
    ExtVector<F> w(K, 7, 3);
    for (auto idx : std::vector<std::vector<unsigned>>{{0, 1, 2}, {3, 4, 5}, {0, 3, 6}, {1, 4, 6}, {2, 5, 6}})
        w = w + ExtVector<F>::basis_blade(K, 7, idx);
    return w;
}

// the 7 linear forms iota_alpha(omega*) as polynomials in x_ij
template <class F>
std::vector<MPoly<F>> linear_relations_from_form(const F& K, const ExtVector<F>& w3) {
    const auto& B2 = exterior_basis(7, 2);
    std::vector<MPoly<F>> out;
    for (unsigned r = 0; r < 7; ++r) {
        MPoly<F> p(K, vars());
        for (std::size_t s = 0; s < B2.size(); ++s) {
            // <e_i ^ e_j contracted twice against w3>, coefficient of x_r
            auto ij = B2.elements(s);
            std::vector<typename F::Element> xi(7, K.zero()), xj(7, K.zero());
            xi[ij[0]] = K.one();
            xj[ij[1]] = K.one();
            auto one = contract(xj, contract(xi, w3));
            p.add_term(Monomial::var(21, s), one.coords()[r]);
        }
        if (!p.is_zero()) out.push_back(p);
    }
    return out;
}

// the printed relations x01+x56, x02-x46, x12+x36, x34-x26, x35+x16, x45-x06, x03+x14+x25
template <class F>
std::vector<MPoly<F>> linear_relations(const F& K) {
    auto x = [&](const std::string& s) { return MPoly<F>::var(K, vars(), s); };
    return {x("x01") + x("x56"), x("x02") - x("x46"), x("x12") + x("x36"), x("x34") - x("x26"),
            x("x35") + x("x16"), x("x45") - x("x06"), x("x03") + x("x14") + x("x25")};
}

// the displayed 7x7 matrix, skew-symmetrized from its upper triangle
template <class F>
PolyMatrix<F> matrix(const F& K) {
    auto x = [&](const std::string& s) { return MPoly<F>::var(K, vars(), s); };
    MPoly<F> z(K, vars());
    std::vector<std::vector<MPoly<F>>> up = {
        {z, -x("x56"), x("x46"), x("x03"), x("x04"), x("x05"), x("x06")},
        {z, z, -x("x36"), x("x13"), x("x14"), x("x15"), x("x16")},
        {z, z, z, x("x23"), x("x24"), x("x25"), x("x26")},
        {z, z, z, z, x("x26"), -x("x16"), x("x36")},
        {z, z, z, z, z, x("x06"), x("x46")},
        {z, z, z, z, z, z, x("x56")},
        {z, z, z, z, z, z, z},
    };
    for (int r = 0; r < 7; ++r)
        for (int s = 0; s < r; ++s) up[r][s] = -up[s][r];
    return up;
}

// generic skew matrix of all 21 coordinates
template <class F>
PolyMatrix<F> generic_matrix(const F& K) {
    const auto& B2 = exterior_basis(7, 2);
    MPoly<F> z(K, vars());
    PolyMatrix<F> M(7, std::vector<MPoly<F>>(7, z));
    for (std::size_t s = 0; s < B2.size(); ++s) {
        auto ij = B2.elements(s);
        M[ij[0]][ij[1]] = MPoly<F>::var(K, vars(), s);
        M[ij[1]][ij[0]] = -M[ij[0]][ij[1]];
    }
    return M;
}

template <class F>
std::vector<MPoly<F>> ideal(const F& K) {
    auto I = plucker_ideal(K, 2, 7, vars());
    for (auto& r : linear_relations(K)) I.push_back(r);
    return I;
}

// letter -> x_ij read off by matching the two displayed matrices entry by entry
inline const std::vector<std::string>& letter_dictionary() {
    static const std::vector<std::string> d = {"x06", "x16", "x26", "x36", "x46", "x56", "x03",
                                               "x04", "x05", "x13", "x14", "x15", "x23", "x24"};
    return d;
}

}  // namespace isotropic_model

}  // namespace g2kit
