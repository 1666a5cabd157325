#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "projective.hpp"
#include "random.hpp"

namespace g2kit {

// k-subsets of {0..n-1} as bitmasks in lexicographic order of their sorted elements
struct ExteriorBasis {
    unsigned n = 0, k = 0;
    std::vector<std::uint32_t> masks;
    std::vector<int> index;  // mask -> position, -1 if |mask| != k

    std::size_t size() const { return masks.size(); }
    std::vector<unsigned> elements(std::size_t pos) const {
        std::vector<unsigned> e;
        for (unsigned i = 0; i < n; ++i)
            if (masks[pos] >> i & 1u) e.push_back(i);
        return e;
    }
};

inline const ExteriorBasis& exterior_basis(unsigned n, unsigned k) {
    if (n > 10 || k > n) throw InvalidParameter("exterior basis out of range");
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, ExteriorBasis> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    ExteriorBasis b;
    b.n = n;
    b.k = k;
    b.index.assign(1u << n, -1);
    for (auto& c : combinations(n, k)) {
        std::uint32_t m = 0;
        for (auto i : c) m |= 1u << i;
        b.index[m] = static_cast<int>(b.masks.size());
        b.masks.push_back(m);
    }
    return cache.emplace(std::make_pair(n, k), std::move(b)).first->second;
}

// sign of e_A ^ e_B relative to e_{A u B}; 0 if they overlap
inline int wedge_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    int inv = 0;
    for (std::uint32_t bb = b; bb; bb &= bb - 1) {
        unsigned j = static_cast<unsigned>(std::countr_zero(bb));
        // elements of a above j must move past e_j
        inv += std::popcount(a >> (j + 1));
    }
    return inv % 2 ? -1 : 1;
}

// names like x123 (base 1) or x01 (base 0)
inline VarSet plucker_vars(unsigned k, unsigned n, unsigned base = 1, const std::string& prefix = "x") {
    const auto& B = exterior_basis(n, k);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < B.size(); ++i) {
        std::string s = prefix;
        for (auto e : B.elements(i)) s += std::to_string(e + base);
        names.push_back(s);
    }
    return VarSet(names);
}

template <class F>
class ExtVector {
public:
    using Element = typename F::Element;

    ExtVector(F field, unsigned n, unsigned k)
        : field_(std::move(field)), n_(n), k_(k), c_(exterior_basis(n, k).size(), field_.zero()) {}
    ExtVector(F field, unsigned n, unsigned k, std::vector<Element> coords)
        : field_(std::move(field)), n_(n), k_(k), c_(std::move(coords)) {
        if (c_.size() != exterior_basis(n, k).size()) throw ShapeMismatch("wrong number of exterior coordinates");
    }
    // e_{i1} ^ ... ^ e_{ik} from an unsorted index list
    static ExtVector basis_blade(const F& field, unsigned n, const std::vector<unsigned>& idx) {
        ExtVector v(field, n, static_cast<unsigned>(idx.size()));
        std::uint32_t m = 0;
        int sign = 1;
        for (auto i : idx) {
            std::uint32_t bit = 1u << i;
            int s = wedge_sign(m, bit);
            if (s == 0) return v;
            sign *= s;
            m |= bit;
        }
        v.c_[exterior_basis(n, v.k_).index[m]] = field.from_int(sign);
        return v;
    }
    static ExtVector vector(const F& field, const std::vector<Element>& v) {
        return ExtVector(field, static_cast<unsigned>(v.size()), 1, v);
    }

    const F& field() const { return field_; }
    unsigned n() const { return n_; }
    unsigned degree() const { return k_; }
    const std::vector<Element>& coords() const { return c_; }
    std::vector<Element>& coords() { return c_; }
    Element& at_mask(std::uint32_t m) { return c_[exterior_basis(n_, k_).index[m]]; }
    Element at_mask(std::uint32_t m) const { return c_[exterior_basis(n_, k_).index[m]]; }
    bool is_zero() const { return is_zero_vector(c_); }

    ExtVector& operator+=(const ExtVector& o) {
        same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    ExtVector& operator-=(const ExtVector& o) {
        same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend ExtVector operator+(ExtVector a, const ExtVector& b) { return a += b; }
    friend ExtVector operator-(ExtVector a, const ExtVector& b) { return a -= b; }
    friend ExtVector operator*(const Element& s, ExtVector a) {
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend bool operator==(const ExtVector& a, const ExtVector& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.c_ == b.c_;
    }

    void same(const ExtVector& o) const {
        if (n_ != o.n_ || k_ != o.k_) throw ShapeMismatch("exterior degrees differ");
    }

private:
    F field_;
    unsigned n_, k_;
    std::vector<Element> c_;
};

template <class F>
ExtVector<F> wedge(const ExtVector<F>& a, const ExtVector<F>& b) {
    if (a.n() != b.n()) throw ShapeMismatch("wedge of different ambient spaces");
    const unsigned n = a.n();
    if (a.degree() + b.degree() > n) return ExtVector<F>(a.field(), n, n);
    ExtVector<F> r(a.field(), n, a.degree() + b.degree());
    const auto& A = exterior_basis(n, a.degree());
    const auto& B = exterior_basis(n, b.degree());
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (a.coords()[i].is_zero()) continue;
        for (std::size_t j = 0; j < B.size(); ++j) {
            if (b.coords()[j].is_zero()) continue;
            int s = wedge_sign(A.masks[i], B.masks[j]);
            if (!s) continue;
            auto t = a.coords()[i] * b.coords()[j];
            if (s > 0)
                r.at_mask(A.masks[i] | B.masks[j]) += t;
            else
                r.at_mask(A.masks[i] | B.masks[j]) -= t;
        }
    }
    return r;
}

// interior product with a covector v = sum v_i x_i
template <class F>
ExtVector<F> contract(const std::vector<typename F::Element>& v, const ExtVector<F>& a) {
    if (v.size() != a.n()) throw ShapeMismatch("covector length");
    if (a.degree() == 0) return ExtVector<F>(a.field(), a.n(), 0);
    ExtVector<F> r(a.field(), a.n(), a.degree() - 1);
    const auto& A = exterior_basis(a.n(), a.degree());
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (a.coords()[i].is_zero()) continue;
        std::uint32_t m = A.masks[i];
        for (unsigned j = 0; j < a.n(); ++j) {
            if (!(m >> j & 1u) || v[j].is_zero()) continue;
            int pos = std::popcount(m & ((1u << j) - 1));
            auto t = v[j] * a.coords()[i];
            if (pos % 2)
                r.at_mask(m ^ (1u << j)) -= t;
            else
                r.at_mask(m ^ (1u << j)) += t;
        }
    }
    return r;
}

// top-degree coefficient of a full-degree form
template <class F>
typename F::Element top_coefficient(const ExtVector<F>& a) {
    if (a.degree() != a.n()) throw ShapeMismatch("not a top-degree form");
    return a.coords()[0];
}

// sum_t (-1)^t p_{I u j_t} p_{J \ j_t} for |I| = k-1, |J| = k+1
template <class F>
MPoly<F> plucker_relation(const F& field, const VarSet& vars, unsigned n, unsigned k, std::uint32_t I, std::uint32_t J) {
    const auto& B = exterior_basis(n, k);
    MPoly<F> r(field, vars);
    int t = 0;
    for (unsigned j = 0; j < n; ++j) {
        if (!(J >> j & 1u)) continue;
        int sign_t = t % 2 ? -1 : 1;
        ++t;
        if (I >> j & 1u) continue;
        // p_{I u j} in sorted order carries the sign of moving j into place
        int s1 = wedge_sign(I, 1u << j);
        std::uint32_t A = I | (1u << j), C = J ^ (1u << j);
        auto m = Monomial::var(vars.size(), B.index[A]) * Monomial::var(vars.size(), B.index[C]);
        r.add_term(m, field.from_int(sign_t * s1));
    }
    return r;
}

// quadrics generating the ideal of G(k, n) in its Plucker embedding
template <class F>
std::vector<MPoly<F>> plucker_ideal(const F& field, unsigned k, unsigned n, const VarSet& vars) {
    const auto& B = exterior_basis(n, k);
    if (vars.size() != B.size()) throw VarMismatch("Plucker ring has the wrong number of variables");
    std::vector<MPoly<F>> out;
    if (k == 2) {
        PolyMatrix<F> m(n, std::vector<MPoly<F>>(n, MPoly<F>(field, vars)));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) {
                auto x = MPoly<F>::var(field, vars, B.index[(1u << i) | (1u << j)]);
                m[i][j] = x;
                m[j][i] = -x;
            }
        for (auto& p : pfaffian_ideal(m, 4))
            if (!p.is_zero()) out.push_back(p);
        return out;
    }
    std::vector<MPoly<F>> rels;
    for (auto& Ic : combinations(n, k - 1))
        for (auto& Jc : combinations(n, k + 1)) {
            std::uint32_t I = 0, J = 0;
            for (auto i : Ic) I |= 1u << i;
            for (auto j : Jc) J |= 1u << j;
            auto r = plucker_relation(field, vars, n, k, I, J);
            if (!r.is_zero()) rels.push_back(r);
        }
    // reduce to a basis of their span
    auto mons = monomials_of_degree(vars.size(), 2);
    std::map<Monomial, std::size_t, GrevlexDesc> pos;
    for (std::size_t i = 0; i < mons.size(); ++i) pos[mons[i]] = i;
    Matrix<F> M(field, 0, mons.size());
    for (auto& r : rels) {
        std::vector<typename F::Element> row(mons.size(), field.zero());
        for (auto& [m, c] : r.terms()) row[pos[m]] = c;
        M.append_row(row);
    }
    auto red = rref(M).reduced;
    for (std::size_t i = 0; i < red.rows(); ++i) {
        MPoly<F> p(field, vars);
        for (std::size_t j = 0; j < mons.size(); ++j) p.add_term(mons[j], red(i, j));
        out.push_back(p);
    }
    return out;
}

// Plucker vector of the row span of a k x n matrix
template <class F>
std::vector<typename F::Element> plucker_coordinates(const Matrix<F>& A) {
    const unsigned k = static_cast<unsigned>(A.rows()), n = static_cast<unsigned>(A.cols());
    ExtVector<F> w(A.field(), n, 0, {A.field().one()});
    for (unsigned i = 0; i < k; ++i) w = wedge(w, ExtVector<F>::vector(A.field(), A.row(i)));
    return w.coords();
}

template <class F>
struct GrassmannPoint {
    Matrix<F> frame;  // k x n, rows span the subspace
    std::vector<typename F::Element> plucker;
};

template <class F>
GrassmannPoint<F> sample_grassmannian(const F& field, unsigned k, unsigned n, Rng& rng, int max_tries = 32) {
    for (int t = 0; t < max_tries; ++t) {
        Matrix<F> A(field, k, n);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < n; ++j) A(i, j) = random_element(field, rng);
        auto p = plucker_coordinates(A);
        if (!is_zero_vector(p)) return {A, p};
    }
    throw RankDeficient("no full-rank frame after " + std::to_string(max_tries) + " draws");
}

// subspace {w : w ^ alpha = 0} of a decomposable k-vector, as row vectors
template <class F>
Matrix<F> subspace_of_blade(const ExtVector<F>& alpha) {
    const unsigned n = alpha.n();
    const F& K = alpha.field();
    Matrix<F> M(K, exterior_basis(n, alpha.degree() + 1).size(), n);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<typename F::Element> e(n, K.zero());
        e[i] = K.one();
        auto w = wedge(ExtVector<F>::vector(K, e), alpha);
        for (std::size_t r = 0; r < w.coords().size(); ++r) M(r, i) = w.coords()[r];
    }
    return kernel(M);
}

// q(alpha) = beta(alpha ^ alpha) for beta in Lambda^4 V*, alpha in Lambda^2 V
template <class F>
QuadraticForm<F> quadric_from_4form(const ExtVector<F>& beta) {
    if (beta.degree() != 4) throw DegreeMismatch("expected a 4-form");
    const unsigned n = beta.n();
    const auto& B2 = exterior_basis(n, 2);
    Matrix<F> S(beta.field(), B2.size(), B2.size());
    for (std::size_t i = 0; i < B2.size(); ++i)
        for (std::size_t j = 0; j < B2.size(); ++j) {
            int s = wedge_sign(B2.masks[i], B2.masks[j]);
            if (!s) continue;
            auto v = beta.at_mask(B2.masks[i] | B2.masks[j]);
            S(i, j) = s > 0 ? v : -v;
        }
    return QuadraticForm<F>(S);
}

// q(alpha) = [iota_v(alpha ^ u) ^ alpha] for the endomorphism sum M_ij e_i (x) x_j of U, alpha in Lambda^3 U
template <class F>
QuadraticForm<F> quadric_from_endo(const Matrix<F>& M) {
    const unsigned n = static_cast<unsigned>(M.rows());
    if (M.cols() != n) throw ShapeMismatch("endomorphism must be square");
    if (n % 2) throw OddSize("ambient dimension must be even");
    const unsigned k = n / 2;
    const F& K = M.field();
    const auto& B = exterior_basis(n, k);
    // c(I, J) = sum_ij M_ij [iota_{x_j}(e_I ^ e_i) ^ e_J]
    Matrix<F> C(K, B.size(), B.size());
    for (std::size_t a = 0; a < B.size(); ++a) {
        std::uint32_t I = B.masks[a];
        for (unsigned i = 0; i < n; ++i) {
            int s1 = wedge_sign(I, 1u << i);
            if (!s1) continue;
            std::uint32_t Ii = I | (1u << i);
            for (unsigned j = 0; j < n; ++j) {
                if (!(Ii >> j & 1u) || M(i, j).is_zero()) continue;
                int s2 = std::popcount(Ii & ((1u << j) - 1)) % 2 ? -1 : 1;
                std::uint32_t R = Ii ^ (1u << j);
                std::uint32_t Jm = ((1u << n) - 1) ^ R;
                int s3 = wedge_sign(R, Jm);
                auto t = M(i, j);
                if (s1 * s2 * s3 < 0) t = -t;
                C(a, B.index[Jm]) += t;
            }
        }
    }
    auto half = K.from_int(2).inverse();
    return QuadraticForm<F>(half * (C + C.transpose()));
}

// rows span u ^ Lambda^{k-1} U inside Lambda^k U
template <class F>
Matrix<F> schubert_contains(const F& K, const std::vector<typename F::Element>& u, unsigned k) {
    const unsigned n = static_cast<unsigned>(u.size());
    Matrix<F> rows(K, 0, exterior_basis(n, k).size());
    auto uv = ExtVector<F>::vector(K, u);
    for (auto& c : combinations(n, k - 1)) {
        auto blade = ExtVector<F>::basis_blade(K, n, std::vector<unsigned>(c.begin(), c.end()));
        rows.append_row(wedge(uv, blade).coords());
    }
    return row_space(rows);
}

// number of distinct F_p-points on the Segre image of P^{d_1} x ... x P^{d_r}
inline std::uint64_t segre_count(const std::vector<unsigned>& dims, std::uint32_t p) {
    if (p < 5 || !is_prime(p)) throw InvalidParameter("segre_count needs a prime p >= 5");
    std::vector<std::vector<std::vector<std::uint32_t>>> pts;
    for (auto d : dims) {
        pts.emplace_back();
        for_each_projective_point(d + 1, p, [&](const std::vector<std::uint32_t>& x) { pts.back().push_back(x); });
    }
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::size_t> idx(dims.size(), 0);
    for (;;) {
        std::vector<std::uint64_t> img{1};
        for (std::size_t f = 0; f < dims.size(); ++f) {
            std::vector<std::uint64_t> nxt;
            for (auto a : img)
                for (auto b : pts[f][idx[f]]) nxt.push_back(a * b % p);
            img.swap(nxt);
        }
        std::vector<Fp> v;
        for (auto x : img) v.push_back(Fp::raw(static_cast<std::uint32_t>(x), p));
        v = normalize_projective(v);
        std::vector<std::uint32_t> key;
        for (auto& x : v) key.push_back(x.residue());
        seen.insert(key);
        std::size_t f = 0;
        while (f < dims.size() && ++idx[f] == pts[f].size()) idx[f++] = 0;
        if (f == dims.size()) break;
    }
    return seen.size();
}

// F_p-points of the quadratic Veronese image of P^d
inline std::uint64_t veronese_count(std::uint32_t p, unsigned d = 2) {
    if (p < 5 || !is_prime(p)) throw InvalidParameter("veronese_count needs a prime p >= 5");
    std::set<std::vector<std::uint32_t>> seen;
    for_each_projective_point(d + 1, p, [&](const std::vector<std::uint32_t>& x) {
        std::vector<Fp> v;
        for (unsigned i = 0; i <= d; ++i)
            for (unsigned j = i; j <= d; ++j) v.push_back(Fp::raw(static_cast<std::uint32_t>(std::uint64_t(x[i]) * x[j] % p), p));
        v = normalize_projective(v);
        std::vector<std::uint32_t> key;
        for (auto& y : v) key.push_back(y.residue());
        seen.insert(key);
    });
    return seen.size();
}

}  // namespace g2kit
