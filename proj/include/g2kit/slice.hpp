#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"

namespace g2kit {

// coefficient rows of the degree-d part of the ideal generated by gens:
// each homogeneous generator of degree e <= d is multiplied by all monomials of degree d-e
template <class F>
Matrix<F> graded_slice(const F& K, const VarSet& vars, const std::vector<MPoly<F>>& gens, unsigned d) {
    auto mons = monomials_of_degree(vars.size(), d);
    std::map<Monomial, std::size_t, GrevlexDesc> pos;
    for (std::size_t i = 0; i < mons.size(); ++i) pos[mons[i]] = i;
    Matrix<F> M(K, 0, mons.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw NonHomogeneousInput("graded slice of " + g.str());
        int e = g.degree();
        if (e > static_cast<int>(d)) continue;
        for (auto& m : monomials_of_degree(vars.size(), d - e)) {
            std::vector<typename F::Element> row(mons.size(), K.zero());
            for (auto& [t, c] : g.terms()) row[pos.at(t * m)] = c;
            M.append_row(row);
        }
    }
    return M;
}

template <class F>
MPoly<F> poly_from_row(const F& K, const VarSet& vars, const std::vector<typename F::Element>& row, unsigned d) {
    auto mons = monomials_of_degree(vars.size(), d);
    MPoly<F> p(K, vars);
    for (std::size_t i = 0; i < mons.size(); ++i)
        if (!row[i].is_zero()) p.add_term(mons[i], row[i]);
    return p;
}

struct SliceComparison {
    std::size_t rank_a = 0, rank_b = 0, rank_joint = 0;
    bool equal() const { return rank_a == rank_b && rank_a == rank_joint; }
    bool a_in_b() const { return rank_joint == rank_b; }
    bool b_in_a() const { return rank_joint == rank_a; }
    std::string witness;  // an element on one side only, when they differ
};

template <class F>
SliceComparison compare_slices(const F& K, const VarSet& vars, const std::vector<MPoly<F>>& a,
                               const std::vector<MPoly<F>>& b, unsigned d) {
    auto A = graded_slice(K, vars, a, d), B = graded_slice(K, vars, b, d);
    SliceComparison c;
    c.rank_a = rank(A);
    c.rank_b = rank(B);
    c.rank_joint = rank(A.stack(B));
    if (!c.equal()) {
        // first generator row of the larger side that the other misses
        const auto& [src, dst] = c.a_in_b() ? std::pair(&B, &A) : std::pair(&A, &B);
        auto base = rank(*dst);
        for (std::size_t r = 0; r < src->rows(); ++r) {
            Matrix<F> one(K, 0, src->cols());
            one.append_row(src->row(r));
            if (rank(dst->stack(one)) > base) {
                c.witness = poly_from_row(K, vars, src->row(r), d).str();
                break;
            }
        }
    }
    return c;
}

// A linear subspace given by linear equations, used to eliminate variables.
// Pivot variables are solved for in terms of the free ones; variables in `keep`
// are only eliminated when nothing else is available.
template <class F>
struct LinearSection {
    VarSet ambient, reduced;
    std::vector<MPoly<F>> images;  // ambient variable -> linear form over reduced
    std::vector<std::size_t> free_vars;

    MPoly<F> restrict(const MPoly<F>& f) const { return linear_substitute(f, images); }
    std::vector<MPoly<F>> restrict(const std::vector<MPoly<F>>& fs) const {
        std::vector<MPoly<F>> out;
        for (auto& f : fs) {
            auto r = restrict(f);
            if (!r.is_zero()) out.push_back(r);
        }
        return out;
    }
    // a point of the reduced space back in ambient coordinates
    std::vector<typename F::Element> lift(const std::vector<typename F::Element>& x) const {
        std::vector<typename F::Element> y;
        for (auto& im : images) y.push_back(im.eval(x));
        return y;
    }
};

template <class F>
LinearSection<F> linear_section(const F& K, const VarSet& ambient, const std::vector<MPoly<F>>& linear,
                                const std::vector<std::string>& keep = {}) {
    const std::size_t n = ambient.size();
    std::vector<std::size_t> order;
    std::vector<bool> kept(n, false);
    for (auto& k : keep) kept[ambient.at(k)] = true;
    for (std::size_t v = 0; v < n; ++v)
        if (!kept[v]) order.push_back(v);
    for (std::size_t v = 0; v < n; ++v)
        if (kept[v]) order.push_back(v);
    Matrix<F> M(K, 0, n);
    for (auto& f : linear) {
        if (f.is_zero()) continue;
        if (f.degree() != 1 || !f.is_homogeneous()) throw DegreeMismatch("linear section needs linear forms");
        std::vector<typename F::Element> row(n, K.zero());
        for (auto& [m, c] : f.terms())
            for (std::size_t j = 0; j < n; ++j)
                if (m.e[order[j]]) row[j] = c;
        M.append_row(row);
    }
    auto R = rref(M);
    std::vector<bool> is_pivot(n, false);
    for (auto c : R.pivots) is_pivot[order[c]] = true;
    LinearSection<F> S{ambient, ambient, {}, {}};
    std::vector<std::string> names;
    std::vector<std::size_t> slot(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (!is_pivot[v]) {
            slot[v] = S.free_vars.size();
            S.free_vars.push_back(v);
            names.push_back(ambient[v]);
        }
    S.reduced = VarSet(names);
    S.images.assign(n, MPoly<F>(K, S.reduced));
    for (auto v : S.free_vars) S.images[v] = MPoly<F>::var(K, S.reduced, slot[v]);
    for (std::size_t i = 0; i < R.pivots.size(); ++i) {
        std::size_t pv = order[R.pivots[i]];
        MPoly<F> img(K, S.reduced);
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t v = order[j];
            if (v == pv || R.reduced(i, j).is_zero()) continue;
            img.add_term(Monomial::var(names.size(), slot[v]), -R.reduced(i, j));
        }
        S.images[pv] = img;
    }
    return S;
}

template <class F>
std::vector<MPoly<F>> linear_part(const std::vector<MPoly<F>>& gens) {
    std::vector<MPoly<F>> out;
    for (auto& g : gens)
        if (!g.is_zero() && g.degree() == 1) out.push_back(g);
    return out;
}

}  // namespace g2kit
