#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "exterior.hpp"
#include "matrix.hpp"
#include "random.hpp"
#include "report.hpp"
#include "slice.hpp"

namespace g2kit {

// randomized algebraic identities the rest of the toolkit leans on
namespace properties {

template <class F>
Matrix<F> random_skew(const F& K, std::size_t n, Rng& rng) {
    Matrix<F> m(K, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = random_element(K, rng);
            m(j, i) = -m(i, j);
        }
    return m;
}

template <class F>
ExtVector<F> random_form(const F& K, unsigned n, unsigned k, Rng& rng) {
    return ExtVector<F>(K, n, k, random_vector(K, exterior_basis(n, k).size(), rng));
}

template <class F>
std::size_t field_axiom_failures(const F& K, Rng& rng, int trials) {
    std::size_t bad = 0;
    for (int t = 0; t < trials; ++t) {
        auto a = random_element(K, rng), b = random_element(K, rng), c = random_element(K, rng);
        bad += !((a + b) + c == a + (b + c));
        bad += !((a * b) * c == a * (b * c));
        bad += !(a * (b + c) == a * b + a * c);
        bad += !(a * b == b * a);
        bad += !(a + (-a) == K.zero());
        bad += !(a * K.one() == a);
        if (!a.is_zero()) bad += !(a * (K.one() / a) == K.one());
    }
    return bad;
}

template <class F>
std::size_t exterior_axiom_failures(const F& K, Rng& rng, int trials) {
    std::size_t bad = 0;
    for (int t = 0; t < trials; ++t) {
        auto a = random_form(K, 7, 2, rng), b = random_form(K, 7, 3, rng), c = random_form(K, 7, 1, rng);
        bad += !(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        bad += !(wedge(a, b) == wedge(b, a));
        bad += !(wedge(b, c) == -K.one() * wedge(c, b));
        bad += !wedge(c, c).is_zero();
        auto v = random_vector(K, 7, rng);
        bad += !(contract(v, wedge(a, b)) == wedge(contract(v, a), b) + wedge(a, contract(v, b)));
        bad += !contract(v, contract(v, b)).is_zero();
    }
    return bad;
}

template <class F>
std::size_t pfaffian_failures(const F& K, Rng& rng, int trials) {
    std::size_t bad = 0;
    for (std::size_t n : {2u, 4u, 6u, 8u})
        for (int t = 0; t < trials; ++t) {
            auto m = random_skew(K, n, rng);
            auto pf = pfaffian(m);
            bad += !(pf * pf == determinant(m));
        }
    return bad;
}

// the slice only depends on the ideal: shuffle, rescale, add combinations and zeros
inline std::size_t slice_invariance_failures(const PrimeField& K, Rng& rng, int trials) {
    auto vars = plucker_vars(2, 6, 0);
    auto gens = plucker_ideal(K, 2, 6, vars);
    std::size_t bad = 0;
    auto base3 = graded_slice(K, vars, gens, 3);
    for (int t = 0; t < trials; ++t) {
        auto g = gens;
        std::shuffle(g.begin(), g.end(), rng);
        for (auto& f : g) f *= random_nonzero(K, rng);
        auto extra = g[0] * random_element(K, rng) + g[1] * random_element(K, rng);
        g.push_back(extra);
        g.push_back(MPoly<PrimeField>(K, vars));
        g[2] += g[3] * random_element(K, rng);
        bad += !same_row_space(graded_slice(K, vars, g, 2), graded_slice(K, vars, gens, 2));
        bad += !same_row_space(graded_slice(K, vars, g, 3), base3);
    }
    return bad;
}

inline CheckReport property_suite(Rng& rng, std::uint32_t p, int trials = 20) {
    CheckReport rep;
    rep.check = "properties.algebra";
    rep.claim = "field axioms, exterior-algebra identities, Pf^2 = det and generator-set invariance of graded slices hold";
    rep.parameters = {{"prime", p}, {"trials", trials}};
    Rationals Q;
    PrimeField K(p);
    json fails;
    fails["field_Q"] = field_axiom_failures(Q, rng, trials);
    fails["field_Fp"] = field_axiom_failures(K, rng, trials);
    fails["exterior_Q"] = exterior_axiom_failures(Q, rng, trials / 2);
    fails["exterior_Fp"] = exterior_axiom_failures(K, rng, trials / 2);
    fails["pfaffian_Q"] = pfaffian_failures(Q, rng, 3);
    fails["pfaffian_Fp"] = pfaffian_failures(K, rng, 3);
    fails["slice_invariance"] = slice_invariance_failures(K, rng, 4);
    rep.metrics["failures"] = fails;
    for (auto& [k, v] : fails.items()) rep.require(k, v.get<std::size_t>() == 0);
    rep.finish();
    return rep;
}

}  // namespace properties
}  // namespace g2kit
