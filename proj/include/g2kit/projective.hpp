#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace g2kit {

template <class E>
bool is_zero_vector(const std::vector<E>& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// scale so that the first nonzero coordinate is 1
template <class E>
std::vector<E> normalize_projective(std::vector<E> v) {
    std::size_t i = 0;
    while (i < v.size() && v[i].is_zero()) ++i;
    if (i == v.size()) return v;
    auto inv = v[i].inverse();
    for (auto& x : v) x *= inv;
    return v;
}

template <class E>
bool proportional(const std::vector<E>& a, const std::vector<E>& b) {
    if (a.size() != b.size()) return false;
    return normalize_projective(a) == normalize_projective(b);
}

inline std::uint64_t projective_count(unsigned dim, std::uint64_t p) {
    std::uint64_t c = 0, q = 1;
    for (unsigned i = 0; i <= dim; ++i) {
        c += q;
        q *= p;
    }
    return c;
}

// visits each point of P^{n-1}(F_p) once, as residues with first nonzero entry 1
inline void for_each_projective_point(std::size_t n, std::uint32_t p,
                                      const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    std::vector<std::uint32_t> x(n, 0);
    for (std::size_t lead = n; lead-- > 0;) {
        std::fill(x.begin(), x.end(), 0);
        x[lead] = 1;
        // free coordinates are those after lead
        for (;;) {
            fn(x);
            std::size_t i = n;
            while (i-- > lead + 1) {
                if (++x[i] < p) break;
                x[i] = 0;
            }
            if (i == lead) break;
        }
    }
}

inline std::vector<Fp> to_fp(const std::vector<std::uint32_t>& r, std::uint32_t p) {
    std::vector<Fp> v;
    v.reserve(r.size());
    for (auto x : r) v.push_back(Fp::raw(x, p));
    return v;
}

inline std::uint64_t pack_residues(const std::vector<Fp>& v) {
    std::uint64_t h = 1469598103934665603ull;
    for (auto& x : v) {
        h ^= x.residue() + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace g2kit
