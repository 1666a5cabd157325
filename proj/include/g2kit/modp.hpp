#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace g2kit {

// Dense matrices over F_p on raw residues, for inner loops of enumerations.
// p must be below 2^31 so that products fit in 64 bits.
namespace modp {

inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr) {
        std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

struct Dense {
    std::uint32_t p;
    std::size_t rows, cols;
    std::vector<std::uint32_t> a;

    Dense(std::uint32_t p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}
    std::uint32_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// in-place row echelon form, returns pivot columns; det_sign tracks swaps and pivot product
inline std::vector<std::size_t> echelon(Dense& m, std::uint64_t* det = nullptr, bool reduce_up = false) {
    const std::uint32_t p = m.p;
    std::vector<std::size_t> piv;
    std::uint64_t d = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pr = r;
        while (pr < m.rows && m(pr, c) == 0) ++pr;
        if (pr == m.rows) {
            d = 0;
            continue;
        }
        if (pr != r) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(pr, j), m(r, j));
            d = d ? p - d : 0;
        }
        d = d * m(r, c) % p;
        std::uint64_t iv = inv(m(r, c), p);
        for (std::size_t j = c; j < m.cols; ++j) m(r, j) = static_cast<std::uint32_t>(m(r, j) * iv % p);
        for (std::size_t i = reduce_up ? 0 : r + 1; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            std::uint64_t f = p - m(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) = static_cast<std::uint32_t>((m(i, j) + f * m(r, j)) % p);
        }
        piv.push_back(c);
        ++r;
    }
    if (det) *det = (m.rows == m.cols && r == m.rows) ? d : 0;
    return piv;
}

inline std::size_t rank(Dense m) { return echelon(m).size(); }

inline std::uint32_t det(Dense m) {
    std::uint64_t d = 0;
    echelon(m, &d);
    return static_cast<std::uint32_t>(d);
}

// basis of {x : m x = 0}
inline std::vector<std::vector<std::uint32_t>> kernel(Dense m) {
    auto piv = echelon(m, nullptr, true);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<std::uint32_t> x(m.cols, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m(i, f) ? m.p - m(i, f) : 0;
        out.push_back(std::move(x));
    }
    return out;
}

inline std::vector<std::uint32_t> residues(const std::vector<Fp>& v) {
    std::vector<std::uint32_t> r;
    for (auto& x : v) r.push_back(x.residue());
    return r;
}

inline std::vector<Fp> lift(const std::vector<std::uint32_t>& v, std::uint32_t p) {
    std::vector<Fp> r;
    for (auto x : v) r.push_back(Fp::raw(x, p));
    return r;
}

// scale so that the first nonzero entry is 1
inline void normalize(std::vector<std::uint32_t>& v, std::uint32_t p) {
    for (auto x : v)
        if (x) {
            std::uint64_t iv = inv(x, p);
            for (auto& y : v) y = static_cast<std::uint32_t>(y * iv % p);
            return;
        }
}

}  // namespace modp

}  // namespace g2kit
