#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace g2kit {

using Rng = std::mt19937_64;

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// independent stream per (seed, label) so that check order never matters
inline Rng derive_rng(std::uint64_t seed, const std::string& label) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(fnv1a(label)), static_cast<std::uint32_t>(fnv1a(label) >> 32)};
    return Rng(seq);
}

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

inline Fp random_element(const PrimeField& F, Rng& rng) {
    return Fp::raw(static_cast<std::uint32_t>(uniform_below(rng, F.p())), F.p());
}

// small integers keep rational computations readable; width controls the range
inline Rational random_element(const Rationals&, Rng& rng, long width = 5) {
    return Rational(static_cast<long>(uniform_below(rng, 2 * width + 1)) - width);
}

template <class F>
std::vector<typename F::Element> random_vector(const F& field, std::size_t n, Rng& rng) {
    std::vector<typename F::Element> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_element(field, rng));
    return v;
}

template <class F>
typename F::Element random_nonzero(const F& field, Rng& rng) {
    for (;;) {
        auto x = random_element(field, rng);
        if (!x.is_zero()) return x;
    }
}

}  // namespace g2kit
