#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "mpoly.hpp"
#include "random.hpp"
#include "scalar.hpp"

namespace g2kit {

struct GbOptions {
    std::size_t max_pairs = 200000;
    unsigned max_degree = 20;
};

struct GbStats {
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t pairs_discarded = 0;
    unsigned max_degree = 0;
    bool from_cache = false;
};

struct GroebnerBasis {
    VarSet vars;
    std::uint32_t p = 0;
    std::vector<MPoly<PrimeField>> generators;
    std::vector<MPoly<PrimeField>> basis;  // reduced, monic, sorted by leading monomial
    std::vector<Monomial> leading;
    GbStats stats;
};

namespace gb_detail {

constexpr std::size_t kMaxVars = 32;

struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t deg = 0;
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

struct MonoHash {
    std::size_t operator()(const Mono& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : m.e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline int cmp(const Mono& a, const Mono& b, std::size_t nv) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (std::size_t i = nv; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}
inline Mono mul(const Mono& a, const Mono& b) {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
    r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return r;
}
inline Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg = static_cast<std::uint16_t>(r.deg + r.e[i]);
    }
    return r;
}
inline bool divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}
inline Mono quot(const Mono& b, const Mono& a) {
    Mono r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
    r.deg = static_cast<std::uint16_t>(b.deg - a.deg);
    return r;
}
inline bool coprime(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}
inline std::uint32_t mask(const Mono& a) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.e[i]) m |= 1u << i;
    return m;
}

struct Term {
    Mono m;
    std::uint32_t c;
};
using Poly = std::vector<Term>;  // descending, monic once in the basis

// dense coordinates on the monomials of one degree, ordered leading first
struct DegreeSpace {
    std::vector<Mono> monos;
    std::unordered_map<Mono, std::uint32_t, MonoHash> index;
};

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return Fp::raw(a, p).inverse().residue(); }

class Engine {
public:
    Engine(std::size_t nv, std::uint32_t p, GbOptions opt) : nv_(nv), p_(p), opt_(opt) {}

    void run(std::vector<Poly> gens) {
        std::stable_sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) { return a[0].m.deg < b[0].m.deg; });
        std::size_t gi = 0;
        for (;;) {
            unsigned d = ~0u;
            if (gi < gens.size()) d = gens[gi][0].m.deg;
            for (auto& pr : pairs_) d = std::min<unsigned>(d, pr.lcm.deg);
            if (d == ~0u) break;
            if (d > opt_.max_degree)
                throw BudgetExceeded("degree " + std::to_string(d) + " exceeds cap " + std::to_string(opt_.max_degree));
            stats_.max_degree = std::max(stats_.max_degree, d);
            // pairs of this degree, smallest lcm first
            std::vector<Pair> now;
            std::vector<Pair> later;
            for (auto& pr : pairs_) (pr.lcm.deg == d ? now : later).push_back(pr);
            pairs_.swap(later);
            std::sort(now.begin(), now.end(), [&](const Pair& a, const Pair& b) {
                int c = cmp(a.lcm, b.lcm, nv_);
                if (c) return c < 0;
                return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
            });
            std::vector<Poly> todo;
            while (gi < gens.size() && gens[gi][0].m.deg == d) todo.push_back(gens[gi++]);
            for (auto& pr : now) {
                if (++stats_.pairs_reduced > opt_.max_pairs)
                    throw BudgetExceeded("more than " + std::to_string(opt_.max_pairs) + " pair reductions");
                todo.push_back(spoly(pr.i, pr.j));
            }
            const auto& space = degree_space(d);
            for (auto& f : todo) {
                if (f.empty()) continue;
                Poly h = reduce(f, space);
                if (h.empty()) {
                    ++stats_.zero_reductions;
                    continue;
                }
                add(std::move(h));
            }
        }
        finish();
    }

    const std::vector<Poly>& basis() const { return final_; }
    const GbStats& stats() const { return stats_; }


    // normal form of a homogeneous polynomial against the final basis
    Poly normal_form(const Poly& f) {
        if (f.empty()) return f;
        G_ = final_;
        lt_.clear();
        masks_.clear();
        for (auto& g : G_) {
            lt_.push_back(g[0].m);
            masks_.push_back(mask(g[0].m));
        }
        return reduce(f, degree_space(f[0].m.deg));
    }

private:
    struct Pair {
        std::size_t i, j;
        Mono lcm;
    };

    const DegreeSpace& degree_space(unsigned d) {
        auto it = spaces_.find(d);
        if (it != spaces_.end()) return it->second;
        DegreeSpace s;
        Mono m;
        m.deg = static_cast<std::uint16_t>(d);
        auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
            if (i + 1 == nv_) {
                m.e[i] = static_cast<std::uint8_t>(left);
                s.monos.push_back(m);
                return;
            }
            for (unsigned k = 0; k <= left; ++k) {
                m.e[i] = static_cast<std::uint8_t>(k);
                self(self, i + 1, left - k);
            }
            m.e[i] = 0;
        };
        rec(rec, 0, d);
        std::sort(s.monos.begin(), s.monos.end(), [&](const Mono& a, const Mono& b) { return cmp(a, b, nv_) > 0; });
        s.index.reserve(s.monos.size() * 2);
        for (std::uint32_t k = 0; k < s.monos.size(); ++k) s.index.emplace(s.monos[k], k);
        return spaces_.emplace(d, std::move(s)).first->second;
    }

    Poly spoly(std::size_t i, std::size_t j) const {
        const Poly& a = G_[i];
        const Poly& b = G_[j];
        Mono L = lcm(a[0].m, b[0].m);
        Mono ua = quot(L, a[0].m), ub = quot(L, b[0].m);
        // both monic: ua*a - ub*b, merged
        Poly r;
        std::size_t x = 1, y = 1;
        while (x < a.size() || y < b.size()) {
            int c;
            Mono ma, mb;
            if (x < a.size()) ma = mul(ua, a[x].m);
            if (y < b.size()) mb = mul(ub, b[y].m);
            if (x == a.size())
                c = -1;
            else if (y == b.size())
                c = 1;
            else
                c = cmp(ma, mb, nv_);
            if (c > 0) {
                r.push_back({ma, a[x].c});
                ++x;
            } else if (c < 0) {
                r.push_back({mb, b[y].c ? p_ - b[y].c : 0});
                ++y;
            } else {
                std::uint32_t v = (a[x].c + p_ - b[y].c) % p_;
                if (v) r.push_back({ma, v});
                ++x;
                ++y;
            }
        }
        return r;
    }

    int find_reducer(const Mono& m, std::uint32_t mm) const {
        for (std::size_t k = 0; k < G_.size(); ++k) {
            if (removed_.size() > k && removed_[k]) continue;
            if ((masks_[k] & ~mm) != 0) continue;
            if (divides(lt_[k], m)) return static_cast<int>(k);
        }
        return -1;
    }

    // full reduction in the dense space of one degree; result is monic
    Poly reduce(const Poly& f, const DegreeSpace& space) {
        Poly out = reduce_raw(f, space);
        if (!out.empty() && out[0].c != 1) {
            std::uint64_t inv = inv_mod(out[0].c, p_);
            for (auto& t : out) t.c = static_cast<std::uint32_t>(t.c * inv % p_);
        }
        return out;
    }

    // Gebauer-Moller update
    void add(Poly h) {
        const std::size_t hi = G_.size();
        const Mono lh = h[0].m;
        std::vector<Pair> C;
        for (std::size_t g = 0; g < hi; ++g) {
            if (removed_[g]) continue;
            C.push_back({g, hi, lcm(lt_[g], lh)});
        }
        std::vector<Pair> D;
        for (std::size_t a = 0; a < C.size(); ++a) {
            bool keep = coprime(lt_[C[a].i], lh);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < C.size() && keep; ++b)
                    if (divides(C[b].lcm, C[a].lcm)) keep = false;
                for (std::size_t b = 0; b < D.size() && keep; ++b)
                    if (divides(D[b].lcm, C[a].lcm)) keep = false;
            }
            if (keep) D.push_back(C[a]);
        }
        std::vector<Pair> nb;
        for (auto& pr : pairs_) {
            bool drop = divides(lh, pr.lcm) && !(lcm(lt_[pr.i], lh) == pr.lcm) && !(lcm(lt_[pr.j], lh) == pr.lcm);
            if (drop)
                ++stats_.pairs_discarded;
            else
                nb.push_back(pr);
        }
        for (auto& pr : D) {
            if (coprime(lt_[pr.i], lh))
                ++stats_.pairs_discarded;
            else
                nb.push_back(pr);
        }
        pairs_.swap(nb);
        for (std::size_t g = 0; g < hi; ++g)
            if (!removed_[g] && divides(lh, lt_[g])) removed_[g] = true;
        G_.push_back(std::move(h));
        lt_.push_back(lh);
        masks_.push_back(mask(lh));
        removed_.push_back(false);
    }

    void finish() {
        std::vector<std::size_t> keep;
        for (std::size_t k = 0; k < G_.size(); ++k) {
            if (removed_[k]) continue;
            bool red = false;
            for (std::size_t l = 0; l < G_.size() && !red; ++l)
                if (l != k && !removed_[l] && divides(lt_[l], lt_[k]) && !(lt_[l] == lt_[k] && l > k)) red = true;
            if (!red) keep.push_back(k);
        }
        std::vector<Poly> mins;
        for (auto k : keep) mins.push_back(G_[k]);
        std::sort(mins.begin(), mins.end(), [&](const Poly& a, const Poly& b) { return cmp(a[0].m, b[0].m, nv_) < 0; });
        // tail reduction against the minimal basis
        G_ = mins;
        lt_.clear();
        masks_.clear();
        removed_.assign(G_.size(), false);
        for (auto& g : G_) {
            lt_.push_back(g[0].m);
            masks_.push_back(mask(g[0].m));
        }
        final_.clear();
        for (std::size_t k = 0; k < G_.size(); ++k) {
            Poly tail(G_[k].begin() + 1, G_[k].end());
            Poly head{G_[k][0]};
            if (!tail.empty()) {
                Poly rt = reduce_raw(tail, degree_space(tail[0].m.deg));
                head.insert(head.end(), rt.begin(), rt.end());
            }
            final_.push_back(head);
        }
    }

    Poly reduce_raw(const Poly& f, const DegreeSpace& space) {
        const std::size_t N = space.monos.size();
        if (dense_.size() < N) {
            dense_.assign(N, 0);
            bits_.assign((N + 63) / 64, 0);
        }
        for (auto& t : f) {
            auto k = space.index.at(t.m);
            dense_[k] = t.c;
            bits_[k >> 6] |= 1ull << (k & 63);
        }
        Poly out;
        const std::size_t W = (N + 63) / 64;
        for (std::size_t w = 0; w < W;) {
            if (!bits_[w]) {
                ++w;
                continue;
            }
            std::size_t k = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits_[w]));
            bits_[w] &= bits_[w] - 1;
            std::uint32_t c = dense_[k];
            dense_[k] = 0;
            if (!c) continue;
            const Mono& m = space.monos[k];
            int r = find_reducer(m, mask(m));
            if (r < 0) {
                out.push_back({m, c});
                continue;
            }
            const Poly& g = G_[r];
            Mono u = quot(m, g[0].m);
            std::uint64_t f_ = p_ - c;
            for (std::size_t t = 1; t < g.size(); ++t) {
                auto kk = space.index.at(mul(u, g[t].m));
                dense_[kk] = static_cast<std::uint32_t>((dense_[kk] + f_ * g[t].c) % p_);
                bits_[kk >> 6] |= 1ull << (kk & 63);
            }
        }
        return out;
    }

    std::size_t nv_;
    std::uint32_t p_;
    GbOptions opt_;
    GbStats stats_;
    std::vector<Poly> G_, final_;
    std::vector<Mono> lt_;
    std::vector<std::uint32_t> masks_;
    std::vector<bool> removed_;
    std::vector<Pair> pairs_;
    std::unordered_map<unsigned, DegreeSpace> spaces_;
    std::vector<std::uint32_t> dense_;
    std::vector<std::uint64_t> bits_;
};

inline Poly to_internal(const MPoly<PrimeField>& f) {
    Poly r;
    for (auto& [m, c] : f.terms()) {
        Mono x;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] > 255) throw DegreeOverflow("exponent too large");
            x.e[i] = static_cast<std::uint8_t>(m.e[i]);
        }
        x.deg = static_cast<std::uint16_t>(m.deg);
        r.push_back({x, c.residue()});
    }
    return r;
}

inline MPoly<PrimeField> from_internal(const Poly& f, const PrimeField& F, const VarSet& v) {
    MPoly<PrimeField> r(F, v);
    for (auto& t : f) {
        std::vector<std::uint16_t> e(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) e[i] = t.m.e[i];
        r.add_term(Monomial(e), Fp::raw(t.c, F.p()));
    }
    return r;
}

}  // namespace gb_detail

// on-disk cache of reduced bases, keyed by a content hash of (variables, prime, generators)
class GbCache {
public:
    static GbCache& global() {
        static GbCache c;
        return c;
    }
    void configure(bool enabled, std::optional<std::filesystem::path> dir = std::nullopt) {
        std::lock_guard<std::mutex> lock(mu_);
        enabled_ = enabled;
        if (dir) dir_ = *dir;
    }
    bool enabled() const { return enabled_; }
    std::filesystem::path dir() const { return dir_; }

    static std::filesystem::path default_dir() {
        if (const char* d = std::getenv("G2KIT_CACHE_DIR")) return d;
        if (const char* x = std::getenv("XDG_CACHE_HOME")) return std::filesystem::path(x) / "g2kit";
        if (const char* h = std::getenv("HOME")) return std::filesystem::path(h) / ".cache" / "g2kit";
        return ".g2kit-cache";
    }

    static std::string key_text(const VarSet& v, std::uint32_t p, const std::vector<MPoly<PrimeField>>& gens) {
        std::string s = "vars:";
        for (auto& n : v.names()) s += n + ",";
        s += "\np:" + std::to_string(p) + "\n";
        for (auto& g : gens) s += g.str() + "\n";
        return s;
    }

    std::optional<std::vector<MPoly<PrimeField>>> load(const std::string& key, const PrimeField& F, const VarSet& v) {
        if (!enabled_) return std::nullopt;
        std::lock_guard<std::mutex> lock(mu_);
        std::ifstream in(path_for(key));
        if (!in) return std::nullopt;
        std::string line;
        if (!std::getline(in, line) || line != kFormat) return std::nullopt;
        std::string stored_key, k;
        std::size_t nkey = 0;
        if (!std::getline(in, line)) return std::nullopt;
        nkey = std::stoul(line);
        for (std::size_t i = 0; i < nkey; ++i) {
            if (!std::getline(in, k)) return std::nullopt;
            stored_key += k + "\n";
        }
        if (stored_key != key) return std::nullopt;  // hash collision
        std::vector<MPoly<PrimeField>> out;
        while (std::getline(in, line))
            if (!line.empty()) out.push_back(parse_poly(line, F, v));
        return out;
    }

    void store(const std::string& key, const std::vector<MPoly<PrimeField>>& basis) {
        if (!enabled_) return;
        std::lock_guard<std::mutex> lock(mu_);
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) return;
        auto path = path_for(key);
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return;
            std::size_t lines = static_cast<std::size_t>(std::count(key.begin(), key.end(), '\n'));
            out << kFormat << "\n" << lines << "\n" << key;
            for (auto& g : basis) out << g.str() << "\n";
        }
        std::filesystem::rename(tmp, path, ec);
    }

private:
    GbCache() : dir_(default_dir()) {}
    std::filesystem::path path_for(const std::string& key) const {
        std::ostringstream name;
        name << std::hex << fnv1a(key) << ".gb";
        return dir_ / name.str();
    }
    static constexpr const char* kFormat = "g2kit-gb-cache 1";
    std::mutex mu_;
    bool enabled_ = false;
    std::filesystem::path dir_;
};

inline GroebnerBasis buchberger(const std::vector<MPoly<PrimeField>>& gens, GbOptions opt = {}, bool use_cache = true) {
    if (gens.empty()) throw InvalidParameter("empty generator list");
    const VarSet& v = gens[0].vars();
    const PrimeField F = gens[0].field();
    if (v.size() > gb_detail::kMaxVars) throw InvalidParameter("at most 32 variables");
    std::vector<gb_detail::Poly> in;
    for (auto& g : gens) {
        if (g.vars() != v) throw VarMismatch("generators live in different rings");
        if (!(g.field() == F)) throw ModulusMismatch("generators over different primes");
        if (!g.is_homogeneous()) throw NonHomogeneousInput(g.str());
        if (!g.is_zero()) {
            if (static_cast<unsigned>(g.degree()) > opt.max_degree)
                throw BudgetExceeded("generator degree above cap");
            in.push_back(gb_detail::to_internal(g));
        }
    }
    GroebnerBasis out;
    out.vars = v;
    out.p = F.p();
    out.generators = gens;
    std::string key;
    auto& cache = GbCache::global();
    if (use_cache && cache.enabled()) {
        key = GbCache::key_text(v, F.p(), gens);
        if (auto hit = cache.load(key, F, v)) {
            out.basis = *hit;
            for (auto& g : out.basis) out.leading.push_back(g.leading_monomial());
            out.stats.from_cache = true;
            return out;
        }
    }
    gb_detail::Engine eng(v.size(), F.p(), opt);
    if (!in.empty()) eng.run(in);
    for (auto& g : eng.basis()) {
        out.basis.push_back(gb_detail::from_internal(g, F, v));
        out.leading.push_back(out.basis.back().leading_monomial());
    }
    out.stats = eng.stats();
    if (use_cache && cache.enabled()) cache.store(key, out.basis);
    return out;
}

// remainder of a homogeneous f on division by a Groebner basis
inline MPoly<PrimeField> normal_form(const MPoly<PrimeField>& f, const GroebnerBasis& gb) {
    if (f.is_zero()) return f;
    if (!f.is_homogeneous()) throw NonHomogeneousInput(f.str());
    // plain multivariate division, independent of the dense engine
    MPoly<PrimeField> r(f.field(), f.vars()), g = f;
    while (!g.is_zero()) {
        const Monomial lm = g.leading_monomial();
        const Fp lc = g.leading_coeff();
        bool reduced = false;
        for (auto& b : gb.basis) {
            if (b.leading_monomial().divides(lm)) {
                Monomial u(lm.e.size());
                for (std::size_t i = 0; i < lm.e.size(); ++i) u.e[i] = lm.e[i] - b.leading_monomial().e[i];
                u.deg = lm.deg - b.leading_monomial().deg;
                g -= (lc / b.leading_coeff()) * b.mul_monomial(u);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(lm, lc);
            g.add_term(lm, -lc);
        }
    }
    return r;
}

struct HilbertProfile {
    std::vector<mpz_class> numerator;  // of the series over (1-t)^n
    std::vector<mpz_class> h;          // numerator after dividing out (1-t)^(n-dim)
    unsigned nvars = 0;
    unsigned krull_dim = 0;
    int projective_dim = -1;
    mpz_class degree;

    std::string numerator_string() const {
        std::string s;
        for (std::size_t i = 0; i < numerator.size(); ++i) {
            if (numerator[i] == 0) continue;
            mpz_class c = numerator[i];
            std::string term = abs(c) == 1 && i ? "" : mpz_class(abs(c)).get_str();
            if (i) term += (term.empty() ? "" : "*") + std::string("t") + (i > 1 ? "^" + std::to_string(i) : "");
            if (s.empty())
                s = (c < 0 ? "-" : "") + term;
            else
                s += (c < 0 ? " - " : " + ") + term;
        }
        return s.empty() ? "0" : s;
    }
};

namespace hilbert_detail {

using Exp = std::vector<std::uint16_t>;

inline bool divides(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline std::vector<Exp> minimalize(std::vector<Exp> g) {
    std::sort(g.begin(), g.end(), [](const Exp& a, const Exp& b) {
        unsigned da = 0, db = 0;
        for (auto x : a) da += x;
        for (auto x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    });
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<Exp> out;
    for (auto& m : g) {
        bool red = false;
        for (auto& o : out)
            if (divides(o, m)) {
                red = true;
                break;
            }
        if (!red) out.push_back(m);
    }
    return out;
}

inline std::vector<mpz_class> mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline void add_shifted(std::vector<mpz_class>& a, const std::vector<mpz_class>& b, unsigned shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

// numerator K(t) with HS(S/I) = K(t)/(1-t)^n
inline std::vector<mpz_class> numerator(std::vector<Exp> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    const std::size_t n = gens[0].size();
    // base case: pairwise coprime generators
    bool coprime = true;
    std::vector<int> owner(n, -1);
    for (std::size_t g = 0; g < gens.size() && coprime; ++g)
        for (std::size_t i = 0; i < n; ++i)
            if (gens[g][i]) {
                if (owner[i] >= 0) {
                    coprime = false;
                    break;
                }
                owner[i] = static_cast<int>(g);
            }
    if (coprime) {
        std::vector<mpz_class> r{1};
        for (auto& g : gens) {
            unsigned d = 0;
            for (auto x : g) d += x;
            std::vector<mpz_class> f(d + 1, 0);
            f[0] = 1;
            f[d] = -1;
            r = mul(r, f);
        }
        return r;
    }
    // pivot: the variable in the most generators, exponent = a middle value among them
    std::size_t best = 0, cnt_best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t c = 0;
        for (auto& g : gens)
            if (g[i]) ++c;
        if (c > cnt_best) {
            cnt_best = c;
            best = i;
        }
    }
    std::vector<std::uint16_t> ex;
    for (auto& g : gens)
        if (g[best]) ex.push_back(g[best]);
    std::sort(ex.begin(), ex.end());
    std::uint16_t e = ex[(ex.size() - 1) / 2];
    Exp piv(n, 0);
    piv[best] = e;
    // HN(I) = HN(I + (p)) + t^deg(p) HN(I : p)
    std::vector<Exp> sum = gens;
    sum.push_back(piv);
    std::vector<Exp> colon;
    for (auto g : gens) {
        g[best] = g[best] > e ? static_cast<std::uint16_t>(g[best] - e) : 0;
        colon.push_back(g);
    }
    auto a = numerator(std::move(sum));
    auto b = numerator(std::move(colon));
    add_shifted(a, b, e);
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

}  // namespace hilbert_detail

inline HilbertProfile hilbert_profile_of_monomials(const std::vector<Monomial>& lts, std::size_t nvars) {
    std::vector<hilbert_detail::Exp> g;
    for (auto& m : lts) g.push_back(m.e);
    HilbertProfile hp;
    hp.nvars = static_cast<unsigned>(nvars);
    hp.numerator = g.empty() ? std::vector<mpz_class>{1} : hilbert_detail::numerator(g);
    // divide by (1 - t) while the value at 1 vanishes
    std::vector<mpz_class> h = hp.numerator;
    unsigned divisions = 0;
    auto at_one = [](const std::vector<mpz_class>& f) {
        mpz_class s = 0;
        for (auto& c : f) s += c;
        return s;
    };
    while (h.size() > 1 && at_one(h) == 0) {
        // synthetic division by (1 - t): q_i = sum_{j<=i} h_j
        std::vector<mpz_class> q(h.size() - 1, 0);
        mpz_class acc = 0;
        for (std::size_t i = 0; i + 1 < h.size(); ++i) {
            acc += h[i];
            q[i] = acc;
        }
        h = q;
        ++divisions;
    }
    hp.h = h;
    hp.krull_dim = static_cast<unsigned>(nvars) - divisions;
    hp.projective_dim = static_cast<int>(hp.krull_dim) - 1;
    hp.degree = at_one(h);
    return hp;
}

inline HilbertProfile hilbert_profile(const GroebnerBasis& gb) {
    return hilbert_profile_of_monomials(gb.leading, gb.vars.size());
}

struct EmptinessCertificate {
    bool empty = false;
    std::vector<unsigned> pure_power_exponents;  // one per variable when empty
    HilbertProfile profile;
    GbStats stats;
};

// the projective scheme is empty iff each variable has a pure power among the leading terms
inline EmptinessCertificate projective_emptiness(const std::vector<MPoly<PrimeField>>& gens, GbOptions opt = {}) {
    auto gb = buchberger(gens, opt);
    EmptinessCertificate cert;
    cert.stats = gb.stats;
    cert.profile = hilbert_profile(gb);
    const std::size_t n = gb.vars.size();
    cert.pure_power_exponents.assign(n, 0);
    for (auto& m : gb.leading) {
        std::size_t nz = 0, at = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m.e[i]) {
                ++nz;
                at = i;
            }
        if (nz == 1 && (cert.pure_power_exponents[at] == 0 || m.e[at] < cert.pure_power_exponents[at]))
            cert.pure_power_exponents[at] = m.e[at];
    }
    cert.empty = std::all_of(cert.pure_power_exponents.begin(), cert.pure_power_exponents.end(),
                             [](unsigned e) { return e > 0; });
    if (!cert.empty) cert.pure_power_exponents.clear();
    return cert;
}

}  // namespace g2kit
