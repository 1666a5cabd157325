#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace g2kit {

class VarSet {
public:
    VarSet() : names_(std::make_shared<std::vector<std::string>>()) {}
    explicit VarSet(std::vector<std::string> names)
        : names_(std::make_shared<std::vector<std::string>>(std::move(names))) {}

    std::size_t size() const { return names_->size(); }
    const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }

    std::optional<std::size_t> index(const std::string& n) const {
        auto it = std::find(names_->begin(), names_->end(), n);
        if (it == names_->end()) return std::nullopt;
        return static_cast<std::size_t>(it - names_->begin());
    }
    std::size_t at(const std::string& n) const {
        auto i = index(n);
        if (!i) throw VarMismatch("no variable named " + n);
        return *i;
    }

    friend bool operator==(const VarSet& a, const VarSet& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

struct Monomial {
    std::vector<std::uint16_t> e;
    unsigned deg = 0;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<std::uint16_t> ex) : e(std::move(ex)) {
        for (auto x : e) deg += x;
    }
    static Monomial var(std::size_t n, std::size_t i, unsigned k = 1) {
        Monomial m(n);
        m.e[i] = static_cast<std::uint16_t>(k);
        m.deg = k;
        return m;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = a.e[i] + b.e[i];
        m.deg = a.deg + b.deg;
        return m;
    }
    bool divides(const Monomial& b) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// >0 if a > b in graded reverse lexicographic order
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

// all monomials of degree d in n variables, leading first
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
    std::vector<Monomial> out;
    Monomial m(n);
    m.deg = d;
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == n) {
            m.e[i] = static_cast<std::uint16_t>(left);
            out.push_back(m);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            m.e[i] = static_cast<std::uint16_t>(k);
            self(self, i + 1, left - k);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back(m);
        return out;
    }
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrevlexDesc{});
    return out;
}

inline std::string monomial_string(const Monomial& m, const VarSet& v) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += v[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

template <class F>
class MPoly {
public:
    using Element = typename F::Element;
    using Terms = std::map<Monomial, Element, GrevlexDesc>;

    MPoly(F field, VarSet vars) : field_(std::move(field)), vars_(std::move(vars)) {}

    static MPoly var(const F& field, const VarSet& vars, std::size_t i) {
        MPoly p(field, vars);
        p.terms_.emplace(Monomial::var(vars.size(), i), field.one());
        return p;
    }
    static MPoly var(const F& field, const VarSet& vars, const std::string& name) {
        return var(field, vars, vars.at(name));
    }
    static MPoly constant(const F& field, const VarSet& vars, const Element& c) {
        MPoly p(field, vars);
        if (!c.is_zero()) p.terms_.emplace(Monomial(vars.size()), c);
        return p;
    }
    static MPoly term(const F& field, const VarSet& vars, const Monomial& m, const Element& c) {
        MPoly p(field, vars);
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    const F& field() const { return field_; }
    const VarSet& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Element coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? field_.zero() : it->second;
    }
    void add_term(const Monomial& m, const Element& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Element& leading_coeff() const { return terms_.begin()->second; }

    int degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max<int>(d, m.deg);
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = terms_.begin()->first.deg;
        for (auto& [m, c] : terms_)
            if (m.deg != d) return false;
        return true;
    }

    MPoly& operator+=(const MPoly& o) {
        same(o);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        same(o);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MPoly& operator*=(const Element& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, x] : terms_) x *= c;
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const Element& c) { return a *= c; }
    friend MPoly operator*(const Element& c, MPoly a) { return a *= c; }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [m, x] : r.terms_) x = -x;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.same(b);
        MPoly r(a.field_, a.vars_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MPoly mul_monomial(const Monomial& m) const {
        MPoly r(field_, vars_);
        for (auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    Element eval(const std::vector<Element>& pt) const {
        if (pt.size() != vars_.size()) throw VarMismatch("point has wrong length");
        Element s = field_.zero();
        for (auto& [m, c] : terms_) {
            Element t = c;
            for (std::size_t i = 0; i < m.e.size(); ++i)
                for (unsigned k = 0; k < m.e[i]; ++k) t *= pt[i];
            s += t;
        }
        return s;
    }

    MPoly homogeneous_part(unsigned d) const {
        MPoly r(field_, vars_);
        for (auto& [m, c] : terms_)
            if (m.deg == d) r.terms_.emplace(m, c);
        return r;
    }

    // canonical text: coefficients as num/den (Q) or residues in [0,p) (F_p)
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::string cs = short_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs.erase(0, 1);
            if (first)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            first = false;
            if (m.deg == 0)
                s += cs;
            else if (cs == "1")
                s += monomial_string(m, vars_);
            else
                s += cs + "*" + monomial_string(m, vars_);
        }
        return s;
    }

    template <class G, class Map>
    MPoly<G> map_coefficients(const G& target, Map&& f) const {
        MPoly<G> r(target, vars_);
        for (auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

    void same(const MPoly& o) const {
        if (vars_ != o.vars_) throw VarMismatch("polynomials live in different rings");
    }

private:
    F field_;
    VarSet vars_;
    Terms terms_;
};

template <class F>
MPoly<F> pow(const MPoly<F>& p, unsigned e) {
    auto r = MPoly<F>::constant(p.field(), p.vars(), p.field().one());
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

inline MPoly<PrimeField> reduce_mod(const MPoly<Rationals>& f, const PrimeField& F) {
    return f.map_coefficients(F, [&](const Rational& q) { return reduce_mod(q, F); });
}

// x_i -> images[i]; images must be linear forms in a common target ring
template <class F>
MPoly<F> linear_substitute(const MPoly<F>& f, const std::vector<MPoly<F>>& images) {
    if (images.size() != f.vars().size()) throw VarMismatch("one image per variable required");
    if (images.empty()) throw VarMismatch("no images");
    const VarSet& tv = images[0].vars();
    for (auto& g : images) {
        if (g.vars() != tv) throw VarMismatch("images live in different rings");
        for (auto& [m, c] : g.terms())
            if (m.deg != 1) throw DegreeMismatch("substitution image is not a linear form");
    }
    MPoly<F> r(f.field(), tv);
    for (auto& [m, c] : f.terms()) {
        auto t = MPoly<F>::constant(f.field(), tv, c);
        for (std::size_t i = 0; i < m.e.size(); ++i)
            for (unsigned k = 0; k < m.e[i]; ++k) t = t * images[i];
        r += t;
    }
    return r;
}

namespace detail {
inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n"), b = s.find_last_not_of(" \t\n");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}
}  // namespace detail

// inverse of MPoly::str(); also accepts products like "2*x*y^3" in any factor order
template <class F>
MPoly<F> parse_poly(const std::string& text, const F& field, const VarSet& vars) {
    MPoly<F> out(field, vars);
    std::string s = detail::trim(text);
    if (s.empty()) throw ParseError("empty polynomial");
    std::size_t i = 0;
    bool neg = false;
    auto flush = [&](const std::string& raw, bool negative) {
        std::string t = detail::trim(raw);
        if (t.empty()) throw ParseError("empty term in '" + text + "'");
        auto c = field.one();
        Monomial m(vars.size());
        std::stringstream ss(t);
        std::string fac;
        while (std::getline(ss, fac, '*')) {
            fac = detail::trim(fac);
            if (fac.empty()) throw ParseError("empty factor in '" + t + "'");
            if (std::isdigit(static_cast<unsigned char>(fac[0]))) {
                c *= field.from_rational(Rational::parse(fac));
                continue;
            }
            unsigned k = 1;
            auto caret = fac.find('^');
            std::string name = fac;
            if (caret != std::string::npos) {
                name = detail::trim(fac.substr(0, caret));
                k = static_cast<unsigned>(std::stoul(fac.substr(caret + 1)));
            }
            auto idx = vars.index(name);
            if (!idx) throw VarMismatch("unknown variable '" + name + "'");
            m.e[*idx] += static_cast<std::uint16_t>(k);
            m.deg += k;
        }
        out.add_term(m, negative ? -c : c);
    };
    std::string cur;
    if (s[0] == '-') {
        neg = true;
        i = 1;
    } else if (s[0] == '+') {
        i = 1;
    }
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if ((ch == '+' || ch == '-') && !detail::trim(cur).empty() && cur.back() != '^' &&
            detail::trim(cur).back() != '*') {
            flush(cur, neg);
            neg = ch == '-';
            cur.clear();
        } else {
            cur += ch;
        }
    }
    flush(cur, neg);
    return out;
}

}  // namespace g2kit
