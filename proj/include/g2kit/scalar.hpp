#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace g2kit {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Exact rational, always canonical (gmp keeps num/den reduced, den > 0).
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
        if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of 0");
        return Rational(mpq_class(1) / v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("division by 0");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

// Element of F_p. The modulus travels with the value so that mixing two
// different primes is caught at the operation, not silently wrapped.
class Fp {
public:
    Fp() = default;
    Fp(std::int64_t v, std::uint32_t p) : p_(p) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        r_ = static_cast<std::uint32_t>(r);
    }
    static Fp raw(std::uint32_t r, std::uint32_t p) {
        Fp x;
        x.r_ = r;
        x.p_ = p;
        return x;
    }

    std::uint32_t residue() const { return r_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1; }

    Fp inverse() const {
        if (r_ == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p_));
        std::int64_t a = r_, b = p_, x0 = 1, x1 = 0;
        while (b) {
            std::int64_t q = a / b;
            std::tie(a, b) = std::make_pair(b, a - q * b);
            std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        }
        return Fp(x0, p_);
    }

    Fp& operator+=(const Fp& o) {
        adopt(o);
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        adopt(o);
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        adopt(o);
        r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_);
        return *this;
    }
    Fp& operator/=(const Fp& o) {
        adopt(o);
        return *this *= o.inverse();
    }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    Fp operator-() const { return raw(r_ == 0 ? 0 : p_ - r_, p_); }
    friend bool operator==(const Fp& a, const Fp& b) {
        a.check(b);
        return a.r_ == b.r_;
    }
    friend bool operator<(const Fp& a, const Fp& b) { return a.r_ < b.r_; }

    std::string str() const { return std::to_string(r_) + " mod " + std::to_string(p_); }

private:
    void check(const Fp& o) const {
        // p_ == 0 marks a default-constructed placeholder; anything else must agree
        if (p_ != o.p_) {
            if (p_ == 0 || o.p_ == 0) return;
            throw ModulusMismatch(std::to_string(p_) + " vs " + std::to_string(o.p_));
        }
    }
    void adopt(const Fp& o) {
        if (p_ == 0) p_ = o.p_;
        check(o);
    }
    std::uint32_t r_ = 0, p_ = 0;
};

struct Rationals {
    using Element = Rational;
    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_int(long v) const { return Rational(v); }
    Element from_rational(const Rational& q) const { return q; }
    std::uint32_t characteristic() const { return 0; }
    std::string name() const { return "QQ"; }
    friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

class PrimeField {
public:
    using Element = Fp;
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
        if (p >= (1u << 31)) throw InvalidParameter("prime must be below 2^31");
    }
    Element zero() const { return Fp::raw(0, p_); }
    Element one() const { return Fp::raw(1, p_); }
    Element from_int(std::int64_t v) const { return Fp(v, p_); }
    Element from_rational(const Rational& q) const;
    std::uint32_t p() const { return p_; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

inline std::uint32_t mod_z(const mpz_class& z, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

inline Fp reduce_mod(const Rational& q, const PrimeField& F) {
    std::uint32_t d = mod_z(q.den(), F.p());
    if (d == 0)
        throw DenominatorVanishes(q.str() + " has denominator divisible by " + std::to_string(F.p()));
    return Fp::raw(mod_z(q.num(), F.p()), F.p()) / Fp::raw(d, F.p());
}

inline Fp PrimeField::from_rational(const Rational& q) const { return reduce_mod(q, *this); }

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Fp& x) { return x.str(); }

// residue only, for compact vector output
inline std::string short_string(const Rational& q) { return q.str(); }
inline std::string short_string(const Fp& x) { return std::to_string(x.residue()); }

template <class F>
typename F::Element power(const F& field, typename F::Element x, unsigned e) {
    auto r = field.one();
    while (e) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

}  // namespace g2kit
