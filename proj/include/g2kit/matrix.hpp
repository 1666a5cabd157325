#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "mpoly.hpp"
#include "scalar.hpp"

namespace g2kit {

template <class F>
class Matrix {
public:
    using Element = typename F::Element;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}
    Matrix(F field, const std::vector<std::vector<Element>>& rows)
        : field_(std::move(field)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
        a_.reserve(rows_ * cols_);
        for (auto& r : rows) {
            if (r.size() != cols_) throw ShapeMismatch("ragged rows");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }
    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }
    static Matrix from_ints(const F& field, const std::vector<std::vector<long>>& rows) {
        std::vector<std::vector<Element>> r;
        for (auto& row : rows) {
            r.emplace_back();
            for (long v : row) r.back().push_back(field.from_int(v));
        }
        return Matrix(field, r);
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Element& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Element& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Element> row(std::size_t i) const {
        return std::vector<Element>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    std::vector<Element> col(std::size_t j) const {
        std::vector<Element> c;
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }
    void append_row(const std::vector<Element>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw ShapeMismatch("row length " + std::to_string(r.size()));
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
    }
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeMismatch("product shape");
        Matrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Element& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }
    std::vector<Element> apply(const std::vector<Element>& v) const {
        if (v.size() != cols_) throw ShapeMismatch("vector length");
        std::vector<Element> r(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("sum shape");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("difference shape");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Matrix operator*(const Element& c, Matrix a) {
        for (auto& x : a.a_) x *= c;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }
    bool is_skew() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!(*this)(i, i).is_zero()) return false;
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == -(*this)(j, i))) return false;
        }
        return true;
    }
    Element trace() const {
        Element t = field_.zero();
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }
    Matrix submatrix(const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) const {
        Matrix s(field_, r.size(), c.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) s(i, j) = (*this)(r[i], c[j]);
        return s;
    }
    Matrix stack(const Matrix& below) const {
        if (rows_ == 0) return below;
        if (below.rows_ == 0) return *this;
        if (below.cols_ != cols_) throw ShapeMismatch("stack widths differ");
        Matrix s = *this;
        s.a_.insert(s.a_.end(), below.a_.begin(), below.a_.end());
        s.rows_ += below.rows_;
        return s;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + short_string((*this)(i, j));
            s += "]\n";
        }
        return s;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Element> a_;
};

template <class F>
struct Rref {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

// reduced row echelon form; zero rows are dropped from `reduced`
template <class F>
Rref<F> rref(Matrix<F> m) {
    using E = typename F::Element;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    const std::size_t R = m.rows(), C = m.cols();
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m(p, c).is_zero()) ++p;
        if (p == R) continue;
        m.swap_rows(p, r);
        E inv = m(r, c).inverse();
        for (std::size_t k = c; k < C; ++k) m(r, k) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            E f = m(i, c);
            for (std::size_t k = c; k < C; ++k)
                if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
        }
        piv.push_back(c);
        ++r;
    }
    Matrix<F> red(m.field(), r, C);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) red(i, j) = m(i, j);
    return {std::move(red), std::move(piv)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    // forward elimination only
    Matrix<F> a = m;
    std::size_t r = 0;
    const std::size_t R = a.rows(), C = a.cols();
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a(p, c).is_zero()) ++p;
        if (p == R) continue;
        a.swap_rows(p, r);
        auto inv = a(r, c).inverse();
        for (std::size_t i = r + 1; i < R; ++i) {
            if (a(i, c).is_zero()) continue;
            auto f = a(i, c) * inv;
            for (std::size_t k = c; k < C; ++k)
                if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
        }
        ++r;
    }
    return r;
}

// basis of {x : m x = 0}, one vector per row
template <class F>
Matrix<F> kernel(const Matrix<F>& m) {
    auto rr = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_piv(C, false);
    for (auto p : rr.pivots) is_piv[p] = true;
    Matrix<F> k(m.field(), 0, C);
    for (std::size_t f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        std::vector<typename F::Element> v(C, m.field().zero());
        v[f] = m.field().one();
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
        k.append_row(v);
    }
    return k;
}

// row space basis in reduced form
template <class F>
Matrix<F> row_space(const Matrix<F>& m) {
    return rref(m).reduced;
}

template <class F>
bool same_row_space(const Matrix<F>& a, const Matrix<F>& b) {
    std::size_t ra = rank(a), rb = rank(b);
    return ra == rb && rank(a.stack(b)) == ra;
}

template <class F>
bool row_space_contains(const Matrix<F>& big, const Matrix<F>& small) {
    return rank(big.stack(small)) == rank(big);
}

// basis of the intersection of two row spaces
template <class F>
Matrix<F> intersect_row_spaces(const Matrix<F>& a, const Matrix<F>& b) {
    // x in both iff x = u A = v B, i.e. (u, -v) in ker [A; B]^T
    Matrix<F> A = row_space(a), B = row_space(b);
    if (A.rows() == 0 || B.rows() == 0) return Matrix<F>(a.field(), 0, a.cols());
    Matrix<F> st = A.stack(B).transpose();
    Matrix<F> ker = kernel(st);
    Matrix<F> out(a.field(), 0, a.cols());
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        std::vector<typename F::Element> v(a.cols(), a.field().zero());
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) v[j] += ker(r, i) * A(i, j);
        out.append_row(v);
    }
    return row_space(out);
}

template <class F>
typename F::Element bareiss_det(Matrix<F> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
    const F& K = m.field();
    if (n == 0) return K.one();
    auto prev = K.one();
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return K.zero();
            m.swap_rows(p, k);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return neg ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

template <class F>
typename F::Element gauss_det(Matrix<F> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
    auto d = m.field().one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return m.field().zero();
        if (p != c) {
            m.swap_rows(p, c);
            d = -d;
        }
        d *= m(c, c);
        auto inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            auto f = m(i, c) * inv;
            for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
        }
    }
    return d;
}

inline Rational determinant(const Matrix<Rationals>& m) { return bareiss_det(m); }
inline Fp determinant(const Matrix<PrimeField>& m) { return gauss_det(m); }

// Pfaffian by expansion along the first row over the perfect matchings.
// Works for any commutative ring type given through `at` and `zero`.
template <class T, class At>
T pfaffian_expand(std::size_t n, At&& at, const T& zero) {
    if (n % 2) throw OddSize("Pfaffian of odd size " + std::to_string(n));
    if (n == 0) throw ShapeMismatch("empty Pfaffian has no ring to live in");
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    auto rec = [&](auto&& self, std::vector<std::size_t>& live) -> T {
        std::size_t a = live[0];
        T acc = zero;
        for (std::size_t j = 1; j < live.size(); ++j) {
            std::vector<std::size_t> rest;
            for (std::size_t k = 1; k < live.size(); ++k)
                if (k != j) rest.push_back(live[k]);
            T sub = rest.empty() ? at(a, live[j]) : at(a, live[j]) * self(self, rest);
            if (j % 2 == 1)
                acc = acc + sub;
            else
                acc = acc - sub;
        }
        return acc;
    };
    return rec(rec, idx);
}

template <class F>
typename F::Element pfaffian(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("Pfaffian of non-square matrix");
    if (!m.is_skew()) throw NotSkewSymmetric("matrix is not skew-symmetric");
    if (m.rows() == 0) return m.field().one();
    return pfaffian_expand<typename F::Element>(m.rows(), [&](std::size_t i, std::size_t j) { return m(i, j); },
                                               m.field().zero());
}

// skew matrix with polynomial entries
template <class F>
using PolyMatrix = std::vector<std::vector<MPoly<F>>>;

template <class F>
void check_skew(const PolyMatrix<F>& m) {
    std::size_t n = m.size();
    for (auto& r : m)
        if (r.size() != n) throw ShapeMismatch("polynomial matrix not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (!m[i][i].is_zero()) throw NotSkewSymmetric("nonzero diagonal");
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != -m[j][i]) throw NotSkewSymmetric("entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

template <class F>
MPoly<F> pfaffian_poly(const PolyMatrix<F>& m, const std::vector<std::size_t>& rows) {
    const auto& z = m[0][0];
    MPoly<F> zero(z.field(), z.vars());
    return pfaffian_expand<MPoly<F>>(rows.size(), [&](std::size_t i, std::size_t j) { return m[rows[i]][rows[j]]; },
                                     zero);
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> c(k);
    auto rec = [&](auto&& self, std::size_t start, std::size_t pos) -> void {
        if (pos == k) {
            out.push_back(c);
            return;
        }
        for (std::size_t i = start; i + (k - pos) <= n; ++i) {
            c[pos] = i;
            self(self, i + 1, pos + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

// all principal sub-Pfaffians of size 2k, rows in lexicographic order; zeros kept
template <class F>
std::vector<MPoly<F>> pfaffian_ideal(const PolyMatrix<F>& m, std::size_t size) {
    if (size % 2) throw OddSize("sub-Pfaffian size must be even");
    check_skew(m);
    std::vector<MPoly<F>> out;
    for (auto& rows : combinations(m.size(), size)) out.push_back(pfaffian_poly(m, rows));
    return out;
}

// coefficients c_0..c_n of det(t I - A), low degree first
template <class F>
std::vector<typename F::Element> char_poly_faddeev(const Matrix<F>& A) {
    const std::size_t n = A.rows();
    if (n != A.cols()) throw ShapeMismatch("char_poly of non-square matrix");
    const F& K = A.field();
    if (K.characteristic() != 0 && K.characteristic() <= n)
        throw InvalidParameter("Faddeev-LeVerrier needs characteristic > n");
    std::vector<typename F::Element> c(n + 1, K.zero());
    c[n] = K.one();
    Matrix<F> M(K, n, n);
    auto I = Matrix<F>::identity(K, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = A * M + c[n - k + 1] * I;
        c[n - k] = -(A * M).trace() / K.from_int(static_cast<long>(k));
    }
    return c;
}

namespace detail {
template <class E>
std::vector<E> poly_mul_linear(const std::vector<E>& p, const E& root, const E& one) {
    // p(t) * (t - root)
    std::vector<E> r(p.size() + 1, root - root);
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i + 1] += p[i] * one;
        r[i] -= p[i] * root;
    }
    return r;
}
}  // namespace detail

// Hessenberg reduction, valid in every characteristic
template <class F>
std::vector<typename F::Element> char_poly_hessenberg(const Matrix<F>& A) {
    using E = typename F::Element;
    const std::size_t n = A.rows();
    if (n != A.cols()) throw ShapeMismatch("char_poly of non-square matrix");
    const F& K = A.field();
    Matrix<F> H = A;
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && H(i, m - 1).is_zero()) ++i;
        if (i == n) continue;
        if (i != m) {
            H.swap_rows(i, m);
            for (std::size_t r = 0; r < n; ++r) std::swap(H(r, i), H(r, m));
        }
        E piv_inv = H(m, m - 1).inverse();
        for (std::size_t j = m + 1; j < n; ++j) {
            if (H(j, m - 1).is_zero()) continue;
            E u = H(j, m - 1) * piv_inv;
            for (std::size_t k = 0; k < n; ++k) H(j, k) -= u * H(m, k);
            for (std::size_t k = 0; k < n; ++k) H(k, m) += u * H(k, j);
        }
    }
    std::vector<std::vector<E>> p(n + 1);
    p[0] = {K.one()};
    for (std::size_t m = 1; m <= n; ++m) {
        p[m] = detail::poly_mul_linear(p[m - 1], H(m - 1, m - 1), K.one());
        E t = K.one();
        for (std::size_t i = 1; i < m; ++i) {
            t *= H(m - i, m - i - 1);
            E f = t * H(m - i - 1, m - 1);
            for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) p[m][k] -= f * p[m - i - 1][k];
        }
    }
    return p[n];
}

inline std::vector<Rational> char_poly(const Matrix<Rationals>& A) { return char_poly_faddeev(A); }
inline std::vector<Fp> char_poly(const Matrix<PrimeField>& A) { return char_poly_hessenberg(A); }

// symmetric matrix S with q(x) = x^T S x; needs characteristic != 2
template <class F>
class QuadraticForm {
public:
    using Element = typename F::Element;

    explicit QuadraticForm(Matrix<F> s) : s_(std::move(s)) {
        if (!s_.is_symmetric()) throw NotSymmetric("quadratic form matrix");
    }
    static QuadraticForm from_poly(const MPoly<F>& q) {
        const F& K = q.field();
        if (K.characteristic() == 2) throw InvalidParameter("characteristic 2");
        const std::size_t n = q.vars().size();
        Matrix<F> s(K, n, n);
        auto half = K.from_int(2).inverse();
        for (auto& [m, c] : q.terms()) {
            if (m.deg != 2) throw DegreeMismatch("quadric has a term of degree " + std::to_string(m.deg));
            std::vector<std::size_t> ix;
            for (std::size_t i = 0; i < n; ++i)
                for (unsigned k = 0; k < m.e[i]; ++k) ix.push_back(i);
            if (ix[0] == ix[1])
                s(ix[0], ix[0]) += c;
            else {
                s(ix[0], ix[1]) += c * half;
                s(ix[1], ix[0]) += c * half;
            }
        }
        return QuadraticForm(std::move(s));
    }

    const Matrix<F>& matrix() const { return s_; }
    std::size_t dim() const { return s_.rows(); }
    std::size_t rank() const { return g2kit::rank(s_); }
    Matrix<F> kernel() const { return g2kit::kernel(s_); }

    Element eval(const std::vector<Element>& x) const { return polar(x, x); }
    Element polar(const std::vector<Element>& x, const std::vector<Element>& y) const {
        Element r = s_.field().zero();
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            Element t = s_.field().zero();
            for (std::size_t j = 0; j < dim(); ++j) t += s_(i, j) * y[j];
            r += x[i] * t;
        }
        return r;
    }
    MPoly<F> to_poly(const VarSet& vars) const {
        const F& K = s_.field();
        MPoly<F> p(K, vars);
        auto two = K.from_int(2);
        for (std::size_t i = 0; i < dim(); ++i) {
            p.add_term(Monomial::var(dim(), i, 2), s_(i, i));
            for (std::size_t j = i + 1; j < dim(); ++j)
                p.add_term(Monomial::var(dim(), i) * Monomial::var(dim(), j), two * s_(i, j));
        }
        return p;
    }

    friend QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
        return QuadraticForm(a.s_ + b.s_);
    }
    friend QuadraticForm operator*(const Element& c, const QuadraticForm& a) { return QuadraticForm(c * a.s_); }

private:
    Matrix<F> s_;
};

template <class F>
std::size_t quadric_rank(const MPoly<F>& q) {
    return QuadraticForm<F>::from_poly(q).rank();
}

}  // namespace g2kit
