#pragma once

// Reference computations for the test suites. Nothing here calls into the
// elimination, polynomial or spectral code under test: determinants come
// from the permutation sum, characteristic polynomials from interpolating
// those determinants, ranks from the largest nonvanishing minor.

#include <bimatrix.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using bimatrix::Index;
using bimatrix::Matrix;
using bimatrix::Rational;

inline int permutation_sign(const std::vector<Index>& p)
{
    int inversions = 0;
    for (Index i = 0; i < p.size(); ++i)
        for (Index j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

// Sum over all permutations of the column subscripts.
template <typename T>
T leibniz_det(const Matrix<T>& m)
{
    const Index n = m.rows();
    std::vector<Index> p(n);
    std::iota(p.begin(), p.end(), 0);
    T total(0);
    do {
        T term(permutation_sign(p));
        for (Index i = 0; i < n; ++i) term = term * m(i, p[i]);
        total = total + term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline Matrix<Rational> shift(const Matrix<Rational>& a, const Rational& x)
{
    Matrix<Rational> out(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) out(i, j) = (i == j ? x : Rational(0)) - a(i, j);
    return out;
}

// det(xI - A) sampled at x = 0..n and interpolated (Newton form), ascending coefficients.
inline std::vector<Rational> charpoly_coefficients(const Matrix<Rational>& a)
{
    const Index n = a.rows();
    std::vector<Rational> xs, ys;
    for (Index k = 0; k <= n; ++k) {
        xs.emplace_back(static_cast<std::int64_t>(k));
        ys.push_back(leibniz_det(shift(a, xs.back())));
    }
    // divided differences
    std::vector<Rational> dd = ys;
    for (Index level = 1; level <= n; ++level)
        for (Index i = n; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    std::vector<Rational> poly{dd[n]};
    for (Index k = n; k-- > 0;) {
        // poly = poly * (x - xs[k]) + dd[k]
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (Index i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * xs[k];
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
    return poly;
}

inline std::vector<std::vector<Index>> subsets(Index n, Index k)
{
    std::vector<std::vector<Index>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<Index> s;
        for (Index i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i);
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

// Largest k with a nonzero k x k minor.
inline Index minor_rank(const Matrix<Rational>& m)
{
    for (Index k = std::min(m.rows(), m.cols()); k > 0; --k)
        for (const auto& rs : subsets(m.rows(), k))
            for (const auto& cs : subsets(m.cols(), k))
                if (!leibniz_det(m.select(rs, cs)).is_zero()) return k;
    return 0;
}

// Integer eigenvalues of an integer matrix lie in the Gershgorin discs; for
// each candidate the nullity comes from minor_rank. Rational eigenvalues of
// an integer matrix are integers, so nothing is missed.
struct BruteEigen {
    std::vector<std::pair<Rational, Index>> roots;  // value, nullity
    Index eigenvector_count() const
    {
        Index s = 0;
        for (const auto& r : roots) s += r.second;
        return s;
    }
    bool has_eigenbasis(Index n) const { return eigenvector_count() == n; }
};

inline BruteEigen brute_eigen(const Matrix<Rational>& a)
{
    const Index n = a.rows();
    Rational bound(0);
    for (Index i = 0; i < n; ++i) {
        Rational r(0);
        for (Index j = 0; j < n; ++j) r += bimatrix::abs(a(i, j));
        bound = std::max(bound, r);
    }
    const auto b = static_cast<std::int64_t>(bound.numerator() / bound.denominator()) + 1;
    BruteEigen out;
    for (std::int64_t v = -b; v <= b; ++v) {
        const Matrix<Rational> s = shift(a, Rational(v));
        if (!leibniz_det(s).is_zero()) continue;
        out.roots.emplace_back(Rational(v), n - minor_rank(s));
    }
    return out;
}

// ---------------------------------------------------------------- generators

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    Index size(Index lo, Index hi) { return static_cast<Index>(integer(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi))); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(std::int64_t range = 5)
    {
        const std::int64_t den = coin() ? 1 : integer(1, 4);
        return Rational(integer(-range, range)) / Rational(den);
    }

    Matrix<Rational> int_matrix(Index r, Index c, std::int64_t range = 4)
    {
        Matrix<Rational> m(r, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j) m(i, j) = Rational(integer(-range, range));
        return m;
    }
    Matrix<Rational> rational_matrix(Index r, Index c)
    {
        Matrix<Rational> m(r, c);
        for (Index i = 0; i < r; ++i)
            for (Index j = 0; j < c; ++j) m(i, j) = rational();
        return m;
    }

    // Sparse-ish integer matrix with a planted triangular block structure, so
    // repeated and rational eigenvalues show up often.
    Matrix<Rational> spectral_matrix(Index n)
    {
        Matrix<Rational> t(n, n);
        for (Index i = 0; i < n; ++i) {
            t(i, i) = Rational(integer(-2, 2));
            for (Index j = i + 1; j < n; ++j) t(i, j) = Rational(integer(0, 3) == 0 ? integer(-2, 2) : 0);
        }
        // conjugate by a unimodular matrix to hide the structure
        Matrix<Rational> u = Matrix<Rational>::identity(n);
        Matrix<Rational> ui = Matrix<Rational>::identity(n);
        for (int step = 0; step < 3 && n > 1; ++step) {
            const Index i = size(0, n - 1);
            Index j = size(0, n - 1);
            if (i == j) j = (j + 1) % n;
            const Rational k(integer(-1, 1));
            Matrix<Rational> e = Matrix<Rational>::identity(n), ei = Matrix<Rational>::identity(n);
            e(i, j) = k;
            ei(i, j) = -k;
            u = u * e;
            ui = ei * ui;
        }
        return ui * t * u;
    }

    template <typename F>
    bimatrix::BiMatrix<Rational> bimatrix_of(F&& make)
    {
        for (;;) {
            auto a = make();
            auto b = make();
            if (bimatrix::BiMatrix<Rational>::relaxed(a, b).admissible())
                return bimatrix::BiMatrix<Rational>(std::move(a), std::move(b));
        }
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace oracle
