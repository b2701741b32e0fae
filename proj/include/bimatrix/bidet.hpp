#pragma once

/*
 * Bideterminants and everything built on them: bicofactors, biminors,
 * Laplace expansion along a shared row set, the Cauchy-Binet breakdown of a
 * rectangular product, biinverse and the singularity classes.
 */

#include <bimatrix/core.hpp>
#include <bimatrix/linalg.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace bimatrix {

template <typename T>
struct BiDeterminant {
    T first;
    T second;

    friend bool operator==(const BiDeterminant&, const BiDeterminant&) = default;
    friend BiDeterminant operator+(const BiDeterminant& a, const BiDeterminant& b)
    {
        return {a.first + b.first, a.second + b.second};
    }
    friend BiDeterminant operator*(const BiDeterminant& a, const BiDeterminant& b)
    {
        return {a.first * b.first, a.second * b.second};
    }
};

template <typename T>
BiDeterminant<T> bideterminant(const BiMatrix<T>& a)
{
    if (!a.is_square()) throw ShapeError("bideterminant needs square components");
    return {determinant(a.first()), determinant(a.second())};
}

namespace detail {

template <typename T>
void require_uniform_square(const BiMatrix<T>& a, const char* what)
{
    if (!a.is_square()) throw ShapeError(std::string(what) + " needs square components");
    if (a.first().rows() != a.second().rows())
        throw ShapeError(std::string(what) + " needs components of the same order");
}

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<IndexSet> combinations(Index n, Index k)
{
    std::vector<IndexSet> out;
    IndexSet cur(k);
    for (Index i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        Index i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (Index j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

inline IndexSet complement(const IndexSet& s, Index n)
{
    IndexSet out;
    for (Index i = 0, k = 0; i < n; ++i) {
        if (k < s.size() && s[k] == i) { ++k; continue; }
        out.push_back(i);
    }
    return out;
}

} // namespace detail

template <typename T>
BiDeterminant<T> bicofactor(const BiMatrix<T>& a, Index i, Index j)
{
    detail::require_uniform_square(a, "bicofactor");
    const Index n = a.first().rows();
    if (i >= n || j >= n) throw IndexOutOfRange("bicofactor position out of range");
    const T sign = (i + j) % 2 == 0 ? T(1) : T(-1);
    return {sign * determinant(a.first().minor_matrix(i, j)), sign * determinant(a.second().minor_matrix(i, j))};
}

template <typename T>
BiDeterminant<T> biminor(const BiMatrix<T>& a, const IndexSet& rows, const IndexSet& cols)
{
    if (rows.size() != cols.size()) throw ShapeError("biminor needs as many rows as columns");
    detail::check_index_set(rows, std::min(a.first().rows(), a.second().rows()), "biminor rows");
    detail::check_index_set(cols, std::min(a.first().cols(), a.second().cols()), "biminor columns");
    return {determinant(a.first().select(rows, cols)), determinant(a.second().select(rows, cols))};
}

template <typename T>
struct LaplaceTerm {
    IndexSet cols;
    int sign;
    BiDeterminant<T> minor;       // |N| from the chosen rows and cols
    BiDeterminant<T> complement;  // |M| from the remaining rows and cols
    BiDeterminant<T> term;        // sign * |N| * |M|
};

template <typename T>
struct LaplaceTermSet {
    IndexSet row_set;
    std::vector<LaplaceTerm<T>> terms;
    BiDeterminant<T> total;
};

// Expansion along one row set shared by both components; column sets are
// enumerated in lexicographic order.
template <typename T>
LaplaceTermSet<T> bilaplace_expand(const BiMatrix<T>& a, const IndexSet& row_set)
{
    detail::require_uniform_square(a, "Laplace expansion");
    const Index n = a.first().rows();
    detail::check_index_set(row_set, n, "Laplace row set");
    if (row_set.size() >= n) throw IndexOutOfRange("Laplace row set must leave at least one row");
    const IndexSet rest_rows = detail::complement(row_set, n);
    Index row_sum = 0;
    for (Index r : row_set) row_sum += r;

    LaplaceTermSet<T> out{row_set, {}, {T(0), T(0)}};
    for (const IndexSet& cols : detail::combinations(n, row_set.size())) {
        const IndexSet rest_cols = detail::complement(cols, n);
        Index col_sum = 0;
        for (Index c : cols) col_sum += c;
        const int sign = (row_sum + col_sum) % 2 == 0 ? 1 : -1;
        LaplaceTerm<T> t{cols, sign,
                         {determinant(a.first().select(row_set, cols)), determinant(a.second().select(row_set, cols))},
                         {determinant(a.first().select(rest_rows, rest_cols)),
                          determinant(a.second().select(rest_rows, rest_cols))},
                         {}};
        t.term = t.minor * t.complement;
        if (sign < 0) t.term = {-t.term.first, -t.term.second};
        out.total = out.total + t.term;
        out.terms.push_back(std::move(t));
    }
    return out;
}

enum class Singularity { NonBisingular, SemiBisingular, Bisingular };

struct SingularityClass {
    Singularity kind;
    Component singular;  // which component is singular; meaningful for SemiBisingular

    std::string str() const
    {
        switch (kind) {
        case Singularity::NonBisingular: return "NonBisingular";
        case Singularity::Bisingular: return "Bisingular";
        case Singularity::SemiBisingular: return std::string("SemiBisingular:") + to_string(singular);
        }
        return "?";
    }
    friend bool operator==(const SingularityClass&, const SingularityClass&) = default;
};

template <typename T>
SingularityClass singularity_class(const BiMatrix<T>& a)
{
    const auto d = bideterminant(a);
    const bool z1 = d.first == T(0);
    const bool z2 = d.second == T(0);
    if (z1 && z2) return {Singularity::Bisingular, Component::Both};
    if (z1) return {Singularity::SemiBisingular, Component::First};
    if (z2) return {Singularity::SemiBisingular, Component::Second};
    return {Singularity::NonBisingular, Component::Both};
}

template <typename T>
BiMatrix<T> biinverse(const BiMatrix<T>& a)
{
    if (!a.is_square()) throw ShapeError("biinverse needs square components");
    auto i1 = inverse(a.first());
    auto i2 = inverse(a.second());
    if (!i1 && !i2) throw SingularError(Component::Both);
    if (!i1) throw SingularError(Component::First);
    if (!i2) throw SingularError(Component::Second);
    return BiMatrix<T>(std::move(*i1), std::move(*i2));
}

template <typename T>
struct CauchyBinetTerm {
    IndexSet cols;            // columns of a, equivalently rows of b
    BiDeterminant<T> a_minor;
    BiDeterminant<T> b_minor;
    BiDeterminant<T> term;
};

template <typename T>
struct RectangularProductBidet {
    BiDeterminant<T> total;   // |a b|
    std::vector<CauchyBinetTerm<T>> terms;
};

// a is m x n and b is n x m in both components, m <= n.
template <typename T>
RectangularProductBidet<T> rectangular_product_bidet(const BiMatrix<T>& a, const BiMatrix<T>& b)
{
    if (!a.is_uniform() || !b.is_uniform())
        throw ShapeError("rectangular product bideterminant needs uniform bimatrices");
    const Index m = a.first().rows();
    const Index n = a.first().cols();
    if (b.first().rows() != n || b.first().cols() != m)
        throw ShapeError("second factor must be " + std::to_string(n) + "x" + std::to_string(m));
    if (m > n) throw ShapeError("rectangular product bideterminant needs rows <= columns in the first factor");

    IndexSet all_m(m);
    for (Index i = 0; i < m; ++i) all_m[i] = i;
    RectangularProductBidet<T> out{{determinant(a.first() * b.first()), determinant(a.second() * b.second())}, {}};
    for (const IndexSet& cols : detail::combinations(n, m)) {
        CauchyBinetTerm<T> t{cols,
                             {determinant(a.first().select(all_m, cols)), determinant(a.second().select(all_m, cols))},
                             {determinant(b.first().select(cols, all_m)), determinant(b.second().select(cols, all_m))},
                             {}};
        t.term = t.a_minor * t.b_minor;
        out.terms.push_back(std::move(t));
    }
    return out;
}

} // namespace bimatrix
