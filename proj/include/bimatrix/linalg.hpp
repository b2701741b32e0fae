#pragma once

/*
 * Exact single-matrix linear algebra over a field (Rational in practice):
 * Bareiss determinant, reduced row echelon form with an operation log,
 * nullspace, inverse and linear solve.
 */

#include <bimatrix/matrix.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace bimatrix {

template <typename T>
struct RowOp {
    enum class Kind { Swap, Scale, AddMultiple };
    Kind kind;
    Index target;
    Index source = 0;   // Swap partner or AddMultiple source row
    T factor = T(1);    // Scale factor or AddMultiple multiplier

    friend bool operator==(const RowOp&, const RowOp&) = default;
};

template <typename T>
void apply_row_op(Matrix<T>& m, const RowOp<T>& op)
{
    using K = typename RowOp<T>::Kind;
    switch (op.kind) {
    case K::Swap:
        for (Index j = 0; j < m.cols(); ++j) std::swap(m(op.target, j), m(op.source, j));
        break;
    case K::Scale:
        for (Index j = 0; j < m.cols(); ++j) m(op.target, j) *= op.factor;
        break;
    case K::AddMultiple:
        for (Index j = 0; j < m.cols(); ++j) m(op.target, j) += op.factor * m(op.source, j);
        break;
    }
}

// Fraction-free elimination: every intermediate division is exact.
template <typename T>
T determinant(Matrix<T> m)
{
    if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
    const Index n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            Index p = k + 1;
            while (p < n && m(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            for (Index j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            negate = !negate;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

template <typename T>
struct Echelon {
    Matrix<T> reduced;
    std::vector<RowOp<T>> ops;
    IndexSet pivot_cols;

    Index rank() const { return pivot_cols.size(); }
};

// Canonical reduced row echelon form. Pivot row is the first nonzero entry at
// or below the current row; trivial operations are not logged.
template <typename T>
Echelon<T> rref(Matrix<T> m)
{
    using K = typename RowOp<T>::Kind;
    Echelon<T> out;
    Index r = 0;
    for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
        Index p = r;
        while (p < m.rows() && m(p, c) == T(0)) ++p;
        if (p == m.rows()) continue;
        auto log = [&](RowOp<T> op) {
            apply_row_op(m, op);
            out.ops.push_back(std::move(op));
        };
        if (p != r) log({K::Swap, r, p, T(1)});
        if (!(m(r, c) == T(1))) log({K::Scale, r, 0, T(1) / m(r, c)});
        for (Index i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == T(0)) continue;
            log({K::AddMultiple, i, r, -m(i, c)});
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

template <typename T>
Index rank(const Matrix<T>& m)
{
    return rref(m).rank();
}

// Basis of {x : m x = 0}, one vector per free column, free entry set to 1.
template <typename T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m)
{
    Echelon<T> e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (Index c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (Index f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (Index i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m)
{
    if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
    const Index n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    Echelon<T> e = rref(std::move(aug));
    if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
    IndexSet rs(n), cs(n);
    for (Index i = 0; i < n; ++i) { rs[i] = i; cs[i] = n + i; }
    return e.reduced.select(rs, cs);
}

template <typename T>
struct LinearSolution {
    std::vector<T> particular;
    std::vector<std::vector<T>> nullspace_basis;
};

// Solution set of m x = y, or nullopt when the system is inconsistent.
template <typename T>
std::optional<LinearSolution<T>> solve(const Matrix<T>& m, const std::vector<T>& y)
{
    if (y.size() != m.rows()) throw DimMismatch("right-hand side length does not match row count");
    Matrix<T> aug(m.rows(), m.cols() + 1);
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = y[i];
    }
    Echelon<T> e = rref(std::move(aug));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
    LinearSolution<T> out;
    out.particular.assign(m.cols(), T(0));
    for (Index i = 0; i < e.pivot_cols.size(); ++i) out.particular[e.pivot_cols[i]] = e.reduced(i, m.cols());
    out.nullspace_basis = nullspace(m);
    return out;
}

template <typename T>
std::vector<T> apply(const Matrix<T>& m, const std::vector<T>& v)
{
    if (v.size() != m.cols()) throw DimMismatch("vector length does not match column count");
    std::vector<T> out(m.rows(), T(0));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

} // namespace bimatrix
