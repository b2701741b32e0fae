#pragma once

/*
 * Dense row-major matrix over an exact scalar type T.
 *
 * T needs T(0), T(1), ==, and whatever arithmetic the called operation uses;
 * members are templates so a max-min lattice type can live in a Matrix
 * without providing + and *.
 */

#include <bimatrix/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace bimatrix {

using Index = std::size_t;
using IndexSet = std::vector<Index>;  // 0-based, strictly increasing

template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(Index rows, Index cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows * cols) throw DimMismatch("matrix data size does not match dimensions");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init)
        : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0)
    {
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimMismatch("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix zero(Index rows, Index cols) { return Matrix(rows, cols); }
    static Matrix identity(Index n)
    {
        Matrix m(n, n);
        for (Index i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix column(std::vector<T> v)
    {
        Index n = v.size();
        return Matrix(n, 1, std::move(v));
    }

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool same_dims(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    T& operator()(Index i, Index j) { return data_[i * cols_ + j]; }
    const T& operator()(Index i, Index j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(Index i) const
    {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(Index j) const
    {
        std::vector<T> out;
        out.reserve(rows_);
        for (Index i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }
    const std::vector<T>& data() const { return data_; }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
    }
    bool is_identity() const
    {
        if (!is_square()) return false;
        for (Index i = 0; i < rows_; ++i)
            for (Index j = 0; j < cols_; ++j)
                if (!((*this)(i, j) == (i == j ? T(1) : T(0)))) return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (Index i = 0; i < rows_; ++i)
            for (Index j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix select(const IndexSet& rs, const IndexSet& cs) const
    {
        Matrix out(rs.size(), cs.size());
        for (Index i = 0; i < rs.size(); ++i) {
            for (Index j = 0; j < cs.size(); ++j) {
                if (rs[i] >= rows_ || cs[j] >= cols_) throw IndexOutOfRange("selection outside the matrix");
                out(i, j) = (*this)(rs[i], cs[j]);
            }
        }
        return out;
    }

    // Drop one row and one column.
    Matrix minor_matrix(Index r, Index c) const
    {
        Matrix out(rows_ - 1, cols_ - 1);
        for (Index i = 0, oi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (Index j = 0, oj = 0; j < cols_; ++j) {
                if (j == c) continue;
                out(oi, oj++) = (*this)(i, j);
            }
            ++oi;
        }
        return out;
    }

    template <typename F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))>
    {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix operator-() const { return map([](const T& x) { return -x; }); }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        if (!a.same_dims(b)) throw DimMismatch(dims_msg("add", a, b));
        Matrix out = a;
        for (Index k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (!a.same_dims(b)) throw DimMismatch(dims_msg("subtract", a, b));
        Matrix out = a;
        for (Index k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
        return out;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw DimMismatch(dims_msg("multiply", a, b));
        Matrix out(a.rows_, b.cols_);
        for (Index i = 0; i < a.rows_; ++i)
            for (Index k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (Index j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }
    friend Matrix operator*(const T& s, const Matrix& a)
    {
        return a.map([&](const T& x) { return s * x; });
    }

    static std::string dims_str(const Matrix& m)
    {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }

private:
    static std::string dims_msg(const char* op, const Matrix& a, const Matrix& b)
    {
        return std::string("cannot ") + op + " " + dims_str(a) + " and " + dims_str(b);
    }

    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> power(const Matrix<T>& a, unsigned k)
{
    Matrix<T> out = Matrix<T>::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) out = out * a;
    return out;
}

} // namespace bimatrix
