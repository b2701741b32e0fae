#pragma once

/*
 * BiMatrix: an ordered pair A1 u A2 of matrices over one scalar ring.
 *
 * The two components may only coincide when both are zero or both are the
 * identity; any other coincidence is a degenerate collapse and the checked
 * constructor throws. BiMatrix::relaxed skips that check for intermediate
 * values (block pieces, decomposition parts).
 */

#include <bimatrix/matrix.hpp>

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace bimatrix {

enum class ShapeClass { RectangularUniform, SquareUniform, MixedSquare, MixedRectangular, Row, Column };

inline const char* to_string(ShapeClass s)
{
    switch (s) {
    case ShapeClass::RectangularUniform: return "RectangularUniform";
    case ShapeClass::SquareUniform: return "SquareUniform";
    case ShapeClass::MixedSquare: return "MixedSquare";
    case ShapeClass::MixedRectangular: return "MixedRectangular";
    case ShapeClass::Row: return "Row";
    case ShapeClass::Column: return "Column";
    }
    return "?";
}

template <typename T>
class BiMatrix {
public:
    using scalar_type = T;

    BiMatrix(Matrix<T> first, Matrix<T> second) : first_(std::move(first)), second_(std::move(second))
    {
        if (first_.rows() == 0 || first_.cols() == 0 || second_.rows() == 0 || second_.cols() == 0)
            throw ShapeError("bimatrix components must have positive dimensions");
        if (!admissible()) throw DegenerateCollapse();
    }

    static BiMatrix relaxed(Matrix<T> first, Matrix<T> second)
    {
        return BiMatrix(Unchecked{}, std::move(first), std::move(second));
    }

    static BiMatrix zero(Index r1, Index c1, Index r2, Index c2)
    {
        return BiMatrix(Matrix<T>::zero(r1, c1), Matrix<T>::zero(r2, c2));
    }
    static BiMatrix identity(Index n1, Index n2)
    {
        return BiMatrix(Matrix<T>::identity(n1), Matrix<T>::identity(n2));
    }

    const Matrix<T>& first() const { return first_; }
    const Matrix<T>& second() const { return second_; }
    const Matrix<T>& component(int k) const { return k == 1 ? first_ : second_; }

    bool is_uniform() const { return first_.same_dims(second_); }
    bool is_square() const { return first_.is_square() && second_.is_square(); }
    bool is_zero() const { return first_.is_zero() && second_.is_zero(); }
    bool is_identity() const { return first_.is_identity() && second_.is_identity(); }

    // False only for a pair that the checked constructor would reject.
    bool admissible() const
    {
        if (!(first_ == second_)) return true;
        return first_.is_zero() || first_.is_identity();
    }

    friend bool operator==(const BiMatrix& a, const BiMatrix& b)
    {
        return a.first_ == b.first_ && a.second_ == b.second_;
    }

private:
    struct Unchecked {};
    BiMatrix(Unchecked, Matrix<T> first, Matrix<T> second) : first_(std::move(first)), second_(std::move(second)) {}

    Matrix<T> first_;
    Matrix<T> second_;
};

template <typename T>
ShapeClass classify_shape(const BiMatrix<T>& b)
{
    const auto& a1 = b.first();
    const auto& a2 = b.second();
    if (a1.same_dims(a2)) {
        if (a1.is_square()) return ShapeClass::SquareUniform;
        if (a1.rows() == 1) return ShapeClass::Row;
        if (a1.cols() == 1) return ShapeClass::Column;
        return ShapeClass::RectangularUniform;
    }
    if (a1.is_square() && a2.is_square()) return ShapeClass::MixedSquare;
    return ShapeClass::MixedRectangular;
}

template <typename T>
BiMatrix<T> add(const BiMatrix<T>& a, const BiMatrix<T>& b)
{
    return BiMatrix<T>(a.first() + b.first(), a.second() + b.second());
}

template <typename T>
BiMatrix<T> subtract(const BiMatrix<T>& a, const BiMatrix<T>& b)
{
    return BiMatrix<T>(a.first() - b.first(), a.second() - b.second());
}

template <typename T>
BiMatrix<T> scalar_mul(const T& s, const BiMatrix<T>& a)
{
    return BiMatrix<T>(s * a.first(), s * a.second());
}

template <typename T>
BiMatrix<T> mul(const BiMatrix<T>& a, const BiMatrix<T>& b)
{
    return BiMatrix<T>(a.first() * b.first(), a.second() * b.second());
}

template <typename T>
BiMatrix<T> transpose(const BiMatrix<T>& a)
{
    return BiMatrix<T>::relaxed(a.first().transpose(), a.second().transpose());
}

template <typename T>
struct SymSkewPair {
    BiMatrix<T> symmetric_part;
    BiMatrix<T> skew_part;
};

// Parts are relaxed pairs: a valid input whose components differ only in
// their skew halves has coinciding symmetric halves.
template <typename T>
SymSkewPair<T> sym_skew_decompose(const BiMatrix<T>& a)
{
    if (!a.is_square()) throw ShapeError("symmetric/skew decomposition needs square components");
    const T half = T(1) / T(2);
    auto sym = [&](const Matrix<T>& m) { return half * (m + m.transpose()); };
    auto skew = [&](const Matrix<T>& m) { return half * (m - m.transpose()); };
    return {BiMatrix<T>::relaxed(sym(a.first()), sym(a.second())),
            BiMatrix<T>::relaxed(skew(a.first()), skew(a.second()))};
}

template <typename T>
bool is_symmetric(const BiMatrix<T>& a)
{
    return a.first() == a.first().transpose() && a.second() == a.second().transpose();
}

template <typename T>
bool is_skew_symmetric(const BiMatrix<T>& a)
{
    return a.first() == -a.first().transpose() && a.second() == -a.second().transpose();
}

namespace detail {

inline void check_index_set(const IndexSet& s, Index bound, const char* what)
{
    if (s.empty()) throw IndexOutOfRange(std::string(what) + ": empty index set");
    for (Index k = 0; k < s.size(); ++k) {
        if (s[k] >= bound) throw IndexOutOfRange(std::string(what) + ": index " + std::to_string(s[k] + 1) + " out of range");
        if (k > 0 && s[k] <= s[k - 1]) throw IndexOutOfRange(std::string(what) + ": indices must be strictly increasing");
    }
}

} // namespace detail

// Index sets are 0-based here; the file format and CLI speak 1-based.
template <typename T>
BiMatrix<T> subbimatrix(const BiMatrix<T>& a, const IndexSet& rows1, const IndexSet& cols1,
                        const IndexSet& rows2, const IndexSet& cols2)
{
    detail::check_index_set(rows1, a.first().rows(), "rows of component 1");
    detail::check_index_set(cols1, a.first().cols(), "columns of component 1");
    detail::check_index_set(rows2, a.second().rows(), "rows of component 2");
    detail::check_index_set(cols2, a.second().cols(), "columns of component 2");
    return BiMatrix<T>(a.first().select(rows1, cols1), a.second().select(rows2, cols2));
}

enum class OverlapKind { None, RowOverlap, ColumnOverlap, RowColumnOverlap };

inline const char* to_string(OverlapKind k)
{
    switch (k) {
    case OverlapKind::None: return "None";
    case OverlapKind::RowOverlap: return "RowOverlap";
    case OverlapKind::ColumnOverlap: return "ColumnOverlap";
    case OverlapKind::RowColumnOverlap: return "RowColumnOverlap";
    }
    return "?";
}

template <typename T>
struct SharedVector {
    std::vector<T> entries;
    IndexSet in_first;   // positions in component 1
    IndexSet in_second;  // positions in component 2
};

template <typename T>
struct OverlapReport {
    OverlapKind kind = OverlapKind::None;
    std::vector<SharedVector<T>> shared_rows;
    std::vector<SharedVector<T>> shared_cols;
};

namespace detail {

// Distinct vectors occurring in both lists, in order of first occurrence in `a`.
template <typename T>
std::vector<SharedVector<T>> shared_vectors(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b)
{
    std::vector<SharedVector<T>> out;
    for (Index i = 0; i < a.size(); ++i) {
        bool seen = false;
        for (auto& s : out) {
            if (s.entries == a[i]) { s.in_first.push_back(i); seen = true; break; }
        }
        if (seen) continue;
        SharedVector<T> s{a[i], {i}, {}};
        for (Index j = 0; j < b.size(); ++j)
            if (b[j] == a[i]) s.in_second.push_back(j);
        if (!s.in_second.empty()) out.push_back(std::move(s));
    }
    return out;
}

template <typename T>
std::vector<std::vector<T>> rows_of(const Matrix<T>& m)
{
    std::vector<std::vector<T>> out;
    for (Index i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

template <typename T>
std::vector<std::vector<T>> cols_of(const Matrix<T>& m)
{
    std::vector<std::vector<T>> out;
    for (Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
    return out;
}

} // namespace detail

template <typename T>
OverlapReport<T> detect_overlap(const BiMatrix<T>& a)
{
    if (!a.is_uniform()) throw ShapeError("overlap is defined only when both components have equal dimensions");
    OverlapReport<T> r;
    r.shared_rows = detail::shared_vectors(detail::rows_of(a.first()), detail::rows_of(a.second()));
    r.shared_cols = detail::shared_vectors(detail::cols_of(a.first()), detail::cols_of(a.second()));
    const bool rows = !r.shared_rows.empty();
    const bool cols = !r.shared_cols.empty();
    r.kind = rows && cols ? OverlapKind::RowColumnOverlap
           : rows         ? OverlapKind::RowOverlap
           : cols         ? OverlapKind::ColumnOverlap
                          : OverlapKind::None;
    return r;
}

// Block sizes along rows and columns of one component.
struct Partition {
    std::vector<Index> row_sizes;
    std::vector<Index> col_sizes;

    bool fits(Index rows, Index cols) const
    {
        return std::accumulate(row_sizes.begin(), row_sizes.end(), Index{0}) == rows
            && std::accumulate(col_sizes.begin(), col_sizes.end(), Index{0}) == cols;
    }
};

struct BiPartition {
    Partition first;
    Partition second;
};

inline bool add_compatible(const BiPartition& a, const BiPartition& b)
{
    return a.first.row_sizes == b.first.row_sizes && a.first.col_sizes == b.first.col_sizes
        && a.second.row_sizes == b.second.row_sizes && a.second.col_sizes == b.second.col_sizes;
}

inline bool mul_compatible(const BiPartition& a, const BiPartition& b)
{
    return a.first.col_sizes == b.first.row_sizes && a.second.col_sizes == b.second.row_sizes;
}

namespace detail {

inline IndexSet block_range(const std::vector<Index>& sizes, Index k)
{
    if (k >= sizes.size()) throw IndexOutOfRange("block index out of range");
    Index start = std::accumulate(sizes.begin(), sizes.begin() + static_cast<std::ptrdiff_t>(k), Index{0});
    IndexSet out(sizes[k]);
    std::iota(out.begin(), out.end(), start);
    return out;
}

} // namespace detail

// Block (i, j) of both components; a relaxed pair since blocks may coincide.
template <typename T>
BiMatrix<T> block(const BiMatrix<T>& a, const BiPartition& p, Index i, Index j)
{
    if (!p.first.fits(a.first().rows(), a.first().cols()) || !p.second.fits(a.second().rows(), a.second().cols()))
        throw DimMismatch("partition does not cover the bimatrix");
    using detail::block_range;
    return BiMatrix<T>::relaxed(
        a.first().select(block_range(p.first.row_sizes, i), block_range(p.first.col_sizes, j)),
        a.second().select(block_range(p.second.row_sizes, i), block_range(p.second.col_sizes, j)));
}

} // namespace bimatrix
