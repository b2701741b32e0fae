#pragma once

/*
 * Linear bioperators given as rational bimatrices: row bireduction and
 * biequations, characteristic and minimal bipolynomials, eigen analysis over
 * Q, diagonalizability, spectral projections and a few predicates.
 *
 * "Has eigenvalues" means "characteristic polynomial splits over Q"; the
 * part that does not split is reported as a residual factor.
 */

#include <bimatrix/bidet.hpp>
#include <bimatrix/core.hpp>
#include <bimatrix/linalg.hpp>
#include <bimatrix/polynomial.hpp>
#include <bimatrix/rational.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bimatrix {

using RationalMatrix = Matrix<Rational>;
using RationalBiMatrix = BiMatrix<Rational>;
using Vector = std::vector<Rational>;

// ---------------------------------------------------------------- reduction

enum class ReductionMode { Weak, Strong };

struct BiRowOp {
    Component scope;  // First, Second, or Both for a shared operation
    RowOp<Rational> op;
    friend bool operator==(const BiRowOp&, const BiRowOp&) = default;
};

struct BiReduction {
    RationalBiMatrix result;       // relaxed: distinct inputs may share an echelon form
    std::vector<BiRowOp> ops;
    bool partial = false;          // strong mode: some pivot was nonzero in the first component only
    bool second_reduced = true;    // strong mode: second component ended in reduced echelon form
};

inline bool is_rref(const RationalMatrix& m)
{
    return rref(m).reduced == m;
}

inline RationalBiMatrix replay(const RationalBiMatrix& a, const std::vector<BiRowOp>& ops)
{
    RationalMatrix m1 = a.first();
    RationalMatrix m2 = a.second();
    for (const auto& o : ops) {
        if (o.scope != Component::Second) apply_row_op(m1, o.op);
        if (o.scope != Component::First) apply_row_op(m2, o.op);
    }
    return RationalBiMatrix::relaxed(std::move(m1), std::move(m2));
}

namespace detail {

inline BiReduction weak_reduce(const RationalBiMatrix& a)
{
    BiReduction out{RationalBiMatrix::relaxed(a.first(), a.second()), {}, false, true};
    auto e1 = rref(a.first());
    auto e2 = rref(a.second());
    for (auto& op : e1.ops) out.ops.push_back({Component::First, std::move(op)});
    for (auto& op : e2.ops) out.ops.push_back({Component::Second, std::move(op)});
    out.result = RationalBiMatrix::relaxed(std::move(e1.reduced), std::move(e2.reduced));
    return out;
}

// Greedy shared elimination: pivots are chosen column by column from the
// first component, preferring rows whose entry is nonzero in both.
inline BiReduction strong_reduce(const RationalBiMatrix& a)
{
    using K = RowOp<Rational>::Kind;
    if (a.first().rows() != a.second().rows())
        throw ShapeError("strong row bireduction needs equal row counts");
    RationalMatrix m1 = a.first();
    RationalMatrix m2 = a.second();
    BiReduction out{RationalBiMatrix::relaxed(a.first(), a.second()), {}, false, true};
    auto log = [&](RowOp<Rational> op) {
        apply_row_op(m1, op);
        apply_row_op(m2, op);
        out.ops.push_back({Component::Both, std::move(op)});
    };
    const Index rows = m1.rows();
    Index r = 0;
    for (Index c = 0; c < m1.cols() && r < rows; ++c) {
        std::optional<Index> pick;
        for (Index i = r; i < rows && !pick; ++i)
            if (!m1(i, c).is_zero() && c < m2.cols() && !m2(i, c).is_zero()) pick = i;
        if (!pick) {
            for (Index i = r; i < rows && !pick; ++i)
                if (!m1(i, c).is_zero()) pick = i;
            if (!pick) continue;
            out.partial = true;
        }
        if (*pick != r) log({K::Swap, r, *pick, Rational(1)});
        if (m1(r, c) != Rational(1)) log({K::Scale, r, 0, Rational(1) / m1(r, c)});
        for (Index i = 0; i < rows; ++i)
            if (i != r && !m1(i, c).is_zero()) log({K::AddMultiple, i, r, -m1(i, c)});
        ++r;
    }
    out.second_reduced = is_rref(m2);
    out.result = RationalBiMatrix::relaxed(std::move(m1), std::move(m2));
    return out;
}

} // namespace detail

inline BiReduction row_bireduce(const RationalBiMatrix& a, ReductionMode mode)
{
    return mode == ReductionMode::Weak ? detail::weak_reduce(a) : detail::strong_reduce(a);
}

// ---------------------------------------------------------------- biequations

struct BiSolution {
    LinearSolution<Rational> first;
    LinearSolution<Rational> second;
    bool homogeneous = false;
    bool semi_homogeneous = false;
};

inline BiSolution solve_biequation(const RationalBiMatrix& a, const Vector& y1, const Vector& y2)
{
    auto s1 = solve(a.first(), y1);
    auto s2 = solve(a.second(), y2);
    if (!s1 && !s2) throw Inconsistent(Component::Both);
    if (!s1) throw Inconsistent(Component::First);
    if (!s2) throw Inconsistent(Component::Second);
    auto zero = [](const Vector& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
    };
    BiSolution out{std::move(*s1), std::move(*s2)};
    out.homogeneous = zero(y1) && zero(y2);
    out.semi_homogeneous = zero(y1) != zero(y2);
    return out;
}

// ---------------------------------------------------------------- polynomials

struct BiPolynomial {
    Polynomial first;
    Polynomial second;
    friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;
};

// det(xI - A) by the Faddeev-LeVerrier recurrence (exact over Q).
inline Polynomial characteristic_polynomial(const RationalMatrix& a)
{
    if (!a.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
    const Index n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    RationalMatrix m = RationalMatrix::zero(n, n);
    for (Index k = 1; k <= n; ++k) {
        m = a * m;
        for (Index i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        const RationalMatrix am = a * m;
        Rational tr(0);
        for (Index i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<std::int64_t>(k));
    }
    return Polynomial(std::move(c));
}

// Least k with I, A, ..., A^k linearly dependent; the dependency, made
// monic, is the minimal polynomial.
inline Polynomial minimal_polynomial(const RationalMatrix& a)
{
    if (!a.is_square()) throw ShapeError("minimal polynomial of a non-square matrix");
    const Index n = a.rows();
    std::vector<RationalMatrix> powers{RationalMatrix::identity(n)};
    for (Index k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * a);
        RationalMatrix krylov(n * n, k + 1);
        for (Index p = 0; p <= k; ++p)
            for (Index e = 0; e < n * n; ++e) krylov(e, p) = powers[p].data()[e];
        auto null = nullspace(krylov);
        if (null.empty()) continue;
        return Polynomial(std::move(null.front())).monic();
    }
    throw std::logic_error("no annihilating polynomial up to the matrix order");
}

inline BiPolynomial char_bipolynomial(const RationalBiMatrix& a)
{
    if (!a.is_square()) throw ShapeError("characteristic bipolynomial needs square components");
    return {characteristic_polynomial(a.first()), characteristic_polynomial(a.second())};
}

inline BiPolynomial biminimal_polynomial(const RationalBiMatrix& a)
{
    if (!a.is_square()) throw ShapeError("minimal bipolynomial needs square components");
    return {minimal_polynomial(a.first()), minimal_polynomial(a.second())};
}

// ---------------------------------------------------------------- eigen

struct EigenRoot {
    Rational value;
    unsigned algebraic;
    std::vector<Vector> basis;  // eigenspace basis
    unsigned geometric() const { return static_cast<unsigned>(basis.size()); }
};

struct ComponentSpectrum {
    Polynomial characteristic;
    std::vector<EigenRoot> roots;  // ascending by value
    Polynomial residual;           // monic factor without rational roots

    bool splits() const { return residual.degree() == 0; }
    bool diagonalizable() const
    {
        return splits() && std::all_of(roots.begin(), roots.end(),
                                       [](const EigenRoot& r) { return r.geometric() == r.algebraic; });
    }
};

enum class SpectralClass { Full, SemiFirst, SemiSecond, None };

inline const char* to_string(SpectralClass c)
{
    switch (c) {
    case SpectralClass::Full: return "Full";
    case SpectralClass::SemiFirst: return "Semi:first";
    case SpectralClass::SemiSecond: return "Semi:second";
    case SpectralClass::None: return "None";
    }
    return "?";
}

struct BiEigenReport {
    ComponentSpectrum first;
    ComponentSpectrum second;
    SpectralClass classification;
};

inline RationalMatrix shifted(const RationalMatrix& a, const Rational& lambda)
{
    RationalMatrix m = a;
    for (Index i = 0; i < m.rows(); ++i) m(i, i) -= lambda;
    return m;
}

inline ComponentSpectrum spectrum(const RationalMatrix& a)
{
    ComponentSpectrum s;
    s.characteristic = characteristic_polynomial(a);
    RationalFactorization f = factor_rational_roots(s.characteristic);
    for (auto& rm : f.roots) s.roots.push_back({rm.root, rm.multiplicity, nullspace(shifted(a, rm.root))});
    s.residual = std::move(f.residual);
    return s;
}

inline BiEigenReport bieigen(const RationalBiMatrix& a)
{
    if (!a.is_square()) throw ShapeError("eigen analysis needs square components");
    BiEigenReport r{spectrum(a.first()), spectrum(a.second()), SpectralClass::None};
    const bool s1 = r.first.splits();
    const bool s2 = r.second.splits();
    r.classification = s1 && s2 ? SpectralClass::Full
                     : s1       ? SpectralClass::SemiFirst
                     : s2       ? SpectralClass::SemiSecond
                                : SpectralClass::None;
    return r;
}

struct DiagonalizationWitness {
    bool diagonalizable = false;
    std::optional<RationalMatrix> eigenbasis;  // eigenvectors as columns, when diagonalizable
    std::string reason;                        // why not, otherwise
};

struct BiDiagonalization {
    DiagonalizationWitness first;
    DiagonalizationWitness second;
    bool holds() const { return first.diagonalizable && second.diagonalizable; }
};

inline DiagonalizationWitness diagonalization_witness(const ComponentSpectrum& s, Index n)
{
    DiagonalizationWitness w;
    if (!s.splits()) {
        w.reason = "characteristic polynomial does not split over Q (residual " + s.residual.str() + ")";
        return w;
    }
    for (const auto& r : s.roots) {
        if (r.geometric() != r.algebraic) {
            w.reason = "root " + r.value.str() + " has geometric multiplicity " + std::to_string(r.geometric())
                     + " < algebraic multiplicity " + std::to_string(r.algebraic);
            return w;
        }
    }
    RationalMatrix basis(n, n);
    Index col = 0;
    for (const auto& r : s.roots)
        for (const auto& v : r.basis) {
            for (Index i = 0; i < n; ++i) basis(i, col) = v[i];
            ++col;
        }
    w.diagonalizable = true;
    w.eigenbasis = std::move(basis);
    return w;
}

inline BiDiagonalization is_bidiagonalizable(const RationalBiMatrix& a)
{
    const BiEigenReport r = bieigen(a);
    return {diagonalization_witness(r.first, a.first().rows()), diagonalization_witness(r.second, a.second().rows())};
}

struct Projection {
    Rational eigenvalue;
    RationalMatrix matrix;
};

struct BiProjectionSet {
    std::vector<Projection> first;
    std::vector<Projection> second;
};

// E_i = f_i(A) with f_i the Lagrange basis polynomial of the distinct roots.
inline std::vector<Projection> spectral_projections(const RationalMatrix& a, const ComponentSpectrum& s)
{
    std::vector<Projection> out;
    for (const auto& ri : s.roots) {
        Polynomial f = Polynomial::constant(Rational(1));
        for (const auto& rj : s.roots) {
            if (rj.value == ri.value) continue;
            f = f * Polynomial::linear(rj.value) * Polynomial::constant(Rational(1) / (ri.value - rj.value));
        }
        out.push_back({ri.value, f(a)});
    }
    return out;
}

inline BiProjectionSet biprojections(const RationalBiMatrix& a)
{
    const BiEigenReport r = bieigen(a);
    if (!r.first.diagonalizable()) throw NotDiagonalizable("first component is not diagonalizable over Q");
    if (!r.second.diagonalizable()) throw NotDiagonalizable("second component is not diagonalizable over Q");
    return {spectral_projections(a.first(), r.first), spectral_projections(a.second(), r.second)};
}

// ---------------------------------------------------------------- predicates

struct BiTriangularizability {
    bool first;
    bool second;
    bool overall() const { return first && second; }
};

inline BiTriangularizability is_bitriangularizable(const RationalBiMatrix& a)
{
    const BiPolynomial p = biminimal_polynomial(a);
    return {factor_rational_roots(p.first).splits(), factor_rational_roots(p.second).splits()};
}

inline bool is_binilpotent(const RationalBiMatrix& a)
{
    if (!a.is_square()) throw ShapeError("nilpotence needs square components");
    auto nil = [](const RationalMatrix& m) { return power(m, static_cast<unsigned>(m.rows())).is_zero(); };
    return nil(a.first()) && nil(a.second());
}

enum class Similarity { Similar, SemiSimilar, NotSimilar };

struct SimilarityCheck {
    Similarity kind;
    // For SemiSimilar: the component conjugated by the witness; the other
    // component is required to be unchanged.
    Component witnessed = Component::Both;
    bool holds() const { return kind != Similarity::NotSimilar; }
};

inline SimilarityCheck check_similarity_witness(const RationalBiMatrix& a, const RationalBiMatrix& b,
                                                const RationalBiMatrix& p)
{
    if (!a.is_square() || !b.is_square() || !p.is_square())
        throw ShapeError("similarity needs square components");
    for (int k : {1, 2}) {
        if (a.component(k).rows() != b.component(k).rows() || a.component(k).rows() != p.component(k).rows())
            throw ShapeError("similarity needs matching orders per component");
    }
    auto p1 = inverse(p.first());
    auto p2 = inverse(p.second());
    if (!p1 && !p2) throw SingularWitness();
    auto conj = [](const RationalMatrix& pinv, const RationalMatrix& m, const RationalMatrix& pm) { return pinv * m * pm; };
    if (p1 && p2) {
        const bool ok = b.first() == conj(*p1, a.first(), p.first()) && b.second() == conj(*p2, a.second(), p.second());
        return {ok ? Similarity::Similar : Similarity::NotSimilar, Component::Both};
    }
    if (p1) {
        const bool ok = b.first() == conj(*p1, a.first(), p.first()) && b.second() == a.second();
        return {ok ? Similarity::SemiSimilar : Similarity::NotSimilar, Component::First};
    }
    const bool ok = b.second() == conj(*p2, a.second(), p.second()) && b.first() == a.first();
    return {ok ? Similarity::SemiSimilar : Similarity::NotSimilar, Component::Second};
}

} // namespace bimatrix
