#pragma once

/*
 * Neutrosophic and fuzzy bimatrices: classification, products under I*I = I
 * and max-min composition with the I-absorption rules.
 *
 * Classification works on NeutrosophicScalar entries, which can hold every
 * value the taxonomy talks about (3, 0.2, I, 0.3I, 2+I, ...). A fuzzy value
 * tI maps to 0 + tI.
 */

#include <bimatrix/core.hpp>
#include <bimatrix/fuzzy.hpp>
#include <bimatrix/neutrosophic.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace bimatrix {

using NeutroMatrix = Matrix<NeutrosophicScalar>;
using NeutroBiMatrix = BiMatrix<NeutrosophicScalar>;
using FuzzyMatrix = Matrix<FuzzyNeutroValue>;
using FuzzyBiMatrix = BiMatrix<FuzzyNeutroValue>;

inline NeutrosophicScalar to_neutrosophic(const NeutrosophicScalar& x) { return x; }
inline NeutrosophicScalar to_neutrosophic(const Rational& r) { return NeutrosophicScalar(r); }

inline NeutrosophicScalar to_neutrosophic(const FuzzyNeutroValue& v)
{
    return v.is_indeterminate() ? NeutrosophicScalar(Rational(0), v.magnitude()) : NeutrosophicScalar(v.magnitude());
}

// Defined only on t (t in [0,1]) and tI (t in (0,1]).
inline std::optional<FuzzyNeutroValue> to_fuzzy(const NeutrosophicScalar& x)
{
    const Rational& a = x.real_part();
    const Rational& b = x.indeterminate_part();
    if (b.is_zero()) {
        if (a.sign() < 0 || a > Rational(1)) return std::nullopt;
        return FuzzyNeutroValue::real(a);
    }
    if (!a.is_zero() || b.sign() <= 0 || b > Rational(1)) return std::nullopt;
    return FuzzyNeutroValue::indeterminate(b);
}

template <typename T, typename F>
auto map_bimatrix(const BiMatrix<T>& a, F&& f)
{
    using U = decltype(f(std::declval<const T&>()));
    return BiMatrix<U>::relaxed(a.first().map(f), a.second().map(f));
}

// ---------------------------------------------------------------- products

inline NeutroMatrix neutro_matmul(const NeutroMatrix& a, const NeutroMatrix& b) { return a * b; }

inline FuzzyMatrix fuzzy_maxmin_compose(const FuzzyMatrix& p, const FuzzyMatrix& q)
{
    if (p.cols() != q.rows())
        throw DimMismatch("cannot compose " + FuzzyMatrix::dims_str(p) + " with " + FuzzyMatrix::dims_str(q));
    FuzzyMatrix r(p.rows(), q.cols());
    for (Index i = 0; i < p.rows(); ++i)
        for (Index j = 0; j < q.cols(); ++j) {
            FuzzyNeutroValue acc = fuzzy_min(p(i, 0), q(0, j));
            for (Index k = 1; k < p.cols(); ++k) acc = fuzzy_max(acc, fuzzy_min(p(i, k), q(k, j)));
            r(i, j) = acc;
        }
    return r;
}

// Max-min identity: 1 on the diagonal, 0 elsewhere.
inline FuzzyMatrix fuzzy_identity(Index n) { return FuzzyMatrix::identity(n); }

// Applies a matrix operation to both components and validates the pair.
template <typename T, typename Op>
BiMatrix<T> bimatrix_lift(Op&& op, const BiMatrix<T>& a, const BiMatrix<T>& b)
{
    return BiMatrix<T>(op(a.first(), b.first()), op(a.second(), b.second()));
}

// ---------------------------------------------------------------- classification

enum class NeutroKind { Neutrosophic, SemiNeutrosophic, Ordinary };
enum class FieldScope { Plain, Strong, Weak };

inline const char* to_string(FieldScope s)
{
    switch (s) {
    case FieldScope::Plain: return "Plain";
    case FieldScope::Strong: return "Strong";
    case FieldScope::Weak: return "Weak";
    }
    return "?";
}

struct NeutroClass {
    NeutroKind kind;
    Component neutrosophic_component = Component::Both;  // for SemiNeutrosophic
    ShapeClass shape;
    FieldScope field_scope = FieldScope::Plain;

    std::string kind_str() const
    {
        switch (kind) {
        case NeutroKind::Neutrosophic: return "Neutrosophic";
        case NeutroKind::Ordinary: return "Ordinary";
        case NeutroKind::SemiNeutrosophic: return std::string("SemiNeutrosophic:") + to_string(neutrosophic_component);
        }
        return "?";
    }
};

struct FieldTags {
    std::string first;
    std::string second;
};

// Q(I) sits inside every tag; R(I) sits inside C(I). Other tags are only
// related to themselves.
inline bool is_proper_subfield(const std::string& sub, const std::string& super)
{
    if (sub == super) return false;
    if (sub == "Q(I)") return true;
    return sub == "R(I)" && super == "C(I)";
}

inline FieldScope field_scope(const std::optional<FieldTags>& tags)
{
    if (!tags || tags->first == tags->second) return FieldScope::Plain;
    if (is_proper_subfield(tags->first, tags->second) || is_proper_subfield(tags->second, tags->first))
        return FieldScope::Weak;
    return FieldScope::Strong;
}

inline bool has_indeterminacy(const NeutroMatrix& m)
{
    return std::any_of(m.data().begin(), m.data().end(), [](const auto& x) { return x.has_indeterminacy(); });
}

inline NeutroClass classify_neutro(const NeutroBiMatrix& b, const std::optional<FieldTags>& tags = std::nullopt)
{
    const bool n1 = has_indeterminacy(b.first());
    const bool n2 = has_indeterminacy(b.second());
    NeutroClass c{NeutroKind::Ordinary, Component::Both, classify_shape(b), field_scope(tags)};
    if (n1 && n2) c.kind = NeutroKind::Neutrosophic;
    else if (n1 || n2) {
        c.kind = NeutroKind::SemiNeutrosophic;
        c.neutrosophic_component = n1 ? Component::First : Component::Second;
    }
    return c;
}

// Per-component membership flags behind the fuzzy taxonomy.
struct FuzzyMembership {
    bool fuzzy = false;             // every entry real in [0,1]
    bool integral_neutro = false;   // every entry in [0,1] or pure I, some I present
    bool fuzzy_neutro = false;      // every entry in [0,1] or tI (t in (0,1]), some tI present
};

enum class FuzzyKind { Fuzzy, SemiFuzzy, NotFuzzy };

struct FuzzyClass {
    FuzzyKind fuzzy_kind;
    Component fuzzy_component = Component::Both;       // for SemiFuzzy
    FuzzyMembership first;
    FuzzyMembership second;
    // Fuzzy neutrosophic when both components are, semi when exactly one is.
    FuzzyKind neutro_kind;
    Component neutro_component = Component::Both;
    ShapeClass shape;

    static std::string kind_str(FuzzyKind k, Component c)
    {
        switch (k) {
        case FuzzyKind::Fuzzy: return "Fuzzy";
        case FuzzyKind::NotFuzzy: return "NotFuzzy";
        case FuzzyKind::SemiFuzzy: return std::string("SemiFuzzy:") + to_string(c);
        }
        return "?";
    }
};

inline FuzzyMembership fuzzy_membership(const NeutroMatrix& m)
{
    FuzzyMembership f{true, true, true};
    bool any_ind = false;
    for (const auto& x : m.data()) {
        const auto v = to_fuzzy(x);
        if (!v) return {};
        if (v->is_indeterminate()) {
            any_ind = true;
            f.fuzzy = false;
            if (!v->is_pure_indeterminate()) f.integral_neutro = false;
        }
    }
    if (!any_ind) f.integral_neutro = f.fuzzy_neutro = false;
    return f;
}

inline FuzzyClass classify_fuzzy(const NeutroBiMatrix& b)
{
    FuzzyClass c{FuzzyKind::NotFuzzy, Component::Both, fuzzy_membership(b.first()), fuzzy_membership(b.second()),
                 FuzzyKind::NotFuzzy, Component::Both, classify_shape(b)};
    auto grade = [](bool p1, bool p2, FuzzyKind& kind, Component& which) {
        if (p1 && p2) kind = FuzzyKind::Fuzzy;
        else if (p1 || p2) {
            kind = FuzzyKind::SemiFuzzy;
            which = p1 ? Component::First : Component::Second;
        }
    };
    grade(c.first.fuzzy, c.second.fuzzy, c.fuzzy_kind, c.fuzzy_component);
    grade(c.first.fuzzy_neutro, c.second.fuzzy_neutro, c.neutro_kind, c.neutro_component);
    return c;
}

} // namespace bimatrix
