#pragma once

/*
 * Values of the fuzzy neutrosophic set [0,1] u { tI : 0 < t <= 1 }.
 *
 * A value is either Real t in [0,1] or Indeterminate tI; the pure symbol I is
 * Indeterminate with magnitude 1. min/max follow the I-absorption rules:
 *
 *   min(0, I) = 0      min(p, I) = I   (p > 0)
 *   max(p, I) = I      (every p in [0,1], including 1)
 *
 * Graded values extend this: two indeterminates compare by magnitude,
 * min(p, tI) = tI for p > 0, max(p, tI) = tI for p < 1, max(1, tI) = I.
 */

#include <bimatrix/rational.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bimatrix {

class FuzzyNeutroValue {
public:
    enum class Kind { Real, Indeterminate };

    FuzzyNeutroValue() = default;
    FuzzyNeutroValue(std::int64_t t) : FuzzyNeutroValue(Kind::Real, Rational(t)) {}  // NOLINT(google-explicit-constructor)
    FuzzyNeutroValue(Kind kind, Rational magnitude) : kind_(kind), mag_(std::move(magnitude))
    {
        if (mag_ > Rational(1) || mag_.sign() < 0 || (kind_ == Kind::Indeterminate && mag_.is_zero()))
            throw std::domain_error("fuzzy value out of range: " + str());
    }

    static FuzzyNeutroValue real(Rational t) { return {Kind::Real, std::move(t)}; }
    static FuzzyNeutroValue indeterminate(Rational t = Rational(1)) { return {Kind::Indeterminate, std::move(t)}; }

    Kind kind() const { return kind_; }
    const Rational& magnitude() const { return mag_; }
    bool is_indeterminate() const { return kind_ == Kind::Indeterminate; }
    bool is_pure_indeterminate() const { return is_indeterminate() && mag_ == Rational(1); }
    bool is_zero() const { return kind_ == Kind::Real && mag_.is_zero(); }

    friend bool operator==(const FuzzyNeutroValue&, const FuzzyNeutroValue&) = default;

    std::string str() const
    {
        if (kind_ == Kind::Real) return mag_.str();
        return mag_ == Rational(1) ? "I" : mag_.str() + "I";
    }

    // Tokens: a rational in [0,1], "I", or "<t>I" with t in (0,1].
    static std::optional<FuzzyNeutroValue> try_parse(std::string_view s)
    {
        if (s.empty()) return std::nullopt;
        Kind kind = Kind::Real;
        if (s.back() == 'I') {
            kind = Kind::Indeterminate;
            s.remove_suffix(1);
            if (s.empty()) return indeterminate();
        }
        auto t = Rational::try_parse(s);
        if (!t || *t > Rational(1) || t->sign() < 0) return std::nullopt;
        if (kind == Kind::Indeterminate && t->is_zero()) return std::nullopt;
        return FuzzyNeutroValue(kind, *t);
    }

    static FuzzyNeutroValue parse(std::string_view s)
    {
        if (auto r = try_parse(s)) return *r;
        throw std::invalid_argument("not a fuzzy neutrosophic value: '" + std::string(s) + "'");
    }

private:
    Kind kind_ = Kind::Real;
    Rational mag_;
};

inline FuzzyNeutroValue fuzzy_min(const FuzzyNeutroValue& x, const FuzzyNeutroValue& y)
{
    if (x.is_indeterminate() == y.is_indeterminate())
        return x.magnitude() <= y.magnitude() ? x : y;
    const FuzzyNeutroValue& real = x.is_indeterminate() ? y : x;
    const FuzzyNeutroValue& ind = x.is_indeterminate() ? x : y;
    return real.is_zero() ? real : ind;
}

inline FuzzyNeutroValue fuzzy_max(const FuzzyNeutroValue& x, const FuzzyNeutroValue& y)
{
    if (x.is_indeterminate() == y.is_indeterminate())
        return x.magnitude() >= y.magnitude() ? x : y;
    const FuzzyNeutroValue& real = x.is_indeterminate() ? y : x;
    const FuzzyNeutroValue& ind = x.is_indeterminate() ? x : y;
    if (real.magnitude() == Rational(1)) return FuzzyNeutroValue::indeterminate();
    return ind;
}

inline std::ostream& operator<<(std::ostream& os, const FuzzyNeutroValue& x) { return os << x.str(); }

} // namespace bimatrix
