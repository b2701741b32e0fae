#pragma once

/*
 * Neutrosophic scalars a + bI over Q, with I*I = I.
 *
 *   (a + bI)(c + dI) = ac + (ad + bc + bd)I
 *
 * The ring has zero divisors, e.g. I(1 - I) = 0, so no division is offered.
 * ev0 (I -> 0) and ev1 (I -> 1) are ring homomorphisms onto Q.
 */

#include <bimatrix/rational.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bimatrix {

class NeutrosophicScalar {
public:
    NeutrosophicScalar() = default;
    NeutrosophicScalar(std::int64_t a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    NeutrosophicScalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    NeutrosophicScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static NeutrosophicScalar indeterminate() { return {Rational(0), Rational(1)}; }

    const Rational& real_part() const { return a_; }
    const Rational& indeterminate_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool has_indeterminacy() const { return !b_.is_zero(); }

    Rational ev0() const { return a_; }
    Rational ev1() const { return a_ + b_; }

    NeutrosophicScalar operator-() const { return {-a_, -b_}; }
    NeutrosophicScalar& operator+=(const NeutrosophicScalar& o) { a_ += o.a_; b_ += o.b_; return *this; }
    NeutrosophicScalar& operator-=(const NeutrosophicScalar& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    NeutrosophicScalar& operator*=(const NeutrosophicScalar& o)
    {
        Rational b = a_ * o.b_ + b_ * o.a_ + b_ * o.b_;
        a_ *= o.a_;
        b_ = std::move(b);
        return *this;
    }

    // Only division by a nonzero rational is well defined.
    NeutrosophicScalar& operator/=(const NeutrosophicScalar& o)
    {
        if (o.has_indeterminacy()) throw std::domain_error("division by a neutrosophic scalar");
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }

    friend NeutrosophicScalar operator+(NeutrosophicScalar x, const NeutrosophicScalar& y) { return x += y; }
    friend NeutrosophicScalar operator-(NeutrosophicScalar x, const NeutrosophicScalar& y) { return x -= y; }
    friend NeutrosophicScalar operator*(NeutrosophicScalar x, const NeutrosophicScalar& y) { return x *= y; }
    friend NeutrosophicScalar operator/(NeutrosophicScalar x, const NeutrosophicScalar& y) { return x /= y; }
    friend bool operator==(const NeutrosophicScalar&, const NeutrosophicScalar&) = default;

    std::string str() const
    {
        if (b_.is_zero()) return a_.str();
        std::string ipart;
        if (b_ == Rational(1)) ipart = "I";
        else if (b_ == Rational(-1)) ipart = "-I";
        else ipart = b_.str() + "I";
        if (a_.is_zero()) return ipart;
        return a_.str() + (b_.sign() > 0 ? "+" : "") + ipart;
    }

    // Grammar: a | bI | a+bI | a-bI, where a and b are rational tokens and a
    // bare I (or -I) stands for coefficient 1 (or -1).
    static std::optional<NeutrosophicScalar> try_parse(std::string_view s)
    {
        if (s.empty()) return std::nullopt;
        if (s.back() != 'I') {
            auto a = Rational::try_parse(s);
            if (!a) return std::nullopt;
            return NeutrosophicScalar(*a);
        }
        std::string_view body = s.substr(0, s.size() - 1);
        // split at the last sign that is not the leading one
        std::size_t split = std::string_view::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
            if (body[k] == '+' || body[k] == '-') { split = k; break; }
        }
        Rational a(0);
        std::string_view coeff = body;
        if (split != std::string_view::npos) {
            auto ra = Rational::try_parse(body.substr(0, split));
            if (!ra) return std::nullopt;
            a = *ra;
            coeff = body.substr(split);
            if (coeff.front() == '+') coeff.remove_prefix(1);
        }
        if (coeff.size() > 1 && (coeff[1] == '+' || coeff[1] == '-')) return std::nullopt;
        if (!coeff.empty() && coeff.front() == '+') return std::nullopt;
        Rational b;
        if (coeff.empty()) b = Rational(1);
        else if (coeff == "-") b = Rational(-1);
        else {
            auto rb = Rational::try_parse(coeff);
            if (!rb) return std::nullopt;
            b = *rb;
        }
        return NeutrosophicScalar(a, b);
    }

    static NeutrosophicScalar parse(std::string_view s)
    {
        if (auto r = try_parse(s)) return *r;
        throw std::invalid_argument("not a neutrosophic scalar: '" + std::string(s) + "'");
    }

private:
    Rational a_;
    Rational b_;
};

inline std::ostream& operator<<(std::ostream& os, const NeutrosophicScalar& x) { return os << x.str(); }

} // namespace bimatrix
