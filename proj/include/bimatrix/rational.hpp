#pragma once

/*
 * Exact rational numbers.
 *
 * Thin value type over boost::multiprecision::cpp_rational, which already
 * keeps numerator/denominator in lowest terms with a positive denominator.
 * The wrapper pins down the textual grammar used by the file format:
 *
 *   -?digits(/digits)?      integer or fraction
 *   -?digits?.digits        decimal, converted exactly (0.25 -> 1/4)
 *
 * Formatting is canonical: "p/q", or "p" when q == 1. Never decimals.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bimatrix {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den)
    {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(Raw{}, -v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (b.v_ < a.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const
    {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    // Returns nullopt on anything outside the grammar above.
    static std::optional<Rational> try_parse(std::string_view s)
    {
        if (s.empty()) return std::nullopt;
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '-') { neg = true; i = 1; }
        auto digits = [&](std::size_t from) {
            std::size_t j = from;
            while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            return j;
        };
        std::size_t j = digits(i);
        std::string_view whole = s.substr(i, j - i);
        Rational out;
        if (j == s.size()) {
            if (whole.empty()) return std::nullopt;
            out = Rational(BigInt(std::string(whole)));
        } else if (s[j] == '/') {
            std::size_t k = digits(j + 1);
            std::string_view den = s.substr(j + 1, k - j - 1);
            if (whole.empty() || den.empty() || k != s.size()) return std::nullopt;
            const BigInt d{std::string(den)};
            if (d == 0) return std::nullopt;
            out = Rational(BigInt(std::string(whole)), d);
        } else if (s[j] == '.') {
            std::size_t k = digits(j + 1);
            std::string_view frac = s.substr(j + 1, k - j - 1);
            if (frac.empty() || k != s.size()) return std::nullopt;
            BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
            BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
            out = Rational(w * scale + BigInt(std::string(frac)), scale);
        } else {
            return std::nullopt;
        }
        return neg ? -out : out;
    }

    static Rational parse(std::string_view s)
    {
        if (auto r = try_parse(s)) return *r;
        throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
    }

private:
    struct Raw {};
    Rational(Raw, boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace bimatrix
