#pragma once

/*
 * Univariate polynomials with exact rational coefficients, stored in
 * ascending order (coeffs[k] multiplies x^k) with no trailing zeros.
 *
 * Rational roots come from the square-free part via the rational root
 * theorem, then multiplicities by repeated deflation; whatever does not
 * split over Q is returned as a monic residual factor.
 */

#include <bimatrix/matrix.hpp>
#include <bimatrix/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bimatrix {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial constant(Rational c) { return Polynomial(std::vector<Rational>{std::move(c)}); }
    static Polynomial x() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }
    // x - r
    static Polynomial linear(const Rational& r) { return Polynomial(std::vector<Rational>{-r, Rational(1)}); }
    static Polynomial monomial(unsigned k, Rational c = Rational(1))
    {
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational& leading() const
    {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Polynomial monic() const
    {
        if (is_zero()) return *this;
        Polynomial out = *this;
        const Rational lc = leading();
        for (auto& x : out.c_) x /= lc;
        return out;
    }

    Polynomial derivative() const
    {
        std::vector<Rational> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<std::int64_t>(k)));
        return Polynomial(std::move(d));
    }

    Rational operator()(const Rational& x) const
    {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Matrix<Rational> operator()(const Matrix<Rational>& a) const
    {
        if (!a.is_square()) throw std::invalid_argument("polynomial of a non-square matrix");
        const Index n = a.rows();
        Matrix<Rational> acc = Matrix<Rational>::zero(n, n);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * a;
            for (Index i = 0; i < n; ++i) acc(i, i) += *it;
        }
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a)
    {
        Polynomial out = a;
        for (auto& x : out.c_) x = -x;
        return out;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
    {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rational> r = a.c_;
        const int db = b.degree();
        if (a.degree() < db) return {Polynomial(), a};
        std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
        for (int k = a.degree(); k >= db; --k) {
            const Rational f = r[static_cast<std::size_t>(k)] / b.leading();
            if (f.is_zero()) continue;
            q[static_cast<std::size_t>(k - db)] = f;
            for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    friend Polynomial gcd(Polynomial a, Polynomial b)
    {
        while (!b.is_zero()) {
            Polynomial r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Ascending: "c0 + c1*x + c2*x^2", zero terms omitted, unit coefficients elided.
    std::string str() const
    {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const Rational& c = c_[k];
            if (c.is_zero()) continue;
            const bool neg = c.sign() < 0;
            const Rational mag = neg ? -c : c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            std::string mono = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
            if (k == 0) out += mag.str();
            else if (mag == Rational(1)) out += mono;
            else out += mag.str() + "*" + mono;
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace detail {

// Positive divisors of |n| (n != 0), ascending.
inline std::vector<BigInt> divisors(BigInt n)
{
    if (n < 0) n = -n;
    std::vector<std::pair<BigInt, unsigned>> factors;
    BigInt p = 2;
    while (p * p <= n) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) factors.emplace_back(p, e);
        p += (p == 2 ? 1 : 2);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<BigInt> out{1};
    for (const auto& [prime, e] : factors) {
        const std::size_t base = out.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Integer coefficients proportional to p's.
inline std::vector<BigInt> integer_coefficients(const Polynomial& p)
{
    BigInt l = 1;
    for (const auto& c : p.coefficients()) l = boost::multiprecision::lcm(l, c.denominator());
    std::vector<BigInt> out;
    for (const auto& c : p.coefficients()) out.push_back(c.numerator() * (l / c.denominator()));
    return out;
}

} // namespace detail

// Distinct rational roots of p, ascending.
inline std::vector<Rational> distinct_rational_roots(const Polynomial& p)
{
    if (p.degree() < 1) return {};
    Polynomial f = divmod(p, gcd(p, p.derivative())).first;  // square-free part
    std::vector<Rational> roots;
    if (f.coeff(0).is_zero()) {
        roots.emplace_back(0);
        f = divmod(f, Polynomial::x()).first;
    }
    while (f.degree() >= 1) {
        const auto a = detail::integer_coefficients(f);
        bool found = false;
        for (const BigInt& q : detail::divisors(a.back())) {
            for (const BigInt& pnum : detail::divisors(a.front())) {
                for (int s : {1, -1}) {
                    const Rational r(BigInt(s) * pnum, q);
                    if (!f(r).is_zero()) continue;
                    roots.push_back(r);
                    f = divmod(f, Polynomial::linear(r)).first;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

struct RootMultiplicity {
    Rational root;
    unsigned multiplicity;
    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalFactorization {
    std::vector<RootMultiplicity> roots;  // ascending by root
    Polynomial residual;                  // monic, no rational roots; 1 when p splits

    bool splits() const { return residual.degree() == 0; }
};

inline RationalFactorization factor_rational_roots(const Polynomial& p)
{
    if (p.is_zero()) throw std::domain_error("factoring the zero polynomial");
    RationalFactorization out;
    Polynomial rest = p.monic();
    for (const Rational& r : distinct_rational_roots(p)) {
        unsigned m = 0;
        while (true) {
            auto [q, rem] = divmod(rest, Polynomial::linear(r));
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++m;
        }
        out.roots.push_back({r, m});
    }
    out.residual = std::move(rest);
    return out;
}

} // namespace bimatrix
