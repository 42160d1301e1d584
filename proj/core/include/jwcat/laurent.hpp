#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <jwcat/rational.hpp>

namespace jwcat
{

// Finitely supported Laurent polynomial in q with rational coefficients.
// Zero coefficients are never stored.
class LaurentPoly
{
public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(Rational c) { add_term(0, c); }
    static LaurentPoly monomial(int exponent, Rational c = 1);
    static LaurentPoly from_terms(const Terms &terms);

    const Terms &terms() const noexcept { return terms_; }
    Rational coeff(int exponent) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;

    void add_term(int exponent, const Rational &c);
    // Multiplication by q^k.
    LaurentPoly shifted(int k) const;
    // Substitution q -> q^{-1}.
    LaurentPoly bar() const;

    LaurentPoly operator-() const;
    LaurentPoly &operator+=(const LaurentPoly &);
    LaurentPoly &operator-=(const LaurentPoly &);
    LaurentPoly &operator*=(const LaurentPoly &);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly &b) { return a *= b; }
    friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

    // Renders e.g. "q^-1 + 2 + q^3", "-q - 3/2*q^2", or "0".
    std::string to_string() const;
    // Exact inverse of to_string; also accepts "q^1", "1*q" and stray spaces.
    static LaurentPoly parse(std::string_view text);

private:
    Terms terms_;
};

// The quantum integer [2] = q + q^{-1}.
LaurentPoly quantum_two();

} // namespace jwcat
