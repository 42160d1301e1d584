#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <jwcat/laurent.hpp>

namespace jwcat
{

class WindowError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class NoInverseError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Element of Z[q^-1][[q]] known exactly through a truncation order: every
// coefficient of q^e with e <= order() is exact, nothing beyond it is known.
// Exact Laurent polynomials use order() == kExact.
//
// The validity window of a series is [min_exponent(), order()]. Sums and
// products need overlapping windows; the result's order is the largest
// exponent through which it is still determined by the operands.
class TruncatedSeries
{
public:
    static constexpr int kExact = std::numeric_limits<int>::max();

    TruncatedSeries() = default;
    TruncatedSeries(const LaurentPoly &p, int order = kExact);

    static TruncatedSeries zero(int order = kExact) { return TruncatedSeries(LaurentPoly(), order); }

    int order() const noexcept { return order_; }
    bool is_exact() const noexcept { return order_ == kExact; }
    // Lowest stored exponent; for the zero series this is order()+1 (or 0 when exact).
    int min_exponent() const noexcept { return min_exp_; }
    // Exponent of the lowest nonzero coefficient, if any within the window.
    std::optional<int> valuation() const;
    bool is_zero_in_window() const { return !valuation().has_value(); }

    Rational coeff(int exponent) const;
    // The known part as a Laurent polynomial.
    LaurentPoly known_part() const;
    TruncatedSeries truncated(int order) const;
    TruncatedSeries shifted(int k) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries series_add(const TruncatedSeries &x, const TruncatedSeries &y);
    friend TruncatedSeries series_mul(const TruncatedSeries &x, const TruncatedSeries &y);
    friend TruncatedSeries series_invert(const TruncatedSeries &x);

    // Largest exponent e such that x and y agree on every exponent <= e,
    // capped at the smaller order. Equal to min order when they agree fully.
    friend int agreement_order(const TruncatedSeries &x, const TruncatedSeries &y);
    // True when x and y agree on the whole common window.
    friend bool series_equal(const TruncatedSeries &x, const TruncatedSeries &y);

    std::string to_string() const;

private:
    void normalize();

    int min_exp_ = 0;
    std::vector<Rational> coeffs_;
    int order_ = kExact;
};

TruncatedSeries series_add(const TruncatedSeries &x, const TruncatedSeries &y);
TruncatedSeries series_sub(const TruncatedSeries &x, const TruncatedSeries &y);
TruncatedSeries series_mul(const TruncatedSeries &x, const TruncatedSeries &y);
TruncatedSeries series_invert(const TruncatedSeries &x);
int agreement_order(const TruncatedSeries &x, const TruncatedSeries &y);
bool series_equal(const TruncatedSeries &x, const TruncatedSeries &y);

inline TruncatedSeries operator+(const TruncatedSeries &x, const TruncatedSeries &y) { return series_add(x, y); }
inline TruncatedSeries operator-(const TruncatedSeries &x, const TruncatedSeries &y) { return series_sub(x, y); }
inline TruncatedSeries operator*(const TruncatedSeries &x, const TruncatedSeries &y) { return series_mul(x, y); }

} // namespace jwcat
