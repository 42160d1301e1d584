#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jwcat
{

namespace detail
{
__extension__ typedef __int128 wide_int;
} // namespace detail

// Thrown when an exact operation would leave the 64-bit range.
class ArithmeticOverflow : public std::overflow_error
{
public:
    using std::overflow_error::overflow_error;
};

// Exact rational number, always stored in lowest terms with a positive
// denominator. Intermediate products are formed in 128 bits and any result
// that does not fit back into 64 bits raises ArithmeticOverflow.
class Rational
{
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t n) noexcept : num_(n) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_one() const noexcept { return num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept { return den_ == 1; }

    Rational inverse() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &);
    Rational &operator-=(const Rational &);
    Rational &operator*=(const Rational &);
    Rational &operator/=(const Rational &);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) noexcept
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational &a, const Rational &b);

    std::string to_string() const;
    // Accepts "n" or "n/d" with an optional leading sign.
    static Rational parse(std::string_view text);

private:
    static Rational from_wide(detail::wide_int n, detail::wide_int d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &, const Rational &);

} // namespace jwcat

template <>
struct std::hash<jwcat::Rational> {
    std::size_t operator()(const jwcat::Rational &r) const noexcept
    {
        return std::hash<std::int64_t>{}(r.num()) * 31u + std::hash<std::int64_t>{}(r.den());
    }
};
