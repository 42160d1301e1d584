#include <jwcat/rational.hpp>

#include <charconv>
#include <limits>
#include <ostream>

namespace jwcat
{

namespace
{

using detail::wide_int;

wide_int gcd128(wide_int a, wide_int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(wide_int v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    if (d == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    *this = from_wide(n, d);
}

Rational Rational::from_wide(wide_int n, wide_int d)
{
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const wide_int g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) {
        d = 1;
    }
    if (!fits(n) || !fits(d)) {
        throw ArithmeticOverflow("Rational: result exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational Rational::inverse() const
{
    if (num_ == 0) {
        throw std::domain_error("Rational: inverse of zero");
    }
    return from_wide(den_, num_);
}

Rational Rational::operator-() const
{
    return from_wide(-static_cast<wide_int>(num_), den_);
}

Rational &Rational::operator+=(const Rational &o)
{
    if (den_ == 1 && o.den_ == 1) {
        return *this = from_wide(static_cast<wide_int>(num_) + o.num_, 1);
    }
    *this = from_wide(static_cast<wide_int>(num_) * o.den_ + static_cast<wide_int>(o.num_) * den_,
                      static_cast<wide_int>(den_) * o.den_);
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    return *this += -o;
}

Rational &Rational::operator*=(const Rational &o)
{
    if (num_ == 0 || o.num_ == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    *this = from_wide(static_cast<wide_int>(num_) * o.num_, static_cast<wide_int>(den_) * o.den_);
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    return *this *= o.inverse();
}

bool operator<(const Rational &a, const Rational &b)
{
    return static_cast<wide_int>(a.num_) * b.den_ < static_cast<wide_int>(b.num_) * a.den_;
}

std::string Rational::to_string() const
{
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text)
{
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        if (!s.empty() && s.front() == '+') {
            s.remove_prefix(1);
        }
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
            throw std::invalid_argument("Rational::parse: malformed integer '" + std::string(s) + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

} // namespace jwcat
