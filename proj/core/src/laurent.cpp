#include <jwcat/laurent.hpp>

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace jwcat
{

LaurentPoly LaurentPoly::monomial(int exponent, Rational c)
{
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms &terms)
{
    LaurentPoly p;
    for (const auto &[e, c] : terms) {
        p.add_term(e, c);
    }
    return p;
}

Rational LaurentPoly::coeff(int exponent) const
{
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> LaurentPoly::min_exponent() const
{
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const
{
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const Rational &c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly out;
    for (const auto &[e, c] : terms_) {
        out.terms_.emplace(e + k, c);
    }
    return out;
}

LaurentPoly LaurentPoly::bar() const
{
    LaurentPoly out;
    for (const auto &[e, c] : terms_) {
        out.terms_.emplace(-e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out;
    for (const auto &[e, c] : terms_) {
        out.terms_.emplace(e, -c);
    }
    return out;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o)
{
    LaurentPoly out;
    for (const auto &[e1, c1] : terms_) {
        for (const auto &[e2, c2] : o.terms_) {
            out.add_term(e1 + e2, c1 * c2);
        }
    }
    return *this = std::move(out);
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        Rational mag = c;
        if (first) {
            if (c < Rational(0)) {
                out += "-";
                mag = -c;
            }
        } else if (c < Rational(0)) {
            out += " - ";
            mag = -c;
        } else {
            out += " + ";
        }
        first = false;
        if (e == 0) {
            out += mag.to_string();
            continue;
        }
        if (!mag.is_one()) {
            out += mag.to_string() + "*";
        }
        out += "q";
        if (e != 1) {
            out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) {
        throw std::invalid_argument("LaurentPoly::parse: empty input");
    }
    LaurentPoly out;
    std::size_t pos = 0;
    auto fail = [&](const std::string &why) {
        throw std::invalid_argument("LaurentPoly::parse: " + why + " at position " + std::to_string(pos));
    };
    auto read_int = [&]() {
        const std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) {
            fail("expected integer");
        }
        return std::string_view(s).substr(start, pos - start);
    };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            fail("expected '+' or '-'");
        }
        Rational coeff(1);
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            const std::size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
            coeff = Rational::parse(std::string_view(s).substr(start, pos - start));
            have_coeff = true;
        }
        int exponent = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (!have_coeff) fail("dangling '*'");
            ++pos;
            if (pos >= s.size() || s[pos] != 'q') fail("expected 'q' after '*'");
        }
        if (pos < s.size() && s[pos] == 'q') {
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                const auto digits = read_int();
                int e = 0;
                const char *begin = digits.data();
                if (*begin == '+') ++begin;
                std::from_chars(begin, digits.data() + digits.size(), e);
                exponent = e;
            }
        } else if (!have_coeff) {
            fail("expected coefficient or 'q'");
        }
        out.add_term(exponent, sign < 0 ? -coeff : coeff);
    }
    return out;
}

LaurentPoly quantum_two()
{
    return LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
}

} // namespace jwcat
