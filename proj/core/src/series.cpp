#include <jwcat/series.hpp>

#include <algorithm>

namespace jwcat
{

namespace
{

constexpr long long kExactL = TruncatedSeries::kExact;

int clamp_order(long long o)
{
    return o >= kExactL ? TruncatedSeries::kExact : static_cast<int>(o);
}

} // namespace

TruncatedSeries::TruncatedSeries(const LaurentPoly &p, int order) : order_(order)
{
    if (p.is_zero()) {
        min_exp_ = order == kExact ? 0 : order + 1;
        return;
    }
    min_exp_ = *p.min_exponent();
    const int top = std::min(*p.max_exponent(), order);
    for (int e = min_exp_; e <= top; ++e) {
        coeffs_.push_back(p.coeff(e));
    }
    normalize();
}

void TruncatedSeries::normalize()
{
    if (order_ != kExact) {
        const long long keep = static_cast<long long>(order_) - min_exp_ + 1;
        if (keep < static_cast<long long>(coeffs_.size())) {
            coeffs_.resize(static_cast<std::size_t>(std::max(0LL, keep)));
        }
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = order_ == kExact ? 0 : order_ + 1;
        return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_exp_ += static_cast<int>(lead);
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> TruncatedSeries::valuation() const
{
    if (coeffs_.empty()) return std::nullopt;
    return min_exp_;
}

Rational TruncatedSeries::coeff(int exponent) const
{
    if (exponent > order_) {
        throw WindowError("TruncatedSeries: coefficient of q^" + std::to_string(exponent) +
                          " lies beyond truncation order " + std::to_string(order_));
    }
    const long long idx = static_cast<long long>(exponent) - min_exp_;
    if (idx < 0 || idx >= static_cast<long long>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(idx)];
}

LaurentPoly TruncatedSeries::known_part() const
{
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p.add_term(min_exp_ + static_cast<int>(i), coeffs_[i]);
    }
    return p;
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    return TruncatedSeries(known_part(), std::min(order, order_));
}

TruncatedSeries TruncatedSeries::shifted(int k) const
{
    TruncatedSeries out = *this;
    out.min_exp_ += k;
    if (order_ != kExact) out.order_ += k;
    if (coeffs_.empty() && order_ == kExact) out.min_exp_ = 0;
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out = *this;
    for (auto &c : out.coeffs_) c = -c;
    return out;
}

TruncatedSeries series_add(const TruncatedSeries &x, const TruncatedSeries &y)
{
    const int order = std::min(x.order_, y.order_);
    const int low = std::min(x.min_exp_, y.min_exp_);
    if (order != TruncatedSeries::kExact && order < low - 1) {
        throw WindowError("series_add: validity windows do not overlap");
    }
    return TruncatedSeries(x.known_part() + y.known_part(), order);
}

TruncatedSeries series_sub(const TruncatedSeries &x, const TruncatedSeries &y)
{
    return series_add(x, -y);
}

TruncatedSeries series_mul(const TruncatedSeries &x, const TruncatedSeries &y)
{
    const bool x_exact_zero = x.is_exact() && x.coeffs_.empty();
    const bool y_exact_zero = y.is_exact() && y.coeffs_.empty();
    if (x_exact_zero || y_exact_zero) {
        return TruncatedSeries::zero();
    }
    // An unknown coefficient of x at order+1 meets y's lowest term, and vice versa.
    const long long ox = x.is_exact() ? kExactL : static_cast<long long>(x.order_) + y.min_exp_;
    const long long oy = y.is_exact() ? kExactL : static_cast<long long>(y.order_) + x.min_exp_;
    const int order = clamp_order(std::min(ox, oy));
    const long long low = static_cast<long long>(x.min_exp_) + y.min_exp_;
    if (order != TruncatedSeries::kExact && order < low - 1) {
        throw WindowError("series_mul: validity windows do not overlap");
    }
    LaurentPoly prod;
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        const int ei = x.min_exp_ + static_cast<int>(i);
        if (order != TruncatedSeries::kExact && ei + y.min_exp_ > order) break;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
            const int e = ei + y.min_exp_ + static_cast<int>(j);
            if (order != TruncatedSeries::kExact && e > order) break;
            prod.add_term(e, x.coeffs_[i] * y.coeffs_[j]);
        }
    }
    return TruncatedSeries(prod, order);
}

TruncatedSeries series_invert(const TruncatedSeries &x)
{
    const auto v = x.valuation();
    if (!v) {
        throw NoInverseError("series_invert: series vanishes on its validity window");
    }
    if (x.is_exact()) {
        if (x.coeffs_.size() == 1) {
            return TruncatedSeries(LaurentPoly::monomial(-*v, x.coeffs_[0].inverse()));
        }
        throw WindowError("series_invert: exact non-monomial input needs a truncation order");
    }
    const auto &u = x.coeffs_;
    const long long relative = static_cast<long long>(x.order_) - *v;
    const int order = static_cast<int>(static_cast<long long>(x.order_) - 2LL * *v);
    const Rational inv0 = u[0].inverse();
    std::vector<Rational> w(static_cast<std::size_t>(relative + 1));
    w[0] = inv0;
    for (long long n = 1; n <= relative; ++n) {
        Rational acc;
        for (long long k = 1; k <= n && k < static_cast<long long>(u.size()); ++k) {
            acc += u[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(n - k)];
        }
        w[static_cast<std::size_t>(n)] = -(acc * inv0);
    }
    LaurentPoly p;
    for (std::size_t i = 0; i < w.size(); ++i) {
        p.add_term(-*v + static_cast<int>(i), w[i]);
    }
    return TruncatedSeries(p, order);
}

int agreement_order(const TruncatedSeries &x, const TruncatedSeries &y)
{
    const int order = std::min(x.order_, y.order_);
    const int low = std::min(x.min_exp_, y.min_exp_);
    const int high = order == TruncatedSeries::kExact
                         ? std::max(x.min_exp_ + static_cast<int>(x.coeffs_.size()),
                                    y.min_exp_ + static_cast<int>(y.coeffs_.size()))
                         : order;
    for (int e = low; e <= high; ++e) {
        if (!(x.coeff(e) == y.coeff(e))) return e - 1;
    }
    return order;
}

bool series_equal(const TruncatedSeries &x, const TruncatedSeries &y)
{
    return agreement_order(x, y) == std::min(x.order_, y.order_);
}

std::string TruncatedSeries::to_string() const
{
    std::string body = known_part().to_string();
    if (is_exact()) return body;
    return body + " + O(q^" + std::to_string(order_ + 1) + ")";
}

} // namespace jwcat
