#include <jwcat/linear_system.hpp>

#include <stdexcept>

namespace jwcat
{

bool LinearSystem::add_equation(SparseRow row, const Rational &rhs_in)
{
    Rational rhs = rhs_in;
    for (auto it = row.begin(); it != row.end();) {
        if (it->first >= n_) throw std::out_of_range("LinearSystem: variable index out of range");
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
    // Eliminating with a row led by column p only touches columns >= p, so a
    // single ascending sweep suffices.
    std::size_t cursor = 0;
    while (true) {
        auto it = row.lower_bound(cursor);
        while (it != row.end() && rows_.find(it->first) == rows_.end()) ++it;
        if (it == row.end()) break;
        const std::size_t p = it->first;
        const Rational f = it->second;
        const Row &pivot = rows_.at(p);
        for (const auto &[c, v] : pivot.coeffs) {
            auto [jt, inserted] = row.try_emplace(c, -(f * v));
            if (!inserted) {
                jt->second -= f * v;
                if (jt->second.is_zero()) row.erase(jt);
            }
        }
        rhs -= f * pivot.rhs;
        cursor = p + 1;
    }
    if (row.empty()) {
        if (!rhs.is_zero()) consistent_ = false;
        return consistent_;
    }
    const std::size_t lead = row.begin()->first;
    const Rational inv = row.begin()->second.inverse();
    for (auto &[c, v] : row) v *= inv;
    rows_.emplace(lead, Row{std::move(row), rhs * inv});
    return consistent_;
}

std::vector<Rational> LinearSystem::back_substitute(std::vector<Rational> x, bool homogeneous) const
{
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        const auto &[p, row] = *it;
        Rational acc = homogeneous ? Rational(0) : row.rhs;
        for (const auto &[c, v] : row.coeffs) {
            if (c != p && !x[c].is_zero()) acc -= v * x[c];
        }
        x[p] = acc;
    }
    return x;
}

std::vector<Rational> LinearSystem::solution() const
{
    if (!consistent_) throw std::logic_error("LinearSystem::solution: system is inconsistent");
    return back_substitute(std::vector<Rational>(n_), false);
}

std::vector<std::size_t> LinearSystem::free_variables() const
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j) {
        if (rows_.find(j) == rows_.end()) out.push_back(j);
    }
    return out;
}

std::vector<std::vector<Rational>> LinearSystem::nullspace() const
{
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f : free_variables()) {
        std::vector<Rational> x(n_);
        x[f] = 1;
        basis.push_back(back_substitute(std::move(x), true));
    }
    return basis;
}

} // namespace jwcat
