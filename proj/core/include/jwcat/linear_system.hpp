#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <jwcat/rational.hpp>

namespace jwcat
{

using SparseRow = std::map<std::size_t, Rational>;

// Sparse linear system A x = b built one equation at a time. Each incoming
// row is reduced against the stored rows in increasing column order, so the
// stored rows stay in echelon form keyed by their leading column.
class LinearSystem
{
public:
    explicit LinearSystem(std::size_t num_vars) : n_(num_vars) {}

    std::size_t num_vars() const noexcept { return n_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool consistent() const noexcept { return consistent_; }

    // Returns false if the equation made the system inconsistent.
    bool add_equation(SparseRow row, const Rational &rhs = Rational(0));

    // Solution with every free variable set to zero. Requires consistent().
    std::vector<Rational> solution() const;
    // Basis of the homogeneous solution space, one vector per free variable.
    std::vector<std::vector<Rational>> nullspace() const;
    std::vector<std::size_t> free_variables() const;

private:
    struct Row
    {
        SparseRow coeffs; // leading entry normalized to 1
        Rational rhs;
    };

    std::vector<Rational> back_substitute(std::vector<Rational> x, bool homogeneous) const;

    std::size_t n_;
    std::map<std::size_t, Row> rows_; // keyed by leading column
    bool consistent_ = true;
};

} // namespace jwcat
