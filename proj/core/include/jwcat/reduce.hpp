#pragma once

#include <cstddef>
#include <stdexcept>

#include <jwcat/complex.hpp>

namespace jwcat
{

class BudgetError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Homotopy equivalence produced by Gaussian elimination: f: X -> X',
// g: X' -> X with f g = 1 and 1 - g f = d h + h d on X.
struct Reduction
{
    ComplexPtr original;
    ComplexPtr reduced;
    ChainMap f;
    ChainMap g;
    Homotopy h;
    std::size_t steps = 0;
};

// Cancels invertible differential components between summands until none
// remain. Throws BudgetError after `budget` cancellations.
Reduction gaussian_reduce(const ComplexPtr &x, std::size_t budget = 100000);

// No differential component between two summands is an isomorphism.
bool is_minimal(const Complex &x);

} // namespace jwcat
