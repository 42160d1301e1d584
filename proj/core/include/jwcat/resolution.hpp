#pragma once

#include <jwcat/complex.hpp>

namespace jwcat
{

// Complex of tagged projectives F with a quasi-isomorphism phi: F -> X.
struct Resolution
{
    ComplexPtr source; // X
    ComplexPtr F;
    ChainMap phi;
    bool finished = false; // F is the whole resolution, not a truncation
};

// Builds F top-down by making cone(phi) exact degree by degree. Generators
// in each degree are chosen per (internal degree, vertex) in ascending
// order. X must be bounded above; F is computed down to X.lo() - depth.
Resolution resolve(const ComplexPtr &x, int depth);

Complex projective_resolution_B(const GradedModule &m, int depth);
Complex projective_resolution_C(const GradedModule &m, int depth);

// Lifts f: X -> Y to F_X -> F_Y through the resolutions, so that
// phi_Y . lift and f . phi_X agree up to homotopy.
ChainMap lift_chain_map(const Resolution &src, const Resolution &dst, const ChainMap &f);

} // namespace jwcat
