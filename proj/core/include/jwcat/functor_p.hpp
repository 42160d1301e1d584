#pragma once

#include <jwcat/complex.hpp>
#include <jwcat/reduce.hpp>
#include <jwcat/resolution.hpp>

namespace jwcat
{

// The projector P = L(iota) . pi on complexes over B, computed as: pi termwise
// to complexes over C, a projective resolution over C, iota termwise on the
// free C-modules (C<k> -> P(2)<k+1>), then Gaussian reduction.
struct PImage
{
    ComplexPtr input;
    ComplexPtr pi;     // complex over C
    Resolution resolution;
    ComplexPtr raw;    // iota applied to the resolution
    Reduction reduction;

    const ComplexPtr &output() const noexcept { return reduction.reduced; }
};

// pi termwise; x must be over B.
ComplexPtr pi_on_complex(const ComplexPtr &x);

// iota termwise on a complex of tagged free C-modules.
ComplexPtr iota_on_free_complex(const ComplexPtr &f);

// depth bounds how far below the input the resolution is computed.
PImage P_on_object(const ComplexPtr &x, int depth);

// Image of f: src.input -> dst.input between the reduced outputs.
ChainMap P_on_map(const ChainMap &f, const PImage &src, const PImage &dst);

} // namespace jwcat
