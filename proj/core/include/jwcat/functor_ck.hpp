#pragma once

#include <jwcat/complex.hpp>
#include <jwcat/reduce.hpp>

namespace jwcat
{

// The complex of bimodules 0 -> B -> theta<-1> -> theta<-3> -> theta<-5> -> ...
// with differentials alpha, beta, gamma, beta, gamma, ..., applied to a
// complex of tagged projectives X by totalizing X (x)_B CK. Column m >= 1 of
// the bicomplex is X (x) theta<-(2m-1)>, where
// P(v)<k> (x) theta = sum over paths p in e(v)Be(2) of P(2)<k + deg p - 1>.
struct CKImage
{
    ComplexPtr input;
    int depth = 0; // number of theta columns
    Bicomplex bicomplex{nullptr};
    ComplexPtr raw;
    Reduction reduction;

    const ComplexPtr &output() const noexcept { return reduction.reduced; }
};

// Summands of P(v)<k> (x) CK^m in order, for inspection and tests.
Term ck_term(const Term &x, int m);

// X must be bounded below and consist of tagged projectives. The output is
// exact up to total degree min(X.lo + depth, last determined degree of X).
CKImage CK_on_object(const ComplexPtr &x, int depth);

// f (x) id through the totalization, between the reduced outputs.
ChainMap CK_on_map(const ChainMap &f, const CKImage &src, const CKImage &dst);
// Same, between the raw totalizations.
ChainMap CK_on_map_raw(const ChainMap &f, const CKImage &src, const CKImage &dst);

} // namespace jwcat
