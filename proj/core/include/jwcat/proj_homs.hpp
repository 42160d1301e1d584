#pragma once

#include <vector>

#include <jwcat/complex.hpp>
#include <jwcat/path_algebra.hpp>

namespace jwcat
{

// Basis paths p with target `vertex`, in the basis order of P(vertex).
const std::vector<std::size_t> &paths_with_target(const AlgebraPtr &alg, int vertex);

// Left multiplication by x as a map between tagged projective summands,
// P(v)<k> -> P(w)<k'>; x must lie in e(w) A e(v).
Matrix left_mult_matrix(const AlgebraPtr &alg, const ProjTag &src, const ProjTag &dst, const AlgebraElement &x);

// The element x with block = left multiplication by x (reads the image of
// the generator). Only meaningful for module maps between tagged summands.
AlgebraElement block_element(const AlgebraPtr &alg, const ProjTag &src, const ProjTag &dst, const Matrix &block);

// Basis of degree-zero homs between two summands. Closed form for tagged
// projectives, the hom-space solver otherwise.
std::vector<Matrix> hom_basis(const Summand &src, const Summand &dst);

// Whether a block between two summands is an isomorphism.
bool block_invertible(const Summand &src, const Summand &dst, const Matrix &block);

// Extracts / writes the block of a term-to-term matrix between summands.
Matrix summand_block(const Matrix &m, const Term &src, std::size_t a, const Term &dst, std::size_t b);
void add_summand_block(Matrix &m, const Term &src, std::size_t a, const Term &dst, std::size_t b, const Matrix &block,
                       const Rational &scale = 1);

} // namespace jwcat
