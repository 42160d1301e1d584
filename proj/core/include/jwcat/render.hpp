#pragma once

#include <string>

#include <jwcat/complex.hpp>

namespace jwcat
{

// "P(2)<-1>", or "M(dim 3)" for an untagged summand.
std::string render_summand(const Summand &s);
// "P(1) + P(2)<-1>", or "0".
std::string render_term(const Term &t);
// Block matrix of algebra elements, rows indexed by target summands:
// "(a)", "[[b, 1], [0, -a]]".
std::string render_block_matrix(const AlgebraPtr &alg, const Matrix &m, const Term &src, const Term &dst);

// One line in arrow notation, e.g. "0 -> P(1) -a-> P(2)<-1> --c-> ... ",
// with the degree of the first displayed term noted.
std::string render_arrows(const Complex &x);
// Degree-by-degree listing with differentials and window information.
std::string render_complex(const Complex &x);
std::string render_chain_map(const ChainMap &f);
std::string render_module(const GradedModule &m);

} // namespace jwcat
