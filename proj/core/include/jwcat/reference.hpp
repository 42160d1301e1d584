#pragma once

#include <string>
#include <vector>

#include <jwcat/complex.hpp>

namespace jwcat
{

// Hand-entered complexes of projectives over B used as comparison targets.
// Entries are written as algebra elements: "0", "1" (the idempotent),
// "a", "b", "c", optionally negated ("-c").

struct TermSpec
{
    std::vector<ProjTag> summands;
};

// Entry [row][col] of the differential from term k to term k+1 (rows index
// the target summands).
using BlockSpec = std::vector<std::vector<std::string>>;

Matrix block_matrix(const AlgebraPtr &alg, const Term &src, const Term &dst, const BlockSpec &entries);
Term term_of(const AlgebraPtr &alg, const TermSpec &spec);

// Complex over B with terms in degrees lo, lo+1, ...; an open side marks
// the end term as a truncation of an infinite complex (a tail is detected).
ComplexPtr build_complex(int lo, const std::vector<TermSpec> &terms, const std::vector<BlockSpec> &diffs,
                         bool open_lo = false, bool open_hi = false);

// The three columns of the decomposition of D P(P(1)) up to the shift
// <3>[3]: row n sits in homological degree n-2. `rows` counts the rows
// that are determined; one extra row is stored.
ComplexPtr middle_column(int rows);
ComplexPtr left_column(int rows);
ComplexPtr right_column(int rows);

// Row maps between the columns: J left -> middle, K middle -> right,
// L middle -> left, M right -> middle.
struct ColumnSplit
{
    ChainMap J, K, L, M;
};
ColumnSplit column_split(const ComplexPtr &left, const ComplexPtr &middle, const ComplexPtr &right, int rows);

// Raw CK(P(2)): P(2) -> M -> M<-2> -> ... with M = P(2)<-2> + P(2) and maps
// nu, eta, zeta, eta, ...
ComplexPtr ck_of_p2_raw(int rows);
// P(1) -a-> P(2)<-1> -(-c)-> P(2)<-3> -c-> ... from degree `lo` with the
// whole complex shifted internally by `shift`.
ComplexPtr ck_of_p1_model(int rows, int lo = 0, int shift = 0);
// P(2) -b-> P(1)<-1> in degrees 0, 1.
ComplexPtr dual_of_p1_model();
// Minimal resolution of L(1): P(1)<2> -a-> P(2)<1> -b-> P(1), shifted by
// <internal>[homological].
ComplexPtr l1_resolution(int internal = 0, int homological = 0);
// P(2)<2k+1> in degree -k for k = 0..rows, all maps c.
ComplexPtr p_of_p1_model(int rows);

} // namespace jwcat
