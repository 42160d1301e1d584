#pragma once

#include <array>
#include <string>

#include <jwcat/complex.hpp>
#include <jwcat/series.hpp>

namespace jwcat
{

// Class in the completed Grothendieck group, in the simple basis
// ([L(1)], [L(2)]). Complexes open to the right live in the completion in
// q^{-1}; for those `inverted` is set and the series are stored in the
// variable u = q^{-1}.
struct KClass
{
    TruncatedSeries l1;
    TruncatedSeries l2;
    bool inverted = false;

    static KClass zero(bool inverted = false);

    const TruncatedSeries &at(int vertex) const { return vertex == 0 ? l1 : l2; }
    int order() const { return std::min(l1.order(), l2.order()); }
    KClass truncated(int order) const;
    // Multiplication by q^r.
    KClass shifted(int r) const;
    KClass operator-() const;
    friend KClass operator+(const KClass &x, const KClass &y);
    friend KClass operator-(const KClass &x, const KClass &y) { return x + (-y); }

    std::string to_string() const;
};

// Same side of the completion and equal on the common window.
bool class_equal(const KClass &x, const KClass &y);
// A Laurent polynomial lies in both completions; throws RegimeError for an
// inexact class on the other side.
KClass in_completion(const KClass &k, bool inverted);
// Exponent through which both coordinates agree.
int class_agreement(const KClass &x, const KClass &y);

KClass class_of_module(const GradedModule &m, bool inverted = false);
KClass class_of_term(const Term &t, bool inverted = false);

// Alternating sum of the terms, summing a periodic tail as a geometric
// series. Throws RegimeError for complexes open on both sides or with a
// tail that does not converge in the relevant completion, and WindowError
// for an open complex without a tail.
KClass euler_class(const Complex &x, int order);

using SeriesMatrix = std::array<std::array<TruncatedSeries, 2>, 2>; // [row][col]

// Projective-basis coordinates (x1, x2) with [M] = x1 [P(1)] + x2 [P(2)].
std::array<TruncatedSeries, 2> to_projective_basis(const KClass &k);
KClass from_projective_basis(const std::array<TruncatedSeries, 2> &x, bool inverted = false);

// p2 on the projective basis: p2[P(1)] = q/(1+q^2) [P(2)], p2[P(2)] = [P(2)].
SeriesMatrix jones_wenzl_reference(int order);
SeriesMatrix series_matmul(const SeriesMatrix &a, const SeriesMatrix &b);
bool series_matrix_equal(const SeriesMatrix &a, const SeriesMatrix &b);
// Applies a matrix in the projective basis to a class (q-side only).
KClass apply_projective_matrix(const SeriesMatrix &m, const KClass &k);

} // namespace jwcat
