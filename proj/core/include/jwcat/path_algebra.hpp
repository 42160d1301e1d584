#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <jwcat/quiver.hpp>
#include <jwcat/rational.hpp>

namespace jwcat
{

// A path alpha_1 alpha_2 ... alpha_l: alpha_l is traversed first, so the path
// runs from source(alpha_l) to target(alpha_1). Stationary paths have no
// arrows and source == target.
struct Path
{
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    std::size_t length() const noexcept { return arrows.size(); }
    friend bool operator==(const Path &, const Path &) = default;
    friend auto operator<=>(const Path &, const Path &) = default;
};

// Graded path algebra modulo monomial quadratic relations. Basis paths are
// ordered by degree, then by enumeration order (vertex index, then arrow
// index of the leftmost arrow).
class GradedAlgebra
{
public:
    GradedAlgebra(Quiver q, std::vector<std::vector<int>> relations, int d_max, std::string name);

    const std::string &name() const noexcept { return name_; }
    const Quiver &quiver() const noexcept { return quiver_; }
    const std::vector<std::vector<int>> &relations() const noexcept { return relations_; }
    int d_max() const noexcept { return d_max_; }

    std::size_t dim() const noexcept { return basis_.size(); }
    const Path &path(std::size_t i) const { return basis_.at(i); }
    int degree(std::size_t i) const { return degrees_.at(i); }
    int max_degree() const;
    // Dimension of the degree-d part for d = 0..max_degree().
    std::vector<int> graded_dims() const;

    // Index of a basis path, if the path survives the relations.
    std::optional<std::size_t> index_of(const Path &p) const;
    std::optional<std::size_t> index_of(const std::string &name) const;
    std::size_t idempotent(int vertex) const { return idempotents_.at(static_cast<std::size_t>(vertex)); }
    std::size_t arrow(int a) const { return arrow_basis_.at(static_cast<std::size_t>(a)); }

    // Product of basis paths: a basis index or nothing when it vanishes.
    std::optional<std::size_t> mul(std::size_t i, std::size_t j) const { return table_[i][j]; }

    // Display name; aliases such as c for ab take precedence.
    std::string basis_name(std::size_t i) const;
    void set_alias(const std::string &path_word, const std::string &alias);

    // Whether the word of arrows contains a forbidden subpath.
    bool word_vanishes(const std::vector<int> &word) const;

private:
    std::string name_;
    Quiver quiver_;
    std::vector<std::vector<int>> relations_;
    int d_max_;
    std::vector<Path> basis_;
    std::vector<int> degrees_;
    std::vector<std::size_t> idempotents_;
    std::vector<std::size_t> arrow_basis_;
    std::vector<std::vector<std::optional<std::size_t>>> table_;
    std::map<std::size_t, std::string> aliases_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// Builds the algebra with relations given as arrow-name words: {"b", "a"}
// forbids the path ba. Throws ConstructionError on malformed input.
AlgebraPtr build_path_algebra(const Quiver &q, const std::vector<std::vector<std::string>> &relations,
                              int d_max = 4, const std::string &name = "A");

class AlgebraElement
{
public:
    AlgebraElement() = default;
    explicit AlgebraElement(AlgebraPtr parent) : parent_(std::move(parent)) {}
    AlgebraElement(AlgebraPtr parent, std::size_t basis_index, Rational c = 1);
    static AlgebraElement named(const AlgebraPtr &parent, const std::string &name);

    const AlgebraPtr &parent() const noexcept { return parent_; }
    const std::map<std::size_t, Rational> &coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t i) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Common degree of the support; nullopt for zero or inhomogeneous elements.
    std::optional<int> homogeneous_degree() const;

    void add(std::size_t i, const Rational &c);
    AlgebraElement &operator+=(const AlgebraElement &o);
    AlgebraElement &operator-=(const AlgebraElement &o);
    AlgebraElement &operator*=(const Rational &s);
    friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement &y) { return x += y; }
    friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement &y) { return x -= y; }
    friend AlgebraElement operator*(AlgebraElement x, const Rational &s) { return x *= s; }
    friend AlgebraElement operator*(const AlgebraElement &x, const AlgebraElement &y);
    friend bool operator==(const AlgebraElement &x, const AlgebraElement &y);

    std::string to_string() const;

private:
    AlgebraPtr parent_;
    std::map<std::size_t, Rational> coeffs_;
};

AlgebraElement multiply(const AlgebraElement &x, const AlgebraElement &y);

} // namespace jwcat
