#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <jwcat/laurent.hpp>
#include <jwcat/matrix.hpp>
#include <jwcat/path_algebra.hpp>

namespace jwcat
{

class GradedBimodule;

// Finite-dimensional graded right module. Each basis vector is homogeneous
// with an internal degree and a vertex v (it lies in M e(v)). For each arrow
// x the action matrix sends the column of a basis vector m to m.x.
class GradedModule
{
public:
    GradedModule() = default;
    GradedModule(AlgebraPtr alg, std::vector<int> degrees, std::vector<int> vertices, std::vector<Matrix> actions,
                 std::vector<std::string> labels = {});

    static GradedModule zero(AlgebraPtr alg);

    const AlgebraPtr &algebra() const noexcept { return alg_; }
    std::size_t dim() const noexcept { return degrees_.size(); }
    bool is_zero() const noexcept { return degrees_.empty(); }
    int degree(std::size_t i) const { return degrees_.at(i); }
    int vertex(std::size_t i) const { return vertices_.at(i); }
    const std::string &label(std::size_t i) const { return labels_.at(i); }
    const std::vector<int> &degrees() const noexcept { return degrees_; }
    const std::vector<int> &vertices() const noexcept { return vertices_; }
    const std::vector<std::string> &labels() const noexcept { return labels_; }
    const Matrix &action(int arrow) const { return actions_.at(static_cast<std::size_t>(arrow)); }
    const std::vector<Matrix> &actions() const noexcept { return actions_; }

    // Matrix of right multiplication by a basis path or an element.
    Matrix action_of_basis(std::size_t path_index) const;
    Matrix action_of(const AlgebraElement &x) const;

    // Sum of q^deg over basis vectors, optionally restricted to one vertex.
    LaurentPoly graded_dim(std::optional<int> vertex = std::nullopt) const;
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;

    // Throws std::logic_error if any module axiom fails.
    void validate() const;

    friend bool operator==(const GradedModule &, const GradedModule &) = default;

private:
    AlgebraPtr alg_;
    std::vector<int> degrees_;
    std::vector<int> vertices_;
    std::vector<Matrix> actions_;
    std::vector<std::string> labels_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

// Homogeneous module map of internal degree `degree`: sends M_d to N_{d+degree}.
struct ModuleHom
{
    ModulePtr source;
    ModulePtr target;
    int degree = 0;
    Matrix matrix; // dim target x dim source

    bool is_zero() const { return matrix.is_zero(); }
    // Throws std::logic_error unless the matrix commutes with all arrows and
    // respects vertices and degrees.
    void validate() const;
};

ModuleHom compose(const ModuleHom &g, const ModuleHom &f);

GradedModule shift_internal(const GradedModule &m, int r);
GradedModule direct_sum(const std::vector<const GradedModule *> &parts);

GradedModule projective(const AlgebraPtr &alg, int vertex);
GradedModule simple(const AlgebraPtr &alg, int vertex);

// Basis of the homogeneous homs M -> N; each entry carries its degree.
std::vector<ModuleHom> hom_space(const ModulePtr &m, const ModulePtr &n);
std::vector<ModuleHom> hom_space_in_degree(const ModulePtr &m, const ModulePtr &n, int degree);
// An invertible degree-0 hom M -> N, if one exists.
std::optional<ModuleHom> find_isomorphism(const ModulePtr &m, const ModulePtr &n);

// M (x)_A W for a right A-module M and an (A,A')-bimodule W.
GradedModule tensor_with_bimodule(const GradedModule &m, const GradedBimodule &w);

// K / I for homogeneous spanning sets with span(I) inside span(K), both
// closed under the action. Vectors are columns in M's basis.
GradedModule subquotient(const GradedModule &m, const std::vector<std::vector<Rational>> &k,
                         const std::vector<std::vector<Rational>> &i);

} // namespace jwcat
