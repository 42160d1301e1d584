#pragma once

#include <memory>
#include <string>
#include <vector>

#include <jwcat/matrix.hpp>
#include <jwcat/path_algebra.hpp>

namespace jwcat
{

// Graded (A, A')-bimodule. Basis vectors are homogeneous with a left vertex
// (e(u) w = w) and a right vertex (w e(v) = w). left_action(x) sends the
// column of w to x.w; right_action(y) sends it to w.y.
class GradedBimodule
{
public:
    GradedBimodule(AlgebraPtr left, AlgebraPtr right, std::vector<int> degrees, std::vector<int> left_vertices,
                   std::vector<int> right_vertices, std::vector<Matrix> left_actions,
                   std::vector<Matrix> right_actions, std::vector<std::string> labels);

    const AlgebraPtr &left_algebra() const noexcept { return left_; }
    const AlgebraPtr &right_algebra() const noexcept { return right_; }
    std::size_t dim() const noexcept { return degrees_.size(); }
    int degree(std::size_t i) const { return degrees_.at(i); }
    int left_vertex(std::size_t i) const { return left_vertices_.at(i); }
    int right_vertex(std::size_t i) const { return right_vertices_.at(i); }
    const std::string &label(std::size_t i) const { return labels_.at(i); }
    const Matrix &left_action(int arrow) const { return left_actions_.at(static_cast<std::size_t>(arrow)); }
    const Matrix &right_action(int arrow) const { return right_actions_.at(static_cast<std::size_t>(arrow)); }

    Matrix left_action_of_basis(std::size_t path_index) const;
    Matrix right_action_of_basis(std::size_t path_index) const;
    std::optional<std::size_t> index_of(const std::string &label) const;

    // Throws std::logic_error on a failed axiom: grading, vertices,
    // relations, and commuting left and right actions.
    void validate() const;

private:
    AlgebraPtr left_;
    AlgebraPtr right_;
    std::vector<int> degrees_;
    std::vector<int> left_vertices_;
    std::vector<int> right_vertices_;
    std::vector<Matrix> left_actions_;
    std::vector<Matrix> right_actions_;
    std::vector<std::string> labels_;
};

using BimodulePtr = std::shared_ptr<const GradedBimodule>;

struct BimoduleMap
{
    BimodulePtr source;
    BimodulePtr target;
    int degree = 0;
    Matrix matrix;

    // Throws std::logic_error if the map does not commute with both actions.
    void validate() const;
};

BimoduleMap compose(const BimoduleMap &g, const BimoduleMap &f);

// A as an (A, A)-bimodule.
GradedBimodule regular_bimodule(const AlgebraPtr &alg);

// A e(u) (x) e(v) A <shift>, tensor over the ground field. Basis vectors are
// pairs p (x) q, labelled "p|q".
GradedBimodule outer_tensor_bimodule(const AlgebraPtr &alg, int u, int v, int shift);

} // namespace jwcat
