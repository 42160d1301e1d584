#pragma once

#include <string>
#include <vector>

#include <jwcat/bimodule.hpp>
#include <jwcat/graded_module.hpp>
#include <jwcat/path_algebra.hpp>

namespace jwcat
{

// Quadratic dual of a monomial quadratic algebra together with the map
// phi: A -> A^! on basis paths (vertex involution plus x -> x*).
struct KoszulDual
{
    AlgebraPtr algebra;
    std::vector<int> vertex_map;         // vertex of A -> vertex of A^!
    std::vector<std::size_t> basis_map;  // basis index of A -> basis index of A^!
};

// Throws std::invalid_argument (unsupported shape) unless the arrows admit a
// vertex involution swapping the endpoints of every arrow.
KoszulDual koszul_dual(const AlgebraPtr &alg, const std::string &name = "A!");

// Vertex indices of the zig-zag quiver.
inline constexpr int V1 = 0;
inline constexpr int V2 = 1;
inline int vertex_index(int label) { return label - 1; }
inline int vertex_label(int index) { return index + 1; }

// Arrow indices.
inline constexpr int ARROW_A = 0;
inline constexpr int ARROW_B = 1;

// The fixed algebraic data: B with vertices 1, 2 and arrows a: 1 -> 2,
// b: 2 -> 1 modulo ba; its dual; C = End(P(2)); theta = Be(2) (x) e(2)B<-1>
// and the bimodule maps alpha: B -> theta (degree 1), beta, gamma:
// theta -> theta (degree 2).
struct ZigZag
{
    AlgebraPtr B;
    KoszulDual dual;
    AlgebraPtr C;

    std::size_t e1, e2, a, b, c; // basis indices in B
    std::size_t c_one, c_x;      // basis indices in C

    BimodulePtr regular;
    BimodulePtr theta;
    BimodulePtr p2_over_c; // P(2) as a (C, B)-bimodule, x acting by c on the left

    BimoduleMap alpha, beta, gamma;

    ModulePtr P1, P2, L1, L2, I2;
    ModulePtr C_free;   // C as a right module over itself
    ModulePtr C_simple; // the ground field C / C_+

    ModulePtr projective_of(int vertex) const { return vertex == V1 ? P1 : P2; }
};

const ZigZag &zigzag();

} // namespace jwcat
