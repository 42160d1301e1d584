#pragma once

#include <map>
#include <utility>

#include <jwcat/complex.hpp>
#include <jwcat/reduce.hpp>

namespace jwcat
{

// Koszul duality on complexes over the zig-zag algebra. Each basis vector m
// of X^r in internal degree s and vertex v contributes a summand
// P(phi(v))<-s> in homological degree r+s; the differential is d_X on the
// identity parts plus (-1)^{r+s} times left multiplication by each arrow x
// from the summand of m to that of m.x.
//
// Inputs must be bounded above. An input open below must carry a tail; the
// output is then open above, stored only where every contribution is known,
// and gets a tail re-read from its own terms.
class KoszulImage
{
public:
    explicit KoszulImage(ComplexPtr input);

    const ComplexPtr &input() const noexcept { return input_; }
    const ComplexPtr &output() const noexcept { return output_; }

    // Position of the summand coming from basis vector i of X^r.
    std::pair<int, std::size_t> position(int r, std::size_t i) const { return where_.at({r, i}); }
    bool has_position(int r, std::size_t i) const { return where_.count({r, i}) != 0; }

private:
    ComplexPtr input_;
    ComplexPtr output_;
    std::map<std::pair<int, std::size_t>, std::pair<int, std::size_t>> where_;
};

ComplexPtr koszul_D_on_object(const ComplexPtr &x);

// m (x) g -> f(m) (x) g between the outputs of two dualities.
ChainMap koszul_D_on_map(const ChainMap &f, const KoszulImage &src, const KoszulImage &dst);

// Raw duality of P(1) in degree 0 and its minimal model.
Reduction D_of_P1();

} // namespace jwcat
