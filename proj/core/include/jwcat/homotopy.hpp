#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <jwcat/complex.hpp>
#include <jwcat/reduce.hpp>

namespace jwcat
{

enum class Verdict
{
    Pass,
    Fail,
    Inconclusive,
};

std::string to_string(Verdict v);

// Homological degrees on which two complexes are compared. Bounded sides are
// taken whole; an open side contributes `window` degrees measured from the
// opposite end, and the comparison is inconclusive if a complex does not
// determine that many.
struct CompareWindow
{
    int lo = 0;
    int hi = -1;
    bool sufficient = true;
    std::string reason;
};

CompareWindow compare_window(const Complex &x, const Complex &y, int window);

struct IsoResult
{
    Verdict verdict = Verdict::Fail;
    CompareWindow range;
    std::optional<Reduction> reduced_x;
    std::optional<Reduction> reduced_y;
    // Invertible chain map between the minimal models on `range`.
    std::optional<ChainMap> witness;
    std::string detail;
};

// Reduces both complexes and looks for an invertible chain map between the
// minimal models.
IsoResult iso_in_homotopy_category(const ComplexPtr &x, const ComplexPtr &y, int window = 16);

// All degree-zero chain maps from x to y on [lo, hi], as a basis.
std::vector<ChainMap> chain_map_basis(const ComplexPtr &x, const ComplexPtr &y, int lo, int hi);

struct HomotopyResult
{
    Verdict verdict = Verdict::Fail;
    CompareWindow range;
    bool strict = false; // f == g on the nose
    Rational scalar = 1; // f ~ scalar * g
    std::optional<Homotopy> witness;
    std::string detail;
};

// f - g = d h + h d on the comparison window.
HomotopyResult chain_maps_homotopic(const ChainMap &f, const ChainMap &g, int window = 16);

// f - s g = d h + h d for some nonzero scalar s.
HomotopyResult homotopic_up_to_scalar(const ChainMap &f, const ChainMap &g, int window = 16);

// Diagonal signs e (one per summand) with e d_x e = d_expected on [lo, hi].
// Terms must agree summand by summand. Returns the summands whose sign flips,
// as (degree, summand index), or nullopt if no such signs exist.
std::optional<std::vector<std::pair<int, std::size_t>>> match_up_to_signs(const Complex &x, const Complex &expected,
                                                                         int lo, int hi);

// Whether two terms have the same tagged summands in the same order.
bool same_tags(const Term &a, const Term &b);

} // namespace jwcat
