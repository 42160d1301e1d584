#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <jwcat/graded_module.hpp>
#include <jwcat/matrix.hpp>

namespace jwcat
{

// Input outside the one-sided regime an operation supports.
class RegimeError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// P(vertex)<shift> over the owning algebra (C<shift> over C, vertex 0).
struct ProjTag
{
    int vertex = 0;
    int shift = 0;

    friend bool operator==(const ProjTag &, const ProjTag &) = default;
    friend auto operator<=>(const ProjTag &, const ProjTag &) = default;
};

struct Summand
{
    ModulePtr module;
    std::optional<ProjTag> tag;
    std::string label;

    std::size_t dim() const { return module->dim(); }
};

// Cached indecomposable projective summand P(vertex)<shift>.
Summand projective_summand(const AlgebraPtr &alg, int vertex, int shift, std::string label = {});
ModulePtr projective_module(const AlgebraPtr &alg, int vertex, int shift);

// A term of a complex: an ordered direct sum of summands. Basis vectors are
// the summand bases concatenated in order.
class Term
{
public:
    Term() = default;
    explicit Term(std::vector<Summand> summands);

    const std::vector<Summand> &summands() const noexcept { return summands_; }
    const Summand &summand(std::size_t k) const { return summands_.at(k); }
    std::size_t size() const noexcept { return summands_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t offset(std::size_t k) const { return offsets_.at(k); }
    bool empty() const noexcept { return dim_ == 0; }
    bool all_tagged() const;

    int degree(std::size_t i) const { return degrees_.at(i); }
    int vertex(std::size_t i) const { return vertices_.at(i); }
    const std::vector<int> &degrees() const noexcept { return degrees_; }
    const std::vector<int> &vertices() const noexcept { return vertices_; }
    // Summand index owning a basis vector.
    std::size_t owner(std::size_t i) const;

    Matrix action(int arrow) const;
    GradedModule module(const AlgebraPtr &alg) const;

private:
    std::vector<Summand> summands_;
    std::vector<std::size_t> offsets_;
    std::vector<int> degrees_;
    std::vector<int> vertices_;
    std::size_t dim_ = 0;
};

enum class Regime
{
    Bounded,
    Left,  // continues towards -infinity (terms vanish for i >> 0)
    Right, // continues towards +infinity
};

std::string to_string(Regime r);

enum class Side
{
    Left,
    Right,
};

// Periodic continuation towards the open end of a complex. block[k] is the
// term in degree anchor+k (k < period); for m >= 1, degree anchor+k+m*period
// (Right) or anchor+k-m*period (Left) holds block[k]<m*internal_shift>.
// Beyond the anchored block the tail is authoritative, so stored terms there
// (including truncation debris at the boundary) are superseded.
struct Tail
{
    Side side = Side::Left;
    int period = 1;
    int internal_shift = 0;
    int anchor = 0;
    std::vector<Term> block;
};

// Cochain complex (d: X^i -> X^{i+1}) stored on [lo, hi]. A bounded side is
// zero beyond the stored range; on an open side the complex continues and the
// differential crossing the boundary is unknown.
class Complex
{
public:
    Complex(AlgebraPtr alg, int lo, std::vector<Term> terms, std::vector<Matrix> diffs, bool open_lo = false,
            bool open_hi = false, std::optional<Tail> tail = std::nullopt, bool check = true);

    static Complex zero(const AlgebraPtr &alg);
    static Complex from_summand(const AlgebraPtr &alg, Summand s, int degree);
    static Complex from_module(const ModulePtr &m, int degree = 0);

    const AlgebraPtr &algebra() const noexcept { return alg_; }
    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return lo_ + static_cast<int>(terms_.size()) - 1; }
    bool open_lo() const noexcept { return open_lo_; }
    bool open_hi() const noexcept { return open_hi_; }
    Regime regime() const noexcept;
    const std::optional<Tail> &tail() const noexcept { return tail_; }

    // Whether degree i lies in the stored range or on a bounded (zero) side.
    bool knows_term(int i) const noexcept;
    bool knows_differential(int i) const noexcept { return knows_term(i) && knows_term(i + 1); }
    const Term &term(int i) const;
    Matrix d(int i) const;
    const std::vector<Term> &terms() const noexcept { return terms_; }

    // Range where homology is determined.
    int determined_lo() const noexcept { return open_lo_ ? lo_ + 1 : lo_; }
    int determined_hi() const noexcept { return open_hi_ ? hi() - 1 : hi(); }

    bool is_zero() const;
    std::size_t total_dim() const;
    // Lowest and highest degrees with nonzero terms in the stored range.
    std::optional<int> first_nonzero() const;
    std::optional<int> last_nonzero() const;

    // Throws std::logic_error unless d^2 = 0 and every d is a module map.
    void validate() const;

    // Restricts the stored range; sides marked open become open.
    Complex trimmed(int new_lo, int new_hi, bool new_open_lo, bool new_open_hi) const;
    Complex with_tail(std::optional<Tail> tail) const;

private:
    AlgebraPtr alg_;
    int lo_ = 0;
    std::vector<Term> terms_;
    std::vector<Matrix> diffs_;
    bool open_lo_ = false;
    bool open_hi_ = false;
    std::optional<Tail> tail_;
};

using ComplexPtr = std::shared_ptr<const Complex>;

// Terms agree up to reordering of tagged summands.
bool same_summands(const Term &a, const Term &b);

// Finds the smallest period (up to max_period) in which the determined terms
// next to the open side repeat up to an internal shift, over the block plus
// `extra_periods` further periods. The anchor is pushed as far from the open
// side as the repetition persists.
std::optional<Tail> detect_tail(const Complex &x, Side side, int max_period = 3, int extra_periods = 2);

inline ComplexPtr make_complex(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

// X<r>[s]: (X<r>[s])^j = X^{j+s}<r>, differential scaled by (-1)^s.
Complex shift(const Complex &x, int internal, int homological);
Summand shift_summand(const Summand &s, int r);
Term shift_term(const Term &t, int r);

// Degree-zero chain map; degrees without an entry are zero.
struct ChainMap
{
    ComplexPtr source;
    ComplexPtr target;
    std::map<int, Matrix> maps;

    Matrix at(int i) const;
    // Throws std::logic_error if d f != f d somewhere both sides are determined.
    void validate() const;
};

ChainMap identity_map(const ComplexPtr &x);
ChainMap compose(const ChainMap &g, const ChainMap &f);
ChainMap operator-(const ChainMap &f, const ChainMap &g);
ChainMap operator*(const ChainMap &f, const Rational &s);

// h^i: X^i -> Y^{i-1}.
struct Homotopy
{
    ComplexPtr source;
    ComplexPtr target;
    std::map<int, Matrix> maps;

    Matrix at(int i) const;
};

// Whether f - g = d h + h d on degrees [lo, hi].
bool witnesses(const Homotopy &h, const ChainMap &f, const ChainMap &g, int lo, int hi);

class Bicomplex
{
public:
    explicit Bicomplex(AlgebraPtr alg) : alg_(std::move(alg)) {}

    void set_term(int h, int v, Term t) { terms_[{h, v}] = std::move(t); }
    void set_dh(int h, int v, Matrix m) { dh_[{h, v}] = std::move(m); }
    void set_dv(int h, int v, Matrix m) { dv_[{h, v}] = std::move(m); }

    const AlgebraPtr &algebra() const noexcept { return alg_; }
    const Term &term(int h, int v) const;
    Matrix dh(int h, int v) const; // (h, v) -> (h+1, v)
    Matrix dv(int h, int v) const; // (h, v) -> (h, v+1)
    const std::map<std::pair<int, int>, Term> &terms() const noexcept { return terms_; }

    // Throws std::logic_error unless dh^2 = dv^2 = 0 and the squares commute.
    void validate() const;

private:
    AlgebraPtr alg_;
    std::map<std::pair<int, int>, Term> terms_;
    std::map<std::pair<int, int>, Matrix> dh_;
    std::map<std::pair<int, int>, Matrix> dv_;
};

// Total complex on total degrees [lo, hi]: terms are the antidiagonal sums
// ordered by horizontal index, d = dh + (-1)^h dv.
Complex total_complex(const Bicomplex &b, int lo, int hi, bool open_lo = false, bool open_hi = false);

// Offset of the (h, v) block inside total degree h+v of total_complex.
std::size_t total_offset(const Bicomplex &b, int h, int v);
// Index of the first summand of the (h, v) block inside total degree h+v.
std::size_t total_summand_offset(const Bicomplex &b, int h, int v);

// H^i as a graded module; throws WindowError outside the determined range.
GradedModule homology(const Complex &x, int i);

} // namespace jwcat
