#include <jwcat/homotopy.hpp>

#include <jwcat/linear_system.hpp>
#include <jwcat/proj_homs.hpp>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <tuple>

namespace jwcat
{

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

bool same_tags(const Term &a, const Term &b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto &ta = a.summand(k).tag;
        const auto &tb = b.summand(k).tag;
        if (ta.has_value() != tb.has_value()) return false;
        if (ta ? *ta != *tb : a.summand(k).dim() != b.summand(k).dim()) return false;
    }
    return true;
}

CompareWindow compare_window(const Complex &x, const Complex &y, int window)
{
    CompareWindow w;
    const bool open_lo = x.open_lo() || y.open_lo();
    const bool open_hi = x.open_hi() || y.open_hi();
    auto avail_lo = [&] {
        int v = INT_MIN;
        if (x.open_lo()) v = std::max(v, x.determined_lo());
        if (y.open_lo()) v = std::max(v, y.determined_lo());
        return v;
    };
    auto avail_hi = [&] {
        int v = INT_MAX;
        if (x.open_hi()) v = std::min(v, x.determined_hi());
        if (y.open_hi()) v = std::min(v, y.determined_hi());
        return v;
    };
    if (!open_lo && !open_hi) {
        w.lo = std::min(x.lo(), y.lo());
        w.hi = std::max(x.hi(), y.hi());
    } else if (open_lo && !open_hi) {
        w.hi = std::max(x.hi(), y.hi());
        const int want = w.hi - window + 1;
        w.lo = std::max(want, avail_lo());
        w.sufficient = w.lo == want;
    } else if (!open_lo && open_hi) {
        w.lo = std::min(x.lo(), y.lo());
        const int want = w.lo + window - 1;
        w.hi = std::min(want, avail_hi());
        w.sufficient = w.hi == want;
    } else {
        w.lo = avail_lo();
        w.hi = avail_hi();
        w.sufficient = w.hi - w.lo + 1 >= window;
    }
    if (!w.sufficient) {
        w.reason = "window needs " + std::to_string(window) + " degrees, only [" + std::to_string(w.lo) + ", " +
                   std::to_string(w.hi) + "] is determined";
    }
    return w;
}

namespace
{

// One unknown: a basis hom between summand a of the source term and summand b
// of the target term, sitting in the map of the given degree.
struct Slot
{
    int degree;
    std::size_t a, b;
    Matrix block;
};

// Degreewise maps X^i -> Y^{i+offset} expanded in hom bases.
struct MapSpace
{
    const Complex *x;
    const Complex *y;
    int offset;
    std::vector<Slot> slots;

    MapSpace(const Complex &src, const Complex &dst, int off, int lo, int hi) : x(&src), y(&dst), offset(off)
    {
        for (int i = lo; i <= hi; ++i) {
            if (!x->knows_term(i) || !y->knows_term(i + offset)) continue;
            const Term &S = x->term(i);
            const Term &T = y->term(i + offset);
            for (std::size_t a = 0; a < S.size(); ++a) {
                for (std::size_t b = 0; b < T.size(); ++b) {
                    for (auto &m : hom_basis(S.summand(a), T.summand(b))) slots.push_back(Slot{i, a, b, std::move(m)});
                }
            }
        }
    }

    Matrix embed(const Slot &s) const
    {
        const Term &S = x->term(s.degree);
        const Term &T = y->term(s.degree + offset);
        Matrix m(T.dim(), S.dim());
        add_summand_block(m, S, s.a, T, s.b, s.block);
        return m;
    }

    std::map<int, Matrix> assemble(const std::vector<Rational> &coeffs) const
    {
        std::map<int, Matrix> out;
        for (std::size_t u = 0; u < slots.size(); ++u) {
            if (coeffs[u].is_zero()) continue;
            const Slot &s = slots[u];
            const Term &S = x->term(s.degree);
            const Term &T = y->term(s.degree + offset);
            auto it = out.find(s.degree);
            if (it == out.end()) it = out.emplace(s.degree, Matrix(T.dim(), S.dim())).first;
            add_summand_block(it->second, S, s.a, T, s.b, s.block, coeffs[u]);
        }
        return out;
    }
};

// Collects linear equations whose entries are matrix coefficients.
class Equations
{
public:
    explicit Equations(std::size_t vars) : vars_(vars) {}

    void add(int block, std::size_t var, const Matrix &m)
    {
        if (m.empty()) return;
        auto &rows = blocks_[block];
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (!m(r, c).is_zero()) rows[{r, c}].first[var] += m(r, c);
            }
        }
    }

    void add_rhs(int block, const Matrix &m)
    {
        auto &rows = blocks_[block];
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (!m(r, c).is_zero()) rows[{r, c}].second += m(r, c);
            }
        }
    }

    LinearSystem system() const
    {
        LinearSystem ls(vars_);
        for (const auto &[blk, rows] : blocks_) {
            for (const auto &[rc, eq] : rows) {
                SparseRow row;
                for (const auto &[v, coeff] : eq.first) {
                    if (!coeff.is_zero()) row[v] = coeff;
                }
                ls.add_equation(std::move(row), eq.second);
            }
        }
        return ls;
    }

private:
    std::size_t vars_;
    std::map<int, std::map<std::pair<std::size_t, std::size_t>, std::pair<SparseRow, Rational>>> blocks_;
};

// Chain condition d_Y f^i = f^{i+1} d_X for i in [lo, hi-1].
Equations chain_equations(const MapSpace &space, int lo, int hi)
{
    Equations eq(space.slots.size());
    for (std::size_t u = 0; u < space.slots.size(); ++u) {
        const Slot &s = space.slots[u];
        const Matrix e = space.embed(s);
        if (s.degree < hi) eq.add(s.degree, u, space.y->d(s.degree) * e);
        if (s.degree > lo) eq.add(s.degree - 1, u, (e * space.x->d(s.degree - 1)) * Rational(-1));
    }
    return eq;
}

// Invertible generic member of a space of chain maps on [lo, hi].
std::optional<std::map<int, Matrix>> find_invertible(const MapSpace &space, const std::vector<std::vector<Rational>> &basis,
                                                     int lo, int hi)
{
    std::uint64_t state = 0x2545F4914F6CDD1DULL;
    for (int attempt = 0; attempt < 12; ++attempt) {
        std::vector<Rational> coeffs(space.slots.size());
        for (const auto &v : basis) {
            long long k = 1;
            if (attempt > 0) {
                state = state * 6364136223846793005ULL + 1442695040888963407ULL;
                k = static_cast<long long>((state >> 33) % 97) - 48;
            }
            for (std::size_t j = 0; j < v.size(); ++j) coeffs[j] += v[j] * Rational(k);
        }
        auto maps = space.assemble(coeffs);
        bool ok = true;
        for (int i = lo; i <= hi && ok; ++i) {
            const std::size_t n = space.x->term(i).dim();
            if (n != space.y->term(i).dim()) return std::nullopt;
            if (n == 0) continue;
            const auto it = maps.find(i);
            ok = it != maps.end() && it->second.inverse().has_value();
        }
        if (ok) return maps;
    }
    return std::nullopt;
}

std::string tag_string(const Term &t)
{
    std::string s;
    for (const auto &sm : t.summands()) {
        if (!s.empty()) s += " + ";
        if (sm.tag) {
            s += "P(" + std::to_string(sm.tag->vertex + 1) + ")<" + std::to_string(sm.tag->shift) + ">";
        } else {
            s += "M(dim " + std::to_string(sm.dim()) + ")";
        }
    }
    return s.empty() ? "0" : s;
}

std::vector<ProjTag> sorted_tags(const Term &t)
{
    std::vector<ProjTag> out;
    for (const auto &s : t.summands()) {
        if (s.tag) out.push_back(*s.tag);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<ChainMap> chain_map_basis(const ComplexPtr &x, const ComplexPtr &y, int lo, int hi)
{
    const MapSpace space(*x, *y, 0, lo, hi);
    const LinearSystem ls = chain_equations(space, lo, hi).system();
    std::vector<ChainMap> out;
    for (const auto &v : ls.nullspace()) out.push_back(ChainMap{x, y, space.assemble(v)});
    return out;
}

IsoResult iso_in_homotopy_category(const ComplexPtr &x, const ComplexPtr &y, int window)
{
    IsoResult res;
    res.reduced_x = gaussian_reduce(x);
    res.reduced_y = gaussian_reduce(y);
    const ComplexPtr &rx = res.reduced_x->reduced;
    const ComplexPtr &ry = res.reduced_y->reduced;
    res.range = compare_window(*rx, *ry, window);
    const int lo = res.range.lo;
    const int hi = res.range.hi;

    auto fail = [&](std::string why) {
        res.verdict = Verdict::Fail;
        res.detail = std::move(why);
        return res;
    };
    for (int i = lo; i <= hi; ++i) {
        const Term &a = rx->term(i);
        const Term &b = ry->term(i);
        const bool tagged = a.all_tagged() && b.all_tagged();
        if (a.dim() != b.dim() || (tagged && sorted_tags(a) != sorted_tags(b))) {
            return fail("minimal terms differ in degree " + std::to_string(i) + ": " + tag_string(a) + " vs " +
                        tag_string(b));
        }
    }
    const MapSpace space(*rx, *ry, 0, lo, hi);
    const LinearSystem ls = chain_equations(space, lo, hi).system();
    const auto maps = find_invertible(space, ls.nullspace(), lo, hi);
    if (!maps) return fail("no invertible chain map between the minimal models");
    res.witness = ChainMap{rx, ry, *maps};
    if (!res.range.sufficient) {
        res.verdict = Verdict::Inconclusive;
        res.detail = res.range.reason;
    } else {
        res.verdict = Verdict::Pass;
    }
    return res;
}

namespace
{

HomotopyResult solve_homotopy(const ChainMap &f, const ChainMap &g, int window, bool with_scalar)
{
    HomotopyResult res;
    const Complex &x = *f.source;
    const Complex &y = *f.target;
    res.range = compare_window(x, y, window);
    const int lo = res.range.lo;
    const int hi = res.range.hi;
    auto finish = [&](Verdict v, std::string why) {
        res.verdict = (v == Verdict::Pass && !res.range.sufficient) ? Verdict::Inconclusive : v;
        res.detail = res.verdict == Verdict::Inconclusive && why.empty() ? res.range.reason : std::move(why);
        return res;
    };

    bool strict = true;
    for (int i = lo; i <= hi && strict; ++i) strict = f.at(i) == g.at(i);
    if (strict) {
        res.strict = true;
        res.witness = Homotopy{f.source, f.target, {}};
        return finish(Verdict::Pass, "");
    }

    // h^i: X^i -> Y^{i-1} for i in [lo, hi+1].
    const MapSpace space(x, y, -1, lo, hi + 1);
    const std::size_t nh = space.slots.size();
    const std::size_t lambda = nh;
    Equations eq(nh + (with_scalar ? 1 : 0));
    for (std::size_t u = 0; u < nh; ++u) {
        const Slot &s = space.slots[u];
        const Matrix e = space.embed(s);
        // d_Y h^i contributes to degree i, h^i d_X to degree i-1.
        if (s.degree >= lo && s.degree <= hi) eq.add(s.degree, u, y.d(s.degree - 1) * e);
        if (s.degree - 1 >= lo && s.degree - 1 <= hi) eq.add(s.degree - 1, u, e * x.d(s.degree - 1));
    }
    for (int i = lo; i <= hi; ++i) {
        if (with_scalar) {
            eq.add(i, lambda, g.at(i));
            eq.add_rhs(i, f.at(i));
        } else {
            eq.add_rhs(i, f.at(i) - g.at(i));
        }
    }
    LinearSystem ls = eq.system();
    if (!ls.consistent()) return finish(Verdict::Fail, "f - g is not null-homotopic on the window");
    std::vector<Rational> sol = ls.solution();
    if (with_scalar && sol[lambda].is_zero()) {
        // The scalar is either forced to zero or free; in the free case pin it to 1.
        const auto fv = ls.free_variables();
        if (std::find(fv.begin(), fv.end(), lambda) == fv.end()) {
            return finish(Verdict::Fail, "f is null-homotopic but g is not");
        }
        ls.add_equation(SparseRow{{lambda, Rational(1)}}, Rational(1));
        sol = ls.solution();
    }
    if (with_scalar) res.scalar = sol[lambda];
    sol.resize(nh);
    res.witness = Homotopy{f.source, f.target, space.assemble(sol)};
    return finish(Verdict::Pass, "");
}

} // namespace

HomotopyResult chain_maps_homotopic(const ChainMap &f, const ChainMap &g, int window)
{
    return solve_homotopy(f, g, window, false);
}

HomotopyResult homotopic_up_to_scalar(const ChainMap &f, const ChainMap &g, int window)
{
    return solve_homotopy(f, g, window, true);
}

std::optional<std::vector<std::pair<int, std::size_t>>> match_up_to_signs(const Complex &x, const Complex &expected,
                                                                         int lo, int hi)
{
    using Node = std::pair<int, std::size_t>;
    std::map<Node, std::size_t> id;
    std::vector<Node> nodes;
    for (int i = lo; i <= hi; ++i) {
        if (!same_tags(x.term(i), expected.term(i))) return std::nullopt;
        for (std::size_t k = 0; k < x.term(i).size(); ++k) {
            id[{i, k}] = nodes.size();
            nodes.push_back({i, k});
        }
    }
    // Union-find carrying the parity of each node relative to its parent.
    std::vector<std::size_t> parent(nodes.size());
    std::vector<int> parity(nodes.size(), 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t n) {
        int p = 0;
        std::size_t r = n;
        while (parent[r] != r) {
            p ^= parity[r];
            r = parent[r];
        }
        return std::pair{r, p};
    };
    auto unite = [&](std::size_t a, std::size_t b, int rel) {
        const auto [ra, pa] = find(a);
        const auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == rel;
        parent[ra] = rb;
        parity[ra] = pa ^ pb ^ rel;
        return true;
    };

    for (int i = lo; i < hi; ++i) {
        const Term &S = x.term(i);
        const Term &T = x.term(i + 1);
        const Matrix dx = x.d(i);
        const Matrix de = expected.d(i);
        for (std::size_t a = 0; a < S.size(); ++a) {
            for (std::size_t b = 0; b < T.size(); ++b) {
                const Matrix bx = summand_block(dx, S, a, T, b);
                const Matrix be = summand_block(de, S, a, T, b);
                if (bx.is_zero() && be.is_zero()) continue;
                int rel = -1;
                if (bx == be) rel = 0;
                else if (bx == be * Rational(-1)) rel = 1;
                if (rel < 0 || !unite(id.at({i, a}), id.at({i + 1, b}), rel)) return std::nullopt;
            }
        }
    }
    std::vector<Node> flips;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        if (find(n).second) flips.push_back(nodes[n]);
    }
    return flips;
}

} // namespace jwcat
