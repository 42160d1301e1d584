#include <jwcat/koszul.hpp>

#include <jwcat/proj_homs.hpp>
#include <jwcat/series.hpp>
#include <jwcat/zigzag.hpp>

#include <algorithm>
#include <climits>
#include <tuple>

namespace jwcat
{

namespace
{

// Term of a left-open complex in degree r, read from its tail.
Term tail_term(const Tail &t, int r)
{
    const int off = r - t.anchor;
    const int m = off >= 0 ? 0 : (-off + t.period - 1) / t.period;
    return shift_term(t.block[static_cast<std::size_t>(off + m * t.period)], m * t.internal_shift);
}

struct Contribution
{
    int s;
    int r;
    std::size_t i;
    int vertex;
};

} // namespace

KoszulImage::KoszulImage(ComplexPtr input) : input_(std::move(input))
{
    const Complex &x = *input_;
    const ZigZag &z = zigzag();
    if (x.algebra() != z.B) throw std::invalid_argument("D: input must be a complex over B");
    if (x.open_hi()) throw RegimeError("D: input must be bounded above");

    int r_lo = x.lo();
    int exact_hi = INT_MAX;
    if (x.open_lo()) {
        if (!x.tail() || x.tail()->side != Side::Left) {
            throw WindowError("D: input open below needs a periodic tail to bound the output window");
        }
        const Tail &t = *x.tail();
        if (t.internal_shift <= t.period) throw RegimeError("D: input tail is not locally finite");
        r_lo = x.determined_lo();
        // Contributions p = r + s of the missing degrees grow by shift - period
        // per period, so the first missing period bounds them all.
        int min_missing = INT_MAX;
        for (int r = r_lo - t.period; r < r_lo; ++r) {
            const Term missing = tail_term(t, r);
            for (int s : missing.degrees()) min_missing = std::min(min_missing, r + s);
        }
        if (min_missing != INT_MAX) exact_hi = min_missing - 1;
    }

    std::map<int, std::vector<Contribution>> by_p;
    for (int r = r_lo; r <= x.hi(); ++r) {
        const Term &t = x.term(r);
        for (std::size_t i = 0; i < t.dim(); ++i) {
            const int p = r + t.degree(i);
            if (p <= exact_hi) by_p[p].push_back({t.degree(i), r, i, t.vertex(i)});
        }
    }
    const bool open = x.open_lo();
    if (by_p.empty()) {
        output_ = make_complex(Complex::zero(z.B));
        return;
    }
    const int lo = by_p.begin()->first;
    const int hi = open ? std::max(exact_hi, lo) : by_p.rbegin()->first;

    std::vector<Term> terms;
    for (int p = lo; p <= hi; ++p) {
        auto &cs = by_p[p];
        std::sort(cs.begin(), cs.end(),
                  [](const Contribution &a, const Contribution &b) { return std::tie(a.s, b.r, a.i) < std::tie(b.s, a.r, b.i); });
        std::vector<Summand> sums;
        for (std::size_t k = 0; k < cs.size(); ++k) {
            const Contribution &c = cs[k];
            sums.push_back(projective_summand(z.B, z.dual.vertex_map[static_cast<std::size_t>(c.vertex)], -c.s));
            where_[{c.r, c.i}] = {p, k};
        }
        terms.emplace_back(std::move(sums));
    }

    const int arrows = z.B->quiver().num_arrows();
    std::vector<Matrix> diffs;
    for (int p = lo; p < hi; ++p) {
        const Term &S = terms[static_cast<std::size_t>(p - lo)];
        const Term &T = terms[static_cast<std::size_t>(p + 1 - lo)];
        Matrix d(T.dim(), S.dim());
        const Rational sign = (p % 2 == 0) ? Rational(1) : Rational(-1);
        for (const Contribution &c : by_p[p]) {
            const std::size_t k = where_.at({c.r, c.i}).second;
            const ProjTag src = *S.summand(k).tag;
            if (c.r < x.hi()) {
                const Matrix dx = x.d(c.r);
                for (std::size_t j = 0; j < dx.rows(); ++j) {
                    if (dx(j, c.i).is_zero()) continue;
                    const auto [q, kk] = where_.at({c.r + 1, j});
                    add_summand_block(d, S, k, T, kk, Matrix::identity(S.summand(k).dim()), dx(j, c.i));
                }
            }
            for (int a = 0; a < arrows; ++a) {
                const Matrix act = x.term(c.r).action(a);
                const AlgebraElement arrow(z.B, z.B->arrow(a));
                for (std::size_t j = 0; j < act.rows(); ++j) {
                    if (act(j, c.i).is_zero()) continue;
                    const auto [q, kk] = where_.at({c.r, j});
                    const Matrix blk = left_mult_matrix(z.B, src, *T.summand(kk).tag, arrow);
                    add_summand_block(d, S, k, T, kk, blk, sign * act(j, c.i));
                }
            }
        }
        diffs.push_back(std::move(d));
    }
    Complex out(z.B, lo, std::move(terms), std::move(diffs), false, open);
    if (open) out = out.with_tail(detect_tail(out, Side::Right));
    output_ = make_complex(std::move(out));
}

ComplexPtr koszul_D_on_object(const ComplexPtr &x) { return KoszulImage(x).output(); }

ChainMap koszul_D_on_map(const ChainMap &f, const KoszulImage &src, const KoszulImage &dst)
{
    const Complex &X = *src.input();
    const Complex &DX = *src.output();
    const Complex &DY = *dst.output();
    ChainMap out{src.output(), dst.output(), {}};
    for (int r = X.lo(); r <= X.hi(); ++r) {
        const Matrix fr = f.at(r);
        for (std::size_t i = 0; i < fr.cols(); ++i) {
            if (!src.has_position(r, i)) continue;
            const auto [p, k] = src.position(r, i);
            for (std::size_t j = 0; j < fr.rows(); ++j) {
                if (fr(j, i).is_zero() || !dst.has_position(r, j)) continue;
                const auto [q, kk] = dst.position(r, j);
                auto it = out.maps.find(p);
                if (it == out.maps.end()) it = out.maps.emplace(p, Matrix(DY.term(p).dim(), DX.term(p).dim())).first;
                add_summand_block(it->second, DX.term(p), k, DY.term(p), kk,
                                  Matrix::identity(DX.term(p).summand(k).dim()), fr(j, i));
            }
        }
    }
    return out;
}

Reduction D_of_P1()
{
    const ZigZag &z = zigzag();
    const auto p1 = make_complex(Complex::from_module(z.P1, 0));
    return gaussian_reduce(koszul_D_on_object(p1));
}

} // namespace jwcat
