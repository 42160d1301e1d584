#include <jwcat/reference.hpp>

#include <jwcat/proj_homs.hpp>
#include <jwcat/zigzag.hpp>

#include <stdexcept>

namespace jwcat
{

namespace
{

AlgebraElement entry_element(const AlgebraPtr &alg, const std::string &text, int vertex)
{
    std::string name = text;
    Rational sign = 1;
    if (!name.empty() && name[0] == '-') {
        sign = -1;
        name.erase(0, 1);
    }
    if (name == "0") return AlgebraElement(alg);
    if (name == "1") return AlgebraElement(alg, alg->idempotent(vertex), sign);
    const auto i = alg->index_of(name);
    if (!i) throw std::invalid_argument("reference entry '" + text + "' is not a basis element");
    return AlgebraElement(alg, *i, sign);
}

TermSpec one(int vertex, int shift)
{
    return TermSpec{{ProjTag{vertex, shift}}};
}

// Row n of each column, n >= 0.
TermSpec middle_row(int n)
{
    if (n == 0) return one(V1, 2);
    if (n == 1) return TermSpec{{{V2, 1}, {V1, 0}}};
    return TermSpec{{{V1, -2 * (n - 2)}, {V2, -(2 * n - 3)}, {V1, -2 * (n - 1)}}};
}

TermSpec left_row(int n)
{
    if (n == 0) return TermSpec{};
    if (n == 1) return one(V1, 0);
    return TermSpec{{{V1, -2 * (n - 2)}, {V1, -2 * (n - 1)}}};
}

TermSpec right_row(int n)
{
    return n == 0 ? one(V1, 2) : one(V2, -(2 * n - 3));
}

// Differentials from row n to row n+1.
BlockSpec A(int n)
{
    if (n == 0) return {};
    if (n == 1) return {{"1"}, {"0"}};
    return {{"0", "1"}, {"0", "0"}};
}

BlockSpec B(int n)
{
    if (n == 0) return {{"a"}, {"0"}};
    if (n == 1) return {{"b", "1"}, {"0", "-a"}, {"0", "0"}};
    return {{"0", "b", "1"}, {"0", "0", "-a"}, {"0", "0", "0"}};
}

BlockSpec C(int n)
{
    return n == 0 ? BlockSpec{{"a"}} : BlockSpec{{"c"}};
}

// Maps between the columns in row n.
BlockSpec J(int n)
{
    if (n == 0) return {};
    if (n == 1) return {{"0"}, {"1"}};
    return {{"1", "0"}, {"-a", "0"}, {"0", "1"}};
}

BlockSpec K(int n)
{
    if (n == 0) return {{"1"}};
    if (n == 1) return {{"1", "0"}};
    return {{"a", "1", "0"}};
}

BlockSpec L(int n)
{
    if (n == 0) return {};
    if (n == 1) return {{"b", "1"}};
    return {{"1", "0", "0"}, {"0", "b", "1"}};
}

BlockSpec M(int n)
{
    if (n == 0) return {{"1"}};
    if (n == 1) return {{"1"}, {"-b"}};
    return {{"0"}, {"1"}, {"-b"}};
}

ComplexPtr column(int rows, TermSpec (*row)(int), BlockSpec (*d)(int))
{
    std::vector<TermSpec> terms;
    std::vector<BlockSpec> diffs;
    for (int n = 0; n <= rows; ++n) {
        terms.push_back(row(n));
        if (n < rows) diffs.push_back(d(n));
    }
    return build_complex(-2, terms, diffs, false, true);
}

ChainMap row_map(const ComplexPtr &src, const ComplexPtr &dst, int rows, BlockSpec (*spec)(int))
{
    ChainMap f{src, dst, {}};
    for (int n = 0; n <= rows; ++n) {
        const int deg = n - 2;
        f.maps[deg] = block_matrix(src->algebra(), src->term(deg), dst->term(deg), spec(n));
    }
    return f;
}

} // namespace

Term term_of(const AlgebraPtr &alg, const TermSpec &spec)
{
    std::vector<Summand> s;
    for (const auto &t : spec.summands) s.push_back(projective_summand(alg, t.vertex, t.shift));
    return Term(std::move(s));
}

Matrix block_matrix(const AlgebraPtr &alg, const Term &src, const Term &dst, const BlockSpec &entries)
{
    Matrix m(dst.dim(), src.dim());
    if (entries.empty()) return m;
    if (entries.size() != dst.size()) throw std::invalid_argument("block_matrix: wrong number of rows");
    for (std::size_t r = 0; r < dst.size(); ++r) {
        if (entries[r].size() != src.size()) throw std::invalid_argument("block_matrix: wrong number of columns");
        for (std::size_t c = 0; c < src.size(); ++c) {
            const ProjTag s = *src.summand(c).tag, t = *dst.summand(r).tag;
            const AlgebraElement x = entry_element(alg, entries[r][c], s.vertex);
            if (x.is_zero()) continue;
            add_summand_block(m, src, c, dst, r, left_mult_matrix(alg, s, t, x));
        }
    }
    return m;
}

ComplexPtr build_complex(int lo, const std::vector<TermSpec> &terms, const std::vector<BlockSpec> &diffs, bool open_lo,
                         bool open_hi)
{
    const AlgebraPtr &alg = zigzag().B;
    std::vector<Term> ts;
    for (const auto &t : terms) ts.push_back(term_of(alg, t));
    std::vector<Matrix> ds;
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) ds.push_back(block_matrix(alg, ts[k], ts[k + 1], diffs.at(k)));
    Complex x(alg, lo, std::move(ts), std::move(ds), open_lo, open_hi);
    if (open_lo) x = x.with_tail(detect_tail(x, Side::Left));
    if (open_hi) x = x.with_tail(detect_tail(x, Side::Right));
    return make_complex(std::move(x));
}

ComplexPtr middle_column(int rows)
{
    return column(rows, middle_row, B);
}

ComplexPtr left_column(int rows)
{
    return column(rows, left_row, A);
}

ComplexPtr right_column(int rows)
{
    return column(rows, right_row, C);
}

ColumnSplit column_split(const ComplexPtr &left, const ComplexPtr &middle, const ComplexPtr &right, int rows)
{
    return ColumnSplit{row_map(left, middle, rows, J), row_map(middle, right, rows, K), row_map(middle, left, rows, L),
                       row_map(right, middle, rows, M)};
}

ComplexPtr ck_of_p2_raw(int rows)
{
    std::vector<TermSpec> terms{one(V2, 0)};
    std::vector<BlockSpec> diffs{{{"c"}, {"1"}}};
    const BlockSpec eta{{"-c", "0"}, {"1", "-c"}};
    const BlockSpec zeta{{"c", "0"}, {"1", "c"}};
    for (int m = 1; m <= rows; ++m) {
        terms.push_back(TermSpec{{{V2, -2 * m}, {V2, 2 - 2 * m}}});
        if (m < rows) diffs.push_back(m % 2 == 1 ? eta : zeta);
    }
    return build_complex(0, terms, diffs, false, true);
}

ComplexPtr ck_of_p1_model(int rows, int lo, int shift)
{
    std::vector<TermSpec> terms{one(V1, shift)};
    std::vector<BlockSpec> diffs{{{"a"}}};
    for (int m = 1; m <= rows; ++m) {
        terms.push_back(one(V2, shift - (2 * m - 1)));
        if (m < rows) diffs.push_back({{m % 2 == 1 ? "-c" : "c"}});
    }
    return build_complex(lo, terms, diffs, false, true);
}

ComplexPtr dual_of_p1_model()
{
    return build_complex(0, {one(V2, 0), one(V1, -1)}, {{{"b"}}});
}

ComplexPtr l1_resolution(int internal, int homological)
{
    auto x = build_complex(-2, {one(V1, 2), one(V2, 1), one(V1, 0)}, {{{"a"}}, {{"b"}}});
    return make_complex(shift(*x, internal, homological));
}

ComplexPtr p_of_p1_model(int rows)
{
    std::vector<TermSpec> terms;
    std::vector<BlockSpec> diffs;
    for (int k = rows; k >= 0; --k) {
        terms.push_back(one(V2, 2 * k + 1));
        if (k > 0) diffs.push_back({{"c"}});
    }
    return build_complex(-rows, terms, diffs, true, false);
}

} // namespace jwcat
