#include <jwcat/render.hpp>

#include <jwcat/proj_homs.hpp>

#include <sstream>

namespace jwcat
{

std::string render_summand(const Summand &s)
{
    if (!s.tag) return "M(dim " + std::to_string(s.dim()) + ")";
    const bool single_vertex = s.module->algebra()->quiver().num_vertices() == 1;
    std::string out = single_vertex ? s.module->algebra()->name() : "P(" + std::to_string(s.tag->vertex + 1) + ")";
    if (s.tag->shift != 0) out += "<" + std::to_string(s.tag->shift) + ">";
    return out;
}

std::string render_term(const Term &t)
{
    if (t.size() == 0) return "0";
    std::string out;
    for (const auto &s : t.summands()) out += (out.empty() ? "" : " + ") + render_summand(s);
    return out;
}

namespace
{

std::string render_entry(const AlgebraPtr &alg, const Matrix &blk, const Summand &a, const Summand &b)
{
    if (blk.is_zero()) return "0";
    if (a.tag && b.tag) return block_element(alg, *a.tag, *b.tag, blk).to_string();
    return blk.to_string();
}

} // namespace

std::string render_block_matrix(const AlgebraPtr &alg, const Matrix &m, const Term &src, const Term &dst)
{
    if (src.size() == 1 && dst.size() == 1) {
        return "(" + render_entry(alg, m, src.summand(0), dst.summand(0)) + ")";
    }
    std::string out = "[";
    for (std::size_t b = 0; b < dst.size(); ++b) {
        out += (b ? ", [" : "[");
        for (std::size_t a = 0; a < src.size(); ++a) {
            if (a) out += ", ";
            out += render_entry(alg, summand_block(m, src, a, dst, b), src.summand(a), dst.summand(b));
        }
        out += "]";
    }
    return out + "]";
}

std::string render_arrows(const Complex &x)
{
    std::ostringstream os;
    const auto first = x.first_nonzero();
    const auto last = x.last_nonzero();
    if (!first) return x.open_lo() || x.open_hi() ? "0 (on the stored window)" : "0";
    const int lo = x.open_lo() ? x.determined_lo() : *first;
    const int hi = x.open_hi() ? x.determined_hi() : *last;
    os << (x.open_lo() ? "... -> " : "0 -> ");
    for (int i = lo; i <= hi; ++i) {
        os << render_term(x.term(i));
        if (i == lo) os << " {deg " << i << "}";
        if (i < hi) {
            const Term &s = x.term(i);
            const Term &t = x.term(i + 1);
            os << " -" << render_block_matrix(x.algebra(), x.d(i), s, t) << "-> ";
        }
    }
    os << (x.open_hi() ? " -> ..." : " -> 0");
    return os.str();
}

std::string render_complex(const Complex &x)
{
    std::ostringstream os;
    os << "regime " << to_string(x.regime()) << ", stored [" << x.lo() << ", " << x.hi() << "], determined ["
       << x.determined_lo() << ", " << x.determined_hi() << "]";
    if (x.tail()) {
        const Tail &t = *x.tail();
        os << ", tail " << (t.side == Side::Left ? "left" : "right") << " period " << t.period << " shift <"
           << t.internal_shift << "> from degree " << t.anchor;
    }
    os << "\n";
    for (int i = x.lo(); i <= x.hi(); ++i) {
        os << "  [" << i << "] " << render_term(x.term(i)) << "\n";
        if (i < x.hi() && !x.term(i).empty() && !x.term(i + 1).empty()) {
            os << "      d = " << render_block_matrix(x.algebra(), x.d(i), x.term(i), x.term(i + 1)) << "\n";
        }
    }
    return os.str();
}

std::string render_chain_map(const ChainMap &f)
{
    std::ostringstream os;
    for (const auto &[i, m] : f.maps) {
        if (m.is_zero()) continue;
        os << "  [" << i << "] " << render_block_matrix(f.source->algebra(), m, f.source->term(i), f.target->term(i))
           << "\n";
    }
    const std::string s = os.str();
    return s.empty() ? "  0\n" : s;
}

std::string render_module(const GradedModule &m)
{
    std::ostringstream os;
    os << "graded dimension " << m.graded_dim().to_string() << "\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        os << "  " << m.label(i) << "  degree " << m.degree(i) << ", vertex " << m.vertex(i) + 1 << "\n";
    }
    return os.str();
}

} // namespace jwcat
