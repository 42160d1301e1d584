#include <jwcat/expression.hpp>

#include <jwcat/functor_ck.hpp>
#include <jwcat/functor_p.hpp>
#include <jwcat/koszul.hpp>
#include <jwcat/proj_homs.hpp>
#include <jwcat/reduce.hpp>
#include <jwcat/render.hpp>
#include <jwcat/series.hpp>
#include <jwcat/zigzag.hpp>

#include <cctype>
#include <charconv>
#include <sstream>

namespace jwcat
{

ParseError::ParseError(std::size_t position, const std::string &message)
    : std::invalid_argument("at position " + std::to_string(position) + ": " + message), position_(position),
      message_(message)
{
}

std::string Expr::to_string() const
{
    std::string s;
    switch (kind) {
    case Kind::Apply: s = name + "(" + arg->to_string() + ")"; break;
    case Kind::Module: s = name + "(" + std::to_string(index) + ")"; break;
    case Kind::Generator: s = name == "e" ? "e(" + std::to_string(index) + ")" : name; break;
    }
    if (internal_shift != 0) s += "<" + std::to_string(internal_shift) + ">";
    if (homological_shift != 0) s += "[" + std::to_string(homological_shift) + "]";
    return s;
}

namespace
{

class Parser
{
public:
    explicit Parser(const std::string &text) : s_(text) {}

    Expr parse()
    {
        Expr e = expr();
        skip();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(pos_, msg); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c)
    {
        skip();
        if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
        if (s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer()
    {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const char *first = s_.data() + start + (start < s_.size() && s_[start] == '+' ? 1 : 0);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(first, s_.data() + pos_, v);
        if (ec != std::errc() || ptr != s_.data() + pos_ || pos_ == start) {
            pos_ = start;
            fail("expected an integer");
        }
        return v;
    }

    int vertex_arg(std::initializer_list<int> allowed)
    {
        expect('(');
        skip();
        const std::size_t at = pos_;
        const int v = integer();
        bool ok = false;
        for (int a : allowed) ok = ok || a == v;
        if (!ok) {
            pos_ = at;
            fail("no such vertex " + std::to_string(v));
        }
        expect(')');
        return v;
    }

    Expr expr()
    {
        Expr e = atom();
        for (;;) {
            if (peek('<')) {
                ++pos_;
                e.internal_shift += integer();
                expect('>');
            } else if (peek('[')) {
                ++pos_;
                e.homological_shift += integer();
                expect(']');
            } else {
                return e;
            }
        }
    }

    Expr apply(const std::string &name, std::size_t at)
    {
        Expr e;
        e.kind = Expr::Kind::Apply;
        e.name = name;
        e.position = at;
        e.arg = std::make_shared<const Expr>(expr());
        expect(')');
        return e;
    }

    Expr atom()
    {
        skip();
        const std::size_t at = pos_;
        if (pos_ >= s_.size()) fail("expected an expression but input ended");
        const auto starts = [&](const char *w) { return s_.compare(pos_, std::char_traits<char>::length(w), w) == 0; };
        Expr e;
        e.position = at;
        if (starts("CK")) {
            pos_ += 2;
            expect('(');
            return apply("CK", at);
        }
        const char c = s_[pos_];
        ++pos_;
        switch (c) {
        case 'D':
            expect('(');
            return apply("D", at);
        case 'P': {
            expect('(');
            skip();
            if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
                const std::size_t num = pos_;
                const int v = integer();
                if (v != 1 && v != 2) {
                    pos_ = num;
                    fail("no such vertex " + std::to_string(v));
                }
                expect(')');
                e.kind = Expr::Kind::Module;
                e.name = "P";
                e.index = v;
                return e;
            }
            return apply("P", at);
        }
        case 'L':
            e.kind = Expr::Kind::Module;
            e.name = "L";
            e.index = vertex_arg({1, 2});
            return e;
        case 'I':
            e.kind = Expr::Kind::Module;
            e.name = "I";
            e.index = vertex_arg({2});
            return e;
        case 'e':
            e.kind = Expr::Kind::Generator;
            e.name = "e";
            e.index = vertex_arg({1, 2});
            return e;
        case 'a':
        case 'b':
        case 'c':
            e.kind = Expr::Kind::Generator;
            e.name = std::string(1, c);
            return e;
        default:
            pos_ = at;
            fail(std::string("unexpected '") + c + "'; expected D, P, CK, L, I or a generator");
        }
    }

    const std::string &s_;
    std::size_t pos_ = 0;
};

struct Value
{
    bool is_map = false;
    ComplexPtr object;
    std::optional<ChainMap> map;
};

ComplexPtr point(const Summand &s)
{
    return make_complex(Complex::from_summand(zigzag().B, s, 0));
}

Value module_value(const Expr &e)
{
    const ZigZag &z = zigzag();
    const int v = vertex_index(e.index);
    if (e.name == "P") return {false, point(projective_summand(z.B, v, 0)), {}};
    if (e.name == "L") return {false, make_complex(Complex::from_module(v == V1 ? z.L1 : z.L2)), {}};
    return {false, make_complex(Complex::from_module(z.I2)), {}};
}

Value generator_value(const Expr &e)
{
    const ZigZag &z = zigzag();
    ProjTag src, dst;
    std::size_t el = 0;
    if (e.name == "c") src = {V2, 2}, dst = {V2, 0}, el = z.c;
    else if (e.name == "a") src = {V1, 1}, dst = {V2, 0}, el = z.a;
    else if (e.name == "b") src = {V2, 1}, dst = {V1, 0}, el = z.b;
    else {
        const int v = vertex_index(e.index);
        src = dst = {v, 0};
        el = z.B->idempotent(v);
    }
    auto S = point(projective_summand(z.B, src.vertex, src.shift));
    auto T = point(projective_summand(z.B, dst.vertex, dst.shift));
    ChainMap f{S, T, {{0, left_mult_matrix(z.B, src, dst, AlgebraElement(z.B, el))}}};
    return {true, nullptr, f};
}

Value shifted(Value v, int r, int s)
{
    if (r == 0 && s == 0) return v;
    if (!v.is_map) {
        v.object = make_complex(shift(*v.object, r, s));
        return v;
    }
    ChainMap out{make_complex(shift(*v.map->source, r, s)), make_complex(shift(*v.map->target, r, s)), {}};
    for (const auto &[i, m] : v.map->maps) out.maps[i - s] = m;
    v.map = std::move(out);
    return v;
}

// Passes a map through minimal models of its endpoints.
ChainMap between_reductions(const ChainMap &f, const Reduction &src, const Reduction &dst)
{
    return compose(dst.f, compose(f, src.g));
}

Value apply_functor(const std::string &name, const Value &x, int window)
{
    const int depth = window + 2;
    if (name == "D") {
        if (!x.is_map) {
            return {false, gaussian_reduce(KoszulImage(x.object).output()).reduced, {}};
        }
        const KoszulImage src(x.map->source), dst(x.map->target);
        const ChainMap raw = koszul_D_on_map(*x.map, src, dst);
        const Reduction rs = gaussian_reduce(src.output()), rt = gaussian_reduce(dst.output());
        return {true, nullptr, between_reductions(raw, rs, rt)};
    }
    if (name == "P") {
        if (!x.is_map) return {false, P_on_object(x.object, depth).output(), {}};
        const PImage src = P_on_object(x.map->source, depth), dst = P_on_object(x.map->target, depth);
        return {true, nullptr, P_on_map(*x.map, src, dst)};
    }
    if (!x.is_map) return {false, CK_on_object(x.object, depth).output(), {}};
    const CKImage src = CK_on_object(x.map->source, depth), dst = CK_on_object(x.map->target, depth);
    return {true, nullptr, CK_on_map(*x.map, src, dst)};
}

Value eval(const Expr &e, int window)
{
    Value v;
    switch (e.kind) {
    case Expr::Kind::Module: v = module_value(e); break;
    case Expr::Kind::Generator: v = generator_value(e); break;
    case Expr::Kind::Apply: {
        const Value inner = eval(*e.arg, window);
        try {
            v = apply_functor(e.name, inner, window);
        } catch (const RegimeError &err) {
            throw EvalError(e.name + " at position " + std::to_string(e.position) + ": " + err.what());
        } catch (const WindowError &err) {
            throw EvalError(e.name + " at position " + std::to_string(e.position) + ": " + err.what());
        } catch (const std::invalid_argument &err) {
            throw EvalError(e.name + " at position " + std::to_string(e.position) + ": " + err.what());
        }
        break;
    }
    }
    return shifted(std::move(v), e.internal_shift, e.homological_shift);
}

} // namespace

Expr parse_expression(const std::string &text)
{
    return Parser(text).parse();
}

EvalResult evaluate(const Expr &e, int window, int order)
{
    const Value v = eval(e, window);
    EvalResult out;
    out.is_map = v.is_map;
    std::ostringstream os;
    if (!v.is_map) {
        out.complex = gaussian_reduce(v.object).reduced;
        os << render_complex(*out.complex);
        try {
            out.kclass = euler_class(*out.complex, order);
            os << "class: " << out.kclass->to_string() << "\n";
        } catch (const std::exception &err) {
            os << "class: unavailable (" << err.what() << ")\n";
        }
    } else {
        out.complex = v.map->target;
        out.map = v.map;
        os << "source:\n" << render_complex(*v.map->source) << "target:\n" << render_complex(*v.map->target)
           << "map:\n" << render_chain_map(*v.map);
    }
    out.rendered = os.str();
    return out;
}

EvalResult evaluate(const std::string &text, int window, int order)
{
    return evaluate(parse_expression(text), window, order);
}

} // namespace jwcat
