#include <jwcat/expression.hpp>
#include <jwcat/k0.hpp>
#include <jwcat/reference.hpp>
#include <jwcat/serialize.hpp>
#include <jwcat/zigzag.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jwcat;
namespace fs = std::filesystem;

namespace
{

std::string slurp(const fs::path &p)
{
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Top-level kind; canonical files put it first.
std::string kind_of(const std::string &text)
{
    const std::string key = "\"kind\": \"";
    const auto at = text.find(key);
    if (at == std::string::npos) return {};
    const auto start = at + key.size();
    return text.substr(start, text.find('"', start) - start);
}

std::size_t parse_error_position(const std::string &text)
{
    try {
        parse_expression(text);
    } catch (const ParseError &e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for '" << text << "'";
    return std::string::npos;
}

std::vector<ProjTag> tags(const Term &t)
{
    std::vector<ProjTag> out;
    for (std::size_t k = 0; k < t.size(); ++k) out.push_back(*t.summand(k).tag);
    return out;
}

} // namespace

TEST(Serialize, ModulesRoundTrip)
{
    const ZigZag &z = zigzag();
    for (const ModulePtr &m : {z.P1, z.P2, z.L1, z.L2, z.I2, z.C_free, z.C_simple}) {
        const std::string text = module_to_json(*m);
        const GradedModule back = module_from_json(text);
        EXPECT_EQ(back, *m);
        EXPECT_EQ(module_to_json(back), text);
    }
}

TEST(Serialize, ComplexesRoundTrip)
{
    for (const ComplexPtr &x : {l1_resolution(2, -1), dual_of_p1_model(), ck_of_p1_model(5), p_of_p1_model(5)}) {
        const std::string text = complex_to_json(*x);
        const Complex back = complex_from_json(text);
        EXPECT_EQ(back.lo(), x->lo());
        EXPECT_EQ(back.hi(), x->hi());
        EXPECT_EQ(back.open_lo(), x->open_lo());
        EXPECT_EQ(back.open_hi(), x->open_hi());
        for (int i = x->lo(); i <= x->hi(); ++i) {
            EXPECT_EQ(tags(back.term(i)), tags(x->term(i)));
            if (i < x->hi()) EXPECT_EQ(back.d(i), x->d(i));
        }
        EXPECT_EQ(complex_to_json(back), text);
    }
}

TEST(Serialize, RejectsMalformedInput)
{
    EXPECT_THROW(module_from_json("{"), FormatError);
    EXPECT_THROW(module_from_json(R"({"kind": "complex"})"), FormatError);
    EXPECT_THROW(algebra_by_name("Z"), FormatError);
}

TEST(Serialize, FixtureCorpusIsCanonical)
{
    const fs::path root = JWCAT_TEST_DATA_DIR;
    ASSERT_TRUE(fs::is_directory(root)) << root;
    std::size_t seen = 0;
    for (const auto &entry : fs::recursive_directory_iterator(root)) {
        if (entry.path().extension() != ".json") continue;
        const std::string text = slurp(entry.path());
        const std::string kind = kind_of(text);
        std::string again;
        if (kind == "algebra") again = algebra_to_json(algebra_from_json(text));
        else if (kind == "module") again = module_to_json(module_from_json(text));
        else if (kind == "hom") again = hom_to_json(hom_from_json(text));
        else if (kind == "complex") again = complex_to_json(complex_from_json(text));
        else ADD_FAILURE() << entry.path() << ": unknown kind '" << kind << "'";
        EXPECT_EQ(again, text) << entry.path();
        EXPECT_NO_THROW(render_fixture_file(entry.path().string())) << entry.path();
        ++seen;
    }
    EXPECT_GE(seen, 17u);
}

TEST(Serialize, FixturesMatchBuiltIns)
{
    const fs::path root = JWCAT_TEST_DATA_DIR;
    const ZigZag &z = zigzag();
    EXPECT_EQ(module_from_json(slurp(root / "modules" / "P2.json")), *z.P2);
    EXPECT_EQ(module_from_json(slurp(root / "modules" / "I2.json")), *z.I2);
    const AlgebraFixture b = algebra_from_json(slurp(root / "algebras" / "B.json"));
    ASSERT_TRUE(b.expected_dims.has_value());
    EXPECT_EQ(*b.expected_dims, (std::vector<int>{2, 2, 1}));
    EXPECT_EQ(b.algebra->dim(), z.B->dim());
}

TEST(Expression, ParsesAndPrints)
{
    const Expr e = parse_expression(" D( P ( P(1) ) )<2>[-1] ");
    EXPECT_EQ(e.kind, Expr::Kind::Apply);
    EXPECT_EQ(e.name, "D");
    EXPECT_EQ(e.internal_shift, 2);
    EXPECT_EQ(e.homological_shift, -1);
    EXPECT_EQ(parse_expression(e.to_string()).to_string(), e.to_string());
    const Expr g = parse_expression("e(2)");
    EXPECT_EQ(g.kind, Expr::Kind::Generator);
    EXPECT_EQ(g.index, 2);
}

TEST(Expression, ErrorPositions)
{
    EXPECT_EQ(parse_error_position("P(3)"), 2u);
    EXPECT_EQ(parse_error_position("D(P(1)"), 6u);
    EXPECT_EQ(parse_error_position(""), 0u);
    EXPECT_EQ(parse_error_position("P(1)<x>"), 5u);
    EXPECT_EQ(parse_error_position("P(1) P(2)"), 5u);
}

TEST(Expression, ShiftedProjective)
{
    const EvalResult r = evaluate("P(2)<1>[2]", 6, 10);
    ASSERT_FALSE(r.is_map);
    const Complex &x = *r.complex;
    ASSERT_EQ(x.first_nonzero(), -2);
    ASSERT_EQ(x.last_nonzero(), -2);
    EXPECT_EQ(tags(x.term(-2)), (std::vector<ProjTag>{{V2, 1}}));
    ASSERT_TRUE(r.kclass.has_value());
    EXPECT_TRUE(class_equal(*r.kclass, class_of_module(*projective_module(zigzag().B, V2, 1)).truncated(10)));
}

TEST(Expression, FunctorsOnObjects)
{
    const EvalResult ck = evaluate("CK(P(1))", 6, 10);
    EXPECT_EQ(tags(ck.complex->term(0)), (std::vector<ProjTag>{{V1, 0}}));
    EXPECT_EQ(tags(ck.complex->term(1)), (std::vector<ProjTag>{{V2, -1}}));
    EXPECT_FALSE(ck.rendered.empty());

    const EvalResult dpp = evaluate("D(P(P(1)))", 6, 10);
    EXPECT_FALSE(dpp.is_map);
    EXPECT_NO_THROW(dpp.complex->validate());

    const EvalResult p2 = evaluate("P(P(2))", 6, 10);
    EXPECT_EQ(p2.complex->total_dim(), 3u);
}

TEST(Expression, Maps)
{
    const EvalResult c = evaluate("c", 6, 10);
    ASSERT_TRUE(c.is_map);
    ASSERT_TRUE(c.map.has_value());
    c.map->validate();
    EXPECT_EQ(tags(c.map->source->term(0)), (std::vector<ProjTag>{{V2, 2}}));
    const EvalResult dc = evaluate("D(c)", 6, 10);
    ASSERT_TRUE(dc.is_map);
    dc.map->validate();
}

TEST(Expression, OutOfScopeInputs)
{
    EXPECT_THROW(evaluate("D(CK(P(1)))", 6, 10), EvalError);
    EXPECT_THROW(evaluate("CK(P(P(1)))", 6, 10), EvalError);
}

TEST(Serialize, ClassJson)
{
    const KClass k = class_of_module(*zigzag().P2).truncated(9);
    const std::string text = kclass_to_json(k);
    EXPECT_NE(text.find("\"order\": 9"), std::string::npos) << text;
    EXPECT_NE(text.find("\"2\": \"1\""), std::string::npos) << text;
    EXPECT_NE(kclass_to_json(class_of_module(*zigzag().L1)).find("\"order\": null"), std::string::npos);
}
