#include <jwcat/suite.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

using namespace jwcat;

namespace
{

VerificationConfig small(std::vector<std::string> only = {})
{
    VerificationConfig cfg;
    cfg.window = 4;
    cfg.only = std::move(only);
    cfg.data_dir = JWCAT_TEST_DATA_DIR;
    return cfg;
}

const Report &full_report()
{
    static const Report r = run_suite(small());
    return r;
}

} // namespace

TEST(Suite, SmallWindowHasNoFailures)
{
    const Report &r = full_report();
    for (const auto &c : r.checks) EXPECT_NE(c.verdict, Verdict::Fail) << c.id << ": " << c.detail;
    EXPECT_EQ(r.exit_code(), r.count(Verdict::Inconclusive) ? 2 : 0);
}

TEST(Suite, IdsAreUniqueAndGrouped)
{
    const auto &groups = check_groups();
    std::set<std::string> ids;
    for (const auto &c : full_report().checks) {
        EXPECT_TRUE(ids.insert(c.id).second) << c.id;
        EXPECT_EQ(c.id.rfind(c.group + ".", 0), 0u) << c.id;
        EXPECT_NE(std::find(groups.begin(), groups.end(), c.group), groups.end()) << c.group;
    }
}

TEST(Suite, EveryGroupRuns)
{
    std::set<std::string> seen;
    for (const auto &c : full_report().checks) seen.insert(c.group);
    for (const auto &g : check_groups()) EXPECT_TRUE(seen.count(g)) << g;
}

TEST(Suite, AnchorsBelongToOneGroup)
{
    const auto &anchors = in_scope_anchors();
    std::map<std::string, std::set<std::string>> groups_of;
    for (const auto &c : full_report().checks) {
        groups_of[c.anchor].insert(c.group);
        const bool listed = std::find(anchors.begin(), anchors.end(), c.anchor) != anchors.end();
        EXPECT_TRUE(listed || c.anchor.rfind("artifact:", 0) == 0) << c.id << " has anchor " << c.anchor;
    }
    for (const auto &a : anchors) {
        ASSERT_TRUE(groups_of.count(a)) << "no check for " << a;
        EXPECT_EQ(groups_of[a].size(), 1u) << a;
    }
}

TEST(Suite, OnlySelectsGroupsAndChecks)
{
    const Report kdm = run_suite(small({"kdm"}));
    EXPECT_EQ(kdm.checks.size(), 4u);
    for (const auto &c : kdm.checks) EXPECT_EQ(c.group, "kdm");

    const Report one = run_suite(small({"algebra.phi", "decat.jw_idempotent"}));
    ASSERT_EQ(one.checks.size(), 2u);
    EXPECT_EQ(one.checks[0].id, "algebra.phi");
    EXPECT_EQ(one.checks[1].id, "decat.jw_idempotent");
}

TEST(Suite, ValidationRejectsBadConfigs)
{
    VerificationConfig cfg;
    cfg.window = 3;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    EXPECT_THROW(run_suite(cfg), std::invalid_argument);
    cfg.window = 4;
    EXPECT_NO_THROW(cfg.validate());
    cfg.only = {"nonsense"};
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.only = {};
    cfg.order = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.order = -1;
    cfg.window = 16;
    EXPECT_EQ(cfg.effective_order(), 33);
}

TEST(Report, ExitCodes)
{
    Report r;
    EXPECT_EQ(r.exit_code(), 0);
    CheckResult c;
    c.verdict = Verdict::Pass;
    r.checks.push_back(c);
    EXPECT_EQ(r.exit_code(), 0);
    c.verdict = Verdict::Inconclusive;
    r.checks.push_back(c);
    EXPECT_EQ(r.exit_code(), 2);
    c.verdict = Verdict::Fail;
    r.checks.push_back(c);
    EXPECT_EQ(r.exit_code(), 1);
}

TEST(Report, JsonSchema)
{
    const Report &r = full_report();
    const auto j = nlohmann::json::parse(r.to_json());
    EXPECT_EQ(j.at("schema"), "jwcat.report");
    EXPECT_EQ(j.at("version"), 1);
    EXPECT_EQ(j.at("config").at("window"), 4);
    EXPECT_EQ(j.at("config").at("order"), 9);
    EXPECT_TRUE(j.at("config").at("only").is_array());
    const auto &s = j.at("summary");
    EXPECT_EQ(s.at("total"), r.checks.size());
    EXPECT_EQ(s.at("pass").get<std::size_t>() + s.at("fail").get<std::size_t>() +
                  s.at("inconclusive").get<std::size_t>(),
              r.checks.size());
    EXPECT_EQ(s.at("exit_code"), r.exit_code());
    EXPECT_TRUE(s.at("status") == "pass" || s.at("status") == "inconclusive");
    ASSERT_EQ(j.at("checks").size(), r.checks.size());
    for (const auto &c : j.at("checks")) {
        for (const char *key : {"id", "group", "anchor", "title", "verdict", "detail"}) {
            EXPECT_TRUE(c.at(key).is_string()) << key;
        }
        EXPECT_TRUE(c.at("witnesses").is_array());
        EXPECT_TRUE(c.at("time_ms").is_number());
        const std::string v = c.at("verdict");
        EXPECT_TRUE(v == "pass" || v == "fail" || v == "inconclusive") << v;
    }
}

TEST(Report, DeterministicWithoutTimings)
{
    const std::string a = run_suite(small({"algebra", "kdm", "decat"})).to_json(false);
    const std::string b = run_suite(small({"algebra", "kdm", "decat"})).to_json(false);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.find("time_ms"), std::string::npos);
    const std::string text = run_suite(small({"kdm"})).to_text(false);
    EXPECT_NE(text.find("summary: 4 pass, 0 fail, 0 inconclusive (pass)"), std::string::npos) << text;
}
