#include <jwcat/suite.hpp>

#include "suite_internal.hpp"

#include <jwcat/series.hpp>
#include <jwcat/zigzag.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace jwcat
{

namespace detail
{

Verdict worst(Verdict a, Verdict b)
{
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
    return Verdict::Pass;
}

std::string key_name(int vertex, int shift)
{
    std::string s = "P(" + std::to_string(vertex_label(vertex)) + ")";
    if (shift != 0) s += "<" + std::to_string(shift) + ">";
    return s;
}

Context::Context(const VerificationConfig &cfg) : window_(cfg.window), order_(cfg.effective_order()) {}

ComplexPtr Context::point(int vertex, int shift) const
{
    const AlgebraPtr &B = zigzag().B;
    return make_complex(Complex::from_summand(B, projective_summand(B, vertex, shift), 0));
}

const PImage &Context::P(int vertex, int shift)
{
    const Key k{vertex, shift};
    if (auto it = p_.find(k); it != p_.end()) return it->second;
    PImage img = P_on_object(point(vertex, shift), depth());
    record("P(" + key_name(vertex, shift) + ")", img.reduction);
    return p_.emplace(k, std::move(img)).first->second;
}

const KoszulImage &Context::D(int vertex, int shift)
{
    const Key k{vertex, shift};
    if (auto it = d_.find(k); it != d_.end()) return it->second;
    return d_.emplace(k, KoszulImage(point(vertex, shift))).first->second;
}

const KoszulImage &Context::DP(int vertex, int shift)
{
    const Key k{vertex, shift};
    if (auto it = dp_.find(k); it != dp_.end()) return it->second;
    const ComplexPtr p = P(vertex, shift).output();
    return dp_.emplace(k, KoszulImage(p)).first->second;
}

const CKImage &Context::CKD(int vertex, int shift)
{
    const Key k{vertex, shift};
    if (auto it = ckd_.find(k); it != ckd_.end()) return it->second;
    CKImage img = CK_on_object(D(vertex, shift).output(), depth());
    record("CK(D(" + key_name(vertex, shift) + "))", img.reduction);
    return ckd_.emplace(k, std::move(img)).first->second;
}

const CKImage &Context::CK(int vertex, int shift)
{
    const Key k{vertex, shift};
    if (auto it = ck_.find(k); it != ck_.end()) return it->second;
    CKImage img = CK_on_object(point(vertex, shift), depth());
    record("CK(" + key_name(vertex, shift) + ")", img.reduction);
    return ck_.emplace(k, std::move(img)).first->second;
}

const Reduction &Context::reduced_DP(int vertex, int shift)
{
    const Key k{vertex, shift};
    if (auto it = dp_red_.find(k); it != dp_red_.end()) return it->second;
    Reduction r = gaussian_reduce(DP(vertex, shift).output());
    record("D(P(" + key_name(vertex, shift) + "))", r);
    return dp_red_.emplace(k, std::move(r)).first->second;
}

const IsoResult &Context::theorem_iso(int vertex, int shift)
{
    const Key k{vertex, shift};
    if (auto it = iso_.find(k); it != iso_.end()) return it->second;
    IsoResult r = iso_in_homotopy_category(DP(vertex, shift).output(), CKD(vertex, shift).raw, window_);
    return iso_.emplace(k, std::move(r)).first->second;
}

void Context::record(const std::string &name, const Reduction &r)
{
    for (const auto &entry : corpus_) {
        if (entry.first == name) return;
    }
    corpus_.emplace_back(name, r);
}

} // namespace detail

const std::vector<std::string> &check_groups()
{
    static const std::vector<std::string> groups{
        "algebra",         "modules",    "kdm",          "koszul",     "shiftlaws",
        "ponp",            "kdbgp",      "sl2comp",      "dponmaps",   "dualofp1",
        "cksl2",           "p1onprojectives", "ckonprojectives", "ckdual", "functorsonprojectives",
        "functoronc",      "functorona", "functoronb",   "idempotents", "decat",
        "properties"};
    return groups;
}

const std::vector<std::string> &in_scope_anchors()
{
    static const std::vector<std::string> anchors{
        "quiversl2",        "ba-ideal",          "projectives-simples", "C-end",    "pi-tilde",
        "iota-tilde",       "ponP(2)",           "ponP(1)",             "quiversl2dual", "phi",
        "D-twisted-action", "D-differential",    "internalshift",       "homshift", "kdm",
        "complexofcomplexes", "sl2comp",         "KDBGP(10)",           "Dpc",      "Dpa",
        "Dpb",              "theta",             "alpha-beta-gamma",    "cksl2",    "p1onprojectives",
        "CKonprojectives",  "dualofP(1)",        "a",                   "functorsonprojectives",
        "functoronc",       "functorona",        "functoronb",          "sl2theorem", "truncation-regimes"};
    return anchors;
}

void VerificationConfig::validate() const
{
    if (window < kMinWindow) {
        throw std::invalid_argument("window must be at least " + std::to_string(kMinWindow) + ", got " +
                                    std::to_string(window));
    }
    if (order != -1 && order < 1) throw std::invalid_argument("order must be positive");
    const auto &groups = check_groups();
    for (const auto &sel : only) {
        const std::string group = sel.substr(0, sel.find('.'));
        if (std::find(groups.begin(), groups.end(), group) == groups.end()) {
            throw std::invalid_argument("unknown check '" + sel + "'");
        }
    }
}

std::size_t Report::count(Verdict v) const
{
    std::size_t n = 0;
    for (const auto &c : checks) n += c.verdict == v;
    return n;
}

int Report::exit_code() const
{
    if (count(Verdict::Fail)) return 1;
    if (count(Verdict::Inconclusive)) return 2;
    return 0;
}

namespace
{

std::string upper(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::string millis_text(double ms)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms;
    return os.str();
}

std::string overall(const Report &r)
{
    switch (r.exit_code()) {
    case 0: return "pass";
    case 1: return "fail";
    default: return "inconclusive";
    }
}

} // namespace

std::string Report::to_text(bool timings) const
{
    std::ostringstream os;
    os << "jwcat verification report\n";
    os << "window " << config.window << ", series order " << config.effective_order() << "\n\n";
    for (const auto &c : checks) {
        os << std::left << std::setw(13) << ("[" + upper(c.verdict) + "]") << c.id << "  " << c.title;
        if (timings) os << "  (" << millis_text(c.millis) << " ms)";
        os << "\n";
        os << "             anchor: " << c.anchor << "\n";
        if (!c.detail.empty()) os << "             " << c.detail << "\n";
        for (const auto &w : c.witnesses) os << "             - " << w << "\n";
    }
    os << "\nsummary: " << count(Verdict::Pass) << " pass, " << count(Verdict::Fail) << " fail, "
       << count(Verdict::Inconclusive) << " inconclusive (" << overall(*this) << ")\n";
    return os.str();
}

std::string Report::to_json(bool timings) const
{
    using json = nlohmann::ordered_json;
    json j;
    j["schema"] = "jwcat.report";
    j["version"] = 1;
    j["config"] = {{"window", config.window}, {"order", config.effective_order()}, {"only", config.only}};
    j["summary"] = {{"total", checks.size()},
                    {"pass", count(Verdict::Pass)},
                    {"fail", count(Verdict::Fail)},
                    {"inconclusive", count(Verdict::Inconclusive)},
                    {"status", overall(*this)},
                    {"exit_code", exit_code()}};
    json arr = json::array();
    for (const auto &c : checks) {
        json cj;
        cj["id"] = c.id;
        cj["group"] = c.group;
        cj["anchor"] = c.anchor;
        cj["title"] = c.title;
        cj["verdict"] = to_string(c.verdict);
        cj["detail"] = c.detail;
        cj["witnesses"] = c.witnesses;
        if (timings) cj["time_ms"] = std::round(c.millis * 1000.0) / 1000.0;
        arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

Report run_suite(const VerificationConfig &cfg)
{
    cfg.validate();
    Report report;
    report.config = cfg;
    detail::Context ctx(cfg);
    const auto selected = [&](const detail::CheckSpec &c) {
        if (cfg.only.empty()) return true;
        for (const auto &s : cfg.only) {
            if (s == c.group || s == c.group + "." + c.name) return true;
        }
        return false;
    };
    for (const auto &spec : detail::all_checks(cfg)) {
        if (!selected(spec)) continue;
        CheckResult r;
        r.group = spec.group;
        r.id = spec.group + "." + spec.name;
        r.anchor = spec.anchor;
        r.title = spec.title;
        const auto t0 = std::chrono::steady_clock::now();
        detail::Outcome o;
        try {
            o = spec.run(ctx);
        } catch (const WindowError &e) {
            o = detail::inconclusive(std::string("window too small: ") + e.what());
        } catch (const std::exception &e) {
            o = detail::fail(std::string("error: ") + e.what());
        }
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        r.verdict = o.verdict;
        r.detail = std::move(o.detail);
        r.witnesses = std::move(o.witnesses);
        report.checks.push_back(std::move(r));
    }
    return report;
}

} // namespace jwcat
