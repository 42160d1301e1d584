// jwcat: verification driver for the categorified Jones-Wenzl projector.
#include <jwcat/expression.hpp>
#include <jwcat/render.hpp>
#include <jwcat/serialize.hpp>
#include <jwcat/suite.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#ifndef JWCAT_DEFAULT_DATA_DIR
#define JWCAT_DEFAULT_DATA_DIR ""
#endif

namespace
{

constexpr int kUsageError = 3;

struct Options
{
    int window = 16;
    int order = -1;
    std::string format = "text";
    std::vector<std::string> only;
    std::string data_dir = JWCAT_DEFAULT_DATA_DIR;
    bool timings = true;
    std::string expr;
    std::string fixture;
};

int run_verify(const Options &o)
{
    jwcat::VerificationConfig cfg;
    cfg.window = o.window;
    cfg.order = o.order;
    cfg.format = o.format == "json" ? jwcat::ReportFormat::Json : jwcat::ReportFormat::Text;
    cfg.only = o.only;
    cfg.data_dir = o.data_dir;
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        std::cerr << "jwcat verify: " << e.what() << "\n";
        return kUsageError;
    }
    const jwcat::Report report = jwcat::run_suite(cfg);
    std::cout << (cfg.format == jwcat::ReportFormat::Json ? report.to_json(o.timings) : report.to_text(o.timings));
    return report.exit_code();
}

int run_eval(const Options &o)
{
    if (o.window < jwcat::kMinWindow) {
        std::cerr << "jwcat eval: window must be at least " << jwcat::kMinWindow << "\n";
        return kUsageError;
    }
    const int order = o.order < 0 ? 2 * o.window + 1 : o.order;
    jwcat::EvalResult r;
    try {
        r = jwcat::evaluate(o.expr, o.window, order);
    } catch (const jwcat::ParseError &e) {
        std::cerr << "jwcat eval: parse error " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception &e) {
        std::cerr << "jwcat eval: " << e.what() << "\n";
        return 1;
    }
    if (o.format != "json") {
        std::cout << r.rendered;
        return 0;
    }
    using json = nlohmann::ordered_json;
    json j;
    j["expression"] = o.expr;
    j["kind"] = r.is_map ? "map" : "object";
    j["rendered"] = r.rendered;
    if (!r.is_map) j["complex"] = json::parse(jwcat::complex_to_json(*r.complex));
    if (r.kclass) j["class"] = json::parse(jwcat::kclass_to_json(*r.kclass));
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_show(const Options &o)
{
    namespace fs = std::filesystem;
    fs::path path = o.fixture;
    if (!fs::exists(path) && !o.data_dir.empty()) {
        for (const fs::path &c : {fs::path(o.data_dir) / o.fixture, fs::path(o.data_dir) / (o.fixture + ".json")}) {
            if (fs::exists(c)) {
                path = c;
                break;
            }
        }
    }
    if (!fs::exists(path)) {
        std::cerr << "jwcat show: no fixture '" << o.fixture << "'\n";
        return kUsageError;
    }
    try {
        std::cout << jwcat::render_fixture_file(path.string());
    } catch (const std::exception &e) {
        std::cerr << "jwcat show: " << path.string() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Checks D o P = CK o D for the zig-zag algebra and its decategorification"};
    app.require_subcommand(1);
    Options o;

    const auto window_opts = [&](CLI::App *sub) {
        sub->add_option("--window,-N", o.window, "homological window")->envname("JWCAT_WINDOW");
        sub->add_option("--order", o.order, "series order (default 2N+1)");
    };
    const std::vector<std::string> formats{"text", "json"};

    CLI::App *verify = app.add_subcommand("verify", "run the verification suite");
    window_opts(verify);
    verify->add_option("--format", o.format, "report format")->check(CLI::IsMember(formats));
    verify->add_option("--only", o.only, "groups or check ids to run")->delimiter(',');
    verify->add_option("--data-dir", o.data_dir, "fixture directory (empty to skip)");
    verify->add_flag("!--no-timings", o.timings, "omit timings for byte-stable reports");

    CLI::App *eval = app.add_subcommand("eval", "evaluate a functor expression");
    window_opts(eval);
    eval->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    eval->add_option("expr", o.expr, "expression, e.g. \"D(P(P(1)))\"")->required();

    CLI::App *show = app.add_subcommand("show", "render a fixture file");
    show->add_option("fixture", o.fixture, "path or name under the data directory")->required();
    show->add_option("--data-dir", o.data_dir, "fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }
    if (*verify) return run_verify(o);
    if (*eval) return run_eval(o);
    return run_show(o);
}
