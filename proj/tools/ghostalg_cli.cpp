#include "ghostalg/expression.hpp"
#include "ghostalg/hyperbolic.hpp"
#include "ghostalg/representations.hpp"
#include "ghostalg/scene.hpp"
#include "ghostalg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace ghost;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kFailed = 1, kMalformed = 2 };

struct Common {
    std::string scene_path;
    std::uint64_t seed = 1;
    std::size_t samples = 0;
    std::string format = "text";
    int max_word_length = 6;
};

Scene load_scene(const Common& c) { return c.scene_path.empty() ? Scene() : Scene::load(c.scene_path); }

void emit(const Common& c, const json& j, const std::string& text, const std::string& csv = {}) {
    if (c.format == "json") std::cout << j.dump(2) << "\n";
    else if (c.format == "csv") std::cout << (csv.empty() ? text : csv) << (csv.empty() ? "\n" : "");
    else std::cout << text << "\n";
}

std::string decimal(double x, int digits = 12) {
    std::ostringstream s;
    s << std::setprecision(digits) << x;
    return s.str();
}

int cmd_eps(const Common& c, const std::string& a, const std::string& b) {
    Scene sc = load_scene(c);
    ThetaGeodesic g = sc.geodesic(a), h = sc.geodesic(b);
    std::string e = to_string(epsilon(g, h));
    emit(c, {{"g", g.to_string()}, {"h", h.to_string()}, {"epsilon", e}}, e, "g,h,epsilon\n" + g.to_string() + "," + h.to_string() + "," + e + "\n");
    return kOk;
}

int cmd_bracket(const Common& c, const std::vector<std::string>& exprs) {
    Scene sc = load_scene(c);
    GhostElement x = parse_expression(exprs[0], sc);
    if (exprs.size() == 2) x = bracket(x, parse_expression(exprs[1], sc), sc.signature());
    std::string out = x.to_string();
    json j = {{"input", exprs}, {"result", out}};
    emit(c, j, out);
    return kOk;
}

int cmd_correlation(const Common& c, const std::string& expr) {
    Scene sc = load_scene(c);
    LimitFamily f = sc.family().build();
    GhostElement x = parse_expression(expr, sc);
    std::string v = to_string(correlation(f, x));
    emit(c, {{"family", f.name()}, {"element", x.to_string()}, {"value", v}}, v);
    return kOk;
}

int cmd_intersection(const Common& c, const std::string& a, const std::string& b) {
    Scene sc = load_scene(c);
    LimitFamily f = sc.family().build();
    Configuration G = sc.configuration(a), H = sc.configuration(b);
    std::string v = to_string(intersection(f, G, H));
    emit(c, {{"family", f.name()}, {"G", G.to_string()}, {"H", H.to_string()}, {"intersection", v}}, v);
    return kOk;
}

int cmd_verify(const Common& c, const std::string& suite, bool use_scene_family) {
    VerifyOptions o;
    o.seed = c.seed;
    o.samples = c.samples;
    o.max_word_length = c.max_word_length;
    if (!c.scene_path.empty()) {
        Scene sc = load_scene(c);
        if (use_scene_family) o.families = {sc.family().build()};
        o.group = sc.group();
        const json& p = sc.parameters();
        if (p.contains("G")) o.orbit_G = sc.configuration(p.at("G").get<std::string>());
        if (p.contains("H")) o.orbit_H = sc.configuration(p.at("H").get<std::string>());
    }
    SuiteReport r = run_suite(suite, o);
    std::ostringstream csv;
    csv << "check,samples,failures,skipped\n";
    for (const auto& ch : r.checks) csv << ch.name << "," << ch.samples << "," << ch.failures << "," << ch.skipped << "\n";
    emit(c, r.to_json(), std::string(r.passed() ? "PASS " : "FAIL ") + suite + ": " + r.summary(), csv.str());
    return r.passed() ? kOk : kFailed;
}

int cmd_orbit_sum(const Common& c, const std::string& a, const std::string& b) {
    Scene sc = load_scene(c);
    LimitFamily f = sc.family().build();
    Configuration G = sc.configuration(a), H = sc.configuration(b);
    GroupPresentation gamma = sc.group() ? *sc.group() : schottky_pair();
    OrbitSum os = orbit_sum(f, G, H, gamma, c.max_word_length);
    std::ostringstream csv;
    csv << "length,words,partial_sum\n";
    json rows = json::array();
    for (std::size_t L = 0; L < os.partial.size(); ++L) {
        csv << L << "," << os.word_count[L] << "," << to_string(os.partial[L]) << "\n";
        rows.push_back({{"length", L}, {"words", os.word_count[L]}, {"partial_sum", to_string(os.partial[L])}});
    }
    for (const auto& s : os.skipped) std::cerr << "skipped: " << s << "\n";
    json j = {{"family", f.name()}, {"G", G.to_string()}, {"H", H.to_string()}, {"rows", rows}, {"skipped", os.skipped}};
    // CSV is the natural table here, so plain text prints it too.
    if (c.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << csv.str();
    return os.skipped.empty() ? kOk : kFailed;
}

int cmd_barycenter(const Common& c, const std::string& ref, double tolerance) {
    Scene sc = load_scene(c);
    Configuration G = sc.configuration(ref);
    BarycenterOptions opt;
    opt.tolerance = tolerance;
    BarycenterResult b = barycenter(G, opt);
    double diam = core_diameter(G, opt);
    json j = {{"configuration", G.to_string()},
              {"x", decimal(b.point.x)},
              {"y", decimal(b.point.y)},
              {"objective", decimal(b.objective)},
              {"gradient_norm", decimal(b.gradient_norm, 3)},
              {"core_diameter", decimal(diam)},
              {"tolerance", decimal(tolerance, 3)}};
    std::string text = "barycenter " + decimal(b.point.x) + " + " + decimal(b.point.y) + "i\n" + "core diameter " +
                       decimal(diam) + "\ngradient norm " + decimal(b.gradient_norm, 3) + " (tolerance " +
                       decimal(tolerance, 3) + ")";
    std::string csv = "x,y,core_diameter,gradient_norm\n" + decimal(b.point.x) + "," + decimal(b.point.y) + "," +
                      decimal(diam) + "," + decimal(b.gradient_norm, 3) + "\n";
    emit(c, j, text, csv);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ghost polygons, swapping algebra and limit-map evaluation"};
    app.require_subcommand(1);
    Common c;
    app.add_option("--scene", c.scene_path, "Scene file (JSON)")->check(CLI::ExistingFile);
    app.add_option("--seed", c.seed, "Random seed");
    app.add_option("--samples", c.samples, "Sample count (0 = suite default)");
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--max-word-length", c.max_word_length, "Orbit-sum word length cutoff")->check(CLI::Range(0, 12));
    app.fallthrough();

    std::function<int()> run;
    std::string a, b, suite;
    std::vector<std::string> exprs;
    double tolerance = 1e-10;
    bool scene_family = false;

    auto* eps = app.add_subcommand("eps", "Intersection number of two geodesics");
    eps->add_option("first", a, "Geodesic")->required();
    eps->add_option("second", b, "Geodesic")->required();
    eps->callback([&] { run = [&] { return cmd_eps(c, a, b); }; });

    auto* br = app.add_subcommand("bracket", "Normalize an expression, or bracket two expressions");
    br->add_option("expr", exprs)->required()->expected(1, 2);
    br->callback([&] { run = [&] { return cmd_bracket(c, exprs); }; });

    auto* corr = app.add_subcommand("correlation", "Evaluate T on an expression under the scene family");
    corr->add_option("expr", a)->required();
    corr->callback([&] { run = [&] { return cmd_correlation(c, a); }; });

    auto* in = app.add_subcommand("intersection", "Ghost intersection I(G,H) under the scene family");
    in->add_option("first", a, "Configuration G")->required();
    in->add_option("second", b, "Configuration H")->required();
    in->callback([&] { run = [&] { return cmd_intersection(c, a, b); }; });

    auto* ver = app.add_subcommand("verify", "Run an invariant suite");
    ver->add_option("suite", suite)->required();
    ver->add_flag("--scene-family", scene_family, "Evaluate under the scene family instead of the suite defaults");
    ver->callback([&] { run = [&] { return cmd_verify(c, suite, scene_family); }; });

    auto* list = app.add_subcommand("suites", "List suite names");
    list->callback([&] {
        run = [] {
            for (const auto& n : suite_names()) std::cout << n << "\n";
            return int(kOk);
        };
    });

    auto* orb = app.add_subcommand("orbit-sum", "Partial sums of I(G, γH) by word length");
    orb->add_option("first", a, "Configuration G")->required();
    orb->add_option("second", b, "Configuration H")->required();
    orb->callback([&] { run = [&] { return cmd_orbit_sum(c, a, b); }; });

    auto* bar = app.add_subcommand("barycenter", "Barycenter and core diameter of a configuration");
    bar->add_option("configuration", a)->required();
    bar->add_option("--tolerance", tolerance, "Gradient-norm tolerance")->check(CLI::PositiveNumber);
    bar->callback([&] { run = [&] { return cmd_barycenter(c, a, tolerance); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }
    try {
        return run();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const SceneError& e) {
        std::cerr << "scene error: " << e.what() << "\n";
        return kMalformed;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
}
