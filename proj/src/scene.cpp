#include "ghostalg/scene.hpp"

#include <fstream>
#include <sstream>

namespace ghost {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\n");
    return std::string(s.substr(b, e - b + 1));
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

// Split at top-level commas (not inside brackets).
std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (c == ',' && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

}  // namespace

ThetaSignature FamilySpec::theta() const { return ThetaSignature(signature, dim); }

LimitFamily FamilySpec::build() const {
    LimitFamily f = LimitFamily::fuchsian();
    if (kind == "fuchsian") {
        if (dim != 2 || signature != std::vector<int>{1})
            throw SceneError("the fuchsian family has dimension 2 and signature [1]");
    } else if (kind == "veronese") {
        f = LimitFamily::veronese(dim, theta());
    } else if (kind == "generic") {
        f = LimitFamily::generic(seed, dim, theta());
    } else {
        throw SceneError("unknown family kind '" + kind + "'");
    }
    return dual ? f.dual() : f;
}

json FamilySpec::to_json() const {
    json j = {{"kind", kind}, {"dim", dim}, {"signature", signature}};
    if (kind == "generic") j["seed"] = seed;
    if (dual) j["dual"] = true;
    return j;
}

Scene Scene::from_json(const json& j) {
    if (!j.is_object()) throw SceneError("scene must be a JSON object");
    int version = j.value("version", 0);
    if (version != kVersion) throw SceneError("unsupported scene version " + std::to_string(version));
    Scene s;
    try {
        if (j.contains("family")) {
            const auto& f = j.at("family");
            s.family_.kind = f.value("kind", std::string("fuchsian"));
            s.family_.dim = f.value("dim", 2);
            s.family_.signature = f.value("signature", std::vector<int>{1});
            s.family_.seed = f.value("seed", std::uint64_t{0});
            s.family_.dual = f.value("dual", false);
            (void)s.family_.theta();
        }
        if (j.contains("points")) {
            for (const auto& [name, v] : j.at("points").items()) {
                std::string text = v.is_string() ? v.get<std::string>() : v.dump();
                s.points_.emplace(name, BoundaryPoint::parse(text));
            }
        }
        if (j.contains("geodesics")) {
            for (const auto& [name, v] : j.at("geodesics").items()) {
                if (s.points_.count(name)) throw SceneError("name '" + name + "' is both a point and a geodesic");
                s.geodesics_.emplace(name, s.geodesic_from_json(v));
            }
        }
        if (j.contains("configurations")) {
            for (const auto& [name, v] : j.at("configurations").items()) {
                if (s.geodesics_.count(name))
                    throw SceneError("name '" + name + "' is both a geodesic and a configuration");
                if (!v.is_array() || v.empty())
                    throw SceneError("configuration '" + name + "' must be a non-empty list of geodesics");
                std::vector<ThetaGeodesic> gs;
                for (const auto& g : v) gs.push_back(s.geodesic_from_json(g));
                s.configurations_.emplace(name, Configuration(gs));
            }
        }
        if (j.contains("group")) {
            GroupPresentation g;
            for (const auto& m : j.at("group").at("generators")) {
                auto e = m.get<std::vector<std::int64_t>>();
                if (e.size() != 4) throw SceneError("group generators are [a, b, c, d]");
                MobiusMap mm(e[0], e[1], e[2], e[3]);
                if (mm.det() <= 0) throw SceneError("group generators must have positive determinant");
                g.generators.push_back(mm);
            }
            s.group_ = g;
        }
        if (j.contains("parameters")) s.params_ = j.at("parameters");
    } catch (const json::exception& e) {
        throw SceneError(std::string("malformed scene: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SceneError(std::string("malformed scene: ") + e.what());
    }
    return s;
}

Scene Scene::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SceneError("cannot open scene file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SceneError("scene file '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(j);
}

void Scene::check_label(const ThetaGeodesic& g) const {
    if (g.label < 1 || g.label > static_cast<int>(family_.signature.size()))
        throw SceneError("label " + std::to_string(g.label) + " of " + g.to_string() +
                         " is not valid for the family signature");
}

BoundaryPoint Scene::point(std::string_view ref) const {
    std::string r = trim(ref);
    if (auto it = points_.find(r); it != points_.end()) return it->second;
    try {
        return BoundaryPoint::parse(r);
    } catch (const std::invalid_argument&) {
        throw SceneError("unknown point '" + r + "'");
    }
}

ThetaGeodesic Scene::geodesic(std::string_view ref) const {
    std::string r = trim(ref);
    if (auto it = geodesics_.find(r); it != geodesics_.end()) return it->second;
    int label = 1;
    if (auto at = r.rfind('@'); at != std::string::npos) {
        try {
            label = std::stoi(r.substr(at + 1));
        } catch (const std::exception&) {
            throw SceneError("bad label in geodesic '" + r + "'");
        }
        r = trim(r.substr(0, at));
    }
    if (r.size() >= 2 && r.front() == '(' && r.back() == ')') r = trim(r.substr(1, r.size() - 2));
    std::size_t arrow = r.find("->"), len = 2;
    if (arrow == std::string::npos) {
        arrow = r.find("→");
        len = std::string("→").size();
    }
    if (arrow == std::string::npos) throw SceneError("unknown geodesic '" + std::string(ref) + "'");
    ThetaGeodesic g(point(r.substr(0, arrow)), point(r.substr(arrow + len)), label);
    check_label(g);
    return g;
}

Configuration Scene::configuration(std::string_view ref) const {
    std::string r = trim(ref);
    if (auto it = configurations_.find(r); it != configurations_.end()) return it->second;
    for (auto [open, close] : {std::pair<std::string_view, std::string_view>{"⌈", "⌉"}, {"[", "]"}}) {
        if (starts_with(r, open) && r.size() > open.size() + close.size() &&
            r.substr(r.size() - close.size()) == close) {
            std::vector<ThetaGeodesic> gs;
            for (const auto& item : split_list(std::string_view(r).substr(open.size(), r.size() - open.size() - close.size())))
                gs.push_back(geodesic(item));
            return Configuration(gs);
        }
    }
    return Configuration(geodesic(r));
}

ThetaGeodesic Scene::geodesic_from_json(const json& v) const {
    ThetaGeodesic g;
    if (v.is_string()) return geodesic(v.get<std::string>());
    auto ref = [this](const json& p) { return point(p.is_string() ? p.get<std::string>() : p.dump()); };
    if (v.is_array()) {
        if (v.size() != 2 && v.size() != 3) throw SceneError("geodesic arrays are [from, to] or [from, to, label]");
        g = ThetaGeodesic(ref(v[0]), ref(v[1]), v.size() == 3 ? v[2].get<int>() : 1);
    } else if (v.is_object()) {
        g = ThetaGeodesic(ref(v.at("from")), ref(v.at("to")), v.value("label", 1));
    } else {
        throw SceneError("cannot read a geodesic from " + v.dump());
    }
    check_label(g);
    return g;
}

}  // namespace ghost
