#pragma once

#include "ghostalg/representations.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghost {

class SceneError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FamilySpec {
    std::string kind = "fuchsian";  // fuchsian | veronese | generic
    int dim = 2;
    std::vector<int> signature{1};
    std::uint64_t seed = 0;
    bool dual = false;

    ThetaSignature theta() const;
    LimitFamily build() const;
    nlohmann::json to_json() const;
};

// Named boundary data for the command line front-end. Every reference may be
// a name or an inline literal: points "3/4", "inf"; geodesics "0->2", "(a→b)@2";
// configurations "⌈g,h⌉" or a geodesic reference.
class Scene {
public:
    static constexpr int kVersion = 1;

    Scene() = default;
    static Scene from_json(const nlohmann::json& j);
    static Scene load(const std::string& path);

    const FamilySpec& family() const { return family_; }
    ThetaSignature signature() const { return family_.theta(); }
    const std::optional<GroupPresentation>& group() const { return group_; }
    const nlohmann::json& parameters() const { return params_; }

    BoundaryPoint point(std::string_view ref) const;
    ThetaGeodesic geodesic(std::string_view ref) const;
    Configuration configuration(std::string_view ref) const;

    bool has_geodesic(const std::string& name) const { return geodesics_.count(name) > 0; }
    bool has_configuration(const std::string& name) const { return configurations_.count(name) > 0; }
    bool has_point(const std::string& name) const { return points_.count(name) > 0; }

private:
    ThetaGeodesic geodesic_from_json(const nlohmann::json& j) const;
    void check_label(const ThetaGeodesic& g) const;

    FamilySpec family_;
    std::map<std::string, BoundaryPoint, std::less<>> points_;
    std::map<std::string, ThetaGeodesic, std::less<>> geodesics_;
    std::map<std::string, Configuration, std::less<>> configurations_;
    std::optional<GroupPresentation> group_;
    nlohmann::json params_ = nlohmann::json::object();
};

}  // namespace ghost
