#pragma once

#include "ghostalg/representations.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ghost {

struct CheckResult {
    std::string name;
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;  // inputs where the identity is not defined (reported, not failed)
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t requested = 0;
    std::vector<std::string> families;
    std::vector<CheckResult> checks;
    nlohmann::json counterexamples = nlohmann::json::array();
    nlohmann::json details = nlohmann::json::object();

    bool passed() const;
    CheckResult& check(const std::string& name);
    // Counts one sample of the check; records a witness when ok is false.
    void record(const std::string& name, bool ok, const nlohmann::json& witness = nullptr);
    void skip(const std::string& name, const nlohmann::json& why = nullptr);
    void merge(const SuiteReport& other);
    nlohmann::json to_json() const;
    std::string summary() const;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t samples = 0;  // 0 selects the suite default
    // Families for evaluation suites; empty selects the suite default.
    std::vector<LimitFamily> families;
    // Configurations and group for the orbit-sum suite; defaults when empty.
    std::optional<GroupPresentation> group;
    std::optional<Configuration> orbit_G, orbit_H;
    int max_word_length = 6;
};

// Suite names: epsilon-axioms, hexagonal, jacobi, cancellations, pi-homomorphism,
// swap-jacobi, evaluation, I-equals-T-bracket, opp-endo, sign-lemma,
// triangle-identities, triangle-commute, triangle-functions, inter-pos, orbit-sums, barycenter.
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);

GroupPresentation schottky_pair();

}  // namespace ghost
