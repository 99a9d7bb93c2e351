#include "ghostalg/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ghost;

namespace {

struct Requirement {
    std::string check;  // empty: every check of the suite
    std::size_t min_samples;
};

struct Criterion {
    int id;
    std::string title;
    std::string suite;
    std::vector<Requirement> minimum;
    double max_seconds;  // 0: no runtime target
};

std::size_t samples_of(const SuiteReport& r, const std::string& prefix) {
    std::size_t n = 0;
    for (const auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) n += c.samples;
    return n;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "epsilon axioms", "epsilon-axioms", {{"antisymmetry", 10000}, {"cocycle", 10000}}, 5},
        {2, "hexagonal relations", "hexagonal", {{"second", 1000}, {"third", 1000}}, 0},
        {3, "ghost Jacobi identity", "jacobi", {{"jacobiator", 500}}, 60},
        {4, "assembly and cancellations", "cancellations", {{"P1", 200}, {"Q1", 200}, {"R1", 200}, {"S1", 200}, {"S2", 200}, {"assembly-", 200},
          {"assembly-111", 1}, {"assembly-11p", 1}, {"assembly-1p1", 1}, {"assembly-1pp", 1},
          {"assembly-p11", 1}, {"assembly-p1p", 1}, {"assembly-pp1", 1}, {"assembly-ppp", 1}}, 0},
        {5, "pi preserves brackets", "pi-homomorphism", {{"bracket", 300}}, 0},
        {6, "swapping algebra Jacobi", "swap-jacobi", {{"jacobi", 200}}, 0},
        {7, "T equals T^P after pi", "evaluation", {{"T = T^P(pi)", 600}}, 0},
        {8, "I equals T of the bracket", "I-equals-T-bracket", {{"I = T[G,H]", 600}, {"factored form", 600}}, 0},
        {9, "opposite endomorphisms", "opp-endo", {{"p_G(e*) = T_G p(e)", 200}}, 0},
        {10, "triangle functions and sign lemma", "triangle-functions", {{"sign classification", 1000}}, 0},
        {11, "positive cross ratios", "inter-pos", {{"characterizations agree (fuchsian)", 1000}, {"characterizations agree (veronese(3))", 1000}}, 0},
        {12, "orbit sums stabilize", "orbit-sums", {{"increments nonincreasing", 4}}, 120},
        {13, "barycenter", "barycenter", {{"gradient norm", 1}, {"equivariance", 1}, {"crossing pair", 1}}, 0},
    };
    VerifyOptions opt;
    opt.seed = 1;
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteReport r = run_suite(c.suite, opt);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = r.passed();
        std::string why;
        for (const auto& req : c.minimum) {
            std::size_t n = samples_of(r, req.check);
            if (n < req.min_samples) {
                ok = false;
                why += " [" + req.check + ": " + std::to_string(n) + " < " + std::to_string(req.min_samples) + "]";
            }
        }
        if (c.max_seconds > 0 && secs > c.max_seconds) {
            ok = false;
            why += " [runtime " + std::to_string(secs) + " s]";
        }
        if (!r.passed()) why += " [" + std::to_string(r.counterexamples.size()) + " counterexamples]";
        std::printf("%s criterion %2d: %s (%s; %.2f s)%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    c.suite.c_str(), secs, why.c_str());
        failed += !ok;
    }
    return failed == 0 ? 0 : 1;
}
