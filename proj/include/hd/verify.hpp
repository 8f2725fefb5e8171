#ifndef HD_VERIFY_HPP
#define HD_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace hd {
namespace verify {

// Property suites checking every proven statement of the theory against
// exhaustive coefficient boxes and randomized instances.
//
// A *violation* is a counterexample to a proven statement or to an
// engine contract: it means a bug somewhere and must never occur. A
// *finding* is a counterexample to one of the empirically-tested claims
// (the cubic "sum >= 2 implies depth >= 3" family); findings are
// faithfully reported, not failures of the engine.

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t violations_total = 0;
    std::uint64_t findings_total = 0;
    std::vector<std::string> violations;  // capped exemplars
    std::vector<std::string> findings;    // capped exemplars
    std::map<std::string, std::string> stats;

    void violation(const std::string& msg);
    void finding(const std::string& msg);
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    std::uint64_t violation_count() const;
    std::uint64_t finding_count() const;
    bool ok() const { return violation_count() == 0; }
    const CheckResult& check(const std::string& name) const;
};

struct QuadBox {
    long a_lo = 1, a_hi = 30;
    long b_lo = -110, b_hi = 110;
    long e_lo = 1, e_hi = 30;
};

struct CubicBox {
    long a_lo = 1, a_hi = 12;
    long b_lo = -20, b_hi = 20;
    long c_lo = -20, c_hi = 20;
    long e_lo = 1, e_hi = 8;
};

/// Family sweep (k in [k_lo, k_hi]), classifier-vs-brute-force sweep,
/// depth-zero / equality / lower-bound claims, beta2-gap soundness,
/// discriminant claims, the row-3 closed-form claim at 14, case bounds
/// 8/11/13 and closed-form identities.
SuiteReport verify_quadratic(const QuadBox& box = {}, long k_lo = 4, long k_hi = 200,
                             std::uint64_t seed = 7);

/// Equality / lower-bound claims (empirical: findings channel),
/// monotonicity, beta2-gap soundness, the sqrt(3) slope inequality, the
/// quarter-discriminant implication, case bounds 16/67, beta3-scan
/// soundness and closed-form identities.
SuiteReport verify_cubic(const CubicBox& box = {}, std::uint64_t seed = 11);

/// Randomized core properties: recurrence-vs-definition equivalence of
/// the transform rows, downward closure of the valid-row set, scaling
/// invariance, and the 2^(n+1) bound on nonnegative boxes.
SuiteReport verify_core(std::uint64_t oracle_trials = 10000,
                        std::uint64_t closure_trials = 1000,
                        std::uint64_t scaling_trials = 1000,
                        std::uint64_t seed = 20240601);

/// Boundary intersections of the parameter region K, Vieta checks, the
/// elimination identity, membership examples and the max of x + y.
SuiteReport verify_geometry();

std::vector<SuiteReport> verify_all();

nlohmann::json to_json(const SuiteReport& report);
nlohmann::json to_json(const std::vector<SuiteReport>& reports);

}  // namespace verify
}  // namespace hd

#endif
