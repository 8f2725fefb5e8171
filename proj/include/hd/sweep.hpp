#ifndef HD_SWEEP_HPP
#define HD_SWEEP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hd/numfn.hpp"

namespace hd {
namespace sweep {

struct CoeffRange {
    long lo;
    long hi;  // inclusive; lo > hi yields an empty grid
};

inline constexpr std::uint64_t kDefaultSamples = 100000;

/// Description of a coefficient-box run. ranges[i] bounds a_i
/// (ascending-degree indexing), so for degree 2 the tuple is (e, b, a).
struct SweepConfig {
    int degree = 2;
    std::vector<CoeffRange> ranges;   // size degree + 1
    std::string filter;               // named case filter, empty = all
    Integer cap = 1000000;
    int workers = 1;
    std::uint64_t seed = 0;           // sampling seed (explore)
    std::uint64_t samples = 0;        // 0 = exhaustive when grid is small
    std::uint64_t max_exhaustive = 4000000;
};

struct Violation {
    enum class Kind { Bound, CapExceeded };
    Kind kind;
    std::vector<Integer> coeffs;
    Integer hdepth;        // -1 when unknown (cap exceeded)
    Integer claimed_bound; // -1 for cap markers
};

struct SweepSummary {
    std::string mode;      // "exhaustive" or "sampled"
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    Integer total = 0;     // grid points visited (after filtering)
    Integer valid = 0;     // of those, valid numerical functions
    Integer max_hdepth = -1;
    std::vector<Integer> argmax;  // first maximizer in canonical order
    std::map<std::string, Integer> per_case_max;
    std::vector<Violation> violations;
};

/// Called once per valid instance, in canonical (lexicographic) order
/// regardless of worker count.
using RowSink = std::function<void(const std::vector<Integer>& coeffs,
                                   const Integer& hdepth, const Integer& c_bound,
                                   const std::string& kase)>;

/// Exhaustive quadratic box sweep; every valid instance is checked
/// against its proven case bound (8 / 11 / 13) and any excess is
/// recorded as a violation.
SweepSummary sweep_quadratic(const SweepConfig& cfg, const RowSink& sink = {});

/// Exhaustive cubic box sweep; covered cases are checked against 16 / 67,
/// the uncovered case only contributes to per-case maxima.
SweepSummary sweep_cubic(const SweepConfig& cfg, const RowSink& sink = {});

/// Degree-n explorer: exhaustive when the grid fits under
/// cfg.max_exhaustive, otherwise seeded uniform sampling. Instances with
/// all coefficients nonnegative are checked against the 2^(n+1) bound.
SweepSummary explore_degree(int n, const SweepConfig& cfg, const RowSink& sink = {});

/// Case label of a valid instance under the degree-2/3 partitions
/// ("-" for other degrees).
std::string case_label(int degree, const std::vector<Integer>& coeffs);

nlohmann::json to_json(const SweepSummary& s);

}  // namespace sweep
}  // namespace hd

#endif
