#include "hd/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "hd/cubic.hpp"
#include "hd/quadratic.hpp"

namespace hd {
namespace sweep {

namespace {

struct Row {
    std::vector<long> coeffs;
    long hdepth;
    Integer c_bound;
    std::string kase;
};

struct Partial {
    Integer total = 0;
    Integer valid = 0;
    Integer max_hdepth = -1;
    std::vector<Integer> argmax;
    std::map<std::string, Integer> per_case_max;
    std::vector<Violation> violations;
    std::vector<Row> rows;
};

std::string quad_case(const std::vector<Integer>& t) {
    // t = (e, b, a)
    if (sgn(t[1]) >= 0) {
        return "b_nonneg";
    }
    return t[1] * t[1] <= 4 * t[2] * t[0] ? "bneg_delta_nonpos" : "bneg_delta_pos";
}

long quad_bound(const std::vector<Integer>& t) {
    if (sgn(t[1]) >= 0) {
        return 8;
    }
    return t[1] * t[1] <= 4 * t[2] * t[0] ? 11 : 13;
}

std::string cubic_case(const std::vector<Integer>& t) {
    // t = (e, c, b, a)
    if (sgn(t[2]) >= 0 && sgn(t[1]) >= 0) {
        return "bc_nonneg";
    }
    if (sgn(t[2]) < 0 && t[2] * t[2] <= 3 * t[3] * t[1]) {
        return "bneg_dprime_nonpos";
    }
    return "uncovered";
}

long cubic_bound(const std::vector<Integer>& t) {
    std::string c = cubic_case(t);
    if (c == "bc_nonneg") {
        return 16;
    }
    if (c == "bneg_dprime_nonpos") {
        return 67;
    }
    return -1;  // uncovered
}

bool all_nonneg(const std::vector<Integer>& t) {
    return std::all_of(t.begin(), t.end(),
                       [](const Integer& v) { return sgn(v) >= 0; });
}

struct Mode {
    int degree;
    bool check_power_bound;  // explore: 2^(n+1) on nonnegative tuples
};

std::string label_for(const Mode& mode, const std::vector<Integer>& t) {
    if (mode.degree == 2) {
        return quad_case(t);
    }
    if (mode.degree == 3) {
        return cubic_case(t);
    }
    return "-";
}

long bound_label(const Mode& mode, const std::vector<Integer>& t) {
    if (mode.degree == 2) {
        return quad_bound(t);
    }
    if (mode.degree == 3) {
        return cubic_bound(t);
    }
    if (mode.check_power_bound && mode.degree <= 62 && all_nonneg(t)) {
        return 1L << (mode.degree + 1);
    }
    return -1;
}

void evaluate(const Mode& mode, const SweepConfig& cfg, const std::vector<long>& tuple,
              bool want_rows, Partial& acc) {
    std::vector<Integer> coeffs;
    coeffs.reserve(tuple.size());
    for (long v : tuple) {
        coeffs.emplace_back(v);
    }
    if (!cfg.filter.empty() && cfg.filter != "all" &&
        label_for(mode, coeffs) != cfg.filter) {
        return;
    }
    acc.total += 1;
    std::optional<NumFn> h = NumFn::try_validate(coeffs);
    if (!h) {
        return;
    }
    acc.valid += 1;
    // try_validate trims trailing zero coefficients, so report against
    // the original tuple but compute with the trimmed function.
    Integer depth;
    Integer c;
    try {
        HdepthReport report = hdepth(*h, cfg.cap);
        depth = report.hdepth;
        c = report.c_bound;
    } catch (const CapExceededError&) {
        acc.violations.push_back(
            Violation{Violation::Kind::CapExceeded, coeffs, Integer(-1), Integer(-1)});
        return;
    }
    std::string kase = label_for(mode, coeffs);
    if (cmp(depth, acc.max_hdepth) > 0) {
        acc.max_hdepth = depth;
        acc.argmax = coeffs;
    }
    auto [it, inserted] = acc.per_case_max.try_emplace(kase, depth);
    if (!inserted && cmp(depth, it->second) > 0) {
        it->second = depth;
    }
    long bound = bound_label(mode, coeffs);
    if (bound >= 0 && cmp(depth, bound) > 0) {
        acc.violations.push_back(
            Violation{Violation::Kind::Bound, coeffs, depth, Integer(bound)});
    }
    if (want_rows) {
        acc.rows.push_back(Row{tuple, depth.get_si(), c, kase});
    }
}

void merge(Partial& into, Partial&& part) {
    into.total += part.total;
    into.valid += part.valid;
    if (cmp(part.max_hdepth, into.max_hdepth) > 0) {
        into.max_hdepth = part.max_hdepth;
        into.argmax = std::move(part.argmax);
    }
    for (auto& [kase, value] : part.per_case_max) {
        auto [it, inserted] = into.per_case_max.try_emplace(kase, value);
        if (!inserted && cmp(value, it->second) > 0) {
            it->second = value;
        }
    }
    std::move(part.violations.begin(), part.violations.end(),
              std::back_inserter(into.violations));
    std::move(part.rows.begin(), part.rows.end(), std::back_inserter(into.rows));
}

// Saturates at UINT64_MAX; anything that large is only ever sampled.
std::uint64_t grid_size(const std::vector<CoeffRange>& ranges) {
    std::uint64_t n = 1;
    for (const CoeffRange& r : ranges) {
        if (r.hi < r.lo) {
            return 0;
        }
        const std::uint64_t w = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
        if (w != 0 && n > UINT64_MAX / w) {
            return UINT64_MAX;
        }
        n *= w;
    }
    return n;
}

// Uniform draw in [lo, hi] straight from the generator's 64-bit output.
// std::uniform_int_distribution is implementation-defined, which would
// make recorded seeds non-replayable across standard libraries.
long uniform_in(std::mt19937_64& rng, long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) {  // the full 64-bit range
        return static_cast<long>(rng());
    }
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = rng();
    while (x >= bound) {
        x = rng();
    }
    return lo + static_cast<long>(x % span);
}

// Decodes a flat index into the tuple (a_0 most significant), giving
// lexicographic order over tuples as the index increases.
std::vector<long> decode(std::uint64_t idx, const std::vector<CoeffRange>& ranges) {
    std::vector<long> t(ranges.size());
    for (size_t i = ranges.size(); i-- > 0;) {
        const std::uint64_t w =
            static_cast<std::uint64_t>(ranges[i].hi - ranges[i].lo) + 1;
        t[i] = ranges[i].lo + static_cast<long>(idx % w);
        idx /= w;
    }
    return t;
}

SweepSummary run(const Mode& mode, const SweepConfig& cfg, const RowSink& sink) {
    if (static_cast<int>(cfg.ranges.size()) != mode.degree + 1) {
        throw DomainError("sweep: need one coefficient range per degree index");
    }
    if (cfg.workers < 1) {
        throw DomainError("sweep: workers must be >= 1");
    }
    const std::uint64_t grid = grid_size(cfg.ranges);
    const bool sampled =
        mode.check_power_bound && (cfg.samples > 0 || grid > cfg.max_exhaustive);
    if (!mode.check_power_bound && grid > cfg.max_exhaustive) {
        throw DomainError("sweep: grid exceeds the exhaustive limit; shrink the "
                          "box or use explore");
    }
    std::vector<std::vector<long>> sample_list;
    std::uint64_t count = grid;
    if (sampled) {
        std::uint64_t n = cfg.samples > 0 ? cfg.samples : kDefaultSamples;
        std::mt19937_64 rng(cfg.seed);
        sample_list.reserve(n);
        for (std::uint64_t i = 0; i < n && grid > 0; ++i) {
            std::vector<long> t(cfg.ranges.size());
            for (size_t j = 0; j < cfg.ranges.size(); ++j) {
                t[j] = uniform_in(rng, cfg.ranges[j].lo, cfg.ranges[j].hi);
            }
            sample_list.push_back(std::move(t));
        }
        count = sample_list.size();
    }

    const bool want_rows = static_cast<bool>(sink);
    const int workers = std::max(1, std::min<int>(cfg.workers, 64));
    const std::uint64_t nchunks =
        count == 0 ? 0 : std::min<std::uint64_t>(count, static_cast<std::uint64_t>(workers) * 8);
    std::vector<Partial> parts(nchunks);

    auto worker_fn = [&](std::uint64_t chunk) {
        const std::uint64_t begin = count * chunk / nchunks;
        const std::uint64_t end = count * (chunk + 1) / nchunks;
        for (std::uint64_t i = begin; i < end; ++i) {
            std::vector<long> tuple =
                sampled ? sample_list[i] : decode(i, cfg.ranges);
            evaluate(mode, cfg, tuple, want_rows, parts[chunk]);
        }
    };

    if (workers == 1) {
        for (std::uint64_t chunk = 0; chunk < nchunks; ++chunk) {
            worker_fn(chunk);
        }
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::uint64_t> next{0};
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::uint64_t chunk = next.fetch_add(1);
                    if (chunk >= nchunks) {
                        return;
                    }
                    worker_fn(chunk);
                }
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    Partial all;
    for (Partial& part : parts) {
        merge(all, std::move(part));
    }
    if (sink) {
        for (const Row& row : all.rows) {
            std::vector<Integer> coeffs(row.coeffs.begin(), row.coeffs.end());
            sink(coeffs, Integer(row.hdepth), row.c_bound, row.kase);
        }
    }

    SweepSummary out;
    out.mode = sampled ? "sampled" : "exhaustive";
    out.seed = sampled ? cfg.seed : 0;
    out.samples = sampled ? count : 0;
    out.total = all.total;
    out.valid = all.valid;
    out.max_hdepth = all.max_hdepth;
    out.argmax = std::move(all.argmax);
    out.per_case_max = std::move(all.per_case_max);
    out.violations = std::move(all.violations);
    return out;
}

}  // namespace

SweepSummary sweep_quadratic(const SweepConfig& cfg, const RowSink& sink) {
    if (cfg.degree != 2) {
        throw DomainError("sweep_quadratic: degree must be 2");
    }
    if (cfg.samples > 0) {
        throw DomainError("sweep_quadratic is exhaustive; use explore to sample");
    }
    return run(Mode{2, false}, cfg, sink);
}

SweepSummary sweep_cubic(const SweepConfig& cfg, const RowSink& sink) {
    if (cfg.degree != 3) {
        throw DomainError("sweep_cubic: degree must be 3");
    }
    if (cfg.samples > 0) {
        throw DomainError("sweep_cubic is exhaustive; use explore to sample");
    }
    return run(Mode{3, false}, cfg, sink);
}

SweepSummary explore_degree(int n, const SweepConfig& cfg, const RowSink& sink) {
    if (n < 1) {
        throw DomainError("explore_degree: degree must be >= 1");
    }
    Mode mode{n, true};
    SweepConfig local = cfg;
    local.degree = n;
    return run(mode, local, sink);
}

std::string case_label(int degree, const std::vector<Integer>& coeffs) {
    if (degree == 2 && coeffs.size() == 3) {
        return quad_case(coeffs);
    }
    if (degree == 3 && coeffs.size() == 4) {
        return cubic_case(coeffs);
    }
    return "-";
}

nlohmann::json to_json(const SweepSummary& s) {
    nlohmann::json j;
    j["mode"] = s.mode;
    if (s.mode == "sampled") {
        j["seed"] = std::to_string(s.seed);
        j["samples"] = std::to_string(s.samples);
    }
    j["total"] = s.total.get_str();
    j["valid"] = s.valid.get_str();
    j["max_hdepth"] = s.max_hdepth.get_str();
    nlohmann::json argmax = nlohmann::json::array();
    for (const Integer& a : s.argmax) {
        argmax.push_back(a.get_str());
    }
    j["argmax"] = argmax;
    nlohmann::json cases = nlohmann::json::object();
    for (const auto& [kase, value] : s.per_case_max) {
        cases[kase] = value.get_str();
    }
    j["per_case_max"] = cases;
    nlohmann::json violations = nlohmann::json::array();
    for (const Violation& v : s.violations) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Integer& a : v.coeffs) {
            coeffs.push_back(a.get_str());
        }
        violations.push_back(
            {{"kind", v.kind == Violation::Kind::Bound ? "bound" : "cap_exceeded"},
             {"coeffs", coeffs},
             {"hdepth", v.hdepth.get_str()},
             {"claimed_bound", v.claimed_bound.get_str()}});
    }
    j["violations"] = violations;
    return j;
}

}  // namespace sweep
}  // namespace hd
