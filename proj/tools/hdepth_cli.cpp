// hdepth: exact computation of the Hilbert depth of integer-coefficient
// numerical functions, with quadratic/cubic case analysis, parameter
// geometry, coefficient-box sweeps and a property verifier.
//
// Coefficients are always ascending by degree: `--coeffs e,b,a` means
// h(j) = a j^2 + b j + e. Exit codes: 0 success, 1 domain error,
// 2 usage error, 3 verification violation or finding.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hd/cubic.hpp"
#include "hd/geometry.hpp"
#include "hd/numfn.hpp"
#include "hd/quadratic.hpp"
#include "hd/sweep.hpp"
#include "hd/verify.hpp"

namespace {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

std::vector<hd::Integer> parse_coeffs(const std::string& text) {
    if (text.empty()) {
        throw UsageError("--coeffs must not be empty");
    }
    std::vector<hd::Integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.emplace_back(item);
        } catch (const std::invalid_argument&) {
            throw UsageError("--coeffs: '" + item + "' is not an integer");
        }
    }
    if (out.empty()) {
        throw UsageError("--coeffs must not be empty");
    }
    return out;
}

hd::Rational parse_tol(const std::string& text) {
    hd::Rational tol = hd::rational_from_string(text);
    if (sgn(tol) <= 0) {
        throw UsageError("--tol must be positive");
    }
    return tol;
}

// "a2=1:30" -> (2, {1, 30})
std::pair<size_t, hd::sweep::CoeffRange> parse_range(const std::string& spec) {
    const auto eq = spec.find('=');
    const auto colon = spec.find(':', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || colon == std::string::npos || spec.size() < 6 ||
        spec[0] != 'a') {
        throw UsageError("--range expects aK=LO:HI, got '" + spec + "'");
    }
    try {
        size_t idx = std::stoul(spec.substr(1, eq - 1));
        long lo = std::stol(spec.substr(eq + 1, colon - eq - 1));
        long hi = std::stol(spec.substr(colon + 1));
        return {idx, hd::sweep::CoeffRange{lo, hi}};
    } catch (const std::exception&) {
        throw UsageError("--range expects aK=LO:HI, got '" + spec + "'");
    }
}

void apply_config_file(const std::string& path, hd::sweep::SweepConfig& cfg,
                       std::vector<std::pair<size_t, hd::sweep::CoeffRange>>& ranges) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open config file " + path);
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config: expected key=value, got '" + line + "'");
        }
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (key == "degree") {
            cfg.degree = std::stoi(value);
        } else if (key == "filter") {
            cfg.filter = value;
        } else if (key == "cap") {
            cfg.cap = hd::Integer(value);
        } else if (key == "workers") {
            cfg.workers = std::stoi(value);
        } else if (key == "seed") {
            cfg.seed = std::stoull(value);
        } else if (key == "samples") {
            cfg.samples = std::stoull(value);
        } else if (key == "max_exhaustive") {
            cfg.max_exhaustive = std::stoull(value);
        } else if (!key.empty() && key[0] == 'a') {
            ranges.push_back(parse_range(line));
        } else {
            throw UsageError("config: unknown key '" + key + "'");
        }
    }
}

void assemble_ranges(hd::sweep::SweepConfig& cfg,
                     const std::vector<std::pair<size_t, hd::sweep::CoeffRange>>& specs) {
    cfg.ranges.assign(static_cast<size_t>(cfg.degree) + 1,
                      hd::sweep::CoeffRange{0, -1});
    std::vector<bool> seen(cfg.ranges.size(), false);
    for (const auto& [idx, range] : specs) {
        if (idx >= cfg.ranges.size()) {
            throw UsageError("range index a" + std::to_string(idx) +
                             " out of bounds for degree " + std::to_string(cfg.degree));
        }
        cfg.ranges[idx] = range;
        seen[idx] = true;
    }
    for (size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
            throw UsageError("missing --range a" + std::to_string(i) + "=LO:HI");
        }
    }
}

class CsvWriter {
  public:
    CsvWriter(const std::string& path, int degree, const hd::sweep::SweepConfig& cfg,
              bool sampled)
        : out_(path) {
        if (!out_) {
            throw UsageError("cannot open output file " + path);
        }
        if (sampled) {
            out_ << "# mode=sampled seed=" << cfg.seed << " samples="
                 << (cfg.samples > 0 ? cfg.samples : hd::sweep::kDefaultSamples)
                 << "\n";
        }
        for (int i = 0; i <= degree; ++i) {
            out_ << "a" << i << ",";
        }
        out_ << "hdepth,c_bound,case\n";
    }

    hd::sweep::RowSink sink() {
        return [this](const std::vector<hd::Integer>& coeffs, const hd::Integer& depth,
                      const hd::Integer& c, const std::string& kase) {
            for (const hd::Integer& a : coeffs) {
                out_ << a.get_str() << ",";
            }
            out_ << depth.get_str() << "," << c.get_str() << "," << kase << "\n";
        };
    }

  private:
    std::ofstream out_;
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert depth of integer-coefficient numerical functions"};
    app.require_subcommand(1);

    std::string coeffs_text;
    std::string cap_text = "1000000";
    std::string tol_text = "0.01";
    std::string d_text;
    long k_value = 0;
    std::string out_path;
    std::string suite = "all";
    std::string config_path;
    std::vector<std::string> range_specs;
    int degree = 2;
    int workers = 1;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::string filter;

    auto* cmd_hdepth = app.add_subcommand(
        "hdepth", "Hilbert depth report for h given by ascending coefficients");
    cmd_hdepth->add_option("--coeffs", coeffs_text, "a0,a1,... (ascending degree)")
        ->required();
    cmd_hdepth->add_option("--cap", cap_text, "scan cap")->envname("HDEPTH_CAP");

    auto* cmd_beta = app.add_subcommand("beta", "row d of the beta table");
    cmd_beta->add_option("--coeffs", coeffs_text)->required();
    cmd_beta->add_option("--d", d_text, "row index")->required();

    auto* cmd_classify = app.add_subcommand(
        "classify", "nonnegativity classification of a quadratic (coeffs e,b,a)");
    cmd_classify->add_option("--coeffs", coeffs_text)->required();

    auto* cmd_bound = app.add_subcommand(
        "bound", "proven hdepth bound for a quadratic or cubic");
    cmd_bound->add_option("--coeffs", coeffs_text)->required();

    auto* cmd_family = app.add_subcommand(
        "family", "the k-family k^2 j^2 + (k - k^2) j + 1");
    cmd_family->add_option("--k", k_value)->required();

    auto* cmd_geometry = app.add_subcommand(
        "geometry", "boundary intersections and max of x+y on the region K");
    cmd_geometry->add_option("--tol", tol_text, "refinement tolerance");

    auto* cmd_sweep = app.add_subcommand(
        "sweep", "exhaustive coefficient-box sweep (degree 2 or 3)");
    auto* cmd_explore = app.add_subcommand(
        "explore", "degree-n box exploration (exhaustive or sampled)");
    for (CLI::App* cmd : {cmd_sweep, cmd_explore}) {
        cmd->add_option("--degree", degree)->required();
        cmd->add_option("--range", range_specs, "aK=LO:HI per coefficient");
        cmd->add_option("--config", config_path, "key=value config file");
        cmd->add_option("--filter", filter,
                        "case filter: b_nonneg | bneg_delta_nonpos | "
                        "bneg_delta_pos | bc_nonneg | bneg_dprime_nonpos | "
                        "uncovered");
        cmd->add_option("--cap", cap_text)->envname("HDEPTH_CAP");
        cmd->add_option("--workers", workers)->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path, "CSV output path");
        cmd->add_option("--seed", seed);
        cmd->add_option("--samples", samples);
    }

    auto* cmd_verify = app.add_subcommand(
        "verify", "run the bound/identity property suites over default boxes");
    cmd_verify->add_option("--suite", suite,
                           "all|core|quadratic|cubic|geometry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_hdepth->parsed()) {
            hd::NumFn h = hd::NumFn::validate(parse_coeffs(coeffs_text));
            print_json(hd::to_json(hd::hdepth(h, hd::Integer(cap_text))));
            return 0;
        }
        if (cmd_beta->parsed()) {
            hd::NumFn h = hd::NumFn::validate(parse_coeffs(coeffs_text));
            hd::Integer d;
            try {
                d = hd::Integer(d_text);
            } catch (const std::invalid_argument&) {
                throw UsageError("--d must be an integer");
            }
            print_json(hd::to_json(hd::beta_table(h, d), h.coeffs()));
            return 0;
        }
        if (cmd_classify->parsed()) {
            std::vector<hd::Integer> c = parse_coeffs(coeffs_text);
            if (c.size() != 3) {
                throw UsageError("classify expects exactly 3 coefficients e,b,a");
            }
            hd::quad::QuadParams p(c[2], c[1], c[0]);
            print_json(hd::quad::to_json(hd::quad::classify(p)));
            return 0;
        }
        if (cmd_bound->parsed()) {
            std::vector<hd::Integer> c = parse_coeffs(coeffs_text);
            if (c.size() == 3) {
                hd::NumFn h = hd::NumFn::validate(c);
                hd::quad::QuadParams p = hd::quad::params_from(h);
                nlohmann::json j;
                j["degree"] = 2;
                j["case"] = hd::sweep::case_label(2, c);
                j["bound"] = std::to_string(hd::quad::bound_for(p));
                print_json(j);
                return 0;
            }
            if (c.size() == 4) {
                hd::NumFn h = hd::NumFn::validate(c);
                hd::cubic::CubicParams p = hd::cubic::params_from(h);
                nlohmann::json j = hd::cubic::to_json(hd::cubic::bound_for(p));
                j["degree"] = 3;
                print_json(j);
                return 0;
            }
            throw UsageError("bound expects 3 (quadratic) or 4 (cubic) coefficients");
        }
        if (cmd_family->parsed()) {
            auto [h, report] = hd::quad::large_sum_family(hd::Integer(k_value));
            nlohmann::json j;
            j["k"] = std::to_string(k_value);
            j["report"] = hd::to_json(report);
            print_json(j);
            return 0;
        }
        if (cmd_geometry->parsed()) {
            print_json(hd::geometry::to_json(
                hd::geometry::k_intersections(parse_tol(tol_text))));
            return 0;
        }
        if (cmd_sweep->parsed() || cmd_explore->parsed()) {
            CLI::App* active = cmd_sweep->parsed() ? cmd_sweep : cmd_explore;
            hd::sweep::SweepConfig cfg;
            cfg.degree = degree;
            std::vector<std::pair<size_t, hd::sweep::CoeffRange>> specs;
            if (!config_path.empty()) {
                apply_config_file(config_path, cfg, specs);
            }
            // Explicitly passed flags override config-file values.
            if (active->count("--degree")) {
                cfg.degree = degree;
            }
            for (const std::string& spec : range_specs) {
                specs.push_back(parse_range(spec));
            }
            if (active->count("--filter")) {
                cfg.filter = filter;
            }
            if (active->count("--cap")) {
                cfg.cap = hd::Integer(cap_text);
            }
            if (active->count("--workers")) {
                cfg.workers = workers;
            }
            if (active->count("--seed")) {
                cfg.seed = seed;
            }
            if (active->count("--samples")) {
                cfg.samples = samples;
            }
            assemble_ranges(cfg, specs);

            const bool sampled_guess =
                cmd_explore->parsed() && (cfg.samples > 0 || [&] {
                    std::uint64_t n = 1;
                    for (const auto& r : cfg.ranges) {
                        if (r.hi < r.lo) {
                            return false;
                        }
                        n *= static_cast<std::uint64_t>(r.hi - r.lo) + 1;
                        if (n > cfg.max_exhaustive) {
                            return true;
                        }
                    }
                    return false;
                }());
            std::optional<CsvWriter> csv;
            hd::sweep::RowSink sink;
            if (!out_path.empty()) {
                csv.emplace(out_path, cfg.degree, cfg, sampled_guess);
                sink = csv->sink();
            }
            hd::sweep::SweepSummary summary;
            if (cmd_sweep->parsed()) {
                if (cfg.samples != 0) {
                    throw UsageError("sweep is exhaustive; --samples belongs to explore");
                }
                if (cfg.degree == 2) {
                    summary = hd::sweep::sweep_quadratic(cfg, sink);
                } else if (cfg.degree == 3) {
                    summary = hd::sweep::sweep_cubic(cfg, sink);
                } else {
                    throw UsageError("sweep supports degree 2 or 3; use explore");
                }
            } else {
                summary = hd::sweep::explore_degree(cfg.degree, cfg, sink);
            }
            print_json(hd::sweep::to_json(summary));
            return summary.violations.empty() ? 0 : 3;
        }
        if (cmd_verify->parsed()) {
            std::vector<hd::verify::SuiteReport> reports;
            if (suite == "all") {
                reports = hd::verify::verify_all();
            } else if (suite == "core") {
                reports.push_back(hd::verify::verify_core());
            } else if (suite == "quadratic") {
                reports.push_back(hd::verify::verify_quadratic());
            } else if (suite == "cubic") {
                reports.push_back(hd::verify::verify_cubic());
            } else if (suite == "geometry") {
                reports.push_back(hd::verify::verify_geometry());
            } else {
                throw UsageError("unknown suite '" + suite + "'");
            }
            print_json(hd::verify::to_json(reports));
            std::uint64_t bad = 0;
            for (const auto& r : reports) {
                bad += r.violation_count() + r.finding_count();
            }
            return bad == 0 ? 0 : 3;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const hd::ValidationError& e) {
        std::cerr << "invalid numerical function: " << e.what() << "\n";
        return 1;
    } catch (const hd::CapExceededError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const hd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
