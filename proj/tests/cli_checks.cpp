// End-to-end checks of the hdepth command-line tool. Takes the binary
// path as argv[1], runs each subcommand through a shell, and verifies
// output and exit codes.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

#define CHECK_MSG(cond, msg)                                          \
    do {                                                              \
        if (!(cond)) {                                                \
            std::cerr << "FAIL " << __LINE__ << ": " << msg << "\n";  \
            ++failures;                                               \
        }                                                             \
    } while (0)

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        return {-1, ""};
    }
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_checks <path-to-hdepth>\n";
        return 2;
    }
    const std::string bin = argv[1];

    {
        RunResult r = run(bin + " hdepth --coeffs 1,-20,25");
        CHECK_MSG(r.code == 0, "hdepth exit code " << r.code);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["hdepth"] == 5, "hdepth value");
        CHECK_MSG(j["c_bound"] == 6, "c_bound value");
        CHECK_MSG(j["first_failure"]["beta"] == "-38", "failure beta");
        // round trip: certificate entries must be nonnegative integers
        for (const auto& v : j["certificate"]) {
            CHECK_MSG(std::stol(v.get<std::string>()) >= 0, "certificate entry");
        }
    }
    {
        RunResult r = run(bin + " beta --coeffs 1,1 --d 2");
        CHECK_MSG(r.code == 0, "beta exit code " << r.code);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["values"] == nlohmann::json({"1", "0", "2"}), "beta table");
    }
    {
        RunResult r = run(bin + " classify --coeffs 2,-6,4");
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["case"] == "sum_neg_delta_pos", "classify case");
        CHECK_MSG(j["valid"] == true, "classify validity");
        CHECK_MSG(j["ell"] == "0", "classify ell");
    }
    {
        RunResult r = run(bin + " bound --coeffs 1,-20,25");
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["bound"] == "13", "quadratic bound");
        RunResult rc = run(bin + " bound --coeffs 1,1,-1,1");
        nlohmann::json jc = nlohmann::json::parse(rc.out);
        CHECK_MSG(jc["bound"] == "67", "cubic bound");
        CHECK_MSG(jc["case"] == "bneg_dprime_nonpos", "cubic case");
    }
    {
        RunResult r = run(bin + " family --k 7");
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["report"]["hdepth"] == 5, "family hdepth");
    }
    {
        RunResult r = run(bin + " geometry --tol 0.01");
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["points"].size() == 4, "geometry point count");
        double ms = std::stod(j["max_sum"].get<std::string>());
        CHECK_MSG(ms > 10.50 && ms < 10.52, "geometry max_sum " << ms);
    }
    {
        std::string csv = "/tmp/hd_cli_rows.csv";
        RunResult r = run(bin +
                          " sweep --degree 2 --range a0=1:3 --range a1=-9:9"
                          " --range a2=1:3 --out " +
                          csv);
        CHECK_MSG(r.code == 0, "sweep exit code " << r.code);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["violations"].empty(), "sweep violations");
        std::ifstream in(csv);
        std::string header;
        std::getline(in, header);
        CHECK_MSG(header == "a0,a1,a2,hdepth,c_bound,case", "csv header " << header);
        size_t rows = 0;
        std::string line;
        while (std::getline(in, line)) {
            ++rows;
        }
        CHECK_MSG(rows == std::stoul(j["valid"].get<std::string>()),
                  "csv row count matches valid count");
        std::remove(csv.c_str());
    }
    {
        RunResult r = run(bin +
                          " explore --degree 1 --range a0=1:40 --range a1=1:40");
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(std::stol(j["max_hdepth"].get<std::string>()) <= 4,
                  "degree-1 power bound");
    }
    {
        // sampled runs record their seed in the CSV header line
        std::string csv = "/tmp/hd_cli_sampled.csv";
        RunResult r = run(bin +
                          " explore --degree 3 --range a0=1:9 --range a1=-9:9"
                          " --range a2=-9:9 --range a3=1:9 --seed 7"
                          " --samples 500 --out " +
                          csv);
        CHECK_MSG(r.code == 0, "sampled explore exit " << r.code);
        std::ifstream in(csv);
        std::string first;
        std::getline(in, first);
        CHECK_MSG(first.find("# mode=sampled seed=7 samples=500") == 0,
                  "sampled csv header '" << first << "'");
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["seed"] == "7", "summary seed");
        std::remove(csv.c_str());
    }
    {
        // config file path
        std::string conf = "/tmp/hd_cli_cfg.txt";
        std::ofstream out(conf);
        out << "degree=2\na0=1:2\na1=-4:4\na2=1:2\nworkers=2\n";
        out.close();
        RunResult r = run(bin + " sweep --degree 2 --config " + conf);
        CHECK_MSG(r.code == 0, "config sweep exit " << r.code);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["total"] == "36", "config sweep total");
        std::remove(conf.c_str());
    }
    {
        RunResult r = run(bin + " verify --suite geometry");
        CHECK_MSG(r.code == 0, "geometry verify exit " << r.code);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["violations"] == "0", "geometry verify violations");
    }
    {
        // every proven quadratic statement holds on the default box
        RunResult r = run(bin + " verify --suite quadratic");
        CHECK_MSG(r.code == 0, "quadratic verify exit " << r.code);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["violations"] == "0", "quadratic verify violations");
        CHECK_MSG(j["findings"] == "0", "quadratic verify findings");
    }
    {
        // the full run must surface the cubic findings through exit 3
        // while reporting zero violations of proven statements
        RunResult r = run(bin + " verify");
        CHECK_MSG(r.code == 3, "full verify exit " << r.code);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["violations"] == "0", "full verify violations");
        CHECK_MSG(std::stol(j["findings"].get<std::string>()) > 0,
                  "full verify findings present");
    }

    {
        // huge coefficients: c_bound exceeds int64 and must arrive as a
        // decimal string while the scan indices stay JSON numbers
        RunResult r = run(
            bin +
            " hdepth --coeffs "
            "1,-9999999999999999999900000000000000000000,"
            "10000000000000000000000000000000000000000");
        CHECK_MSG(r.code == 0, "huge hdepth exit " << r.code);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK_MSG(j["hdepth"] == 5, "huge family depth");
        CHECK_MSG(j["c_bound"] == "100000000000000000001", "huge c_bound string");
        CHECK_MSG(j["first_failure"]["d"] == 6, "huge failure row");
    }

    // error paths
    CHECK_MSG(run(bin + " hdepth --coeffs 0,1").code == 1, "invalid fn -> 1");
    CHECK_MSG(run(bin + " hdepth --coeffs 1,x").code == 2, "bad integer -> 2");
    CHECK_MSG(run(bin + " hdepth").code == 2, "missing flag -> 2");
    CHECK_MSG(run(bin + " classify --coeffs 1,2").code == 2, "bad arity -> 2");
    CHECK_MSG(run(bin + " nosuch").code == 2, "unknown subcommand -> 2");
    CHECK_MSG(run(bin + " hdepth --coeffs 5 --cap 0").code == 1, "cap -> 1");
    {
        RunResult r = run("HDEPTH_CAP=0 " + bin + " hdepth --coeffs 5");
        CHECK_MSG(r.code == 1, "env cap honored, exit " << r.code);
    }

    if (failures == 0) {
        std::cout << "cli_checks: all passed\n";
        return 0;
    }
    std::cout << "cli_checks: " << failures << " failure(s)\n";
    return 1;
}
