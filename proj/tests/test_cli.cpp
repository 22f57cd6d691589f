// Exercises the installed command surface end to end through popen: output
// formats, exit codes, and determinism of seeded runs. argv[1] is the path
// to the CLI binary.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "frolov/convergence.hpp"

namespace {

int failures = 0;

#define EXPECT(cond, label)                                                                        \
    do {                                                                                           \
        if (!(cond)) {                                                                             \
            std::cout << "FAIL: " << label << "\n";                                                \
            ++failures;                                                                            \
        }                                                                                          \
    } while (0)

struct RunResult {
    int code = -1;
    std::string out;
};

std::string g_exe;

RunResult run(const std::string& args) {
    const std::string cmd = "\"" + g_exe + "\" " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

// value of the first "key=..." line, or empty
std::string field(const std::string& text, const std::string& key) {
    for (const std::string& line : lines_of(text))
        if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
    return {};
}

std::string slurp(const std::string& path) {
    std::ifstream ifs(path, std::ios::binary);
    std::stringstream ss;
    ss << ifs.rdbuf();
    return ss.str();
}

void test_basis() {
    const RunResult r = run("basis -d 2");
    EXPECT(r.code == 0, "basis exit code");
    EXPECT(field(r.out, "d") == "2", "basis d line");
    EXPECT(field(r.out, "kind") == "standard", "basis kind line");
    const double adt = std::strtod(field(r.out, "abs_detT").c_str(), nullptr);
    EXPECT(std::fabs(adt - 1.0 / (2.0 * std::sqrt(2.0))) < 1e-15, "basis |detT| is 1/(2 sqrt 2)");

    std::stringstream roots(field(r.out, "roots"));
    double r0 = 0, r1 = 0;
    roots >> r0 >> r1;
    EXPECT(std::fabs(r0 - (2.0 + std::sqrt(2.0))) < 1e-13, "first root is 2+sqrt(2)");
    EXPECT(std::fabs(r1 - (2.0 - std::sqrt(2.0))) < 1e-13, "second root is 2-sqrt(2)");
    EXPECT(std::fabs(std::strtod(field(r.out, "residual").c_str(), nullptr)) < 1e-12,
           "basis residual small");

    EXPECT(run("basis -d 4 --kind chebyshev").code == 0, "chebyshev d=4 accepted");
    EXPECT(run("basis -d 3 --kind chebyshev").code == 2, "chebyshev d=3 rejected");
}

void test_nodes() {
    const RunResult r = run("nodes -d 1 -a 10");
    EXPECT(r.code == 0, "nodes exit code");
    const auto ls = lines_of(r.out);
    EXPECT(ls.size() == 11, "nodes line count");
    EXPECT(!ls.empty() && ls[0] == "# frolov d=1 kind=standard a=10 count=10 detT=1",
           "nodes header line");
    std::vector<double> xs;
    for (size_t i = 1; i < ls.size(); ++i) xs.push_back(std::strtod(ls[i].c_str(), nullptr));
    std::sort(xs.begin(), xs.end());
    bool grid_ok = xs.size() == 10;
    for (size_t j = 0; j < xs.size() && grid_ok; ++j)
        grid_ok = std::fabs(xs[j] - 0.1 * static_cast<double>(j)) < 1e-12;
    EXPECT(grid_ok, "nodes are the 1-D grid j/10");

    const std::string path = "cli_test_nodes.txt";
    const RunResult w = run("nodes -d 2 -a 5 -o " + path);
    EXPECT(w.code == 0, "nodes -o exit code");
    const auto fl = lines_of(slurp(path));
    EXPECT(!fl.empty() && fl[0].rfind("# frolov d=2 kind=standard a=5 count=", 0) == 0,
           "nodes file header");
    EXPECT(fl.size() >= 2, "nodes file has points");
    std::remove(path.c_str());
}

void test_integrate() {
    // a 10-node 1-D rule kills the k=3 mode exactly
    const RunResult r = run("integrate -d 1 -a 10 --function trig_mode:k=3");
    EXPECT(r.code == 0, "integrate exit code");
    EXPECT(std::fabs(std::strtod(field(r.out, "estimate").c_str(), nullptr)) < 1e-12,
           "aliasing-free mode integrates to zero");
    EXPECT(field(r.out, "n") == "10", "integrate node count");
    EXPECT(field(r.out, "bound").empty(), "no bound line without -s");

    const RunResult b = run("integrate -d 2 -s 2 -a 8");
    EXPECT(b.code == 0, "integrate with bound exit code");
    const double est = std::strtod(field(b.out, "estimate").c_str(), nullptr);
    EXPECT(std::fabs(est - 1.0) > 1.1e-6 && std::fabs(est - 1.0) < 1.4e-6,
           "default bump estimate at a=8");
    EXPECT(field(b.out, "n") == "182", "node count at a=8");
    const double bound = std::strtod(field(b.out, "bound").c_str(), nullptr);
    EXPECT(std::fabs(bound - 0.030929478706587091) < 1e-15, "bound value at s=2 a=8");

    const RunResult p = run("integrate -d 2 -s 2 -a 8 --mode periodized --function trig_mode:k=0");
    EXPECT(p.code == 0, "periodized integrate exit code");
    const double pest = std::strtod(field(p.out, "estimate").c_str(), nullptr);
    EXPECT(std::fabs(pest - est) < 1e-12, "periodized constant matches vanishing bump");
}

void test_verify_deterministic() {
    const RunResult r1 = run("verify -d 2 --seed 42");
    const RunResult r2 = run("verify -d 2 --seed 42");
    EXPECT(r1.code == 0, "verify exit code");
    EXPECT(r1.out == r2.out, "verify output is byte-identical per seed");
    EXPECT(r1.out.find("seed=42") != std::string::npos, "verify echoes the seed");
    EXPECT(r1.out.find("result: 5/5 passed") != std::string::npos, "verify all suites pass");

    const RunResult r3 = run("verify -d 2 --seed 43");
    EXPECT(r3.code == 0, "verify exit code at another seed");
    EXPECT(r3.out != r1.out, "different seed gives different log");
}

void test_study() {
    const std::string p1 = "cli_test_study1.csv", p2 = "cli_test_study2.csv";
    const RunResult r1 = run("study -d 2 -s 2 -a 4 -a 8 -a 16 -o " + p1);
    const RunResult r2 = run("study -d 2 -s 2 -a 4 -a 8 -a 16 -o " + p2);
    EXPECT(r1.code == 0, "study exit code");
    EXPECT(slurp(p1) == slurp(p2), "study reruns are byte-identical");
    EXPECT(!field(r1.out, "order").empty(), "study prints fitted order");
    EXPECT(std::strtod(field(r1.out, "order").c_str(), nullptr) < -2.5,
           "fitted order reflects s=2 decay");

    std::ifstream ifs(p1);
    const auto recs = frolov::read_csv(ifs);
    EXPECT(recs.size() == 3, "study row count");
    EXPECT(recs.size() == 3 && recs[0].n == 46 && recs[1].n == 182 && recs[2].n == 724,
           "study node counts");
    bool decreasing = recs.size() == 3;
    for (size_t i = 1; i < recs.size() && decreasing; ++i)
        decreasing = recs[i].error < recs[i - 1].error;
    EXPECT(decreasing, "study errors decrease");
    for (const auto& rec : recs) {
        EXPECT(rec.error <= rec.bound, "study error within bound");
        EXPECT(rec.seconds == 0.0, "seconds zeroed without --timing");
    }
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

void test_bound() {
    const RunResult t = run("bound -d 2 -s 1 -a 4 --format text");
    EXPECT(t.code == 0, "bound exit code");
    EXPECT(t.out == "bound=5.6569\nc=45.255\n", "bound text format");

    const RunResult c = run("bound -d 1 -s 1 -a 4");
    EXPECT(field(c.out, "bound") == "4", "1-D bound closed form");
    EXPECT(field(c.out, "c") == "16", "1-D constant closed form");
}

void test_exit_codes() {
    EXPECT(run("--help").code == 0, "--help exits 0");
    EXPECT(run("nodes --help").code == 0, "subcommand --help exits 0");
    EXPECT(run("").code == 2, "missing subcommand exits 2");
    EXPECT(run("frobnicate").code == 2, "unknown subcommand exits 2");
    EXPECT(run("basis --nope").code == 2, "unknown flag exits 2");
    EXPECT(run("nodes -d 2").code == 2, "missing required scale exits 2");
    EXPECT(run("integrate -d 2 -a 4 --function mystery").code == 2, "unknown function exits 2");
    EXPECT(run("integrate -d 2 -a 4 --function bump:p=0").code == 2, "bad parameter exits 2");
    EXPECT(run("integrate -d 2 -a 4 --mode periodized").code == 2,
           "periodized without smoothness exits 2");
    EXPECT(run("study -d 2 -s 2 -a 4 -a 8").code == 2, "two-point study exits 2");
    EXPECT(run("study -d 2 -s 0 -a 4 -a 8 -a 16").code == 2, "study rejects s=0");
    EXPECT(run("nodes -d 2 -a 40 --budget 100").code == 3, "budget exhaustion exits 3");
    EXPECT(run("integrate -d 2 -a 1").code == 2, "scale 1 rejected for rules");
    EXPECT(run("bound -d 2 -s 1 -a 1").code == 2, "bound undefined at a=1");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli>\n";
        return 64;
    }
    g_exe = argv[1];

    test_basis();
    test_nodes();
    test_integrate();
    test_verify_deterministic();
    test_study();
    test_bound();
    test_exit_codes();

    if (failures == 0) {
        std::cout << "cli: all checks passed\n";
        return 0;
    }
    std::cout << "cli: " << failures << " check(s) failed\n";
    return 1;
}
