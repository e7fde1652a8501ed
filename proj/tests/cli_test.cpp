// End-to-end checks of the command-line surface: spec'd invocations, exit
// codes, JSON reports, and the file-format round trips.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "ramsey/family.hpp"
#include "ramsey/json_io.hpp"

namespace {

int failures = 0;

#define EXPECT(cond, msg)                                                                          \
    do {                                                                                           \
        if (!(cond)) {                                                                             \
            std::cerr << "FAIL: " << msg << " (" << __FILE__ << ":" << __LINE__ << ")\n";          \
            ++failures;                                                                            \
        }                                                                                          \
    } while (0)

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string command = std::string(RAMSEY_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe))
        output.append(buffer, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

void shell(const std::string& command) {
    if (std::system(command.c_str()) != 0)
        std::cerr << "shell command failed: " << command << "\n";
}

} // namespace

int main() {
    // parse echoes the normalized equation
    {
        RunResult r = run("parse \"x + y = 3*z\"");
        EXPECT(r.exit_code == 0, "parse exit");
        EXPECT(contains(r.output, "x + y - 3*z"), "parse output: " + r.output);
        RunResult bad = run("parse \"x ++ y\"");
        EXPECT(bad.exit_code == 3, "syntax error exits 3");
    }

    // spec'd invocations
    {
        RunResult r = run("certify --family MN p=2 m=1 n=2 --p 2 --mod 2");
        EXPECT(r.exit_code == 0, "certify MN exit 0");
        EXPECT(contains(r.output, "Obstructed"), "certify MN obstructed: " + r.output);

        RunResult collision = run("certify --family MN p=2 m=2 n=2 --p 2 --mod 2");
        EXPECT(collision.exit_code == 1, "collision exits 1");

        RunResult s = run("search --pattern schur --colors 2 --least-forcing --cap 100");
        EXPECT(s.exit_code == 0, "least forcing exit");
        EXPECT(contains(s.output, "5"), "S(2)=4 forced at 5: " + s.output);

        RunResult w = run("witness mn --p 2 --m 1 --n 2 --j 1 --b 2 --d 2");
        EXPECT(w.exit_code == 0, "witness exit");
        EXPECT(contains(w.output, "VALID"), "witness valid: " + w.output);
        EXPECT(contains(w.output, "residual=0"), "witness residual: " + w.output);
    }

    // exit codes encode verdicts
    {
        EXPECT(run("rado --coeffs \"1,1,-1\"").exit_code == 0, "rado regular exit 0");
        EXPECT(run("rado --coeffs \"1,1,-3\"").exit_code == 1, "rado non-regular exit 1");
        EXPECT(run("search --pattern schur --colors 2 --N 5").exit_code == 1, "forced exit 1");
        EXPECT(run("search --pattern schur --colors 2 --N 4").exit_code == 0, "bad coloring exit 0");
        EXPECT(run("search --pattern schur --colors 2 --N 9 --budget 2").exit_code == 2,
               "budget exit 2");
        EXPECT(run("nonsense").exit_code == 3, "usage exit 3");
        EXPECT(run("witness ln --a 2 --c 2 --n 2 --j 1 --b 2 --d 2 --q-upper-n").exit_code == 1,
               "upper-index-n witness is invalid");
    }

    // json reports carry the reproducibility header
    {
        RunResult r = run("--json certify --family GOLOWICH n=4 --p 2 --mod 4");
        EXPECT(r.exit_code == 0, "json certify exit");
        auto j = nlohmann::json::parse(r.output, nullptr, false);
        EXPECT(!j.is_discarded(), "json parses: " + r.output.substr(0, 120));
        EXPECT(j["tool"] == "ramsey", "tool field");
        EXPECT(j.contains("version") && j.contains("config"), "header fields");
        EXPECT(j["result"]["certificate"]["outcome"] == "obstructed", "certificate outcome");
    }

    // emitted coloring files feed back through verify
    {
        std::string dir = "cli_test_tmp";
        shell("rm -rf " + dir + " && mkdir -p " + dir);
        RunResult s = run("search --pattern 3ap --colors 2 --N 8 --out " + dir + "/coloring.txt");
        EXPECT(s.exit_code == 0, "search writes coloring");
        RunResult v = run("verify --pattern 3ap --coloring " + dir + "/coloring.txt");
        EXPECT(v.exit_code == 0, "saved coloring re-verifies: " + v.output);

        RunResult e = run("cnf export --pattern 3ap --colors 2 --N 8 --out " + dir +
                          "/ap.cnf --map " + dir + "/ap.json");
        EXPECT(e.exit_code == 0, "cnf export");
        RunResult solve = run("cnf solve " + dir + "/ap.cnf");
        EXPECT(solve.exit_code == 0, "cnf solve sat");
        {
            std::ofstream model(dir + "/model.txt");
            std::istringstream lines(solve.output);
            std::string line;
            while (std::getline(lines, line))
                if (!line.empty() && line[0] == 'v')
                    model << line << "\n";
        }
        RunResult d = run("cnf decode --pattern 3ap --colors 2 --N 8 --model " + dir +
                          "/model.txt --out " + dir + "/decoded.txt");
        EXPECT(d.exit_code == 0, "decode re-verifies: " + d.output);
        RunResult v2 = run("verify --pattern 3ap --coloring " + dir + "/decoded.txt");
        EXPECT(v2.exit_code == 0, "decoded coloring avoids");
        shell("rm -rf " + dir);
    }

    // identity corpus agrees with the documented expectations
    {
        RunResult r = run("identity --corpus");
        EXPECT(r.exit_code == 0, "identity corpus");
        RunResult direct =
            run("identity --lhs \"z^2 - y^2\" --rhs \"x^2\" --relation \"x^2 + y^2 - z^2\"");
        EXPECT(direct.exit_code == 0, "difference of squares reduces by the triple relation");
    }

    // archived certificates re-validate
    {
        std::string dir = "cli_test_tmp3";
        shell("rm -rf " + dir + " && mkdir -p " + dir);
        RunResult e = run("certify --family LN a=2 n=4 c=256 --p 2 --mod 5 --out " + dir + "/cert.json");
        EXPECT(e.exit_code == 0, "LN certificate obstructed");
        EXPECT(run("certify --check " + dir + "/cert.json").exit_code == 0, "certificate re-validates");
        shell("sed -i 's/\"outcome\": \"obstructed\"/\"outcome\": \"collision\"/' " + dir + "/cert.json");
        EXPECT(run("certify --check " + dir + "/cert.json").exit_code == 1,
               "tampered certificate is rejected");
        shell("rm -rf " + dir);
    }

    // pattern JSON files are accepted as targets
    {
        std::string dir = "cli_test_tmp2";
        shell("rm -rf " + dir + " && mkdir -p " + dir);
        ramsey::PatternSpec ap = ramsey::instantiate_pattern(
            {ramsey::Family::VdwAp, {{"l", ramsey::Rational(3)}}});
        {
            std::ofstream f(dir + "/ap.json");
            f << ramsey::pattern_to_json(ap).dump(2) << "\n";
        }
        RunResult s = run("search --pattern " + dir + "/ap.json --colors 2 --least-forcing --cap 20");
        EXPECT(s.exit_code == 0, "pattern file search");
        EXPECT(contains(s.output, "9"), "W(3,2)=9 from a pattern file: " + s.output);
        shell("rm -rf " + dir);
    }

    if (failures == 0) {
        std::cout << "cli_tests: all passed\n";
        return 0;
    }
    std::cerr << "cli_tests: " << failures << " failure(s)\n";
    return 1;
}
