#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "ngsmell/cli.hpp"
#include "ngsmell/report.hpp"

#include "test_support.hpp"

using namespace ngsmell;
using test_support::fixture_path;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return CliRun{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze a fixture with a finding exits 1 and emits it as json") {
    auto result = run({"analyze", fixture_path("listings/inheritance").string(), "--format",
                       "json", "--framework", "angular"});
    CHECK(result.exit_code == 1);
    CHECK(result.out.find("\"smell\": \"InheritanceInsteadOfComposition\"") != std::string::npos);
    CHECK(result.out.find("\"subject\": \"HomeComponent\"") != std::string::npos);
}

TEST_CASE("analyze a clean project exits 0 with the no-smells line") {
    auto result = run({"analyze", fixture_path("clean").string()});
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("No code smells detected.") != std::string::npos);
}

TEST_CASE("list-smells prints the eleven-row catalog with maturity flags") {
    auto result = run({"list-smells"});
    CHECK(result.exit_code == 0);
    int lines = 0, evaluated = 0;
    std::istringstream stream(result.out);
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        ++lines;
        if (line.find("Evaluated") != std::string::npos) ++evaluated;
    }
    CHECK(lines == 11);
    CHECK(evaluated == 5);
}

TEST_CASE("unknown flag prints usage and exits 2") {
    auto result = run({"analyze", ".", "--no-such-flag"});
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("Usage") != std::string::npos);
}

TEST_CASE("missing target exits 2") {
    auto result = run({"analyze", "/no/such/ngsmell/target"});
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("not found") != std::string::npos);
}

TEST_CASE("framework dispatch: angular manifest runs all detectors") {
    auto result = run({"analyze", fixture_path("dispatch/angular_project").string(), "--format",
                       "json", "--experimental"});
    CHECK(result.exit_code == 1);
    CHECK(result.out.find("\"framework\": \"angular\"") != std::string::npos);
    CHECK(result.out.find("\"smell\": \"InheritanceInsteadOfComposition\"") != std::string::npos);
    CHECK(result.out.find("\"smell\": \"OverusingAnyType\"") != std::string::npos);
}

TEST_CASE("framework dispatch: react+typescript manifest keeps only shared detectors") {
    auto result = run({"analyze", fixture_path("dispatch/react_ts_project").string(), "--format",
                       "json", "--experimental"});
    CHECK(result.exit_code == 1);
    CHECK(result.out.find("\"framework\": \"react-ts\"") != std::string::npos);
    CHECK(result.out.find("\"smell\": \"OverusingAnyType\"") != std::string::npos);
    // the same source extends a local base, but the detector is Angular-only
    CHECK(result.out.find("\"smell\": \"InheritanceInsteadOfComposition\"") == std::string::npos);
}

TEST_CASE("--framework override is honored verbatim") {
    // react-ts source tree forced to angular: inheritance detector active again
    auto result = run({"analyze", fixture_path("dispatch/react_ts_project").string(), "--format",
                       "json", "--experimental", "--framework", "angular"});
    CHECK(result.exit_code == 1);
    CHECK(result.out.find("\"framework\": \"angular\"") != std::string::npos);
    CHECK(result.out.find("\"smell\": \"InheritanceInsteadOfComposition\"") != std::string::npos);
}

TEST_CASE("--smells filters selection without changing retained findings") {
    auto all = run({"analyze", fixture_path("dispatch/angular_project").string(), "--format",
                    "json", "--experimental"});
    auto only = run({"analyze", fixture_path("dispatch/angular_project").string(), "--format",
                     "json", "--smells", "OverusingAnyType"});
    CHECK(only.exit_code == 1);
    CHECK(only.out.find("\"smell\": \"InheritanceInsteadOfComposition\"") == std::string::npos);
    CHECK(only.out.find("\"smell\": \"OverusingAnyType\"") != std::string::npos);
    CHECK(all.out.find("\"smell\": \"OverusingAnyType\"") != std::string::npos);
}

TEST_CASE("--smells with an unknown name exits 2") {
    auto result = run({"analyze", fixture_path("clean").string(), "--smells", "NotASmell"});
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("NotASmell") != std::string::npos);
}

TEST_CASE("experimental detectors are off by default") {
    // the drilled-input fixture only trips an experimental detector
    auto quiet = run({"analyze", fixture_path("listings/prop_drilling").string(), "--framework",
                      "angular"});
    // OverusingAnyType (evaluated) still fires on the any-typed inputs
    CHECK(quiet.out.find("PropDrilling") == std::string::npos);
    auto loud = run({"analyze", fixture_path("listings/prop_drilling").string(), "--framework",
                     "angular", "--experimental"});
    CHECK(loud.out.find("PropDrilling") != std::string::npos);
}

TEST_CASE("config file and NG_SMELL_CONFIG fallback") {
    namespace fs = std::filesystem;
    fs::path config = fs::temp_directory_path() / "ngsmell_cli_config.json";
    {
        std::ofstream out(config);
        out << "{\"too_many_inputs\": 8}\n";
    }
    // seven inputs pass at threshold 8
    auto with_flag = run({"analyze", fixture_path("listings/too_many_inputs").string(),
                          "--framework", "angular", "--config", config.string()});
    CHECK(with_flag.exit_code == 0);

    setenv("NG_SMELL_CONFIG", config.string().c_str(), 1);
    auto with_env = run({"analyze", fixture_path("listings/too_many_inputs").string(),
                         "--framework", "angular"});
    unsetenv("NG_SMELL_CONFIG");
    CHECK(with_env.exit_code == 0);

    auto without = run({"analyze", fixture_path("listings/too_many_inputs").string(),
                        "--framework", "angular"});
    CHECK(without.exit_code == 1);
    fs::remove(config);
}

TEST_CASE("invalid config exits 2 with the offending key") {
    namespace fs = std::filesystem;
    fs::path config = fs::temp_directory_path() / "ngsmell_bad_config.json";
    {
        std::ofstream out(config);
        out << "{\"duplicate_similarity\": 1.5}\n";
    }
    auto result = run({"analyze", fixture_path("clean").string(), "--config", config.string()});
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("duplicate_similarity") != std::string::npos);
    fs::remove(config);
}

TEST_CASE("--out writes the report to a file") {
    namespace fs = std::filesystem;
    fs::path out_path = fs::temp_directory_path() / "ngsmell_report.json";
    auto result = run({"analyze", fixture_path("listings/inheritance").string(), "--framework",
                       "angular", "--format", "json", "--out", out_path.string()});
    CHECK(result.exit_code == 1);
    CHECK(result.out.empty());
    std::string written = test_support::read_file(out_path);
    CHECK(written.find("InheritanceInsteadOfComposition") != std::string::npos);
    fs::remove(out_path);
}
