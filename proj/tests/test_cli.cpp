// End-to-end tests of the installed command line, run as a subprocess.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const std::string kCli = TENDEX_CLI_PATH;

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const fs::path log = fs::temp_directory_path() / "tendex_cli_out.txt";
    const std::string cmd = kCli + " " + args + " >" + log.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(log);
    std::string output((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return {WEXITSTATUS(raw), output};
}

fs::path temp_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("tendex_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool trees_identical(const fs::path& a, const fs::path& b) {
    std::vector<std::string> names_a, names_b;
    for (const auto& e : fs::directory_iterator(a)) names_a.push_back(e.path().filename());
    for (const auto& e : fs::directory_iterator(b)) names_b.push_back(e.path().filename());
    std::sort(names_a.begin(), names_a.end());
    std::sort(names_b.begin(), names_b.end());
    if (names_a != names_b) return false;
    for (const auto& name : names_a)
        if (read_file(a / name) != read_file(b / name)) return false;
    return true;
}

} // namespace

TEST_CASE("cli: chirp pipeline reproduces the published selections") {
    const auto dir = temp_dir("chirp");
    CHECK(run_cli("generate --kind chirp --out " + (dir / "chirp.csv").string()).exit_code == 0);

    const auto ten = run_cli("tendency --in " + (dir / "chirp.csv").string() +
                             " --criterion stc --out " + (dir / "stc").string());
    CHECK(ten.exit_code == 0);
    CHECK(ten.output.find("j*=2") != std::string::npos);

    const auto result = nlohmann::json::parse(read_file(dir / "stc" / "result.json"));
    CHECK(result["j_star"] == 2);
    CHECK(result["criterion"] == "stc");
    CHECK(result["fallback_used"] == false);

    const auto maxep = run_cli("tendency --in " + (dir / "chirp.csv").string() +
                               " --criterion maxep --out " + (dir / "maxep").string());
    CHECK(maxep.exit_code == 0);
    CHECK(maxep.output.find("j*=1") != std::string::npos);
}

TEST_CASE("cli: tendency of a constant series is the identity split") {
    const auto dir = temp_dir("constant");
    std::ofstream(dir / "c.csv") << "5.0\n5.0\n5.0\n5.0\n";
    const auto res = run_cli("tendency --in " + (dir / "c.csv").string() +
                             " --no-header --criterion stc --out " + (dir / "out").string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("j*=0") != std::string::npos);
    const std::string split = read_file(dir / "out" / "split.csv");
    CHECK(split.find("5,5,0") != std::string::npos); // input,tendency,residual
}

TEST_CASE("cli: usage errors exit 1 and name the flag") {
    const auto dir = temp_dir("usage");
    std::ofstream(dir / "c.csv") << "1\n2\n1\n";
    const auto res = run_cli("hp --in " + (dir / "c.csv").string() + " --no-header --lambda -1" +
                             " --out " + (dir / "out").string());
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("--lambda") != std::string::npos);
    CHECK(!fs::exists(dir / "out"));

    CHECK(run_cli("tendency --criterion bogus --in x --out y").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code != 0);
}

TEST_CASE("cli: missing input file exits 2") {
    const auto res = run_cli("decompose --in /nonexistent.csv --out /tmp/tendex_cli_never");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("FileNotFound") != std::string::npos);
    CHECK(!fs::exists("/tmp/tendex_cli_never"));
}

TEST_CASE("cli: unparsable data exits 2 with the line number") {
    const auto dir = temp_dir("baddata");
    std::ofstream(dir / "c.csv") << "v\n1.0\nabc\n";
    const auto res = run_cli("decompose --in " + (dir / "c.csv").string() + " --column v --out " +
                             (dir / "out").string());
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("line 3") != std::string::npos);
}

TEST_CASE("cli: hp and spectrum round trip through --residual-of") {
    const auto dir = temp_dir("spectrum");
    REQUIRE(run_cli("generate --kind sde --seed 4 --out " + (dir / "sde.csv").string())
                .exit_code == 0);
    REQUIRE(run_cli("hp --in " + (dir / "sde.csv").string() + " --lambda 1600 --out " +
                    (dir / "hp").string())
                .exit_code == 0);
    CHECK(fs::exists(dir / "hp" / "split.csv"));

    const auto res = run_cli("spectrum --in " + (dir / "sde.csv").string() + " --residual-of " +
                             (dir / "hp").string() + " --max-bin 50 --out " +
                             (dir / "spec").string());
    CHECK(res.exit_code == 0);
    const std::string spec = read_file(dir / "spec" / "spectrum_residual.csv");
    // header + 50 bins
    CHECK(std::count(spec.begin(), spec.end(), '\n') == 51);
}

TEST_CASE("cli: decompose honors --boundary periodic") {
    const auto dir = temp_dir("periodic");
    std::ofstream(dir / "c.csv") << "0\n2\n0\n3\n1\n";
    const auto res = run_cli("decompose --in " + (dir / "c.csv").string() +
                             " --no-header --boundary periodic --out " + (dir / "out").string());
    CHECK(res.exit_code == 0);
    const auto manifest = nlohmann::json::parse(read_file(dir / "out" / "manifest.json"));
    CHECK(manifest["config"]["boundary"] == "periodic");
}

TEST_CASE("cli: report runs are byte-identical") {
    const auto dir = temp_dir("repro");
    REQUIRE(run_cli("generate --kind multiscale --seed 11 --out " + (dir / "ms.csv").string())
                .exit_code == 0);
    REQUIRE(run_cli("report --in " + (dir / "ms.csv").string() + " --out " +
                    (dir / "rep1").string())
                .exit_code == 0);
    REQUIRE(run_cli("report --in " + (dir / "ms.csv").string() + " --out " +
                    (dir / "rep2").string())
                .exit_code == 0);
    CHECK(trees_identical(dir / "rep1", dir / "rep2"));
}

TEST_CASE("cli: TENDEX_SEED provides the generate default") {
    const auto dir = temp_dir("envseed");
    const std::string base = "generate --kind multiscale --out ";
    RunResult res;
    {
        const std::string cmd = "TENDEX_SEED=21 " + kCli + " " + base +
                                (dir / "a.csv").string() + " >/dev/null 2>&1";
        REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    }
    REQUIRE(run_cli(base + (dir / "b.csv").string() + " --seed 21").exit_code == 0);
    CHECK(read_file(dir / "a.csv") == read_file(dir / "b.csv"));
}
