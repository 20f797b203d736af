// Drives the installed CLI binary end to end: exit codes, JSON determinism,
// and the on-disk cache.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "krqt/json_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const auto tmp = std::filesystem::temp_directory_path() / "krqt-cli-out.txt";
    const std::string cmd = env + " " + std::string(KRQT_CLI_PATH) + " " + args + " > " +
                            tmp.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

}  // namespace

TEST_CASE("char prints the expected term counts") {
    const auto sl4 = run("char --rank 3 --i 3 --k 1 --j 0 --format json --no-cache");
    CHECK(sl4.exit_code == 0);
    const auto j = krqt::Json::parse(sl4.out);
    CHECK(j["terms"].size() == 4);

    const auto rank1 = run("char --rank 1 --i 1 --k 2 --j 0 --format json --no-cache");
    CHECK(krqt::Json::parse(rank1.out)["terms"].size() == 3);

    const auto unit = run("char --rank 1 --i 1 --k 0 --j 0 --format pretty --no-cache");
    CHECK(unit.exit_code == 0);
    CHECK(unit.out.find("= 1") != std::string::npos);
}

TEST_CASE("char rejects bad labels with exit code 2") {
    CHECK(run("char --rank 2 --i 3 --k 1 --j 0").exit_code == 2);
    CHECK(run("char --rank 2 --i 1 --k 1 --j 1").exit_code == 2);
    CHECK(run("char --rank 2 --i 1 --k 1").exit_code == 2);  // missing flag
    CHECK(run("bogus").exit_code == 2);
}

TEST_CASE("identical char invocations are byte-identical") {
    const std::string args = "char --rank 2 --i 2 --k 2 --j -1 --format json --no-cache";
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cache round trip through KRQT_CACHE_DIR") {
    const auto root = std::filesystem::temp_directory_path() / "krqt-cli-cache";
    std::filesystem::remove_all(root);
    const std::string env = "KRQT_CACHE_DIR=" + root.string();

    const std::string args = "char --rank 2 --i 1 --k 2 --j 0 --format json";
    const auto fresh = run(args + " --no-cache", env);
    const auto miss = run(args, env);   // populates the cache
    const auto hit = run(args, env);    // serves from it
    CHECK(fresh.exit_code == 0);
    CHECK(miss.out == fresh.out);
    CHECK(hit.out == fresh.out);
    CHECK(std::filesystem::exists(root));

    // A cached character equals a fresh computation, hash-compared.
    const auto jf = krqt::Json::parse(fresh.out);
    const auto jh = krqt::Json::parse(hit.out);
    CHECK(krqt::content_hash(jf) == krqt::content_hash(jh));
    std::filesystem::remove_all(root);
}

TEST_CASE("verify subcommands") {
    CHECK(run("verify counterexample --format json").exit_code == 0);
    CHECK(run("verify compat --rank 1 --kmax 6 --format json").exit_code == 0);
    CHECK(run("verify commute --rank 1 --kmax 2 --jobs 2 --format json").exit_code == 0);
    CHECK(run("verify tsystem --rank 1 --kmax 1 --jwindow 2 --format json").exit_code == 0);
    CHECK(run("verify nosuch").exit_code == 2);
    CHECK(run("verify compat --rank 1 --kmax 1").exit_code == 2);   // UsageWindow
    CHECK(run("verify compat --rank 9 --kmax 6").exit_code == 2);   // budget
}

TEST_CASE("verify reports are one JSON object per instance") {
    const auto r = run("verify tsystem --rank 1 --kmax 1 --jwindow 2 --format json");
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        const auto j = krqt::Json::parse(line);
        CHECK(j["check"] == "tsystem");
        CHECK(j["pass"] == true);
        ++count;
    }
    CHECK(count == 3);  // j in {-2, 0, 2}
}

TEST_CASE("tables command") {
    const auto j9 = run("tables --rank 1 --n 9 --format json");
    CHECK(j9.exit_code == 0);
    const auto j = krqt::Json::parse(j9.out);
    CHECK(j["closed_forms_match"] == true);
    CHECK(j["b"][0][1] == 1);
    CHECK(j["epsilon"][0][1] == -1);

    CHECK(run("tables --rank 2 --n 9").exit_code == 2);
    const auto csv = run("tables --rank 1 --n 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("B,(1;1),(1;2),(1;3)") != std::string::npos);
}
