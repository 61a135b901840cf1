#include <doctest.h>

#include <cstdio>
#include <sys/wait.h>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

const std::string kBin = LOCEX_BIN;
const std::string kData = LOCEX_DATA_DIR;

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

std::string temp_path(const std::string& name) {
    return std::string("/tmp/locex_cli_") + name;
}

RunResult run(const std::string& args) {
    const std::string out = temp_path("stdout.txt");
    const std::string cmd = kBin + " " + args + " > " + out + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    std::ifstream f(out, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    return {WEXITSTATUS(rc), buf.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void write_b6(const std::string& path) {
    std::ofstream f(path);
    f << "1 2\n1 3\n2 3\n3 4\n4 5\n4 6\n5 6\n";
}

}  // namespace

TEST_CASE("extract on B6 reports a triangle with W=5") {
    const std::string b6 = temp_path("b6.tsv");
    write_b6(b6);
    RunResult r = run("extract --input " + b6 +
                      " --objective w --trials 500 --seed 42");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.stdout_text);
    const auto& top = doc["result"][0]["communities"][0];
    CHECK(top["objective"].get<double>() == doctest::Approx(5.0));
    const auto labels = top["labels"].get<std::vector<std::string>>();
    CHECK((labels == std::vector<std::string>{"1", "2", "3"} ||
           labels == std::vector<std::string>{"4", "5", "6"}));
}

TEST_CASE("usage errors exit with code 2") {
    const std::string b6 = temp_path("b6.tsv");
    write_b6(b6);
    CHECK(run("extract --input " + b6 + " --objective wrho").exit_code == 2);
    CHECK(run("extract").exit_code == 2);
    CHECK(run("sweep --input " + b6 + " --rho-min 0.9 --rho-max 0.2").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("runtime errors exit with code 1") {
    CHECK(run("extract --input /nonexistent.tsv --objective w").exit_code == 1);
    CHECK(run("generate gnm --n 6 --m 99").exit_code == 1);
}

TEST_CASE("oracle subcommand") {
    const std::string b6 = temp_path("b6.tsv");
    write_b6(b6);
    SUBCASE("W optimum with both ties") {
        RunResult r = run("oracle --input " + b6 + " --objective w");
        REQUIRE(r.exit_code == 0);
        auto doc = nlohmann::json::parse(r.stdout_text);
        CHECK(doc["result"]["best_value"].get<double>() == doctest::Approx(5.0));
        CHECK(doc["result"]["ties"].size() == 2);
    }
    SUBCASE("Q optimum") {
        RunResult r = run("oracle --input " + b6 + " --objective q");
        REQUIRE(r.exit_code == 0);
        auto doc = nlohmann::json::parse(r.stdout_text);
        CHECK(doc["result"]["best_value"].get<double>() ==
              doctest::Approx(5.0 / 28.0));
    }
    SUBCASE("size cap error") {
        const std::string big = temp_path("big.tsv");
        {
            std::ofstream f(big);
            for (int i = 0; i < 30; ++i) f << i << " " << (i + 1) << "\n";
        }
        CHECK(run("oracle --input " + big + " --objective w").exit_code == 1);
    }
}

TEST_CASE("generate ring writes the expected edge count") {
    const std::string out = temp_path("ring.tsv");
    RunResult r = run("generate ring --m 10 --cliques 100 --output " + out);
    REQUIRE(r.exit_code == 0);
    std::ifstream f(out);
    int lines = 0;
    std::string line;
    while (std::getline(f, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 4600);
}

TEST_CASE("generate planted writes graph plus labels deterministically") {
    const std::string g1 = temp_path("p1.tsv"), l1 = temp_path("p1.labels");
    const std::string g2 = temp_path("p2.tsv"), l2 = temp_path("p2.labels");
    const std::string flags =
        "generate planted --n 200 --n1 30 --n2 40 --pin 0.3 --pout 0.05 --seed 7";
    REQUIRE(run(flags + " --output " + g1 + " --labels " + l1).exit_code == 0);
    REQUIRE(run(flags + " --output " + g2 + " --labels " + l2).exit_code == 0);
    CHECK(read_file(g1) == read_file(g2));
    CHECK(read_file(l1) == read_file(l2));
    CHECK_FALSE(read_file(l1).empty());
}

TEST_CASE("end-to-end determinism: byte-identical reports") {
    const std::string b6 = temp_path("b6.tsv");
    write_b6(b6);
    const std::string o1 = temp_path("rep1.json"), o2 = temp_path("rep2.json");
    const std::string flags = "extract --input " + b6 +
                              " --objective w --trials 200 --seed 11 --null gnm"
                              " --nulls 10 --output ";
    REQUIRE(run(flags + o1).exit_code == 0);
    REQUIRE(run(flags + o2).exit_code == 0);
    const std::string a = read_file(o1);
    CHECK_FALSE(a.empty());
    CHECK(a == read_file(o2));
}

TEST_CASE("sweep emits a TSV membership matrix") {
    const std::string b6 = temp_path("b6.tsv");
    write_b6(b6);
    const std::string tsv = temp_path("sweep.tsv");
    RunResult r = run("sweep --input " + b6 +
                      " --rho-min 0.6 --rho-max 1.0 --rho-steps 3"
                      " --communities 2 --trials 100 --seed 1 --tsv " + tsv);
    REQUIRE(r.exit_code == 0);
    std::ifstream f(tsv);
    std::string header;
    std::getline(f, header);
    CHECK(header.substr(0, 4) == "node");
    int rows = 0;
    std::string line;
    while (std::getline(f, line)) ++rows;
    CHECK(rows == 6);
}

TEST_CASE("bundled karate network loads") {
    RunResult r = run("extract --input " + kData +
                      "/karate.tsv --objective q --trials 50 --seed 0");
    REQUIRE(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.stdout_text);
    CHECK(doc["graph"]["nodes"].get<int>() == 34);
    CHECK(doc["graph"]["edges"].get<int>() == 78);
}
