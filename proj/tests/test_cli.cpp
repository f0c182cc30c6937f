#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

#ifndef FGDEG_CLI_PATH
#error "FGDEG_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FGDEG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("residues command") {
    auto r = run("residues --n 2 --modulus 24");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "modulus 24\n0\n1\n9\n16\n");

    r = run("residues --n 2 --modulus 24 --format csv");
    CHECK(r.out == "residue\n0\n1\n9\n16\n");

    r = run("residues --n 2 --modulus 48 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["modulus"] == "48");
    CHECK(j["residues"] == std::vector<int>({0, 1, 9, 16, 24, 25, 33, 40}));

    // unsound modulus
    CHECK(run("residues --n 2 --modulus 12").exit_code == 2);
    // guard violation
    CHECK(run("residues --n 2 --modulus 24 --scan-guard 4").exit_code == 2);
}

TEST_CASE("table command csv layout") {
    auto r = run("table --pmax 2 --nmax 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "p,n,e,f,status\n"
          "2,1,0,0,PROVEN_N_LE_5\n"
          "2,2,3,3,PROVEN_N_LE_5\n"
          "2,3,3,3,PROVEN_N_LE_5\n");
}

TEST_CASE("table command json round trip") {
    auto r = run("table --pmax 3 --nmax 6 --format json");
    CHECK(r.exit_code == 0);
    auto arr = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& row : arr) {
        CHECK(row.contains("p"));
        CHECK(row.contains("n"));
        CHECK(row.contains("e"));
        CHECK(row.contains("f"));
        CHECK(row.contains("status"));
        if (row["p"] == 3 && row["n"] == 6) {
            found = true;
            CHECK(row["e"] == 3);
            CHECK(row["f"] == 4);
            CHECK(row["status"] == "PROVEN_ODD_RANGE");
        }
    }
    CHECK(found);
    // rows sorted by (p, n)
    std::pair<int, int> prev{-1, -1};
    for (const auto& row : arr) {
        std::pair<int, int> cur{row["p"], row["n"]};
        CHECK(prev < cur);
        prev = cur;
    }
}

TEST_CASE("output is deterministic") {
    auto a = run("table --pmax 7 --nmax 10 --format json");
    auto b = run("table --pmax 7 --nmax 10 --format json");
    CHECK(a.out == b.out);
    auto c = run("residues --n 3 --format json --jobs 4");
    auto d = run("residues --n 3 --format json --jobs 1");
    CHECK(c.out == d.out);
}

TEST_CASE("check command") {
    auto r = run("check 9 5 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["k"] == "9");
    CHECK(j["n"] == 5);
    CHECK(j["member"] == true);
    CHECK(j["evidence"].is_array());
    CHECK(j["evidence"].size() == 4);  // primes 2, 3, 5, 7
    CHECK(j["ktheory"]["in_FG"] == true);

    r = run("check 16 4 --format json");
    CHECK(nlohmann::json::parse(r.out)["member"] == false);

    r = run("check 0 12 --format json");
    CHECK(nlohmann::json::parse(r.out)["member"] == true);

    // single-prime local check
    r = run("check 16 4 --p 2 --format json");
    auto jl = nlohmann::json::parse(r.out);
    CHECK(jl["member"] == false);
    CHECK(jl["evidence"][0]["p"] == 2);

    // rational input
    r = run("check 9/7 2 --format json");
    CHECK(r.exit_code == 0);

    // malformed and out-of-ring input
    CHECK(run("check 1/0 2").exit_code == 2);
    CHECK(run("check abc 2").exit_code == 2);
    CHECK(run("check 1/3 2").exit_code == 2);  // denominator hits prime 3
}

TEST_CASE("phi command") {
    auto r = run("phi 9 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "9x + 6x^2, integral, parity ok, in FG\n");

    r = run("phi 2 2");
    CHECK(r.out == "2x + 1/6 x^2, not integral, not in FG\n");

    r = run("phi 1 4 --format json");
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["in_FG"] == true);
    CHECK(j["phi"] == std::vector<std::string>({"1", "0", "0", "0"}));
}

TEST_CASE("verify command exit codes") {
    auto r = run("verify ktheory --format json");
    CHECK(r.exit_code == 0);
    auto arr = nlohmann::json::parse(r.out);
    CHECK(arr[0]["suite"] == "ktheory");
    CHECK(arr[0]["failures"].empty());
    CHECK(arr[0]["cases_run"].get<int>() > 100);

    CHECK(run("verify bogus").exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("check").exit_code == 2);
    CHECK(run("residues").exit_code == 2);
}

TEST_CASE("--out writes the data to a file") {
    std::string path = "/tmp/fgdeg_cli_test_out.csv";
    std::remove(path.c_str());
    auto r = run("table --pmax 2 --nmax 1 --format csv --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[256];
    std::string content;
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0)
        content.append(buf, got);
    fclose(f);
    CHECK(content == "p,n,e,f,status\n2,1,0,0,PROVEN_N_LE_5\n");
    std::remove(path.c_str());
}
