#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout.
// Tokens are double-quoted so apostrophes in algebra names survive the shell.
RunResult run(const std::string& args) {
    std::string cmd = std::string(MAGSQ_CLI_PATH);
    std::istringstream ss(args);
    std::string tok;
    while (ss >> tok) cmd += " \"" + tok + "\"";
    cmd += " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    int status = pclose(f);
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = out;
    return r;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

// Returns the tokenized row whose first token is `label`.
std::vector<std::string> table_row(const std::string& text, const std::string& label) {
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        auto toks = tokenize(line);
        if (!toks.empty() && toks[0] == label) return toks;
    }
    return {};
}

}  // namespace

TEST_CASE("tables O prints the corrected octonion row for j") {
    auto r = run("tables O");
    REQUIRE(r.code == 0);
    auto row = table_row(r.out, "j");
    REQUIRE(row.size() == 9);
    // header order: 1 i j k kl jl il l; row label is token 0
    CHECK(row[7] == "kl");  // j * il = kl
    CHECK(row[6] == "-l");  // j * jl = -l
    CHECK(row[2] == "-k");  // j * i  = -k
}

TEST_CASE("tables O' prints the split diagonal") {
    auto r = run("tables O'");
    REQUIRE(r.code == 0);
    auto row = table_row(r.out, "L");
    REQUIRE(row.size() == 9);
    CHECK(row[8] == "1");    // L * L = 1
    CHECK(row[1] == "L");    // L * 1 = L
    auto kl_row = table_row(r.out, "KL");
    REQUIRE(kl_row.size() == 9);
    CHECK(kl_row[6] == "-I");  // KL * JL = -I
}

TEST_CASE("tables accepts the s-prefix spelling") {
    auto plain = run("tables O'");
    auto prefixed = run("tables sO");
    CHECK(prefixed.code == 0);
    CHECK(prefixed.out == plain.out);
}

TEST_CASE("tables rejects non-parent tokens") {
    CHECK(run("tables X").code == 2);
    CHECK(run("tables C").code == 2);  // a subalgebra, not a parent
    CHECK(run("tables").code == 2);
}

TEST_CASE("rotate emits a quarter turn in structured form") {
    auto r = run("rotate R' C 1 2 1.5707963267948966 --format structured");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["pair"] == "(R',C)");
    CHECK(doc["n"] == 3);
    CHECK(doc["method"] == "exponential");
    REQUIRE(doc["metric"].size() == 3);
    CHECK(doc["metric"][0] == 1);
    auto m = doc["matrix"];
    REQUIRE(m.size() == 3);
    CHECK(std::abs(double(m[0][0])) < 1e-12);
    CHECK(std::abs(double(m[0][1]) + 1.0) < 1e-12);
    CHECK(std::abs(double(m[1][0]) - 1.0) < 1e-12);
    CHECK(std::abs(double(m[2][2]) - 1.0) < 1e-15);
    CHECK(double(doc["residual"]) < 1e-12);
}

TEST_CASE("rotate reports nested flips for same-factor imaginary planes") {
    auto r = run("rotate O' O 2 3 1.0 --format structured");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["method"] == "nested-flip");
    CHECK(doc["n"] == 16);
}

TEST_CASE("rotate usage errors") {
    CHECK(run("rotate R' C 1 1 0.5").code == 2);   // p = q
    CHECK(run("rotate R' C 0 2 0.5").code == 2);   // 1-based
    CHECK(run("rotate R' C 1 4 0.5").code == 2);   // out of range
    CHECK(run("rotate C R 1 2 0.5").code == 2);    // first must be split
    CHECK(run("rotate R' C 1 2").code == 2);       // missing theta
}

TEST_CASE("boost rapidity is capped in the CLI") {
    // coordinates 1 and 13 of (O',O) have opposite metric signs
    CHECK(run("rotate O' O 1 13 60").code == 2);
    CHECK(run("rotate O' O 1 13 49.5").code == 0);
    // rotations have no cap
    CHECK(run("rotate R' C 1 2 60").code == 0);
}

TEST_CASE("structured output is byte-identical across runs") {
    std::string cmd = "rotate O' O 3 14 0.8 --format structured";
    auto a = run(cmd);
    auto b = run(cmd);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("-0,") == std::string::npos);  // negative zero folded
}

TEST_CASE("verify runs the suites and reports pass") {
    auto r = run("verify R' C clifford");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);

    CHECK(run("verify R' R algebra").code == 0);
    CHECK(run("verify C' H spin --seed 5").code == 0);
}

TEST_CASE("verify usage errors") {
    CHECK(run("verify O O all").code == 2);        // first token not split
    CHECK(run("verify O' O nonsense").code == 2);  // unknown suite
    CHECK(run("verify Q' O all").code == 2);       // unknown algebra
}

TEST_CASE("compose multiplies generators from a file") {
    const char* path = "/tmp/magsq_compose_quarters.txt";
    {
        std::ofstream f(path);
        f << "1 2 0.7853981633974483\n";
        f << "1 2 0.7853981633974483\n";
    }
    auto r = run(std::string("compose R' C ") + path + " --format structured");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["method"] == "composite");
    auto m = doc["matrix"];
    CHECK(std::abs(double(m[0][1]) + 1.0) < 1e-12);  // two eighth-turns
    CHECK(std::abs(double(m[1][0]) - 1.0) < 1e-12);

    const char* empty_path = "/tmp/magsq_compose_empty.txt";
    { std::ofstream f(empty_path); }
    auto e = run(std::string("compose R' C ") + empty_path + " --format structured");
    REQUIRE(e.code == 0);
    json idoc = json::parse(e.out);
    CHECK(double(idoc["matrix"][0][0]) == 1.0);
    CHECK(double(idoc["matrix"][0][1]) == 0.0);

    CHECK(run("compose R' C /tmp/magsq_no_such_file.txt").code == 2);

    const char* bad_path = "/tmp/magsq_compose_bad.txt";
    {
        std::ofstream f(bad_path);
        f << "1 2\n";
    }
    CHECK(run(std::string("compose R' C ") + bad_path).code == 2);
}

TEST_CASE("square reports the full table") {
    auto r = run("square");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("so(12,4)") != std::string::npos);
    CHECK(r.out.find("120") != std::string::npos);
    CHECK(r.out.find("so(9,1)") != std::string::npos);
    CHECK(r.out.find("so(2)") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    // all sixteen pairs present
    CHECK(r.out.find("(R',R)") != std::string::npos);
    CHECK(r.out.find("(O',O)") != std::string::npos);
    CHECK(r.out.find("(H',C)") != std::string::npos);
}

TEST_CASE("top-level usage") {
    CHECK(run("--help").code == 0);
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
}
