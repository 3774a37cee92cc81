/*
   Copyright 2026 The z4codes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "z4codes/cli.hpp"

using namespace z4codes;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

/// Fresh scratch directory per test case, cleaned up on destruction.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("z4codes_cli_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    REQUIRE(is);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream os(path);
    REQUIRE(os);
    os << content;
}

QuaternaryCode parse_z4(const std::string& text) {
    std::istringstream is(text);
    return QuaternaryCode::read(is);
}

BinaryCode parse_f2(const std::string& text) {
    std::istringstream is(text);
    return BinaryCode::read(is);
}

}  // namespace

TEST_CASE("lift and genpoly print the pinned digit strings", "[cli]") {
    CHECK(run({"lift", "--h2", "1011"}).out == "3231\n");
    CHECK(run({"lift", "--h2", "101001"}).out == "323001\n");
    CHECK(run({"lift", "--h2", "1011"}).code == 0);

    CHECK(run({"genpoly", "--m", "3"}).out == "1213\n");
    CHECK(run({"genpoly", "--m", "5"}).out == "11120122010303133013212213\n");
    CHECK(run({"genpoly", "--m", "5", "--h2", "101001"}).out ==
          "11120122010303133013212213\n");
}

TEST_CASE("usage and input failures exit with 2 and a message", "[cli]") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"lift"}).code == 2);
    CHECK(run({"build"}).code == 2);

    const CliResult bad_digits = run({"lift", "--h2", "10b1"});
    CHECK(bad_digits.code == 2);
    CHECK(bad_digits.err.find("invalid binary digit") != std::string::npos);

    const CliResult reducible = run({"lift", "--h2", "1001"});
    CHECK(reducible.code == 2);
    CHECK(reducible.err.find("not primitive") != std::string::npos);

    const CliResult mismatch = run({"genpoly", "--m", "4", "--h2", "1011"});
    CHECK(mismatch.code == 2);
    CHECK(mismatch.err.find("h2 degree must equal m") != std::string::npos);

    const CliResult missing = run({"dual", "--in", "/nonexistent/code.z4"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open file") != std::string::npos);

    CHECK(run({"--help"}).code == 0);
    CHECK(run({"build", "--help"}).code == 0);
}

TEST_CASE("build commands round-trip through files", "[cli]") {
    const TempDir dir;

    REQUIRE(run({"build", "octacode", "--out", dir.file("oct.z4")}).code == 0);
    const QuaternaryCode oct = parse_z4(slurp(dir.file("oct.z4")));
    CHECK(equal_as_sets(oct, testutil::octacode()));

    // Same code through three other routes: the named degree-3 pair and the
    // raw cyclic builder fed the generator polynomial.
    REQUIRE(run({"build", "kerdock", "--m", "3", "--out", dir.file("k3.z4")})
                .code == 0);
    CHECK(slurp(dir.file("k3.z4")) == slurp(dir.file("oct.z4")));
    REQUIRE(run({"build", "cyclic", "--g", "1213", "--n", "7", "--extend",
                 "--out", dir.file("cyc.z4")})
                .code == 0);
    CHECK(slurp(dir.file("cyc.z4")) == slurp(dir.file("oct.z4")));
    REQUIRE(run({"build", "preparata", "--m", "3", "--out", dir.file("p3.z4")})
                .code == 0);
    CHECK(equal_as_sets(parse_z4(slurp(dir.file("p3.z4"))), oct));

    REQUIRE(run({"build", "kerdock", "--m", "5", "--out", dir.file("k5.z4")})
                .code == 0);
    const QuaternaryCode k5 = parse_z4(slurp(dir.file("k5.z4")));
    CHECK(equal_as_sets(k5, kerdock_quaternary(5)));

    const CliResult nr = run({"build", "nr"});
    REQUIRE(nr.code == 0);
    CHECK(equal_as_sets(parse_f2(nr.out), nordstrom_robinson()));

    const CliResult rm = run({"build", "rm", "--r", "1", "--m", "4"});
    REQUIRE(rm.code == 0);
    const BinaryCode rm14 = parse_f2(rm.out);
    CHECK(rm14.is_linear_form());
    CHECK(rm14.dimension() == 5);
    CHECK(rm14 == reed_muller(1, 4));

    CHECK(run({"build", "rm", "--r", "7", "--m", "4"}).code == 2);
    CHECK(run({"build", "cyclic", "--g", "11111111", "--n", "7"}).code == 2);
}

TEST_CASE("dual, gray, and span agree with the library", "[cli]") {
    const TempDir dir;
    REQUIRE(run({"build", "octacode", "--out", dir.file("oct.z4")}).code == 0);

    const CliResult dual = run({"dual", "--in", dir.file("oct.z4")});
    REQUIRE(dual.code == 0);
    CHECK(dual.out == slurp(dir.file("oct.z4")));

    const CliResult gray = run({"gray", "--in", dir.file("oct.z4")});
    REQUIRE(gray.code == 0);
    CHECK(equal_as_sets(parse_f2(gray.out), nordstrom_robinson()));

    REQUIRE(run({"build", "preparata", "--m", "5", "--out", dir.file("p5.z4")})
                .code == 0);
    const CliResult span = run({"span", "--in", dir.file("p5.z4")});
    REQUIRE(span.code == 0);
    CHECK(parse_f2(span.out) == gray_image_linear_span(preparata_quaternary(5)));

    // The cap applies to image enumeration.
    const CliResult capped =
        run({"gray", "--in", dir.file("p5.z4"), "--cap", "1000"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("cap exceeded") != std::string::npos);
}

TEST_CASE("weight enumerator commands and transforms", "[cli]") {
    const TempDir dir;
    REQUIRE(run({"build", "octacode", "--out", dir.file("oct.z4")}).code == 0);
    REQUIRE(run({"swe", "--in", dir.file("oct.z4"), "--out",
                 dir.file("swe.json")})
                .code == 0);

    const TrivariateWeightEnumerator parsed = TrivariateWeightEnumerator::from_json(
        nlohmann::json::parse(slurp(dir.file("swe.json"))));
    CHECK(parsed == swe(testutil::octacode(), std::uint64_t{1} << 10));

    // Self-dual: the transform fixes the enumerator.
    const CliResult mw = run({"macwilliams", "swe", "--in", dir.file("swe.json")});
    REQUIRE(mw.code == 0);
    CHECK(TrivariateWeightEnumerator::from_json(nlohmann::json::parse(mw.out)) ==
          parsed);

    // Hamming enumerator through both routes: quaternary census and binary
    // census of the image.
    const CliResult via_z4 = run({"hwe", "--in", dir.file("oct.z4")});
    REQUIRE(run({"gray", "--in", dir.file("oct.z4"), "--out",
                 dir.file("nr.f2")})
                .code == 0);
    const CliResult via_f2 = run({"hwe", "--in", dir.file("nr.f2")});
    REQUIRE(via_z4.code == 0);
    REQUIRE(via_f2.code == 0);
    CHECK(via_z4.out == via_f2.out);

    // The binary transform also fixes the self-dual pair's enumerator.
    spill(dir.file("hwe.json"), via_f2.out);
    const CliResult fixed =
        run({"macwilliams", "binary", "--in", dir.file("hwe.json")});
    REQUIRE(fixed.code == 0);
    CHECK(fixed.out == via_f2.out);

    spill(dir.file("garbage.json"), "{ not json ]");
    const CliResult bad =
        run({"macwilliams", "swe", "--in", dir.file("garbage.json")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("bad enumerator JSON") != std::string::npos);

    // A census no code can have: mass 3 on one coordinate with a lone
    // nonzero term; the inverse transform has no integer preimage.
    spill(dir.file("notcode.json"),
          R"({"n": 1, "terms": [{"n0": 0, "n1": 1, "n2": 0, "coeff": "2"}]})");
    const CliResult invalid =
        run({"macwilliams", "swe", "--in", dir.file("notcode.json")});
    CHECK(invalid.code == 2);
    CHECK(invalid.err.find("input is not a valid code enumerator") !=
          std::string::npos);
}

TEST_CASE("mindist is deterministic across worker counts", "[cli]") {
    const TempDir dir;
    REQUIRE(run({"build", "octacode", "--out", dir.file("oct.z4")}).code == 0);
    REQUIRE(run({"gray", "--in", dir.file("oct.z4"), "--out", dir.file("nr.f2")})
                .code == 0);

    const CliResult w1 = run({"mindist", "--in", dir.file("nr.f2")});
    const CliResult w5 =
        run({"mindist", "--in", dir.file("nr.f2"), "--workers", "5"});
    REQUIRE(w1.code == 0);
    CHECK(w1.out == "6\n");
    CHECK(w1.out == w5.out);

    CHECK(run({"mindist", "--in", dir.file("oct.z4")}).out == "6\n");
    CHECK(run({"mindist", "--in", dir.file("oct.z4"), "--wmax", "6"}).out ==
          "6\n");
    CHECK(run({"mindist", "--in", dir.file("oct.z4"), "--wmax", "5"}).out ==
          "none at weight <= 5\n");
    CHECK(run({"mindist", "--in", dir.file("oct.z4"), "--workers", "0"}).code ==
          2);
}

TEST_CASE("check subcommands map verdicts to exit codes", "[cli]") {
    const TempDir dir;
    REQUIRE(run({"build", "octacode", "--out", dir.file("oct.z4")}).code == 0);
    REQUIRE(run({"gray", "--in", dir.file("oct.z4"), "--out", dir.file("nr.f2")})
                .code == 0);

    const CliResult sd = run({"check", "self-dual", "--in", dir.file("oct.z4")});
    CHECK(sd.code == 0);
    CHECK(sd.out == "self-dual: true\n");

    // A cyclic code that is nowhere near self-dual.
    REQUIRE(run({"build", "cyclic", "--g", "11", "--n", "7", "--out",
                 dir.file("small.z4")})
                .code == 0);
    CHECK(run({"check", "self-dual", "--in", dir.file("small.z4")}).code == 1);

    const CliResult il =
        run({"check", "image-linear", "--in", dir.file("oct.z4")});
    CHECK(il.code == 1);
    CHECK(il.out == "image linear: false\n");
    CHECK(run({"check", "image-linear", "--in", dir.file("small.z4")}).code ==
          0);

    REQUIRE(run({"build", "rm", "--r", "1", "--m", "4", "--out",
                 dir.file("rm14.f2")})
                .code == 0);
    CHECK(run({"check", "swap", "--in", dir.file("rm14.f2")}).code == 0);
    const CliResult swap_explicit =
        run({"check", "swap", "--in", dir.file("nr.f2")});
    CHECK(swap_explicit.code == 2);
    CHECK(swap_explicit.err.find("linear code required") != std::string::npos);

    CHECK(run({"check", "distance-invariant", "--in", dir.file("nr.f2")}).code ==
          0);

    const CliResult family = run({"check", "family", "--m", "3"});
    CHECK(family.code == 0);
    CHECK(family.out.find("all checks passed") != std::string::npos);

    const CliResult family_json =
        run({"check", "family", "--m", "3", "--json"});
    REQUIRE(family_json.code == 0);
    const nlohmann::json j = nlohmann::json::parse(family_json.out);
    CHECK(j.at("family") == "kerdock-preparata");
    CHECK(j.at("fields").size() >= 10);

    CHECK(run({"check", "family", "--m", "4"}).code == 2);

    const CliResult trace = run({"check", "trace-crosscheck", "--m", "3"});
    CHECK(trace.code == 0);
    CHECK(trace.out == "trace crosscheck: true\n");
}
