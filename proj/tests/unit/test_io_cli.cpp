#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "stirling_kit/checks.hpp"
#include "stirling_kit/cli.hpp"
#include "stirling_kit/io.hpp"
#include "stirling_kit/sequences.hpp"
#include "support.hpp"

using namespace stirling_kit;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "stirling-kit");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("stirling_kit_test_" + name);
    std::ofstream(path) << text;
    return path;
}

SequenceValues random_values(std::mt19937_64& rng, int domain, std::size_t length) {
    switch (domain) {
        case 0: {
            std::vector<Integer> v = test_support::random_ints(rng, length, 1'000'000);
            v.push_back(Integer("123456789012345678901234567890"));
            return v;
        }
        case 1: return test_support::random_rationals(rng, length, 1000);
        case 2: {
            std::vector<QuadraticSurd> v;
            for (std::size_t i = 0; i < length; ++i) {
                v.emplace_back(5, test_support::random_rational(rng, 100), test_support::random_rational(rng, 100));
            }
            return v;
        }
        default: {
            std::vector<RationalPolynomial> v;
            for (std::size_t i = 0; i < length; ++i) v.push_back(RationalPolynomial(test_support::random_rationals(rng, i % 4, 50)));
            return v;
        }
    }
}

}  // namespace

TEST_CASE("sequence files round trip") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const SequenceRecord record{"random", random_values(rng, t % 4, 1 + static_cast<std::size_t>(t % 9)), {{"seed", std::to_string(t)}}};
        const auto text = render_sequence_file(record);
        const auto parsed = parse_sequence_file(text);
        REQUIRE(parsed.name == record.name);
        REQUIRE(parsed.values == record.values);
        REQUIRE(parsed.meta == record.meta);
        REQUIRE(render_sequence_file(parsed) == text);
    }
}

TEST_CASE("sequence file errors") {
    CHECK_THROWS_AS(parse_sequence_file("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence_file(R"({"name":"x","domain":"int"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence_file(R"({"name":"x","domain":"real","values":["1"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence_file(R"({"name":"x","domain":"int","values":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sequence_file(R"({"name":"x","domain":"int","values":["1/2"]})"), std::invalid_argument);
    CHECK_THROWS_AS(load_sequence_file("/nonexistent/stirling.json"), std::runtime_error);
    const auto ok = parse_sequence_file(R"({"name":"x","domain":"rational","values":["1/2","-3"]})");
    CHECK(ok.domain() == DomainTag::rational);
    CHECK(ok.meta.empty());
    CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
}

TEST_CASE("renderings") {
    const auto record = generate("catalan", 4);
    CHECK(render_sequence(record, OutputFormat::csv) == "1,1,2,5\n");
    CHECK(render_sequence(record, OutputFormat::table) == "0\t1\n1\t1\n2\t2\n3\t5\n");
    const auto text = matrix_text(build_from_final(catalan(5), 1, 2), "catalan");
    CHECK(render_matrix(text, OutputFormat::csv) == "1,1,1\n1,2,3\n");
}

TEST_CASE("transform command") {
    auto r = run({"transform", "--seq", "ones", "--len", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,1,2,5,15\n");
    r = run({"transform", "--inverse", "--seq", "catalan", "--len", "8", "--format", "csv"});
    CHECK(r.out == "1,1,1,1,0,1,-5,29\n");
    r = run({"transform", "--seq", "ones", "--len", "5"});
    CHECK(parse_sequence_file(r.out).values == SequenceValues(test_support::ints({1, 1, 2, 5, 15})));

    const auto bad = temp_file("mismatch.json", R"({"name":"x","domain":"int","values":["1","1/2"]})");
    r = run({"transform", "--file", bad.string()});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    const auto good = temp_file("bell.json", R"({"name":"bell","domain":"int","values":["1","1","2","5","15"]})");
    r = run({"transform", "--inverse", "--file", good.string(), "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,1,1,1,1\n");
    std::filesystem::remove(bad);
    std::filesystem::remove(good);

    CHECK(run({"transform", "--seq", "ones"}).code == 2);
    CHECK(run({"transform", "--seq", "ones", "--len", "0"}).code == 2);
    CHECK(run({"transform"}).code == 2);
}

TEST_CASE("matrix command") {
    auto r = run({"matrix", "--rows", "0", "--cols", "3", "--from", "initial", "--seq", "ones", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,1,1,1\n");
    r = run({"matrix", "--from", "final", "--seq", "catalan", "--rows", "3", "--cols", "3", "--format", "csv"});
    CHECK(r.out == "1,1,1,1\n1,2,3,3\n2,5,9,10\n5,14,28,34\n");
    r = run({"matrix", "--from", "initial", "--seq", "ones", "--len", "3", "--rows", "3", "--cols", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("needs 7 terms") != std::string::npos);
    CHECK(run({"matrix", "--from", "sideways", "--seq", "ones", "--rows", "1", "--cols", "1"}).code == 2);
    CHECK(run({"matrix", "--from", "initial", "--seq", "ones", "--rows", "-1", "--cols", "1"}).code == 2);
}

TEST_CASE("matrix fixtures are reproduced") {
    for (const auto& name : matrix_fixture_names()) {
        std::ifstream in(default_fixture_dir() + "/" + name);
        REQUIRE(in);
        std::stringstream buffer;
        buffer << in.rdbuf();
        CHECK(regenerate_matrix_fixture(name) == buffer.str());
    }
    CHECK_THROWS_AS(regenerate_matrix_fixture("nosuch.json"), std::invalid_argument);
}

TEST_CASE("seq, egf and hankel commands") {
    CHECK(run({"seq", "--seq", "motzkin", "--len", "7"}).out == "1,1,2,4,9,21,51\n");
    auto r = run({"seq", "--seq", "nosuch", "--len", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("motzkin") != std::string::npos);
    CHECK(run({"seq", "--seq", "bernoulli_polynomials", "--len", "3"}).out == "[1],[-1/2,1],[1/6,-1,1]\n");
    CHECK(run({"hankel", "--seq", "catalan", "--n", "4"}).out == "1,1,1,1,1\n");
    CHECK(run({"egf", "--op", "1f1", "--p", "1/2", "--q", "2", "--scale", "4", "--order", "5"}).out == "1,1,2,5,14,42\n");
    CHECK(run({"egf", "--op", "compose", "--seq", "ones", "--order", "5"}).out == "1,1,2,5,15,52\n");
    CHECK(run({"egf", "--op", "theorem4", "--seq", "catalan", "--order", "7"}).out == "1,1,1,1,0,1,-5,29\n");
    CHECK(run({"egf", "--op", "theorem3", "--seq", "ones", "--r", "1", "--order", "4"}).out == "1,2,5,15,52\n");
    CHECK(run({"egf", "--op", "1f1", "--p", "1", "--q", "-2", "--order", "5"}).code == 2);
    CHECK(run({"egf", "--op", "nosuch"}).code == 2);
}

TEST_CASE("check command") {
    auto r = run({"check", "--suite", "ega", "--max-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("overall: PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run({"check", "--suite", "nosuch"}).code == 2);
    CHECK(run({"check", "--suite", "ega", "--format", "yaml"}).code == 2);

    const auto first = run({"check", "--suite", "all", "--max-n", "6"});
    const auto second = run({"check", "--suite", "all", "--max-n", "6"});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    const auto json = run({"check", "--suite", "hankel", "--max-n", "6", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"passed\": true") != std::string::npos);

    const auto empty_dir = std::filesystem::temp_directory_path() / "stirling_kit_no_fixtures";
    std::filesystem::create_directories(empty_dir);
    r = run({"check", "--suite", "matrices", "--fixtures", empty_dir.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("report helpers") {
    CHECK(suite_names().size() == 7);
    const auto reports = run_checks("rstirling", CheckOptions{});
    REQUIRE(reports.size() == 1);
    CHECK(all_passed(reports));
    CHECK_THROWS_AS(run_suite("nosuch", CheckOptions{}), std::invalid_argument);
}
