#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "combip/ilp.hpp"
#include "combip/lp_format.hpp"
#include "test_util.hpp"

using namespace combip;

TEST_CASE("variable bookkeeping") {
    IlpModel m;
    CHECK(m.add_binary_var("x_a") == 0);
    CHECK(m.add_binary_var("x_b") == 1);
    CHECK_THROWS_AS(m.add_binary_var("x_a"), std::invalid_argument);
    CHECK_THROWS_AS(m.add_binary_var("1bad"), std::invalid_argument);
    CHECK_THROWS_AS(m.add_binary_var("has space"), std::invalid_argument);
    CHECK(m.var_index("x_b") == 1);
    CHECK(m.var_index("nope") == -1);

    IlpModel big;
    for (int i = 0; i < 1024; ++i)
        CHECK(big.add_binary_var("x" + std::to_string(i)) == i);
    CHECK(big.var_count() == 1024);
}

TEST_CASE("constraint canonicalization and dedup") {
    IlpModel m;
    m.add_binary_var("a");
    m.add_binary_var("b");
    CHECK(m.add_constraint({{1, 1}, {0, 1}}, Cmp::LE, 1));
    CHECK_FALSE(m.add_constraint({{0, 1}, {1, 1}}, Cmp::LE, 1));  // same after sorting
    CHECK(m.constraints().size() == 1);
    CHECK(m.add_constraint({{0, 1}, {1, 1}}, Cmp::LE, 2));  // different rhs
    // Merges to a+b <= 1, which duplicates the first row.
    CHECK_FALSE(m.add_constraint({{0, 2}, {0, -1}, {1, 1}}, Cmp::LE, 1));
    CHECK(m.constraints().size() == 2);
    CHECK_THROWS_AS(m.add_constraint({}, Cmp::LE, 0), std::invalid_argument);
    CHECK_THROWS_AS(m.add_constraint({{0, 1}, {0, -1}}, Cmp::LE, 0), std::invalid_argument);
    CHECK_THROWS_AS(m.add_constraint({{7, 1}}, Cmp::LE, 0), std::invalid_argument);
}

TEST_CASE("check_assignment exact arithmetic") {
    const IlpModel m = testutil::sperner_model(2);
    // vars: x_empty, x_1, x_2, x_1_2
    Assignment zeros{std::vector<std::uint8_t>(4, 0)};
    auto r = check_assignment(m, zeros);
    CHECK(r.feasible);
    CHECK(r.objective == 0);

    Assignment layer{{0, 1, 1, 0}};
    r = check_assignment(m, layer);
    CHECK(r.feasible);
    CHECK(r.objective == 2);

    Assignment bad{{1, 1, 0, 0}};
    r = check_assignment(m, bad);
    CHECK_FALSE(r.feasible);
    CHECK(r.violated.size() == 1);

    Assignment wrong_len{{0, 1}};
    CHECK_THROWS_AS(check_assignment(m, wrong_len), std::invalid_argument);
}

TEST_CASE("export golden fixture") {
    IlpModel m(Sense::Maximize);
    m.add_binary_var("x");
    m.set_objective_coeff(0, 1);
    m.add_constraint({{0, 1}}, Cmp::LE, 1);
    const std::string expected =
        "Maximize\n"
        " obj: x\n"
        "Subject To\n"
        " c0: x <= 1\n"
        "Binary\n"
        " x\n"
        "End\n";
    CHECK(export_lp(m) == expected);
    CHECK(parse_lp(expected).equals(m));
}

TEST_CASE("export handles coefficients and senses") {
    IlpModel m(Sense::Minimize);
    m.add_binary_var("a");
    m.add_binary_var("b");
    m.set_objective_coeff(0, 2);
    m.set_objective_coeff(1, -3);
    m.add_constraint({{0, 1}, {1, -2}}, Cmp::GE, -1);
    m.add_constraint({{0, 1}, {1, 1}}, Cmp::EQ, 1);
    const std::string text = export_lp(m);
    CHECK(text.find("Minimize") == 0);
    CHECK(text.find("2 a - 3 b") != std::string::npos);
    CHECK(text.find("a - 2 b >= -1") != std::string::npos);
    CHECK(text.find("a + b = 1") != std::string::npos);
    CHECK(parse_lp(text).equals(m));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_lp("Maximize\n obj: x\nBounds\n x <= 1\nEnd\n"), LpParseError);
    CHECK_THROWS_AS(parse_lp("Maximize\n obj: x\nSubject To\n c: x <= 1\nGeneral\n x\nEnd\n"),
                    LpParseError);
    CHECK_THROWS_AS(parse_lp("Optimize\n obj: x\nSubject To\nBinary\n x\nEnd\n"), LpParseError);
    CHECK_THROWS_AS(parse_lp("Maximize\n obj: x\nSubject To\n c: x <= 1\nBinary\nEnd\n"),
                    LpParseError);  // x never declared binary
    CHECK_THROWS_AS(parse_lp("Maximize\n obj: 2.5 x\nSubject To\nBinary\n x\nEnd\n"),
                    LpParseError);
    CHECK_THROWS_AS(parse_lp(""), LpParseError);
    // Error carries the position.
    try {
        parse_lp("Maximize\n obj: x\nSubject To\n c: x ? 1\nBinary\n x\nEnd\n");
        CHECK(false);
    } catch (const LpParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("parse accepts comments and loose whitespace") {
    const std::string a =
        "Maximize\n obj: x + 2 y\nSubject To\n c0: x + y <= 1\nBinary\n x\n y\nEnd\n";
    const std::string b =
        "\\ a comment line\nMAXIMIZE\n\n obj:   x  +  2   y\n\\ another\n"
        "subject to\n  c0:  x  +  y  <=  1\n\nBIN\n x\n y\n end\n";
    CHECK(parse_lp(a).equals(parse_lp(b)));
}

TEST_CASE("round trip on random models") {
    std::mt19937 rng(424242);
    for (int round = 0; round < 100; ++round) {
        const IlpModel m = testutil::random_model(rng, 10, 12);
        const IlpModel back = parse_lp(export_lp(m));
        CHECK(back.equals(m));
    }
}

TEST_CASE("assignment json round trip") {
    const IlpModel m = testutil::sperner_model(2);
    IpOutcome out;
    out.status = SolveStatus::Optimal;
    out.objective = 2;
    out.best = Assignment{{0, 1, 1, 0}};
    const std::string j = assignment_to_json(m, out);
    const Assignment back = assignment_from_json(m, j);
    CHECK(back.values == out.best->values);
    CHECK_THROWS_AS(assignment_from_json(m, R"({"values": {"zzz": 1}})"), std::invalid_argument);
}
