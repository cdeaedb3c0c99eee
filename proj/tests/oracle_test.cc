#include "qbs/oracle.h"

#include <gtest/gtest.h>

#include "brute_force.h"

using namespace qbs;

namespace {
std::vector<uint8_t> table_of(const OracleSpec& spec) { return spec.table().values; }
}  // namespace

TEST(build_truth_table, minterms) {
    std::vector<uint64_t> m{2};
    EXPECT_EQ(table_of(build_truth_table(m, 2)), (std::vector<uint8_t>{0, 0, 1, 0}));
    EXPECT_EQ(table_of(build_truth_table(std::vector<uint64_t>{}, 3)), std::vector<uint8_t>(8, 0));
}

TEST(build_truth_table, from_expression) {
    auto e = BoolExpr::conj({BoolExpr::variable(1), BoolExpr::variable(2)});
    EXPECT_EQ(table_of(build_truth_table(e, 2)), (std::vector<uint8_t>{0, 0, 0, 1}));
}

TEST(build_truth_table, errors) {
    EXPECT_THROW(build_truth_table(std::vector<uint64_t>{4}, 2), std::out_of_range);
    EXPECT_THROW(build_truth_table(std::vector<uint64_t>{}, 21), std::length_error);
    EXPECT_NO_THROW(build_truth_table(std::vector<uint64_t>{}, 21, 21));
    EXPECT_THROW(build_truth_table(BoolExpr::variable(3), 2), std::out_of_range);
}

TEST(eval_f, table_lookup) {
    auto spec = build_truth_table(std::vector<uint64_t>{2}, 2);
    EXPECT_EQ(eval_f(spec, BitString::from_integer(2, 2)), 1);
    EXPECT_EQ(eval_f(spec, BitString::from_integer(3, 2)), 0);
    EXPECT_THROW(eval_f(spec, BitString::from_integer(1, 3)), std::invalid_argument);
}

TEST(eval_f, compiled_and) {
    auto e = parse_expression("x1&x2", 2);
    OracleSpec spec(2, compile_reversible(e, 2));
    EXPECT_EQ(eval_f(spec, BitString::from_integer(3, 2)), 1);
    EXPECT_EQ(eval_f(spec, BitString::from_integer(1, 2)), 0);
}

TEST(oracle_spec, rejects_bad_tables) {
    EXPECT_THROW(OracleSpec(2, TruthTable{{0, 1, 0}}), std::invalid_argument);
    EXPECT_THROW(OracleSpec(1, TruthTable{{0, 2}}), std::invalid_argument);
}

TEST(classical_scan, examples) {
    auto r = classical_scan(OracleSpec(2, TruthTable{{0, 0, 1, 0}}));
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.found->to_integer(), 2u);
    EXPECT_EQ(r.calls, 3u);

    r = classical_scan(OracleSpec(2, TruthTable{{0, 0, 0, 0}}));
    EXPECT_FALSE(r.found);
    EXPECT_EQ(r.calls, 4u);

    r = classical_scan(OracleSpec(2, TruthTable{{1, 0, 1, 1}}));
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.found->to_integer(), 0u);
    EXPECT_EQ(r.calls, 1u);
}

TEST(classical_scan, finds_minimal_solution) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; trial++) {
        int n = 1 + static_cast<int>(rng() % 6);
        TruthTable t;
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            t.values.push_back((rng() % 5) == 0);
        }
        auto r = classical_scan(OracleSpec(n, t));
        auto expected = reference::first_solution(t.values);
        ASSERT_EQ(r.found.has_value(), expected.has_value());
        if (expected) {
            ASSERT_EQ(r.found->to_integer(), *expected);
            ASSERT_EQ(r.calls, *expected + 1);
        } else {
            ASSERT_EQ(r.calls, t.values.size());
        }
    }
}

TEST(oracle_spec, backends_agree) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; trial++) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto e = reference::random_expr(rng, n, 5);
        auto table = build_truth_table(e, n);
        OracleSpec ast(n, e);
        OracleSpec compiled(n, compile_reversible(e, n, 64));
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            ASSERT_EQ(table.eval(x), ast.eval(x)) << to_string(e) << " x=" << x;
            ASSERT_EQ(table.eval(x), compiled.eval(x)) << to_string(e) << " x=" << x;
        }
    }
}
