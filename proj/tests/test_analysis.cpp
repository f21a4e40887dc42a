#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "errclass/analysis.hpp"
#include "oracles.hpp"

using namespace errclass;

namespace {

SubmissionRecord record(const std::string& problem, Verdict verdict) {
    static int next = 0;
    SubmissionRecord r;
    r.submission_id = "s" + std::to_string(next++);
    r.user_id = "u";
    r.problem_id = problem;
    r.verdict = verdict;
    r.submitted_at = next;
    return r;
}

ContingencyTable table_from(const std::vector<std::array<std::size_t, 2>>& counts) {
    ContingencyTable table;
    table.problem_id = "p";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        table.row_names.push_back("rule" + std::to_string(i));
        table.counts.push_back(counts[i]);
    }
    return table;
}

}  // namespace

TEST_CASE("user level classification") {
    std::set<std::string> intro = {"I1", "I2", "I3"};

    SUBCASE("intro-only with high WA ratio is a novice") {
        std::vector<SubmissionRecord> history;
        for (int i = 0; i < 12; ++i) history.push_back(record("I1", Verdict::WA));
        history.push_back(record("I1", Verdict::AC));
        history.push_back(record("I2", Verdict::AC));
        CHECK(classify_user_level(history, intro) == UserLevel::Novice);
    }
    SUBCASE("eleven distinct non-intro solves make an expert") {
        std::vector<SubmissionRecord> history;
        for (int i = 0; i < 11; ++i) {
            history.push_back(record("X" + std::to_string(i), Verdict::AC));
        }
        CHECK(classify_user_level(history, intro) == UserLevel::Expert);
    }
    SUBCASE("a low WA ratio stays other") {
        std::vector<SubmissionRecord> history;
        for (int i = 0; i < 4; ++i) history.push_back(record("I1", Verdict::WA));
        history.push_back(record("I1", Verdict::AC));
        CHECK(classify_user_level(history, intro) == UserLevel::Other);
    }
    SUBCASE("ten non-intro solves are not enough") {
        std::vector<SubmissionRecord> history;
        for (int i = 0; i < 10; ++i) {
            history.push_back(record("X" + std::to_string(i), Verdict::AC));
        }
        CHECK(classify_user_level(history, intro) == UserLevel::Other);
    }
    SUBCASE("repeat solves of one non-intro problem count once") {
        std::vector<SubmissionRecord> history;
        for (int i = 0; i < 30; ++i) history.push_back(record("X1", Verdict::AC));
        CHECK(classify_user_level(history, intro) == UserLevel::Other);
    }
}

TEST_CASE("build_table counts pair-level occurrences per group") {
    std::vector<LabeledOccurrence> occurrences;
    auto add = [&](const char* pair, const char* summary, UserLevel level) {
        occurrences.push_back({pair, "p", summary, level});
    };
    add("p1", "output", UserLevel::Novice);
    add("p2", "output", UserLevel::Novice);
    add("p3", "output", UserLevel::Expert);
    add("p4", "indent", UserLevel::Novice);
    add("p5", "indent", UserLevel::Other);  // ignored

    const ContingencyTable table = build_table("p", occurrences);
    REQUIRE(table.row_names.size() == 2);
    CHECK(table.row_names[0] == "indent");
    CHECK(table.counts[0][0] == 1);
    CHECK(table.counts[0][1] == 0);
    CHECK(table.counts[1][0] == 2);
    CHECK(table.counts[1][1] == 1);
    CHECK(table.grand_total() == 4);
}

TEST_CASE("tables with one row or an empty margin are untestable") {
    CHECK_FALSE(build_table("p", {}).testable());
    CHECK_FALSE(table_from({{3, 1}}).testable());
    CHECK_FALSE(table_from({{3, 0}, {1, 0}}).testable());
    CHECK_THROWS_AS(chi_square_test(table_from({{3, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(residual_analysis(table_from({{3, 1}})), std::invalid_argument);
}

TEST_CASE("expected frequencies from the margins") {
    const auto table = table_from({{30, 10}, {10, 30}});
    CHECK(table.grand_total() == 80);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(table.expected(i, j) == doctest::Approx(20.0));
        }
    }
}

TEST_CASE("chi-square of the worked 2x2 example") {
    const auto result = chi_square_test(table_from({{30, 10}, {10, 30}}));
    CHECK(result.chi_square == 20.0);  // four cells of (10)^2 / 20
    CHECK(result.dof == 1);
    CHECK(std::fabs(result.p_value - 7.7442e-6) < 1e-8);
}

TEST_CASE("null tables give chi-square zero and p one") {
    const auto even = chi_square_test(table_from({{10, 10}, {10, 10}}));
    CHECK(even.chi_square == 0.0);
    CHECK(even.p_value == 1.0);
    const auto proportional = chi_square_test(table_from({{20, 10}, {40, 20}}));
    CHECK(proportional.chi_square == doctest::Approx(0.0));
}

TEST_CASE("residuals of the worked 2x2 example") {
    const auto table = table_from({{30, 10}, {10, 30}});
    const auto result = residual_analysis(table);
    CHECK(std::fabs(result.residuals[0][0] - 4.47214) < 1e-5);
    CHECK(result.residuals[0][0] == doctest::Approx(4.47213595499958).epsilon(1e-9));
    CHECK(std::fabs(result.p_values[0][0] - 7.75e-6) < 1e-7);
    // a 2x2 table has one residual magnitude
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(std::fabs(result.residuals[i][j]) ==
                  doctest::Approx(4.47213595499958).epsilon(1e-9));
        }
    }
}

TEST_CASE("residuals vanish when observed equals expected") {
    const auto result = residual_analysis(table_from({{10, 10}, {10, 10}}));
    for (const auto& row : result.residuals) {
        CHECK(row[0] == doctest::Approx(0.0));
        CHECK(row[1] == doctest::Approx(0.0));
    }
    for (const auto& row : result.p_values) {
        CHECK(row[0] == doctest::Approx(1.0));
        CHECK(row[1] == doctest::Approx(1.0));
    }
}

TEST_CASE("property: observed minus expected sums to zero") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> rows(2, 6);
    std::uniform_int_distribution<std::size_t> count(0, 40);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::array<std::size_t, 2>> counts(rows(rng));
        for (auto& row : counts) row = {count(rng) + 1, count(rng) + 1};
        const auto table = table_from(counts);
        double sum = 0.0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                sum += static_cast<double>(table.counts[i][j]) - table.expected(i, j);
            }
        }
        CHECK(std::fabs(sum) < 1e-9);
    }
}

TEST_CASE("property: scaling counts scales chi-square exactly") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> rows(2, 5);
    std::uniform_int_distribution<std::size_t> count(1, 30);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::array<std::size_t, 2>> counts(rows(rng));
        for (auto& row : counts) row = {count(rng), count(rng)};
        const double base = chi_square_test(table_from(counts)).chi_square;
        for (std::size_t k : {std::size_t{2}, std::size_t{3}}) {
            auto scaled = counts;
            for (auto& row : scaled) row = {row[0] * k, row[1] * k};
            CHECK(chi_square_test(table_from(scaled)).chi_square ==
                  doctest::Approx(static_cast<double>(k) * base).epsilon(1e-12));
        }
    }
}

TEST_CASE("property: row permutation leaves the decision unchanged") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> rows(2, 6);
    std::uniform_int_distribution<std::size_t> count(1, 30);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::array<std::size_t, 2>> counts(rows(rng));
        for (auto& row : counts) row = {count(rng), count(rng)};
        const double p = chi_square_test(table_from(counts)).p_value;
        auto shuffled = counts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const double p2 = chi_square_test(table_from(shuffled)).p_value;
        CHECK(p == doctest::Approx(p2).epsilon(1e-12));
        CHECK((p < 0.05) == (p2 < 0.05));
    }
}

TEST_CASE("property: p-values match the quadrature oracle on random tables") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> rows(2, 6);
    std::uniform_int_distribution<std::size_t> count(1, 50);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::array<std::size_t, 2>> counts(rows(rng));
        for (auto& row : counts) row = {count(rng), count(rng)};
        const auto result = chi_square_test(table_from(counts));
        CHECK(std::fabs(result.p_value -
                        oracle::chi_square_tail(result.chi_square, result.dof)) < 1e-8);
    }
}

TEST_CASE("difference report keeps significant problems and rules") {
    std::vector<LabeledOccurrence> occurrences;
    auto fill = [&](const char* problem, const char* summary, UserLevel level, int n,
                    int start) {
        for (int i = 0; i < n; ++i) {
            occurrences.push_back({"pair" + std::to_string(start + i), problem, summary,
                                   level});
        }
    };
    int id = 0;
    // strongly different: novices hit "arithmetic operator" 3x as often
    fill("P1", "output", UserLevel::Novice, 200, id); id += 200;
    fill("P1", "output", UserLevel::Expert, 200, id); id += 200;
    fill("P1", "arithmetic operator", UserLevel::Novice, 150, id); id += 150;
    fill("P1", "arithmetic operator", UserLevel::Expert, 50, id); id += 50;
    // balanced problem: nothing to report
    fill("P2", "output", UserLevel::Novice, 40, id); id += 40;
    fill("P2", "output", UserLevel::Expert, 40, id); id += 40;
    fill("P2", "indent", UserLevel::Novice, 20, id); id += 20;
    fill("P2", "indent", UserLevel::Expert, 20, id); id += 20;
    // untestable problem: single row
    fill("P3", "output", UserLevel::Novice, 5, id); id += 5;

    const auto analyses = analyze_problems(occurrences, 0.05);
    REQUIRE(analyses.size() == 3);
    const auto report = difference_report(analyses, 0.05);

    REQUIRE(report.rows.size() == 2);  // both P1 rows are significant
    const auto arithmetic =
        std::find_if(report.rows.begin(), report.rows.end(),
                     [](const DifferenceRow& row) { return row.rule == "arithmetic operator"; });
    REQUIRE(arithmetic != report.rows.end());
    CHECK(arithmetic->problem_id == "P1");
    CHECK(arithmetic->p_value < 0.05);
    CHECK(arithmetic->residual_p < 0.05);
    CHECK(arithmetic->novice_ratio == doctest::Approx(150.0 / 350.0));
    CHECK(arithmetic->expert_ratio == doctest::Approx(50.0 / 250.0));
    CHECK(arithmetic->direction == "novice");

    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].find("P3") != std::string::npos);
}

TEST_CASE("difference report is empty without significance") {
    std::vector<LabeledOccurrence> occurrences;
    for (int i = 0; i < 30; ++i) {
        occurrences.push_back({"a" + std::to_string(i), "P", "output",
                               i % 2 ? UserLevel::Novice : UserLevel::Expert});
        occurrences.push_back({"b" + std::to_string(i), "P", "indent",
                               i % 2 ? UserLevel::Novice : UserLevel::Expert});
    }
    const auto report = difference_report(analyze_problems(occurrences, 0.05), 0.05);
    CHECK(report.rows.empty());
    CHECK(report.warnings.empty());
}
