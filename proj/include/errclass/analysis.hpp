#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errclass/ingest.hpp"
#include "errclass/rules.hpp"

namespace errclass {

enum class UserLevel { Novice, Expert, Other };
std::string_view to_string(UserLevel level);

// Novice: only solved introductory problems and submitted more than
// five non-AC submissions per AC. Expert: solved more than ten
// distinct non-introductory problems. Everyone else: Other.
UserLevel classify_user_level(const std::vector<SubmissionRecord>& history,
                              const std::set<std::string>& intro_problems);

// One deduped summarized error occurrence joined to its user's level.
struct LabeledOccurrence {
    std::string pair_id;
    std::string problem_id;
    std::string summary;
    UserLevel level = UserLevel::Other;
};

struct ContingencyTable {
    std::string problem_id;
    std::vector<std::string> row_names;  // summarized rules with nonzero totals
    static constexpr std::array<std::string_view, 2> col_names = {"novice", "expert"};
    std::vector<std::array<std::size_t, 2>> counts;

    std::size_t row_total(std::size_t i) const;
    std::size_t col_total(std::size_t j) const;
    std::size_t grand_total() const;
    double expected(std::size_t i, std::size_t j) const;

    bool testable() const;
    std::string untestable_reason() const;
};

// O_ij = code pairs by group-j users on this problem containing
// summarized error i. Occurrences of Other-level users are ignored;
// rows are sorted by name.
ContingencyTable build_table(const std::string& problem_id,
                             const std::vector<LabeledOccurrence>& occurrences);

struct ChiSquareResult {
    double chi_square = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

// Pearson chi-square per the classic sum of (O-E)^2/E; p from the
// regularized upper incomplete gamma. Throws std::invalid_argument on
// untestable tables.
ChiSquareResult chi_square_test(const ContingencyTable& table);

struct ResidualResult {
    // Standardized Pearson residuals and their two-tailed p-values,
    // indexed [row][col]. Degenerate margins yield NaN cells.
    std::vector<std::array<double, 2>> residuals;
    std::vector<std::array<double, 2>> p_values;
};

ResidualResult residual_analysis(const ContingencyTable& table);

struct TestResult {
    double chi_square = 0.0;
    int dof = 0;
    double p_value = 1.0;
    ResidualResult residuals;
    double alpha = 0.05;
};

struct ProblemAnalysis {
    ContingencyTable table;
    std::optional<TestResult> result;  // empty when untestable
};

// Builds one table per problem (sorted by problem id) and runs the
// tests on the testable ones.
std::vector<ProblemAnalysis> analyze_problems(
    const std::vector<LabeledOccurrence>& occurrences, double alpha = 0.05);

struct DifferenceRow {
    std::string problem_id;
    double chi_square = 0.0;
    int dof = 0;
    double p_value = 1.0;
    std::string rule;
    double residual = 0.0;
    double residual_p = 1.0;
    double novice_ratio = 0.0;  // O / group total error occurrences on the problem
    double expert_ratio = 0.0;
    std::string direction;  // group with the greater ratio
};

struct DifferenceReport {
    double alpha = 0.05;
    std::vector<DifferenceRow> rows;
    std::vector<std::string> warnings;  // untestable tables
};

// Keeps problems with chi-square p < alpha and, within them, rules with
// residual p < alpha. Ordered by problem then rule.
DifferenceReport difference_report(const std::vector<ProblemAnalysis>& analyses,
                                   double alpha = 0.05);

}  // namespace errclass
