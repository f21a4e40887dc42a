#include "errclass/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "errclass/special_functions.hpp"

namespace errclass {

std::string_view to_string(UserLevel level) {
    switch (level) {
        case UserLevel::Novice: return "novice";
        case UserLevel::Expert: return "expert";
        case UserLevel::Other: break;
    }
    return "other";
}

UserLevel classify_user_level(const std::vector<SubmissionRecord>& history,
                              const std::set<std::string>& intro_problems) {
    std::set<std::string> solved;
    std::size_t ac_count = 0;
    std::size_t non_ac_count = 0;
    for (const SubmissionRecord& record : history) {
        if (record.verdict == Verdict::AC) {
            ++ac_count;
            solved.insert(record.problem_id);
        } else {
            ++non_ac_count;
        }
    }

    std::size_t non_intro_solved = 0;
    bool intro_only = true;
    for (const std::string& problem : solved) {
        if (!intro_problems.count(problem)) {
            ++non_intro_solved;
            intro_only = false;
        }
    }

    if (non_intro_solved > 10) return UserLevel::Expert;
    if (intro_only && non_ac_count > 5 * ac_count) return UserLevel::Novice;
    return UserLevel::Other;
}

std::size_t ContingencyTable::row_total(std::size_t i) const {
    return counts[i][0] + counts[i][1];
}

std::size_t ContingencyTable::col_total(std::size_t j) const {
    std::size_t total = 0;
    for (const auto& row : counts) total += row[j];
    return total;
}

std::size_t ContingencyTable::grand_total() const {
    return col_total(0) + col_total(1);
}

double ContingencyTable::expected(std::size_t i, std::size_t j) const {
    return static_cast<double>(row_total(i)) * static_cast<double>(col_total(j)) /
           static_cast<double>(grand_total());
}

bool ContingencyTable::testable() const {
    return counts.size() >= 2 && col_total(0) > 0 && col_total(1) > 0;
}

std::string ContingencyTable::untestable_reason() const {
    if (counts.size() < 2) return "fewer than 2 error rows";
    if (col_total(0) == 0) return "no novice occurrences";
    if (col_total(1) == 0) return "no expert occurrences";
    return "";
}

ContingencyTable build_table(const std::string& problem_id,
                             const std::vector<LabeledOccurrence>& occurrences) {
    std::map<std::string, std::array<std::size_t, 2>> rows;
    for (const LabeledOccurrence& occurrence : occurrences) {
        if (occurrence.problem_id != problem_id) continue;
        if (occurrence.level == UserLevel::Other) continue;
        rows[occurrence.summary][occurrence.level == UserLevel::Novice ? 0 : 1] += 1;
    }
    ContingencyTable table;
    table.problem_id = problem_id;
    for (const auto& [name, counts] : rows) {
        table.row_names.push_back(name);
        table.counts.push_back(counts);
    }
    return table;
}

ChiSquareResult chi_square_test(const ContingencyTable& table) {
    if (!table.testable()) {
        throw std::invalid_argument("chi_square_test: untestable table (" +
                                    table.untestable_reason() + ")");
    }
    ChiSquareResult result;
    result.dof = static_cast<int>(table.counts.size()) - 1;  // (rows-1)*(cols-1), 2 cols
    for (std::size_t i = 0; i < table.counts.size(); ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const double expected = table.expected(i, j);
            const double diff = static_cast<double>(table.counts[i][j]) - expected;
            result.chi_square += diff * diff / expected;
        }
    }
    result.p_value = chi_square_upper_tail(result.chi_square, result.dof);
    return result;
}

ResidualResult residual_analysis(const ContingencyTable& table) {
    if (!table.testable()) {
        throw std::invalid_argument("residual_analysis: untestable table (" +
                                    table.untestable_reason() + ")");
    }
    const double total = static_cast<double>(table.grand_total());
    ResidualResult result;
    for (std::size_t i = 0; i < table.counts.size(); ++i) {
        std::array<double, 2> residual_row{};
        std::array<double, 2> p_row{};
        const double row_share = static_cast<double>(table.row_total(i)) / total;
        for (std::size_t j = 0; j < 2; ++j) {
            const double col_share = static_cast<double>(table.col_total(j)) / total;
            const double variance =
                table.expected(i, j) * (1.0 - row_share) * (1.0 - col_share);
            if (variance <= 0.0) {
                residual_row[j] = std::numeric_limits<double>::quiet_NaN();
                p_row[j] = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            residual_row[j] =
                (static_cast<double>(table.counts[i][j]) - table.expected(i, j)) /
                std::sqrt(variance);
            p_row[j] = normal_two_tailed_p(residual_row[j]);
        }
        result.residuals.push_back(residual_row);
        result.p_values.push_back(p_row);
    }
    return result;
}

std::vector<ProblemAnalysis> analyze_problems(
    const std::vector<LabeledOccurrence>& occurrences, double alpha) {
    std::set<std::string> problems;
    for (const LabeledOccurrence& occurrence : occurrences) {
        problems.insert(occurrence.problem_id);
    }
    std::vector<ProblemAnalysis> analyses;
    for (const std::string& problem : problems) {
        ProblemAnalysis analysis;
        analysis.table = build_table(problem, occurrences);
        if (analysis.table.testable()) {
            const ChiSquareResult chi = chi_square_test(analysis.table);
            TestResult result;
            result.chi_square = chi.chi_square;
            result.dof = chi.dof;
            result.p_value = chi.p_value;
            result.residuals = residual_analysis(analysis.table);
            result.alpha = alpha;
            analysis.result = std::move(result);
        }
        analyses.push_back(std::move(analysis));
    }
    return analyses;
}

DifferenceReport difference_report(const std::vector<ProblemAnalysis>& analyses,
                                   double alpha) {
    DifferenceReport report;
    report.alpha = alpha;
    for (const ProblemAnalysis& analysis : analyses) {
        const ContingencyTable& table = analysis.table;
        if (!analysis.result) {
            report.warnings.push_back(table.problem_id + ": untestable (" +
                                      table.untestable_reason() + ")");
            continue;
        }
        const TestResult& test = *analysis.result;
        if (!(test.p_value < alpha)) continue;
        const double novice_total = static_cast<double>(table.col_total(0));
        const double expert_total = static_cast<double>(table.col_total(1));
        for (std::size_t i = 0; i < table.counts.size(); ++i) {
            const double residual_p = test.residuals.p_values[i][0];
            if (std::isnan(residual_p) || !(residual_p < alpha)) continue;
            DifferenceRow row;
            row.problem_id = table.problem_id;
            row.chi_square = test.chi_square;
            row.dof = test.dof;
            row.p_value = test.p_value;
            row.rule = table.row_names[i];
            row.residual = test.residuals.residuals[i][0];
            row.residual_p = residual_p;
            row.novice_ratio = static_cast<double>(table.counts[i][0]) / novice_total;
            row.expert_ratio = static_cast<double>(table.counts[i][1]) / expert_total;
            row.direction = row.novice_ratio > row.expert_ratio ? "novice" : "expert";
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace errclass
