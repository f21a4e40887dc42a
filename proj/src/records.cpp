#include "errclass/records.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace errclass {

namespace {

using nlohmann::json;

json read_line_json(const std::string& line, std::size_t line_no) {
    try {
        return json::parse(line);
    } catch (const std::exception& e) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
}

[[noreturn]] void bad_record(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

std::string two_decimals(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << value;
    return std::move(out).str();
}

std::string aggregate_cell(const Aggregate& aggregate, bool percent = false) {
    const double scale = percent ? 100.0 : 1.0;
    std::string text = two_decimals(aggregate.mean * scale);
    if (percent) text += '%';
    text += " (\xC2\xB1 " + two_decimals(aggregate.sd * scale);
    if (percent) text += '%';
    return text + ")";
}

std::string p_value_cell(double p) {
    if (p < 0.001) return "<.001";
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << p;
    return std::move(out).str();
}

std::string ratio_cell(double ratio, bool flagged) {
    std::string text = two_decimals(ratio * 100.0) + "%";
    if (flagged) text += " *";
    return text;
}

}  // namespace

void write_submission_record(std::ostream& out, const SubmissionRecord& record) {
    const json j = {
        {"submission_id", record.submission_id},
        {"user_id", record.user_id},
        {"problem_id", record.problem_id},
        {"verdict", std::string(to_string(record.verdict))},
        {"submitted_at", record.submitted_at},
        {"source", record.source},
    };
    out << j.dump() << '\n';
}

void write_pairs(std::ostream& out, const std::vector<CodePair>& pairs) {
    for (const CodePair& pair : pairs) {
        const json j = {
            {"pair_id", pair.pair_id},
            {"user_id", pair.user_id},
            {"problem_id", pair.problem_id},
            {"wa", pair.wa_source},
            {"ac", pair.ac_source},
            {"wa_submitted_at", pair.wa_submitted_at},
            {"ac_submitted_at", pair.ac_submitted_at},
            {"char_edit_distance", pair.char_edit_distance},
            {"meta",
             {{"total_submissions_at_time", pair.meta.total_submissions_at_time},
              {"attempts_to_problem", pair.meta.attempts_to_problem},
              {"is_first_acceptance", pair.meta.is_first_acceptance}}},
        };
        out << j.dump() << '\n';
    }
}

std::vector<CodePair> read_pairs(std::istream& in) {
    std::vector<CodePair> pairs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const json j = read_line_json(line, line_no);
        try {
            CodePair pair;
            pair.pair_id = j.at("pair_id").get<std::string>();
            pair.user_id = j.at("user_id").get<std::string>();
            pair.problem_id = j.at("problem_id").get<std::string>();
            pair.wa_source = j.at("wa").get<std::string>();
            pair.ac_source = j.at("ac").get<std::string>();
            pair.wa_submitted_at = j.at("wa_submitted_at").get<std::int64_t>();
            pair.ac_submitted_at = j.at("ac_submitted_at").get<std::int64_t>();
            pair.char_edit_distance = j.at("char_edit_distance").get<std::size_t>();
            if (j.contains("meta")) {
                const json& meta = j.at("meta");
                pair.meta.total_submissions_at_time =
                    meta.value("total_submissions_at_time", 0);
                pair.meta.attempts_to_problem = meta.value("attempts_to_problem", 0);
                pair.meta.is_first_acceptance = meta.value("is_first_acceptance", false);
            }
            pairs.push_back(std::move(pair));
        } catch (const json::exception& e) {
            bad_record(line_no, e.what());
        }
    }
    return pairs;
}

void write_labels(std::ostream& out, const std::vector<ErrorLabel>& labels) {
    for (const ErrorLabel& label : labels) {
        const json j = {
            {"pair_id", label.pair_id},
            {"rule", label.rule_name},
            {"summary", label.summary},
            {"op_index", label.op_index},
            {"side", std::string(to_string(label.side))},
            {"span_start", label.span_start},
            {"span_end", label.span_end},
        };
        out << j.dump() << '\n';
    }
}

std::vector<ErrorLabel> read_labels(std::istream& in) {
    std::vector<ErrorLabel> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const json j = read_line_json(line, line_no);
        try {
            ErrorLabel label;
            label.pair_id = j.at("pair_id").get<std::string>();
            label.rule_name = j.at("rule").get<std::string>();
            label.summary = j.value("summary", std::string{});
            label.op_index = j.at("op_index").get<std::size_t>();
            const auto side = side_from_string(j.value("side", "BOTH"));
            if (!side) bad_record(line_no, "unknown side");
            label.side = *side;
            label.span_start = j.value("span_start", std::size_t{0});
            label.span_end = j.value("span_end", std::size_t{0});
            labels.push_back(std::move(label));
        } catch (const json::exception& e) {
            bad_record(line_no, e.what());
        }
    }
    return labels;
}

std::string format_stats_human(const CorpusStats& stats) {
    std::ostringstream out;
    auto row = [&](const std::string& name, const std::string& value) {
        out << std::left << std::setw(34) << name << value << '\n';
    };
    row("Name", "Value");
    row("#Pairs", std::to_string(stats.n_pairs));
    row("#Users", std::to_string(stats.n_users));
    row("#Problems", std::to_string(stats.n_problems));
    row("Avg. #Errors", aggregate_cell(stats.error_count));
    row("Avg. Char-based Edit Distance", aggregate_cell(stats.char_edit_distance));
    row("Avg. Token-based Edit Distance", aggregate_cell(stats.token_edit_distance));
    row("Avg. Char-based Similarity", aggregate_cell(stats.char_similarity, true));
    row("Avg. Token-based Similarity", aggregate_cell(stats.token_similarity, true));
    out << '\n';
    auto pair_row = [&](const std::string& name, const Aggregate& wa, const Aggregate& ac) {
        out << std::left << std::setw(34) << name << std::setw(22) << aggregate_cell(wa)
            << aggregate_cell(ac) << '\n';
    };
    out << std::left << std::setw(34) << "Name" << std::setw(22) << "WA Value"
        << "AC Value" << '\n';
    pair_row("Avg. #Lines", stats.wa_lines, stats.ac_lines);
    pair_row("Avg. #Chars", stats.wa_chars, stats.ac_chars);
    pair_row("Avg. #Tokens", stats.wa_tokens, stats.ac_tokens);
    pair_row("Avg. Cyclomatic Complexity", stats.wa_cyclomatic, stats.ac_cyclomatic);
    return std::move(out).str();
}

std::string format_stats_records(const CorpusStats& stats) {
    std::ostringstream out;
    auto count = [&](const char* name, std::size_t value) {
        out << json{{"name", name}, {"value", value}}.dump() << '\n';
    };
    auto aggregate = [&](const char* name, const Aggregate& a) {
        out << json{{"name", name}, {"mean", a.mean}, {"sd", a.sd}}.dump() << '\n';
    };
    count("n_pairs", stats.n_pairs);
    count("n_users", stats.n_users);
    count("n_problems", stats.n_problems);
    aggregate("error_count", stats.error_count);
    aggregate("char_edit_distance", stats.char_edit_distance);
    aggregate("token_edit_distance", stats.token_edit_distance);
    aggregate("char_similarity", stats.char_similarity);
    aggregate("token_similarity", stats.token_similarity);
    aggregate("wa_lines", stats.wa_lines);
    aggregate("ac_lines", stats.ac_lines);
    aggregate("wa_chars", stats.wa_chars);
    aggregate("ac_chars", stats.ac_chars);
    aggregate("wa_tokens", stats.wa_tokens);
    aggregate("ac_tokens", stats.ac_tokens);
    aggregate("wa_cyclomatic", stats.wa_cyclomatic);
    aggregate("ac_cyclomatic", stats.ac_cyclomatic);
    return std::move(out).str();
}

std::string format_report_human(const DifferenceReport& report) {
    std::ostringstream out;
    out << "Differences between novices and experts (alpha = " << report.alpha << ")\n";
    out << "Ratios: pairs of the group containing the error / total error occurrences "
           "of the group on the problem; * marks the greater ratio.\n\n";
    out << std::left << std::setw(14) << "Problem" << std::setw(10) << "P-value"
        << std::setw(28) << "Classified Rule" << std::setw(10) << "P-value"
        << std::setw(12) << "Novices" << "Experts" << '\n';
    for (const DifferenceRow& row : report.rows) {
        const bool novice_greater = row.direction == "novice";
        out << std::left << std::setw(14) << row.problem_id << std::setw(10)
            << p_value_cell(row.p_value) << std::setw(28) << row.rule << std::setw(10)
            << p_value_cell(row.residual_p) << std::setw(12)
            << ratio_cell(row.novice_ratio, novice_greater)
            << ratio_cell(row.expert_ratio, !novice_greater) << '\n';
    }
    if (report.rows.empty()) out << "(no significant differences)\n";
    if (!report.warnings.empty()) {
        out << "\nWarnings:\n";
        for (const std::string& warning : report.warnings) out << "  " << warning << '\n';
    }
    return std::move(out).str();
}

std::string format_report_records(const DifferenceReport& report) {
    std::ostringstream out;
    for (const DifferenceRow& row : report.rows) {
        const json j = {
            {"problem_id", row.problem_id},
            {"chi2", row.chi_square},
            {"dof", row.dof},
            {"p", row.p_value},
            {"rule", row.rule},
            {"residual", row.residual},
            {"residual_p", row.residual_p},
            {"novice_ratio", row.novice_ratio},
            {"expert_ratio", row.expert_ratio},
            {"direction", row.direction},
        };
        out << j.dump() << '\n';
    }
    return std::move(out).str();
}

}  // namespace errclass
