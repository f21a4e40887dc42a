#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "errclass/analysis.hpp"
#include "errclass/diff.hpp"
#include "errclass/ingest.hpp"
#include "errclass/metrics.hpp"
#include "errclass/records.hpp"
#include "errclass/rules.hpp"

namespace {

using namespace errclass;

struct OutputTarget {
    std::string path = "-";

    void write(const std::string& content) const {
        if (path == "-") {
            std::cout << content;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
        file << content;
    }
};

std::ifstream open_input(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open input file '" + path + "'");
    return file;
}

RuleSet load_rule_set(const std::string& rules_path) {
    if (rules_path.empty()) return default_rule_set();
    std::ifstream file = open_input(rules_path);
    std::ostringstream text;
    text << file.rdbuf();
    return load_rules(std::move(text).str());
}

std::set<std::string> read_problem_list(const std::string& path) {
    std::ifstream file = open_input(path);
    std::set<std::string> problems;
    std::string line;
    while (std::getline(file, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        problems.insert(line);
    }
    return problems;
}

// Runs fn(i) for every index in [0, n) on up to jobs threads.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> threads;
    const int count = std::min<int>(jobs, static_cast<int>(n));
    threads.reserve(count);
    for (int t = 0; t < count; ++t) threads.emplace_back(worker);
    for (std::thread& thread : threads) thread.join();
}

int cmd_pairs(const std::string& log_path, const OutputTarget& out, int max_distance) {
    std::ifstream log_file = open_input(log_path);
    const ParsedLog log = parse_submission_log(
        log_file, std::filesystem::path(log_path).parent_path());
    for (const LogError& error : log.errors) {
        std::cerr << log_path << ":" << error.line << ": " << error.message << '\n';
    }
    const PairBuildResult built =
        build_code_pairs(log.records, static_cast<std::size_t>(max_distance));
    std::ostringstream body;
    write_pairs(body, built.pairs);
    out.write(std::move(body).str());
    std::cerr << "pairs=" << built.pairs.size()
              << " dropped_distance=" << built.dropped_by_distance << '\n';
    return 0;
}

int cmd_classify(const std::string& pairs_path, const OutputTarget& out,
                 const std::string& rules_path, bool dedup, int jobs) {
    const RuleSet rules = load_rule_set(rules_path);  // abort before reading pairs
    std::ifstream pairs_file = open_input(pairs_path);
    const std::vector<CodePair> pairs = read_pairs(pairs_file);

    std::vector<std::vector<ErrorLabel>> per_pair(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        std::vector<ErrorLabel> labels = classify(extract_changes(pairs[i]), rules);
        if (dedup) labels = dedup_per_pair(summarize(std::move(labels), rules));
        per_pair[i] = std::move(labels);
    });

    std::vector<ErrorLabel> labels;
    for (std::vector<ErrorLabel>& chunk : per_pair) {
        labels.insert(labels.end(), std::make_move_iterator(chunk.begin()),
                      std::make_move_iterator(chunk.end()));
    }
    std::ostringstream body;
    write_labels(body, labels);
    out.write(std::move(body).str());
    std::cerr << "labels=" << labels.size() << " pairs=" << pairs.size() << '\n';
    return 0;
}

int cmd_stats(const std::string& pairs_path, const std::string& labels_path,
              const OutputTarget& out, const std::string& format) {
    std::ifstream pairs_file = open_input(pairs_path);
    const std::vector<CodePair> pairs = read_pairs(pairs_file);
    std::vector<ErrorLabel> labels;
    if (!labels_path.empty()) {
        std::ifstream labels_file = open_input(labels_path);
        labels = dedup_per_pair(read_labels(labels_file));
    }
    const CorpusStats stats = corpus_statistics(pairs, labels);
    out.write(format == "records" ? format_stats_records(stats)
                                  : format_stats_human(stats));
    return 0;
}

int cmd_analyze(const std::string& labels_path, const std::string& log_path,
                const std::string& intro_path, double alpha, const OutputTarget& out,
                const std::string& format) {
    std::ifstream labels_file = open_input(labels_path);
    // The counting unit is one occurrence per pair and error type.
    const std::vector<ErrorLabel> labels = dedup_per_pair(read_labels(labels_file));
    std::ifstream log_file = open_input(log_path);
    const ParsedLog log = parse_submission_log(
        log_file, std::filesystem::path(log_path).parent_path());
    const std::set<std::string> intro_problems = read_problem_list(intro_path);

    std::map<std::string, std::vector<SubmissionRecord>> history;
    std::map<std::string, const SubmissionRecord*> by_id;
    for (const SubmissionRecord& record : log.records) {
        history[record.user_id].push_back(record);
    }
    for (const auto& [user, records] : history) {
        for (const SubmissionRecord& record : records) by_id[record.submission_id] = &record;
    }
    std::map<std::string, UserLevel> level_of;
    for (const auto& [user, records] : history) {
        level_of[user] = classify_user_level(records, intro_problems);
    }

    std::vector<LabeledOccurrence> occurrences;
    std::vector<std::string> join_warnings;
    for (const ErrorLabel& label : labels) {
        const std::string wa_id = label.pair_id.substr(0, label.pair_id.find(':'));
        const auto it = by_id.find(wa_id);
        if (it == by_id.end()) {
            join_warnings.push_back("pair " + label.pair_id + ": submission '" + wa_id +
                                    "' not in log");
            continue;
        }
        occurrences.push_back({label.pair_id, it->second->problem_id, label.summary,
                               level_of[it->second->user_id]});
    }

    DifferenceReport report = difference_report(analyze_problems(occurrences, alpha), alpha);
    report.warnings.insert(report.warnings.end(), join_warnings.begin(), join_warnings.end());
    out.write(format == "records" ? format_report_records(report)
                                  : format_report_human(report));
    return 0;
}

int cmd_score(const std::string& labels_path, const std::string& gold_path,
              const OutputTarget& out) {
    std::ifstream labels_file = open_input(labels_path);
    const std::vector<ErrorLabel> labels = read_labels(labels_file);
    std::ifstream gold_file = open_input(gold_path);
    const std::vector<ErrorLabel> gold = read_labels(gold_file);
    const ScoreResult result = score_against_gold(labels, gold);
    if (!result.accuracy) {
        throw std::runtime_error("no labels to score");
    }
    std::ostringstream body;
    body << "correct=" << result.correct << " total=" << result.total << " accuracy="
         << std::fixed << std::setprecision(4) << *result.accuracy << '\n';
    out.write(std::move(body).str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Error classification toolkit for wrong/accepted Python submission pairs"};
    app.require_subcommand(1);

    std::string log_path;
    std::string pairs_path;
    std::string labels_path;
    std::string gold_path;
    std::string rules_path;
    std::string intro_path;
    std::string format = "human";
    OutputTarget out;
    int max_distance = 100;
    double alpha = 0.05;
    bool dedup = false;
    int jobs = 1;

    CLI::App* pairs = app.add_subcommand("pairs", "Build WA/AC code pairs from a submission log");
    pairs->add_option("--log", log_path, "Submission log (line-delimited records)")->required();
    pairs->add_option("--out", out.path, "Output path, - for stdout");
    pairs->add_option("--max-distance", max_distance, "Edit-distance cutoff")
        ->check(CLI::PositiveNumber);

    CLI::App* classify = app.add_subcommand("classify", "Classify errors in code pairs");
    classify->add_option("--pairs", pairs_path, "Pair file")->required();
    classify->add_option("--out", out.path, "Output path, - for stdout");
    classify->add_option("--rules", rules_path, "Rule file (default: embedded rule set)");
    classify->add_flag("--dedup", dedup, "Summarize and keep one label per pair and type");
    classify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    CLI::App* stats = app.add_subcommand("stats", "Corpus statistics over code pairs");
    stats->add_option("--pairs", pairs_path, "Pair file")->required();
    stats->add_option("--labels", labels_path, "Label file for error counts");
    stats->add_option("--out", out.path, "Output path, - for stdout");
    stats->add_option("--format", format, "human or records")
        ->check(CLI::IsMember({"human", "records"}));

    CLI::App* analyze =
        app.add_subcommand("analyze", "Novice/expert difference analysis per problem");
    analyze->add_option("--labels", labels_path, "Label file")->required();
    analyze->add_option("--log", log_path, "Submission log (for user levels)")->required();
    analyze->add_option("--intro-problems", intro_path, "Introductory problem id list")
        ->required();
    analyze->add_option("--alpha", alpha, "Significance level")
        ->check(CLI::Range(1e-12, 0.999999));
    analyze->add_option("--out", out.path, "Output path, - for stdout");
    analyze->add_option("--format", format, "human or records")
        ->check(CLI::IsMember({"human", "records"}));

    CLI::App* score = app.add_subcommand("score", "Score labels against a hand-labeled file");
    score->add_option("--labels", labels_path, "Label file")->required();
    score->add_option("--gold", gold_path, "Gold label file")->required();
    score->add_option("--out", out.path, "Output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pairs->parsed()) return cmd_pairs(log_path, out, max_distance);
        if (classify->parsed()) return cmd_classify(pairs_path, out, rules_path, dedup, jobs);
        if (stats->parsed()) return cmd_stats(pairs_path, labels_path, out, format);
        if (analyze->parsed()) {
            return cmd_analyze(labels_path, log_path, intro_path, alpha, out, format);
        }
        if (score->parsed()) return cmd_score(labels_path, gold_path, out);
    } catch (const std::exception& e) {
        std::cerr << "errclass: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
