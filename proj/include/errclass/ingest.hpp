#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace errclass {

enum class Verdict { AC, WA, RE, TLE, MLE, CE, OTHER };

// Unknown verdict strings map to OTHER.
Verdict verdict_from_string(std::string_view text);
std::string_view to_string(Verdict verdict);

struct SubmissionRecord {
    std::string submission_id;
    std::string user_id;
    std::string problem_id;
    Verdict verdict = Verdict::OTHER;
    std::int64_t submitted_at = 0;  // epoch seconds, UTC
    std::string source;
};

struct LogError {
    std::size_t line = 0;
    std::string message;
};

struct ParsedLog {
    std::vector<SubmissionRecord> records;  // in file order
    std::vector<LogError> errors;           // malformed lines, with line numbers
};

// Reads a line-delimited submission log. Records with a "source_path"
// field are resolved against base_dir. Malformed lines become error
// entries; the remaining lines are still parsed.
ParsedLog parse_submission_log(std::istream& stream,
                               const std::filesystem::path& base_dir = {});

struct PairMeta {
    int total_submissions_at_time = 0;  // user's submissions up to and incl. the WA
    int attempts_to_problem = 0;        // user's submissions to this problem up to the WA
    bool is_first_acceptance = false;   // the AC is the user's first AC on this problem
};

struct CodePair {
    std::string pair_id;  // "<wa submission_id>:<ac submission_id>"
    std::string user_id;
    std::string problem_id;
    std::string wa_source;
    std::string ac_source;
    std::int64_t wa_submitted_at = 0;
    std::int64_t ac_submitted_at = 0;
    std::size_t char_edit_distance = 0;
    PairMeta meta;
};

struct PairBuildResult {
    std::vector<CodePair> pairs;
    std::size_t dropped_by_distance = 0;
};

// Pairs each non-AC submission with the user's earliest strictly later
// AC on the same problem. Pairs whose raw-source edit distance reaches
// max_distance are discarded. Output is ordered by (user, problem,
// WA time, log order).
PairBuildResult build_code_pairs(const std::vector<SubmissionRecord>& records,
                                 std::size_t max_distance = 100);

}  // namespace errclass
