#include "errclass/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "errclass/text.hpp"

namespace errclass {

Verdict verdict_from_string(std::string_view text) {
    if (text == "AC") return Verdict::AC;
    if (text == "WA") return Verdict::WA;
    if (text == "RE") return Verdict::RE;
    if (text == "TLE") return Verdict::TLE;
    if (text == "MLE") return Verdict::MLE;
    if (text == "CE") return Verdict::CE;
    return Verdict::OTHER;
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::AC: return "AC";
        case Verdict::WA: return "WA";
        case Verdict::RE: return "RE";
        case Verdict::TLE: return "TLE";
        case Verdict::MLE: return "MLE";
        case Verdict::CE: return "CE";
        case Verdict::OTHER: break;
    }
    return "OTHER";
}

namespace {

std::string require_string(const nlohmann::json& record, const char* field) {
    if (!record.contains(field) || !record[field].is_string()) {
        throw std::runtime_error(std::string("missing or non-string field '") + field + "'");
    }
    return record[field].get<std::string>();
}

}  // namespace

ParsedLog parse_submission_log(std::istream& stream,
                               const std::filesystem::path& base_dir) {
    ParsedLog log;
    std::set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const nlohmann::json record = nlohmann::json::parse(line);
            SubmissionRecord submission;
            submission.submission_id = require_string(record, "submission_id");
            submission.user_id = require_string(record, "user_id");
            submission.problem_id = require_string(record, "problem_id");
            submission.verdict = verdict_from_string(require_string(record, "verdict"));
            if (!record.contains("submitted_at") || !record["submitted_at"].is_number_integer()) {
                throw std::runtime_error("missing or non-integer field 'submitted_at'");
            }
            submission.submitted_at = record["submitted_at"].get<std::int64_t>();
            if (record.contains("source")) {
                submission.source = require_string(record, "source");
            } else if (record.contains("source_path")) {
                const std::filesystem::path path =
                    base_dir / record["source_path"].get<std::string>();
                std::ifstream file(path, std::ios::binary);
                if (!file) {
                    throw std::runtime_error("cannot open source_path '" + path.string() + "'");
                }
                std::ostringstream text;
                text << file.rdbuf();
                submission.source = std::move(text).str();
            } else {
                throw std::runtime_error("record has neither 'source' nor 'source_path'");
            }
            if (!seen_ids.insert(submission.submission_id).second) {
                throw std::runtime_error("duplicate submission_id '" +
                                         submission.submission_id + "'");
            }
            log.records.push_back(std::move(submission));
        } catch (const std::exception& e) {
            log.errors.push_back({line_no, e.what()});
        }
    }
    return log;
}

PairBuildResult build_code_pairs(const std::vector<SubmissionRecord>& records,
                                 std::size_t max_distance) {
    PairBuildResult result;

    // Chronological history per user; log order breaks timestamp ties.
    std::map<std::string, std::vector<std::size_t>> by_user;
    for (std::size_t i = 0; i < records.size(); ++i) {
        by_user[records[i].user_id].push_back(i);
    }

    for (auto& [user, history] : by_user) {
        std::stable_sort(history.begin(), history.end(), [&](std::size_t a, std::size_t b) {
            return records[a].submitted_at < records[b].submitted_at;
        });

        std::map<std::string, std::vector<std::size_t>> by_problem;  // positions in history
        for (std::size_t k = 0; k < history.size(); ++k) {
            by_problem[records[history[k]].problem_id].push_back(k);
        }

        for (const auto& [problem, positions] : by_problem) {
            for (std::size_t wi = 0; wi < positions.size(); ++wi) {
                const SubmissionRecord& wa = records[history[positions[wi]]];
                if (wa.verdict == Verdict::AC) continue;

                const SubmissionRecord* ac = nullptr;
                std::size_t ac_pos = 0;
                for (std::size_t ai = wi + 1; ai < positions.size(); ++ai) {
                    const SubmissionRecord& candidate = records[history[positions[ai]]];
                    if (candidate.verdict == Verdict::AC &&
                        candidate.submitted_at > wa.submitted_at) {
                        ac = &candidate;
                        ac_pos = positions[ai];
                        break;
                    }
                }
                if (ac == nullptr) continue;

                const std::size_t distance = char_edit_distance(wa.source, ac->source);
                if (distance >= max_distance) {
                    ++result.dropped_by_distance;
                    continue;
                }

                CodePair pair;
                pair.pair_id = wa.submission_id + ":" + ac->submission_id;
                pair.user_id = wa.user_id;
                pair.problem_id = wa.problem_id;
                pair.wa_source = wa.source;
                pair.ac_source = ac->source;
                pair.wa_submitted_at = wa.submitted_at;
                pair.ac_submitted_at = ac->submitted_at;
                pair.char_edit_distance = distance;
                pair.meta.total_submissions_at_time =
                    static_cast<int>(positions[wi]) + 1;
                pair.meta.attempts_to_problem = static_cast<int>(wi) + 1;
                pair.meta.is_first_acceptance = true;
                for (std::size_t ai = 0; ai < positions.size(); ++ai) {
                    if (positions[ai] < ac_pos &&
                        records[history[positions[ai]]].verdict == Verdict::AC) {
                        pair.meta.is_first_acceptance = false;
                        break;
                    }
                }
                result.pairs.push_back(std::move(pair));
            }
        }
    }
    return result;
}

}  // namespace errclass
