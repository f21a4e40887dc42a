#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "errclass/analysis.hpp"
#include "errclass/ingest.hpp"
#include "errclass/metrics.hpp"
#include "errclass/rules.hpp"

namespace errclass {

// Line-delimited record IO. Readers throw std::runtime_error with the
// offending line number on malformed input.

void write_submission_record(std::ostream& out, const SubmissionRecord& record);

void write_pairs(std::ostream& out, const std::vector<CodePair>& pairs);
std::vector<CodePair> read_pairs(std::istream& in);

void write_labels(std::ostream& out, const std::vector<ErrorLabel>& labels);
std::vector<ErrorLabel> read_labels(std::istream& in);

// Table-style stats report and its machine-readable form.
std::string format_stats_human(const CorpusStats& stats);
std::string format_stats_records(const CorpusStats& stats);

// Difference report in both formats.
std::string format_report_human(const DifferenceReport& report);
std::string format_report_records(const DifferenceReport& report);

}  // namespace errclass
