#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/regex.hpp>

#include "errclass/diff.hpp"

namespace errclass {

enum class RuleCategory { Insert, Delete, LineReplace, WithinReplace, TokenReplace };

std::optional<RuleCategory> rule_category_from_string(std::string_view text);
std::string_view to_string(RuleCategory category);

// The 21 summarized rule groups.
const std::vector<std::string>& summary_groups();

struct Rule {
    std::string name;
    RuleCategory category = RuleCategory::Insert;
    std::string pattern;  // verbatim regex source
    std::string summary;  // one of summary_groups()
    boost::regex compiled;
};

struct RuleSet {
    std::vector<Rule> rules;
    std::string version;

    const Rule* find(std::string_view name) const;
};

struct RuleLoadError : std::runtime_error {
    explicit RuleLoadError(const std::string& message,
                           std::vector<std::string> problem_list = {})
        : std::runtime_error(message), problems(std::move(problem_list)) {}
    std::vector<std::string> problems;  // one entry per bad rule/line
};

// Parses the plain-text rule format: "key: value" blocks separated by
// blank lines, '#' comment lines, and optional "requires:"/"version:"
// header lines. All problems (duplicate names, unknown categories or
// summaries, bad patterns) are collected and reported together.
RuleSet load_rules(std::string_view config);

// The embedded 55-rule default set.
std::string_view default_rules_text();
const RuleSet& default_rule_set();

enum class Side { WA, AC, Both };
std::string_view to_string(Side side);
std::optional<Side> side_from_string(std::string_view text);

struct ErrorLabel {
    std::string pair_id;
    std::string rule_name;
    std::string summary;
    std::size_t op_index = 0;
    Side side = Side::Both;
    // Matched character span in the rendered line (WA side when
    // side==Both). For token-replace rules: matching WA token index and
    // AC token index instead.
    std::size_t span_start = 0;
    std::size_t span_end = 0;
};

// Applies every rule of the set to a change set. All matching rules
// fire; at most one label per (rule, op).
std::vector<ErrorLabel> classify(const ChangeSet& changes, const RuleSet& rules);

// Fills each label's summary from its rule's group. Unknown rule names
// raise std::invalid_argument.
std::vector<ErrorLabel> summarize(std::vector<ErrorLabel> labels, const RuleSet& rules);

// Keeps at most one label per (pair_id, summary); first by op order wins.
std::vector<ErrorLabel> dedup_per_pair(const std::vector<ErrorLabel>& labels);

struct ScoreResult {
    std::size_t correct = 0;
    std::size_t total = 0;
    std::optional<double> accuracy;  // empty when total == 0
};

// Exact (pair_id, rule_name, op_index) match against a hand-labeled
// gold list.
ScoreResult score_against_gold(const std::vector<ErrorLabel>& labels,
                               const std::vector<ErrorLabel>& gold);

}  // namespace errclass
