#include "errclass/rules.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace errclass {

std::optional<RuleCategory> rule_category_from_string(std::string_view text) {
    if (text == "insert") return RuleCategory::Insert;
    if (text == "delete") return RuleCategory::Delete;
    if (text == "line-replace") return RuleCategory::LineReplace;
    if (text == "within-replace") return RuleCategory::WithinReplace;
    if (text == "token-replace") return RuleCategory::TokenReplace;
    return std::nullopt;
}

std::string_view to_string(RuleCategory category) {
    switch (category) {
        case RuleCategory::Insert: return "insert";
        case RuleCategory::Delete: return "delete";
        case RuleCategory::LineReplace: return "line-replace";
        case RuleCategory::WithinReplace: return "within-replace";
        case RuleCategory::TokenReplace: return "token-replace";
    }
    return "insert";
}

const std::vector<std::string>& summary_groups() {
    static const std::vector<std::string> groups = {
        "output", "input", "convert variable", "other function invocation",
        "conditional statement", "loop statement", "for range", "break continue",
        "literal", "import", "variable declaration", "function definition",
        "pass", "comparison operator", "logical operator", "arithmetic operator",
        "unpack operator", "other operator", "index", "list comprehension",
        "indent"};
    return groups;
}

const Rule* RuleSet::find(std::string_view name) const {
    for (const Rule& rule : rules) {
        if (rule.name == name) return &rule;
    }
    return nullptr;
}

std::string_view to_string(Side side) {
    switch (side) {
        case Side::WA: return "WA";
        case Side::AC: return "AC";
        case Side::Both: break;
    }
    return "BOTH";
}

std::optional<Side> side_from_string(std::string_view text) {
    if (text == "WA") return Side::WA;
    if (text == "AC") return Side::AC;
    if (text == "BOTH") return Side::Both;
    return std::nullopt;
}

namespace {

const std::set<std::string, std::less<>> kKnownFeatures = {
    "alternation", "anchors", "character-classes", "lazy-quantifiers",
    "lookahead", "lookbehind", "word-boundaries"};

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    return text;
}

}  // namespace

RuleSet load_rules(std::string_view config) {
    RuleSet set;
    std::vector<std::string> problems;
    std::set<std::string> names;

    std::map<std::string, std::string> block;
    std::size_t block_line = 0;
    bool in_header = true;

    auto flush_block = [&] {
        if (block.empty()) return;
        const std::string where = "rule at line " + std::to_string(block_line);
        const std::string name = block.count("name") ? block["name"] : "";
        const std::string label = name.empty() ? where : "rule '" + name + "'";
        bool ok = true;
        for (const char* key : {"name", "category", "pattern", "summary"}) {
            if (!block.count(key)) {
                problems.push_back(label + ": missing key '" + key + "'");
                ok = false;
            }
        }
        if (ok) {
            Rule rule;
            rule.name = name;
            rule.pattern = block["pattern"];
            rule.summary = block["summary"];
            if (!names.insert(name).second) {
                problems.push_back(label + ": duplicate rule name");
                ok = false;
            }
            const auto category = rule_category_from_string(block["category"]);
            if (!category) {
                problems.push_back(label + ": unknown category '" + block["category"] + "'");
                ok = false;
            } else {
                rule.category = *category;
            }
            const auto& groups = summary_groups();
            if (std::find(groups.begin(), groups.end(), rule.summary) == groups.end()) {
                problems.push_back(label + ": unknown summary group '" + rule.summary + "'");
                ok = false;
            }
            try {
                rule.compiled.assign(rule.pattern, boost::regex::perl);
            } catch (const boost::regex_error& e) {
                problems.push_back(label + ": invalid pattern: " + e.what());
                ok = false;
            }
            if (ok) set.rules.push_back(std::move(rule));
        }
        block.clear();
        block_line = 0;
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= config.size()) {
        const std::size_t end = config.find('\n', start);
        std::string_view raw = config.substr(
            start, end == std::string_view::npos ? config.size() - start : end - start);
        ++line_no;
        start = end == std::string_view::npos ? config.size() + 1 : end + 1;

        const std::string_view stripped = trim(raw);
        if (stripped.empty()) {
            flush_block();
            continue;
        }
        if (stripped.front() == '#') continue;

        const std::size_t colon = raw.find(':');
        if (colon == std::string_view::npos) {
            problems.push_back("line " + std::to_string(line_no) + ": expected 'key: value'");
            continue;
        }
        const std::string key{trim(raw.substr(0, colon))};
        std::string_view value = raw.substr(colon + 1);
        if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
        while (!value.empty() && (value.back() == '\r')) value.remove_suffix(1);

        if (in_header && key == "requires") {
            std::istringstream features{std::string(value)};
            std::string feature;
            while (features >> feature) {
                if (!kKnownFeatures.count(feature)) {
                    problems.push_back("line " + std::to_string(line_no) +
                                       ": unsupported regex feature '" + feature + "'");
                }
            }
            continue;
        }
        if (in_header && key == "version") {
            set.version = std::string(trim(value));
            continue;
        }
        in_header = false;
        if (key != "name" && key != "category" && key != "pattern" && key != "summary") {
            problems.push_back("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            continue;
        }
        if (block.empty()) block_line = line_no;
        block[key] = std::string(value);
    }
    flush_block();

    if (!problems.empty()) {
        std::string message = "rule file has " + std::to_string(problems.size()) + " problem(s):";
        for (const std::string& p : problems) message += "\n  " + p;
        throw RuleLoadError(message, std::move(problems));
    }
    return set;
}

const RuleSet& default_rule_set() {
    static const RuleSet set = load_rules(default_rules_text());
    return set;
}

namespace {

// Character span [begin, end) of every token in the rendered line.
std::vector<std::pair<std::size_t, std::size_t>> token_spans(const LogicalLine& line) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    spans.reserve(line.tokens.size());
    std::size_t offset = 0;
    for (const Token& token : line.tokens) {
        if (!spans.empty()) ++offset;  // separating space
        spans.emplace_back(offset, offset + token.text.size());
        offset += token.text.size();
    }
    return spans;
}

bool has_replace(const std::vector<ChangeLabel>& labels) {
    return std::find(labels.begin(), labels.end(), ChangeLabel::Replace) != labels.end();
}

// First search match whose span covers at least one character of a
// Replace-labeled token.
std::optional<std::pair<std::size_t, std::size_t>> within_match(
    const boost::regex& re, const std::string& rendered,
    const std::vector<std::pair<std::size_t, std::size_t>>& spans,
    const std::vector<ChangeLabel>& labels) {
    auto begin = boost::sregex_iterator(rendered.begin(), rendered.end(), re);
    for (auto it = begin; it != boost::sregex_iterator(); ++it) {
        const std::size_t match_begin = static_cast<std::size_t>(it->position(std::size_t{0}));
        const std::size_t match_end =
            match_begin + static_cast<std::size_t>(it->length(static_cast<int>(0)));
        for (std::size_t t = 0; t < spans.size(); ++t) {
            if (labels[t] != ChangeLabel::Replace) continue;
            if (spans[t].first < match_end && match_begin < spans[t].second) {
                return std::make_pair(match_begin, match_end);
            }
        }
    }
    return std::nullopt;
}

struct ReplaceContext {
    std::string wa_rendered;
    std::string ac_rendered;
    std::vector<std::pair<std::size_t, std::size_t>> wa_spans;
    std::vector<std::pair<std::size_t, std::size_t>> ac_spans;
    bool wa_has_replace = false;
    bool ac_has_replace = false;
};

}  // namespace

std::vector<ErrorLabel> classify(const ChangeSet& changes, const RuleSet& rules) {
    std::vector<ErrorLabel> labels;

    for (std::size_t op_index = 0; op_index < changes.ops.size(); ++op_index) {
        const LineOp& op = changes.ops[op_index];
        if (op.label == ChangeLabel::Equal) continue;

        std::optional<ReplaceContext> ctx;
        if (op.label == ChangeLabel::Replace) {
            ctx.emplace();
            ctx->wa_rendered = render_line(*op.wa_line);
            ctx->ac_rendered = render_line(*op.ac_line);
            ctx->wa_spans = token_spans(*op.wa_line);
            ctx->ac_spans = token_spans(*op.ac_line);
            ctx->wa_has_replace = has_replace(op.token_labels_wa);
            ctx->ac_has_replace = has_replace(op.token_labels_ac);
        }

        for (const Rule& rule : rules.rules) {
            ErrorLabel label;
            label.pair_id = changes.pair_id;
            label.rule_name = rule.name;
            label.summary = rule.summary;
            label.op_index = op_index;

            if (rule.name == "wrong indent") {
                // Triggered by the diff's indent flag; control tokens
                // render as nothing, so no pattern can see them.
                if (op.label == ChangeLabel::Replace && op.indent_changed) {
                    label.side = Side::Both;
                    labels.push_back(std::move(label));
                }
                continue;
            }

            switch (rule.category) {
                case RuleCategory::Insert: {
                    if (op.label != ChangeLabel::Insert) break;
                    const std::string rendered = render_line(*op.ac_line);
                    if (boost::regex_match(rendered, rule.compiled)) {
                        label.side = Side::AC;
                        label.span_end = rendered.size();
                        labels.push_back(std::move(label));
                    }
                    break;
                }
                case RuleCategory::Delete: {
                    if (op.label != ChangeLabel::Delete) break;
                    const std::string rendered = render_line(*op.wa_line);
                    if (boost::regex_match(rendered, rule.compiled)) {
                        label.side = Side::WA;
                        label.span_end = rendered.size();
                        labels.push_back(std::move(label));
                    }
                    break;
                }
                case RuleCategory::LineReplace: {
                    if (op.label != ChangeLabel::Replace) break;
                    // A whole-line match implies the matched range holds
                    // a Replace token only when the side has one.
                    const bool wa_match =
                        ctx->wa_has_replace &&
                        boost::regex_match(ctx->wa_rendered, rule.compiled);
                    const bool ac_match =
                        ctx->ac_has_replace &&
                        boost::regex_match(ctx->ac_rendered, rule.compiled);
                    if (!wa_match && !ac_match) break;
                    label.side = wa_match && ac_match ? Side::Both
                                 : wa_match           ? Side::WA
                                                      : Side::AC;
                    label.span_end = wa_match ? ctx->wa_rendered.size()
                                              : ctx->ac_rendered.size();
                    labels.push_back(std::move(label));
                    break;
                }
                case RuleCategory::WithinReplace: {
                    if (op.label != ChangeLabel::Replace) break;
                    const auto wa_span = within_match(rule.compiled, ctx->wa_rendered,
                                                      ctx->wa_spans, op.token_labels_wa);
                    const auto ac_span = within_match(rule.compiled, ctx->ac_rendered,
                                                      ctx->ac_spans, op.token_labels_ac);
                    if (!wa_span && !ac_span) break;
                    label.side = wa_span && ac_span ? Side::Both
                                 : wa_span          ? Side::WA
                                                    : Side::AC;
                    const auto& span = wa_span ? *wa_span : *ac_span;
                    label.span_start = span.first;
                    label.span_end = span.second;
                    labels.push_back(std::move(label));
                    break;
                }
                case RuleCategory::TokenReplace: {
                    if (op.label != ChangeLabel::Replace) break;
                    // Both sides must contribute a matching Replace
                    // token, e.g. numeric -> numeric for "wrong value".
                    auto first_match = [&](const LogicalLine& line,
                                           const std::vector<ChangeLabel>& token_labels)
                        -> std::optional<std::size_t> {
                        for (std::size_t t = 0; t < line.tokens.size(); ++t) {
                            if (token_labels[t] != ChangeLabel::Replace) continue;
                            if (boost::regex_match(line.tokens[t].text, rule.compiled)) {
                                return t;
                            }
                        }
                        return std::nullopt;
                    };
                    const auto wa_token = first_match(*op.wa_line, op.token_labels_wa);
                    if (!wa_token) break;
                    const auto ac_token = first_match(*op.ac_line, op.token_labels_ac);
                    if (!ac_token) break;
                    label.side = Side::Both;
                    label.span_start = *wa_token;
                    label.span_end = *ac_token;
                    labels.push_back(std::move(label));
                    break;
                }
            }
        }
    }
    return labels;
}

std::vector<ErrorLabel> summarize(std::vector<ErrorLabel> labels, const RuleSet& rules) {
    for (ErrorLabel& label : labels) {
        const Rule* rule = rules.find(label.rule_name);
        if (rule == nullptr) {
            throw std::invalid_argument("summarize: unknown rule '" + label.rule_name + "'");
        }
        label.summary = rule->summary;
    }
    return labels;
}

std::vector<ErrorLabel> dedup_per_pair(const std::vector<ErrorLabel>& labels) {
    std::vector<ErrorLabel> out;
    std::set<std::pair<std::string, std::string>> seen;
    for (const ErrorLabel& label : labels) {
        if (seen.emplace(label.pair_id, label.summary).second) {
            out.push_back(label);
        }
    }
    return out;
}

ScoreResult score_against_gold(const std::vector<ErrorLabel>& labels,
                               const std::vector<ErrorLabel>& gold) {
    std::set<std::tuple<std::string, std::string, std::size_t>> gold_keys;
    for (const ErrorLabel& label : gold) {
        gold_keys.emplace(label.pair_id, label.rule_name, label.op_index);
    }
    ScoreResult result;
    result.total = labels.size();
    for (const ErrorLabel& label : labels) {
        if (gold_keys.count({label.pair_id, label.rule_name, label.op_index})) {
            ++result.correct;
        }
    }
    if (result.total > 0) {
        result.accuracy = static_cast<double>(result.correct) /
                          static_cast<double>(result.total);
    }
    return result;
}

}  // namespace errclass
