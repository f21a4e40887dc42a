#include "errclass/metrics.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "errclass/text.hpp"

namespace errclass {

namespace {

std::vector<std::string> flat_token_texts(const NormalizedProgram& program) {
    std::vector<std::string> texts;
    for (const LogicalLine& line : program.lines) {
        for (const Token& token : line.tokens) texts.push_back(token.text);
    }
    return texts;
}

double similarity(std::size_t distance, std::size_t len_a, std::size_t len_b) {
    const std::size_t longest = std::max(len_a, len_b);
    if (longest == 0) return 1.0;
    return 1.0 - static_cast<double>(distance) / static_cast<double>(longest);
}

}  // namespace

std::size_t token_edit_distance(const NormalizedProgram& a, const NormalizedProgram& b) {
    return levenshtein(flat_token_texts(a), flat_token_texts(b));
}

int cyclomatic_complexity(const NormalizedProgram& program) {
    static const std::set<std::string_view> kDecisionKeywords = {
        "if", "elif", "for", "while", "and", "or", "except"};
    int decisions = 0;
    for (const LogicalLine& line : program.lines) {
        for (const Token& token : line.tokens) {
            if (token.kind == TokenKind::Keyword && kDecisionKeywords.count(token.text)) {
                ++decisions;
            }
        }
    }
    return 1 + decisions;
}

PairStats pair_stats(const CodePair& pair, std::size_t error_count) {
    const NormalizedProgram wa = normalize(tokenize(pair.wa_source).tokens);
    const NormalizedProgram ac = normalize(tokenize(pair.ac_source).tokens);
    const auto wa_texts = flat_token_texts(wa);
    const auto ac_texts = flat_token_texts(ac);

    PairStats stats;
    stats.char_edit_distance = char_edit_distance(pair.wa_source, pair.ac_source);
    stats.token_edit_distance = levenshtein(wa_texts, ac_texts);
    stats.wa_chars = decode_utf8(pair.wa_source).size();
    stats.ac_chars = decode_utf8(pair.ac_source).size();
    stats.char_similarity = similarity(stats.char_edit_distance, stats.wa_chars, stats.ac_chars);
    stats.token_similarity =
        similarity(stats.token_edit_distance, wa_texts.size(), ac_texts.size());
    stats.wa_lines = wa.lines.size();
    stats.ac_lines = ac.lines.size();
    stats.wa_tokens = wa_texts.size();
    stats.ac_tokens = ac_texts.size();
    stats.wa_cyclomatic = cyclomatic_complexity(wa);
    stats.ac_cyclomatic = cyclomatic_complexity(ac);
    stats.error_count = error_count;
    return stats;
}

CorpusStats corpus_statistics(const std::vector<CodePair>& pairs,
                              const std::vector<ErrorLabel>& labels,
                              bool sample_sd) {
    if (pairs.empty()) {
        throw std::invalid_argument("corpus_statistics: no pairs");
    }

    std::map<std::string, std::size_t> errors_per_pair;
    for (const ErrorLabel& label : labels) ++errors_per_pair[label.pair_id];

    CorpusStats stats;
    stats.n_pairs = pairs.size();
    std::set<std::string> users;
    std::set<std::string> problems;

    std::vector<PairStats> per_pair;
    per_pair.reserve(pairs.size());
    for (const CodePair& pair : pairs) {
        users.insert(pair.user_id);
        problems.insert(pair.problem_id);
        const auto it = errors_per_pair.find(pair.pair_id);
        per_pair.push_back(pair_stats(pair, it == errors_per_pair.end() ? 0 : it->second));
    }
    stats.n_users = users.size();
    stats.n_problems = problems.size();

    auto aggregate = [&](auto field) {
        const double n = static_cast<double>(per_pair.size());
        double sum = 0.0;
        for (const PairStats& p : per_pair) sum += static_cast<double>(field(p));
        const double mean = sum / n;
        double square_sum = 0.0;
        for (const PairStats& p : per_pair) {
            const double d = static_cast<double>(field(p)) - mean;
            square_sum += d * d;
        }
        const double divisor = sample_sd && per_pair.size() > 1 ? n - 1.0 : n;
        return Aggregate{mean, std::sqrt(square_sum / divisor)};
    };

    stats.char_edit_distance = aggregate([](const PairStats& p) { return p.char_edit_distance; });
    stats.token_edit_distance =
        aggregate([](const PairStats& p) { return p.token_edit_distance; });
    stats.char_similarity = aggregate([](const PairStats& p) { return p.char_similarity; });
    stats.token_similarity = aggregate([](const PairStats& p) { return p.token_similarity; });
    stats.wa_lines = aggregate([](const PairStats& p) { return p.wa_lines; });
    stats.ac_lines = aggregate([](const PairStats& p) { return p.ac_lines; });
    stats.wa_chars = aggregate([](const PairStats& p) { return p.wa_chars; });
    stats.ac_chars = aggregate([](const PairStats& p) { return p.ac_chars; });
    stats.wa_tokens = aggregate([](const PairStats& p) { return p.wa_tokens; });
    stats.ac_tokens = aggregate([](const PairStats& p) { return p.ac_tokens; });
    stats.wa_cyclomatic = aggregate([](const PairStats& p) { return p.wa_cyclomatic; });
    stats.ac_cyclomatic = aggregate([](const PairStats& p) { return p.ac_cyclomatic; });
    stats.error_count = aggregate([](const PairStats& p) { return p.error_count; });
    return stats;
}

}  // namespace errclass
