#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errclass/ingest.hpp"
#include "errclass/lexer.hpp"
#include "errclass/rules.hpp"

namespace errclass {

// Levenshtein distance over the flattened visible-token texts.
std::size_t token_edit_distance(const NormalizedProgram& a, const NormalizedProgram& b);

// 1 + decision points: if/elif/for/while/and/or/except keyword tokens,
// counted at program level (conditional expressions and comprehensions
// contribute through their if/for tokens).
int cyclomatic_complexity(const NormalizedProgram& program);

struct PairStats {
    std::size_t char_edit_distance = 0;
    std::size_t token_edit_distance = 0;
    double char_similarity = 1.0;   // 1 - d / max(len)
    double token_similarity = 1.0;
    std::size_t wa_lines = 0;  // normalized logical lines
    std::size_t ac_lines = 0;
    std::size_t wa_chars = 0;  // code points of the raw source
    std::size_t ac_chars = 0;
    std::size_t wa_tokens = 0;  // visible tokens
    std::size_t ac_tokens = 0;
    int wa_cyclomatic = 1;
    int ac_cyclomatic = 1;
    std::size_t error_count = 0;  // deduped summarized labels
};

PairStats pair_stats(const CodePair& pair, std::size_t error_count);

struct Aggregate {
    double mean = 0.0;
    double sd = 0.0;
};

struct CorpusStats {
    std::size_t n_pairs = 0;
    std::size_t n_users = 0;
    std::size_t n_problems = 0;
    Aggregate char_edit_distance;
    Aggregate token_edit_distance;
    Aggregate char_similarity;
    Aggregate token_similarity;
    Aggregate wa_lines;
    Aggregate ac_lines;
    Aggregate wa_chars;
    Aggregate ac_chars;
    Aggregate wa_tokens;
    Aggregate ac_tokens;
    Aggregate wa_cyclomatic;
    Aggregate ac_cyclomatic;
    Aggregate error_count;
};

// Aggregates pair stats over the corpus. labels must be deduped
// summarized labels. The standard deviation is the population form
// unless sample_sd is set. Throws std::invalid_argument when pairs is
// empty.
CorpusStats corpus_statistics(const std::vector<CodePair>& pairs,
                              const std::vector<ErrorLabel>& labels,
                              bool sample_sd = false);

}  // namespace errclass
