#include "errclass/diff.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace errclass {

namespace {

// Index pairs (a_i, b_j) of one longest common subsequence, in order.
template <typename T>
std::vector<std::pair<std::size_t, std::size_t>> lcs_matches(const std::vector<T>& a,
                                                             const std::vector<T>& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            dp[i][j] = a[i - 1] == b[j - 1] ? dp[i - 1][j - 1] + 1
                                            : std::max(dp[i - 1][j], dp[i][j - 1]);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> matches;
    std::size_t i = n;
    std::size_t j = m;
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1]) {
            matches.emplace_back(i - 1, j - 1);
            --i;
            --j;
        } else if (dp[i][j - 1] >= dp[i - 1][j]) {
            --j;
        } else {
            --i;
        }
    }
    std::reverse(matches.begin(), matches.end());
    return matches;
}

struct LineKey {
    std::string rendered;
    int depth;
    bool operator==(const LineKey&) const = default;
    auto operator<=>(const LineKey&) const = default;
};

std::vector<LineKey> line_keys(const NormalizedProgram& program) {
    std::vector<LineKey> keys;
    keys.reserve(program.lines.size());
    for (const LogicalLine& line : program.lines) {
        keys.push_back({render_line(line), line.indent_depth});
    }
    return keys;
}

std::vector<LineOp> diff_lines_directed(const NormalizedProgram& wa,
                                        const NormalizedProgram& ac,
                                        const std::vector<LineKey>& wa_keys,
                                        const std::vector<LineKey>& ac_keys) {
    std::vector<std::string> wa_rendered;
    std::vector<std::string> ac_rendered;
    for (const LineKey& k : wa_keys) wa_rendered.push_back(k.rendered);
    for (const LineKey& k : ac_keys) ac_rendered.push_back(k.rendered);
    const auto matches = lcs_matches(wa_rendered, ac_rendered);

    std::vector<LineOp> ops;
    std::size_t wi = 0;
    std::size_t ai = 0;
    auto emit_gap = [&](std::size_t wa_end, std::size_t ac_end) {
        const std::size_t deletions = wa_end - wi;
        const std::size_t insertions = ac_end - ai;
        const std::size_t fused = std::min(deletions, insertions);
        for (std::size_t k = 0; k < fused; ++k) {
            LineOp op;
            op.label = ChangeLabel::Replace;
            op.wa_line = wa.lines[wi + k];
            op.ac_line = ac.lines[ai + k];
            op.indent_changed = wa_keys[wi + k].depth != ac_keys[ai + k].depth;
            ops.push_back(std::move(op));
        }
        for (std::size_t k = fused; k < deletions; ++k) {
            LineOp op;
            op.label = ChangeLabel::Delete;
            op.wa_line = wa.lines[wi + k];
            ops.push_back(std::move(op));
        }
        for (std::size_t k = fused; k < insertions; ++k) {
            LineOp op;
            op.label = ChangeLabel::Insert;
            op.ac_line = ac.lines[ai + k];
            ops.push_back(std::move(op));
        }
        wi = wa_end;
        ai = ac_end;
    };

    for (const auto& [mi, mj] : matches) {
        emit_gap(mi, mj);
        LineOp op;
        op.wa_line = wa.lines[mi];
        op.ac_line = ac.lines[mj];
        if (wa_keys[mi].depth == ac_keys[mj].depth) {
            op.label = ChangeLabel::Equal;
        } else {
            op.label = ChangeLabel::Replace;
            op.indent_changed = true;
        }
        ops.push_back(std::move(op));
        ++wi;
        ++ai;
    }
    emit_gap(wa.lines.size(), ac.lines.size());
    return ops;
}

std::vector<LineOp> mirror(std::vector<LineOp> ops) {
    for (LineOp& op : ops) {
        std::swap(op.wa_line, op.ac_line);
        std::swap(op.token_labels_wa, op.token_labels_ac);
        if (op.label == ChangeLabel::Insert) {
            op.label = ChangeLabel::Delete;
        } else if (op.label == ChangeLabel::Delete) {
            op.label = ChangeLabel::Insert;
        }
    }
    return ops;
}

}  // namespace

std::vector<LineOp> diff_lines(const NormalizedProgram& wa, const NormalizedProgram& ac) {
    const auto wa_keys = line_keys(wa);
    const auto ac_keys = line_keys(ac);
    // Align the lexicographically smaller side first so that swapping
    // the arguments yields the mirrored op list exactly.
    if (ac_keys < wa_keys) {
        return mirror(diff_lines_directed(ac, wa, ac_keys, wa_keys));
    }
    return diff_lines_directed(wa, ac, wa_keys, ac_keys);
}

std::pair<std::vector<ChangeLabel>, std::vector<ChangeLabel>> diff_tokens(
    const LogicalLine& wa_line, const LogicalLine& ac_line) {
    std::vector<std::string> wa_texts;
    std::vector<std::string> ac_texts;
    for (const Token& token : wa_line.tokens) wa_texts.push_back(token.text);
    for (const Token& token : ac_line.tokens) ac_texts.push_back(token.text);

    std::vector<ChangeLabel> wa_labels(wa_texts.size(), ChangeLabel::Replace);
    std::vector<ChangeLabel> ac_labels(ac_texts.size(), ChangeLabel::Replace);
    const bool flipped = ac_texts < wa_texts;
    const auto matches = flipped ? lcs_matches(ac_texts, wa_texts)
                                 : lcs_matches(wa_texts, ac_texts);
    for (const auto& [i, j] : matches) {
        wa_labels[flipped ? j : i] = ChangeLabel::Equal;
        ac_labels[flipped ? i : j] = ChangeLabel::Equal;
    }
    return {std::move(wa_labels), std::move(ac_labels)};
}

ChangeSet extract_changes(const CodePair& pair) {
    ChangeSet changes;
    changes.pair_id = pair.pair_id;

    LexResult wa_lex = tokenize(pair.wa_source);
    LexResult ac_lex = tokenize(pair.ac_source);
    for (const std::string& d : wa_lex.diagnostics) changes.warnings.push_back("wa: " + d);
    for (const std::string& d : ac_lex.diagnostics) changes.warnings.push_back("ac: " + d);

    const NormalizedProgram wa = normalize(wa_lex.tokens);
    const NormalizedProgram ac = normalize(ac_lex.tokens);
    changes.ops = diff_lines(wa, ac);
    for (LineOp& op : changes.ops) {
        if (op.label != ChangeLabel::Replace) continue;
        auto [wa_labels, ac_labels] = diff_tokens(*op.wa_line, *op.ac_line);
        op.token_labels_wa = std::move(wa_labels);
        op.token_labels_ac = std::move(ac_labels);
    }
    return changes;
}

std::string dump_ops(const std::vector<LineOp>& ops) {
    std::ostringstream out;
    for (const LineOp& op : ops) {
        switch (op.label) {
            case ChangeLabel::Equal:
                out << "= " << render_line(*op.wa_line) << '\n';
                break;
            case ChangeLabel::Delete:
                out << "- " << render_line(*op.wa_line) << '\n';
                break;
            case ChangeLabel::Insert:
                out << "+ " << render_line(*op.ac_line) << '\n';
                break;
            case ChangeLabel::Replace:
                out << "~ " << render_line(*op.wa_line) << " => "
                    << render_line(*op.ac_line) << '\n';
                break;
        }
    }
    return out.str();
}

}  // namespace errclass
