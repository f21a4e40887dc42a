#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errclass/ingest.hpp"
#include "errclass/lexer.hpp"

namespace errclass {

enum class ChangeLabel { Equal, Insert, Delete, Replace };

struct LineOp {
    ChangeLabel label = ChangeLabel::Equal;
    std::optional<LogicalLine> wa_line;  // absent for Insert
    std::optional<LogicalLine> ac_line;  // absent for Delete
    // Per-token labels, filled for Replace ops only.
    std::vector<ChangeLabel> token_labels_wa;
    std::vector<ChangeLabel> token_labels_ac;
    bool indent_changed = false;  // aligned lines have different indent_depth
};

struct ChangeSet {
    std::string pair_id;
    std::vector<LineOp> ops;
    std::vector<std::string> warnings;  // propagated lexer diagnostics
};

// Aligns the rendered lines of both programs (LCS over rendered
// strings). Lines with equal rendering but different indent_depth
// become Replace ops with indent_changed set. Adjacent delete/insert
// runs are fused pairwise into Replace ops; leftovers stay
// Delete/Insert. Token labels are not filled here.
std::vector<LineOp> diff_lines(const NormalizedProgram& wa, const NormalizedProgram& ac);

// LCS alignment over token texts: aligned tokens are Equal, the rest
// Replace.
std::pair<std::vector<ChangeLabel>, std::vector<ChangeLabel>> diff_tokens(
    const LogicalLine& wa_line, const LogicalLine& ac_line);

// Tokenize + normalize both sides, align lines, then fill token labels
// for every Replace op.
ChangeSet extract_changes(const CodePair& pair);

// Debug dump: one op per line, prefixed =, +, - or ~.
std::string dump_ops(const std::vector<LineOp>& ops);

}  // namespace errclass
