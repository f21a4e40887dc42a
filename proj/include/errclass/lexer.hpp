#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace errclass {

enum class TokenKind { Name, Number, String, Operator, Keyword, Newline, Indent, Dedent };

struct Token {
    TokenKind kind;
    std::string text;  // empty for Newline/Indent/Dedent
    int source_line = 1;
};

bool operator==(const Token& lhs, const Token& rhs);

bool is_keyword(std::string_view word);
bool is_visible(TokenKind kind);

struct LexResult {
    std::vector<Token> tokens;
    std::vector<std::string> diagnostics;
};

// Best-effort tokenizer for Python 3 sources. Wrong programs are often
// malformed, so this never throws: unrecognized characters become
// one-character Operator tokens and problems such as unterminated
// strings or inconsistent dedents are reported as diagnostics.
//
// Comments and whitespace are dropped. Logical lines end with Newline;
// block structure is expressed with balanced Indent/Dedent tokens.
LexResult tokenize(std::string_view source);

struct LogicalLine {
    int indent_depth = 0;
    std::vector<Token> tokens;  // visible tokens only
};

struct NormalizedProgram {
    std::vector<LogicalLine> lines;
};

// Groups visible tokens into logical lines; folds Indent/Dedent into
// indent_depth; drops blank logical lines.
NormalizedProgram normalize(const std::vector<Token>& tokens);

// Visible token texts joined by exactly one space.
std::string render_line(const LogicalLine& line);

// One "depth<TAB>rendered" row per logical line.
std::string debug_dump(const NormalizedProgram& program);

}  // namespace errclass
