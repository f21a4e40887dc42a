#include "errclass/lexer.hpp"

#include <array>
#include <sstream>
#include <unordered_set>

namespace errclass {

namespace {

const std::unordered_set<std::string_view> kKeywords = {
    "False", "None",   "True",  "and",      "as",     "assert", "async",
    "await", "break",  "class", "continue", "def",    "del",    "elif",
    "else",  "except", "finally", "for",    "from",   "global", "if",
    "import", "in",    "is",    "lambda",   "nonlocal", "not",  "or",
    "pass",  "raise",  "return", "try",     "while",  "with",   "yield"};

// Longest first so that ** is preferred over *, etc.
constexpr std::array<std::string_view, 47> kOperators = {
    "**=", "//=", ">>=", "<<=", "...",
    "!=",  ">=",  "<=",  "==",  "->", ":=", "+=", "-=", "*=", "/=",
    "%=",  "@=",  "&=",  "|=",  "^=",
    "**",  "//",  "<<",  ">>",
    "(",   ")",   "[",   "]",   "{",  "}",  ",",  ":",  ".",  ";",
    "@",   "=",   "+",   "-",   "*",  "/",  "%",  "&",  "|",  "^",
    "~",   "<",   ">"};

constexpr int kTabSize = 8;

bool is_ident_start(char c) {
    const unsigned char u = static_cast<unsigned char>(c);
    return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || c == '_' || u >= 0x80;
}

bool is_ident_cont(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_string_prefix(std::string_view word) {
    if (word.size() > 2) return false;
    for (char c : word) {
        switch (c) {
            case 'r': case 'R': case 'b': case 'B':
            case 'u': case 'U': case 'f': case 'F':
                break;
            default:
                return false;
        }
    }
    return true;
}

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;
    int line = 1;
    int paren_depth = 0;
    bool at_line_start = true;
    bool line_has_visible = false;
    std::vector<int> indents{0};
    LexResult result;

    explicit Lexer(std::string_view s) : src(s) {}

    bool eof() const { return pos >= src.size(); }
    char peek(std::size_t off = 0) const {
        return pos + off < src.size() ? src[pos + off] : '\0';
    }

    void emit(TokenKind kind, std::string text, int at_line) {
        if (is_visible(kind)) line_has_visible = true;
        result.tokens.push_back({kind, std::move(text), at_line});
    }

    void diagnose(const std::string& message) {
        result.diagnostics.push_back("line " + std::to_string(line) + ": " + message);
    }

    void run() {
        while (!eof()) {
            if (at_line_start && paren_depth == 0) {
                handle_indentation();
                if (eof()) break;
            }
            scan();
        }
        if (line_has_visible) emit(TokenKind::Newline, "", line);
        while (indents.back() > 0) {
            indents.pop_back();
            emit(TokenKind::Dedent, "", line);
        }
    }

    // Measures the indentation of the next physical line that carries
    // content, skipping blank and comment-only lines entirely.
    void handle_indentation() {
        int col = 0;
        for (;;) {
            col = 0;
            while (!eof()) {
                const char c = peek();
                if (c == ' ') {
                    ++col;
                } else if (c == '\t') {
                    col = (col / kTabSize + 1) * kTabSize;
                } else if (c == '\f' || c == '\r') {
                    // ignored
                } else {
                    break;
                }
                ++pos;
            }
            if (eof()) return;
            if (peek() == '\n') {
                ++pos;
                ++line;
                continue;
            }
            if (peek() == '#') {
                while (!eof() && peek() != '\n') ++pos;
                continue;
            }
            break;
        }
        if (col > indents.back()) {
            indents.push_back(col);
            emit(TokenKind::Indent, "", line);
        } else {
            while (col < indents.back()) {
                indents.pop_back();
                emit(TokenKind::Dedent, "", line);
            }
            if (col != indents.back()) {
                // Malformed dedent: snap to the nearest open level.
                diagnose("inconsistent dedent");
            }
        }
        at_line_start = false;
        line_has_visible = false;
    }

    void scan() {
        const char c = peek();
        if (c == ' ' || c == '\t' || c == '\f' || c == '\r') {
            ++pos;
            return;
        }
        if (c == '#') {
            while (!eof() && peek() != '\n') ++pos;
            return;
        }
        if (c == '\\' && (peek(1) == '\n' || (peek(1) == '\r' && peek(2) == '\n'))) {
            pos += peek(1) == '\r' ? 3 : 2;
            ++line;
            return;
        }
        if (c == '\n') {
            if (paren_depth == 0) {
                if (line_has_visible) emit(TokenKind::Newline, "", line);
                at_line_start = true;
            }
            ++pos;
            ++line;
            return;
        }
        if (is_ident_start(c)) {
            scan_word();
            return;
        }
        if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
            scan_number();
            return;
        }
        if (c == '\'' || c == '"') {
            scan_string(pos);
            return;
        }
        for (std::string_view op : kOperators) {
            if (src.substr(pos, op.size()) == op) {
                if (c == '(' || c == '[' || c == '{') ++paren_depth;
                if (c == ')' || c == ']' || c == '}') {
                    if (paren_depth > 0) --paren_depth;
                }
                emit(TokenKind::Operator, std::string(op), line);
                pos += op.size();
                return;
            }
        }
        // Not part of the language; keep the character so the diff still
        // sees it.
        emit(TokenKind::Operator, std::string(1, c), line);
        ++pos;
    }

    void scan_word() {
        const std::size_t start = pos;
        while (!eof() && is_ident_cont(peek())) ++pos;
        const std::string_view word = src.substr(start, pos - start);
        if ((peek() == '\'' || peek() == '"') && is_string_prefix(word)) {
            scan_string(start);
            return;
        }
        emit(is_keyword(word) ? TokenKind::Keyword : TokenKind::Name, std::string(word), line);
    }

    void scan_number() {
        const std::size_t start = pos;
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'o' ||
                              peek(1) == 'O' || peek(1) == 'b' || peek(1) == 'B')) {
            pos += 2;
            while (!eof() && (is_ident_cont(peek()))) ++pos;
            emit(TokenKind::Number, std::string(src.substr(start, pos - start)), line);
            return;
        }
        auto digits = [&] {
            while (!eof() && (is_digit(peek()) || peek() == '_')) ++pos;
        };
        digits();
        if (peek() == '.') {
            ++pos;
            digits();
        }
        if (peek() == 'e' || peek() == 'E') {
            const std::size_t mark = pos;
            ++pos;
            if (peek() == '+' || peek() == '-') ++pos;
            if (is_digit(peek())) {
                digits();
            } else {
                pos = mark;  // "e" belongs to a following identifier
            }
        }
        if (peek() == 'j' || peek() == 'J') ++pos;
        emit(TokenKind::Number, std::string(src.substr(start, pos - start)), line);
    }

    // pos points at the opening quote; text_start includes any prefix.
    void scan_string(std::size_t text_start) {
        const char quote = peek();
        const int start_line = line;
        const bool triple = peek(1) == quote && peek(2) == quote;
        pos += triple ? 3 : 1;
        bool closed = false;
        while (!eof()) {
            const char c = peek();
            if (c == '\\') {
                if (peek(1) == '\n') ++line;
                pos += pos + 1 < src.size() ? 2 : 1;
                continue;
            }
            if (triple) {
                if (c == quote && peek(1) == quote && peek(2) == quote) {
                    pos += 3;
                    closed = true;
                    break;
                }
                if (c == '\n') ++line;
                ++pos;
            } else {
                if (c == '\n') break;
                ++pos;
                if (c == quote) {
                    closed = true;
                    break;
                }
            }
        }
        if (!closed) diagnose("unterminated string literal");
        emit(TokenKind::String, std::string(src.substr(text_start, pos - text_start)),
             start_line);
    }
};

}  // namespace

bool operator==(const Token& lhs, const Token& rhs) {
    return lhs.kind == rhs.kind && lhs.text == rhs.text;
}

bool is_keyword(std::string_view word) { return kKeywords.count(word) > 0; }

bool is_visible(TokenKind kind) {
    return kind != TokenKind::Newline && kind != TokenKind::Indent &&
           kind != TokenKind::Dedent;
}

LexResult tokenize(std::string_view source) {
    Lexer lexer(source);
    lexer.run();
    return std::move(lexer.result);
}

NormalizedProgram normalize(const std::vector<Token>& tokens) {
    NormalizedProgram program;
    int depth = 0;
    LogicalLine current;
    bool open = false;
    for (const Token& token : tokens) {
        switch (token.kind) {
            case TokenKind::Indent:
                ++depth;
                break;
            case TokenKind::Dedent:
                if (depth > 0) --depth;
                break;
            case TokenKind::Newline:
                if (open) {
                    program.lines.push_back(std::move(current));
                    current = {};
                    open = false;
                }
                break;
            default:
                if (!open) {
                    current.indent_depth = depth;
                    open = true;
                }
                current.tokens.push_back(token);
                break;
        }
    }
    if (open) program.lines.push_back(std::move(current));
    return program;
}

std::string render_line(const LogicalLine& line) {
    std::string out;
    for (const Token& token : line.tokens) {
        if (!out.empty()) out += ' ';
        out += token.text;
    }
    return out;
}

std::string debug_dump(const NormalizedProgram& program) {
    std::ostringstream out;
    for (const LogicalLine& line : program.lines) {
        out << line.indent_depth << '\t' << render_line(line) << '\n';
    }
    return out.str();
}

}  // namespace errclass
