#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "errclass/lexer.hpp"
#include "test_support.hpp"

using namespace errclass;

namespace {

std::vector<std::string> visible_texts(std::string_view source) {
    std::vector<std::string> texts;
    for (const Token& token : tokenize(source).tokens) {
        if (is_visible(token.kind)) texts.push_back(token.text);
    }
    return texts;
}

int balance(const std::vector<Token>& tokens) {
    int depth = 0;
    int min_depth = 0;
    for (const Token& token : tokens) {
        if (token.kind == TokenKind::Indent) ++depth;
        if (token.kind == TokenKind::Dedent) --depth;
        min_depth = std::min(min_depth, depth);
    }
    CHECK(min_depth >= 0);
    return depth;
}

}  // namespace

TEST_CASE("empty source yields no tokens") {
    CHECK(tokenize("").tokens.empty());
    CHECK(tokenize("   \n\n  # only a comment\n").tokens.empty());
}

TEST_CASE("comments and whitespace are dropped") {
    const auto result = tokenize("x = 1  # note\n");
    REQUIRE(result.tokens.size() == 4);
    CHECK(result.tokens[0].kind == TokenKind::Name);
    CHECK(result.tokens[0].text == "x");
    CHECK(result.tokens[1].kind == TokenKind::Operator);
    CHECK(result.tokens[1].text == "=");
    CHECK(result.tokens[2].kind == TokenKind::Number);
    CHECK(result.tokens[2].text == "1");
    CHECK(result.tokens[3].kind == TokenKind::Newline);
    CHECK(result.tokens[3].text.empty());
}

TEST_CASE("block structure uses balanced indent tokens") {
    const auto result = tokenize("if a:\n    b()\n");
    const auto& tokens = result.tokens;
    // if a : NEWLINE INDENT b ( ) NEWLINE DEDENT
    REQUIRE(tokens.size() == 10);
    CHECK(tokens[0].kind == TokenKind::Keyword);
    CHECK(tokens[4].kind == TokenKind::Indent);
    CHECK(tokens[5].text == "b");
    CHECK(tokens[9].kind == TokenKind::Dedent);
    CHECK(balance(tokens) == 0);
    CHECK(result.diagnostics.empty());
}

TEST_CASE("tab indentation and nested blocks") {
    const auto result = tokenize("if a:\n\tif b:\n\t\tc()\n");
    CHECK(balance(result.tokens) == 0);
    const auto program = normalize(result.tokens);
    REQUIRE(program.lines.size() == 3);
    CHECK(program.lines[2].indent_depth == 2);
}

TEST_CASE("inconsistent dedent snaps to the nearest open level") {
    const auto result = tokenize("if a:\n    b()\n  c()\n");
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].find("inconsistent dedent") != std::string::npos);
    const auto program = normalize(result.tokens);
    REQUIRE(program.lines.size() == 3);
    CHECK(program.lines[2].indent_depth == 0);
    CHECK(balance(result.tokens) == 0);
}

TEST_CASE("strings keep prefixes and quotes and stay atomic") {
    CHECK(visible_texts("s = 'a b'\n") == std::vector<std::string>{"s", "=", "'a b'"});
    CHECK(visible_texts("s = f\"x={n}\"\n") ==
          std::vector<std::string>{"s", "=", "f\"x={n}\""});
    CHECK(visible_texts("s = '''one\ntwo'''\n") ==
          std::vector<std::string>{"s", "=", "'''one\ntwo'''"});
}

TEST_CASE("unterminated string is a diagnostic, not a failure") {
    const auto result = tokenize("s = 'abc\nprint(s)\n");
    REQUIRE_FALSE(result.diagnostics.empty());
    CHECK(result.diagnostics[0].find("unterminated") != std::string::npos);
    // Lexing continues on the next line.
    const auto program = normalize(result.tokens);
    CHECK(program.lines.size() == 2);
}

TEST_CASE("numbers keep their exact source spelling") {
    CHECK(visible_texts("x = 3.14\n")[2] == "3.14");
    CHECK(visible_texts("x = .5\n")[2] == ".5");
    CHECK(visible_texts("x = 1.\n")[2] == "1.");
    CHECK(visible_texts("x = 0x1F\n")[2] == "0x1F");
    CHECK(visible_texts("x = 1e-3\n")[2] == "1e-3");
    CHECK(visible_texts("x = 2j\n")[2] == "2j");
    CHECK(visible_texts("x = 1_000\n")[2] == "1_000");
}

TEST_CASE("operators use longest match") {
    CHECK(visible_texts("a **= 2\n")[1] == "**=");
    CHECK(visible_texts("a ** 2\n")[1] == "**");
    CHECK(visible_texts("a // b\n")[1] == "//");
    CHECK(visible_texts("a != b\n")[1] == "!=");
    CHECK(visible_texts("a < b\n")[1] == "<");
}

TEST_CASE("unrecognized characters become one-char operator tokens") {
    const auto texts = visible_texts("a $ b ? c\n");
    CHECK(texts == std::vector<std::string>{"a", "$", "b", "?", "c"});
    const auto result = tokenize("a $ b\n");
    CHECK(result.tokens[1].kind == TokenKind::Operator);
}

TEST_CASE("implicit joining inside brackets makes one logical line") {
    const auto program = normalize(tokenize("f(a,\n   b)\nprint(1)\n").tokens);
    REQUIRE(program.lines.size() == 2);
    CHECK(render_line(program.lines[0]) == "f ( a , b )");
}

TEST_CASE("backslash continuation joins physical lines") {
    const auto program = normalize(tokenize("x = 1 + \\\n    2\n").tokens);
    REQUIRE(program.lines.size() == 1);
    CHECK(render_line(program.lines[0]) == "x = 1 + 2");
}

TEST_CASE("normalize folds structure and drops blank lines") {
    CHECK(normalize({}).lines.empty());
    const auto one = normalize(tokenize("x = 1\n").tokens);
    REQUIRE(one.lines.size() == 1);
    CHECK(one.lines[0].indent_depth == 0);
    CHECK(render_line(one.lines[0]) == "x = 1");

    const auto block = normalize(tokenize("if a:\n    b()\n").tokens);
    REQUIRE(block.lines.size() == 2);
    CHECK(block.lines[1].indent_depth == 1);

    const auto gaps = normalize(tokenize("x = 1\n\n\n# gap\n\ny = 2\n").tokens);
    CHECK(gaps.lines.size() == 2);
}

TEST_CASE("render_line") {
    CHECK(render_line({}) == "");
    const auto program = normalize(tokenize("print()\n").tokens);
    REQUIRE(program.lines.size() == 1);
    CHECK(render_line(program.lines[0]) == "print ( )");
    const auto fig3 = normalize(tokenize("x = int(input())\n").tokens);
    CHECK(render_line(fig3.lines[0]) == "x = int ( input ( ) )");
}

TEST_CASE("debug dump golden") {
    const auto program = normalize(tokenize("if a:\n    b()\nprint(a)\n").tokens);
    CHECK(debug_dump(program) == "0\tif a :\n1\tb ( )\n0\tprint ( a )\n");
}

TEST_CASE("keywords are distinguished from names") {
    const auto result = tokenize("for i in items\n");
    CHECK(result.tokens[0].kind == TokenKind::Keyword);
    CHECK(result.tokens[1].kind == TokenKind::Name);
    CHECK(result.tokens[2].kind == TokenKind::Keyword);
    CHECK(result.tokens[3].kind == TokenKind::Name);
    CHECK(is_keyword("elif"));
    CHECK_FALSE(is_keyword("match"));
}

TEST_CASE("source lines are tracked") {
    const auto result = tokenize("a = 1\nb = 2\n");
    CHECK(result.tokens[0].source_line == 1);
    CHECK(result.tokens[4].source_line == 2);
}

TEST_CASE("property: indent tokens balance on random programs") {
    support::ProgramGenerator gen(1234);
    for (int t = 0; t < 300; ++t) {
        const std::string source = gen.program();
        CAPTURE(source);
        CHECK(balance(tokenize(source).tokens) == 0);
    }
}

TEST_CASE("property: re-tokenizing a rendered line is stable") {
    support::ProgramGenerator gen(99);
    for (int t = 0; t < 300; ++t) {
        const auto program = normalize(tokenize(gen.program()).tokens);
        for (const LogicalLine& line : program.lines) {
            const std::string rendered = render_line(line);
            const auto again = normalize(tokenize(rendered + "\n").tokens);
            REQUIRE(again.lines.size() == 1);
            CHECK(render_line(again.lines[0]) == rendered);
        }
    }
}

TEST_CASE("property: tokenize never throws on arbitrary text") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 120);
    std::uniform_int_distribution<int> byte(1, 255);
    for (int t = 0; t < 500; ++t) {
        std::string source;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) source += static_cast<char>(byte(rng));
        CHECK_NOTHROW(tokenize(source));
        CHECK(balance(tokenize(source).tokens) == 0);
    }
}

TEST_CASE("property: visible tokens are comment-insensitive") {
    support::ProgramGenerator gen(4242);
    std::mt19937 rng(17);
    for (int t = 0; t < 200; ++t) {
        const std::string source = gen.program();
        std::string commented;
        for (std::size_t i = 0; i < source.size(); ++i) {
            if (source[i] == '\n' && rng() % 2 == 0) commented += "  # trailing note";
            commented += source[i];
        }
        commented += "# final\n";
        const auto plain = support::visible_tokens(tokenize(source).tokens);
        const auto noisy = support::visible_tokens(tokenize(commented).tokens);
        REQUIRE(plain.size() == noisy.size());
        for (std::size_t i = 0; i < plain.size(); ++i) CHECK(plain[i] == noisy[i]);
    }
}
