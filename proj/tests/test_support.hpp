#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errclass/diff.hpp"
#include "errclass/ingest.hpp"
#include "errclass/lexer.hpp"
#include "errclass/rules.hpp"

namespace support {

inline errclass::CodePair make_pair(std::string wa, std::string ac,
                                    std::string id = "w1:a1") {
    errclass::CodePair pair;
    pair.pair_id = std::move(id);
    pair.user_id = "u1";
    pair.problem_id = "p1";
    pair.wa_source = std::move(wa);
    pair.ac_source = std::move(ac);
    pair.wa_submitted_at = 1;
    pair.ac_submitted_at = 2;
    return pair;
}

inline std::set<std::string> classify_rule_names(const std::string& wa,
                                                 const std::string& ac) {
    const auto labels = errclass::classify(
        errclass::extract_changes(make_pair(wa, ac)), errclass::default_rule_set());
    std::set<std::string> names;
    for (const errclass::ErrorLabel& label : labels) names.insert(label.rule_name);
    return names;
}

// Small random Python-ish programs for property tests.
struct ProgramGenerator {
    std::mt19937 rng;

    explicit ProgramGenerator(unsigned seed) : rng(seed) {}

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    std::string name() {
        static const char* names[] = {"a", "b", "count", "total", "x", "y", "s", "value"};
        return names[pick(0, 7)];
    }

    std::string expression() {
        switch (pick(0, 4)) {
            case 0: return name();
            case 1: return std::to_string(pick(0, 99));
            case 2: return name() + " + " + std::to_string(pick(1, 9));
            case 3: return name() + " * " + name();
            default: return "int(input())";
        }
    }

    std::string statement() {
        switch (pick(0, 3)) {
            case 0: return name() + " = " + expression();
            case 1: return "print(" + expression() + ")";
            case 2: return name() + " += " + std::to_string(pick(1, 5));
            default: return "pass";
        }
    }

    // depth-structured program with if/for/while blocks
    std::string program(int max_lines = 10) {
        std::string out;
        int depth = 0;
        const int lines = pick(1, max_lines);
        for (int i = 0; i < lines; ++i) {
            if (depth > 0 && pick(0, 2) == 0) depth = pick(0, depth);
            std::string indent(static_cast<std::size_t>(depth) * 4, ' ');
            if (depth < 2 && pick(0, 3) == 0) {
                switch (pick(0, 2)) {
                    case 0: out += indent + "if " + name() + " > " + std::to_string(pick(0, 9)) + ":\n"; break;
                    case 1: out += indent + "for i in range(" + std::to_string(pick(1, 9)) + "):\n"; break;
                    default: out += indent + "while " + name() + ":\n"; break;
                }
                ++depth;
                continue;
            }
            out += indent + statement() + "\n";
        }
        if (out.empty() || out.back() != '\n') out += "\n";
        // A block opener must not end the program without a body.
        if (out.size() >= 2 && out[out.size() - 2] == ':') {
            out += std::string(static_cast<std::size_t>(depth) * 4, ' ') + "pass\n";
        }
        return out;
    }
};

inline std::vector<errclass::Token> visible_tokens(const std::vector<errclass::Token>& tokens) {
    std::vector<errclass::Token> out;
    for (const errclass::Token& token : tokens) {
        if (errclass::is_visible(token.kind)) out.push_back(token);
    }
    return out;
}

}  // namespace support
