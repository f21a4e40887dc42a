#include "errclass/rules.hpp"

namespace errclass {

// Rules match rendered lines: visible token texts joined by single
// spaces. Line rules are anchored; within rules search a sub-span that
// must cover a replaced token; token rules match a replaced token's
// whole text on both sides. "wrong indent" is driven by the diff's
// indent flag, so its pattern never matches anything.
namespace {
constexpr std::string_view kDefaultRules = R"rules(# Default error classification rules.
requires: alternation anchors character-classes lazy-quantifiers word-boundaries lookahead lookbehind
version: default-55/1.0

name: missing output
category: insert
pattern: ^print\s\(\s.+?\s\)$|^print\s\(\s\)$
summary: output

name: needless output
category: delete
pattern: ^print\s\(\s.+?\s\)$|^print\s\(\s\)$
summary: output

name: wrong output
category: line-replace
pattern: ^print\s\(\s.+?\s\)$|^print\s\(\s\)$
summary: output

name: missing input
category: insert
pattern: ^.*?\binput\s\(.*$|^.*?\bstdin\b.*$
summary: input

name: needless input
category: delete
pattern: ^.*?\binput\s\(.*$|^.*?\bstdin\b.*$
summary: input

name: wrong input
category: within-replace
pattern: \binput\s\(|\bstdin\b
summary: input

name: wrong join list
category: within-replace
pattern: \.\sjoin\s\(\s.+?\s\)|\.\sjoin\s\(\s\)
summary: convert variable

name: wrong convert list
category: within-replace
pattern: \slist\s\(\s.+?\s\)|\smap\s\(\s\w+\s,\s.+?\s\)
summary: convert variable

name: wrong convert value
category: within-replace
pattern: \sint\s\(\s.+?\s\)|\sfloat\s\(\s.+?\s\)|\sstr\s\(\s.+?\s\)
summary: convert variable

name: missing function invocation
category: insert
pattern: ^(?!def\s|class\s).*?\w+(?<!\bprint)(?<!\binput)(?<!\bint)(?<!\bfloat)(?<!\bstr)(?<!\blist)(?<!\bmap)(?<!\bjoin)(?<!\brange)\s\(\s.*$
summary: other function invocation

name: needless function invocation
category: delete
pattern: ^(?!def\s|class\s).*?\w+(?<!\bprint)(?<!\binput)(?<!\bint)(?<!\bfloat)(?<!\bstr)(?<!\blist)(?<!\bmap)(?<!\bjoin)(?<!\brange)\s\(\s.*$
summary: other function invocation

name: wrong function invocation
category: within-replace
pattern: \w+(?<!\bprint)(?<!\binput)(?<!\bint)(?<!\bfloat)(?<!\bstr)(?<!\blist)(?<!\bmap)(?<!\bjoin)(?<!\brange)(?<!\bdef)(?<!\bclass)\s\(
summary: other function invocation

name: missing if statement
category: insert
pattern: ^if\s.+?\s:.*$
summary: conditional statement

name: needless if statement
category: delete
pattern: ^if\s.+?\s:.*$
summary: conditional statement

name: wrong if statement
category: line-replace
pattern: ^if\s.+?\s:.*$
summary: conditional statement

name: missing else elif
category: insert
pattern: ^else\s:.*$|^elif\s.+?\s:.*$
summary: conditional statement

name: needless else elif
category: delete
pattern: ^else\s:.*$|^elif\s.+?\s:.*$
summary: conditional statement

name: wrong else elif
category: line-replace
pattern: ^else\s:.*$|^elif\s.+?\s:.*$
summary: conditional statement

name: missing for statement
category: insert
pattern: ^for\s.+?\sin\s.+?\s:.*$
summary: loop statement

name: needless for statement
category: delete
pattern: ^for\s.+?\sin\s.+?\s:.*$
summary: loop statement

name: wrong for statement
category: line-replace
pattern: ^for\s.+?\sin\s.+?\s:.*$
summary: loop statement

name: missing while statement
category: insert
pattern: ^while\s.+?\s:.*$
summary: loop statement

name: needless while statement
category: delete
pattern: ^while\s.+?\s:.*$
summary: loop statement

name: wrong while statement
category: line-replace
pattern: ^while\s.+?\s:.*$
summary: loop statement

name: wrong range
category: within-replace
pattern: \srange\s\(\s.+?\s\)
summary: for range

name: missing break continue
category: insert
pattern: ^break$|^continue$
summary: break continue

name: needless break continue
category: delete
pattern: ^break$|^continue$
summary: break continue

name: wrong break continue
category: line-replace
pattern: ^break$|^continue$
summary: break continue

name: wrong string
category: token-replace
pattern: ^[rbufRBUF]{0,2}["'][\s\S]*["']$
summary: literal

name: wrong value
category: token-replace
pattern: ^\d+$|^\d+\.\d*$|^\.\d+$
summary: literal

name: wrong boolean value
category: token-replace
pattern: ^True$|^False$
summary: literal

name: missing import
category: insert
pattern: ^import\s.+$|^from\s.+?\simport\s.+$
summary: import

name: needless import
category: delete
pattern: ^import\s.+$|^from\s.+?\simport\s.+$
summary: import

name: wrong import
category: line-replace
pattern: ^import\s.+$|^from\s.+?\simport\s.+$
summary: import

name: missing variable declaration
category: insert
pattern: ^(?!(?:if|elif|else|while|for|def|class|return|import|from|print|assert|with|try|except|finally|raise|global|nonlocal|del|pass|break|continue|lambda|yield)\b).+?\s=\s.+$
summary: variable declaration

name: needless variable declaration
category: delete
pattern: ^(?!(?:if|elif|else|while|for|def|class|return|import|from|print|assert|with|try|except|finally|raise|global|nonlocal|del|pass|break|continue|lambda|yield)\b).+?\s=\s.+$
summary: variable declaration

name: wrong variable declaration
category: line-replace
pattern: ^(?!(?:if|elif|else|while|for|def|class|return|import|from|print|assert|with|try|except|finally|raise|global|nonlocal|del|pass|break|continue|lambda|yield)\b).+?\s=\s.+$
summary: variable declaration

name: missing function definition
category: insert
pattern: ^def\s\w+\s\(.*$
summary: function definition

name: needless function definition
category: delete
pattern: ^def\s\w+\s\(.*$
summary: function definition

name: wrong function definition
category: line-replace
pattern: ^def\s\w+\s\(.*$
summary: function definition

name: missing return
category: insert
pattern: ^return$|^return\s.+$
summary: function definition

name: needless return
category: delete
pattern: ^return$|^return\s.+$
summary: function definition

name: wrong return
category: line-replace
pattern: ^return$|^return\s.+$
summary: function definition

name: missing pass
category: insert
pattern: ^pass$
summary: pass

name: needless pass
category: delete
pattern: ^pass$
summary: pass

name: wrong pass
category: line-replace
pattern: ^pass$
summary: pass

name: wrong comparison operator
category: token-replace
pattern: ^==$|^!=$|^<$|^>$|^<=$|^>=$
summary: comparison operator

name: wrong logical operator
category: token-replace
pattern: ^and$|^or$|^not$
summary: logical operator

name: wrong arithmetic operator
category: token-replace
pattern: ^[-+*/%^]$|^\*\*$|^//$
summary: arithmetic operator

name: wrong unpack operator
category: within-replace
pattern: [(,=]\s\*{1,2}\s\w+
summary: unpack operator

name: wrong in operator
category: within-replace
pattern: \snot\sin\s|\sin\s
summary: other operator

name: wrong assignment operator
category: token-replace
pattern: ^=$|^[-+*/%&|^]=$|^\*\*=$|^//=$|^>>=$|^<<=$
summary: other operator

name: wrong list index
category: within-replace
pattern: \w\s\[\s.+?\s\]
summary: index

name: wrong list comprehension
category: within-replace
pattern: \[\s.+?\sfor\s.+?\s\]|\(\s.+?\sfor\s.+?\s\)
summary: list comprehension

name: wrong indent
category: line-replace
pattern: (?!)
summary: indent
)rules";
}  // namespace

std::string_view default_rules_text() { return kDefaultRules; }

}  // namespace errclass
