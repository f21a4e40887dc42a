#pragma once

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <vector>

namespace errclass {

// Decodes UTF-8 into code points. Malformed bytes are kept as one code
// point per byte so that distance computation never fails.
std::vector<char32_t> decode_utf8(std::string_view text);

// Unit-cost Levenshtein distance (insert/delete/substitute) over two
// random-access sequences.
template <typename Seq>
std::size_t levenshtein(const Seq& a, const Seq& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n == 0) return m;
    if (m == 0) return n;

    std::vector<std::size_t> row(m + 1);
    for (std::size_t j = 0; j <= m; ++j) row[j] = j;

    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t up = row[j];
            if (a[i - 1] == b[j - 1]) {
                row[j] = diag;
            } else {
                row[j] = 1 + std::min({diag, up, row[j - 1]});
            }
            diag = up;
        }
    }
    return row[m];
}

// Distance over code points of the raw source texts.
std::size_t char_edit_distance(std::string_view a, std::string_view b);

}  // namespace errclass
