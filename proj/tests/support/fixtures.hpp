#pragma once

#include <vector>

#include "posetprob/poset.hpp"
#include "posetprob/tableaux.hpp"

namespace fixtures {

// Five elements, 0 below the antichain {1,2}, 2 < 3 < 4 and 1 < 4.
// Has three linear extensions; exactly one places 1 before 2.
inline posetprob::Poset sample5() {
    return posetprob::Poset::from_covers(
        5, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 3}, {3, 4}, {1, 4}});
}

// sample5 enlarged by 5 covered by 1 and 6 covered by 2. Twenty-six linear
// extensions: eight with 1 before 2, eighteen the other way around.
inline posetprob::Poset sample7() {
    return posetprob::Poset::from_covers(
        7, std::vector<std::pair<int, int>>{
               {0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 4}, {5, 1}, {6, 2}});
}

// Ten elements labeled "1".."10" with a rich blocking structure around the
// antichain {"2","3"}.
inline posetprob::Poset sample10() {
    auto e = [](int u, int v) { return std::pair<int, int>{u - 1, v - 1}; };
    std::vector<std::pair<int, int>> edges{e(10, 4), e(8, 3), e(7, 9), e(7, 1),
                                           e(9, 2),  e(3, 5), e(3, 4), e(5, 6),
                                           e(1, 2),  e(2, 4), e(4, 6)};
    std::vector<std::string> labels;
    for (int i = 1; i <= 10; ++i) labels.push_back(std::to_string(i));
    return posetprob::Poset::from_covers(10, edges, std::move(labels));
}

// Three elements, 0 < 1 and 2 free. The most unbalanced non-chain poset:
// the best pair is only 1/3-balanced.
inline posetprob::Poset extremal3() {
    return posetprob::Poset::from_covers(3, std::vector<std::pair<int, int>>{{0, 1}});
}

// Standard fillings of a skew shape counted by direct backtracking over
// addable corners. Independent of every counting formula in the library.
inline long syt_count_brute(const posetprob::SkewShape& s) {
    int rows = s.outer().length();
    std::vector<int> filled(rows, 0);
    long total = 0;
    auto rec = [&](auto&& self, long remaining) -> void {
        if (remaining == 0) {
            ++total;
            return;
        }
        for (int r = 1; r <= rows; ++r) {
            int col = s.inner().part(r) + filled[r - 1] + 1;
            if (col > s.outer().part(r)) continue;
            if (r > 1 && s.inner().part(r - 1) + filled[r - 2] < col) continue;
            ++filled[r - 1];
            self(self, remaining - 1);
            --filled[r - 1];
        }
    };
    rec(rec, s.weight());
    return total;
}

}  // namespace fixtures
