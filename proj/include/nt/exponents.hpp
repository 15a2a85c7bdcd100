#pragma once

#include <optional>
#include <vector>

#include "nt/arith.hpp"

namespace nt {

// Half-integer exponent entry; absent means -infinity (the class carries no
// nonvanishing sums).  Values are stored doubled for exact comparisons.
struct MEntry {
    std::optional<i64> twice;
    bool neg_inf() const { return !twice.has_value(); }
};

struct ExponentTable {
    int beta;
    std::vector<MEntry> m;  // indexed by alpha = 0 .. beta-1
};

// the upper-bound table for m(alpha, beta), both parities of beta
ExponentTable m_table(int beta);

struct ExponentRow {
    int beta;
    int alpha;
    MEntry m;
    i64 twice_lhs;   // 2*(m + max(beta-alpha, ceil(2 beta/3))); 0 when vacuous
    bool holds;      // m + max(beta-alpha, ceil(2 beta/3)) <= beta
    i64 twice_slack; // 2*beta - twice_lhs
};

// m(alpha,beta) + max(beta-alpha, ceil(2 beta/3)) <= beta for every
// 1 <= beta <= beta_max, 0 <= alpha <= beta-1
std::vector<ExponentRow> exponent_inequality_check(int beta_max);

// floor(beta/4) + ceil(2 beta/3) <= beta for even beta
bool even_beta_reduction_holds(int beta_max);

}  // namespace nt
