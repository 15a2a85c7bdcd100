#include "nt/exponents.hpp"

namespace nt {

ExponentTable m_table(int beta) {
    if (beta < 1) throw std::invalid_argument("m_table: beta >= 1");
    ExponentTable t;
    t.beta = beta;
    t.m.resize(static_cast<size_t>(beta));
    for (int alpha = 0; alpha < beta; ++alpha) {
        MEntry e;
        if (beta % 2 == 0) {
            if (2 * alpha >= beta) e.twice = 2 * (beta / 4);
            else if (alpha % 2 == 1) e.twice = std::nullopt;
            else e.twice = alpha;
        } else {
            if (alpha == 0) e.twice = 0;
            else if (2 * alpha >= beta + 1) e.twice = 2 * ((beta + 1) / 4) - 1;
            else if (alpha % 2 == 1) e.twice = std::nullopt;
            else e.twice = alpha - 1;
        }
        t.m[static_cast<size_t>(alpha)] = e;
    }
    return t;
}

std::vector<ExponentRow> exponent_inequality_check(int beta_max) {
    std::vector<ExponentRow> rows;
    for (int beta = 1; beta <= beta_max; ++beta) {
        auto t = m_table(beta);
        i64 ceil23 = (2 * beta + 2) / 3;
        for (int alpha = 0; alpha < beta; ++alpha) {
            ExponentRow r;
            r.beta = beta;
            r.alpha = alpha;
            r.m = t.m[static_cast<size_t>(alpha)];
            if (r.m.neg_inf()) {
                r.twice_lhs = 0;
                r.holds = true;
                r.twice_slack = 2 * beta;
            } else {
                i64 mx = std::max<i64>(beta - alpha, ceil23);
                r.twice_lhs = *r.m.twice + 2 * mx;
                r.holds = r.twice_lhs <= 2 * beta;
                r.twice_slack = 2 * beta - r.twice_lhs;
            }
            rows.push_back(r);
        }
    }
    return rows;
}

bool even_beta_reduction_holds(int beta_max) {
    for (int beta = 0; beta <= beta_max; beta += 2)
        if (beta / 4 + (2 * beta + 2) / 3 > beta) return false;
    return true;
}

}  // namespace nt
