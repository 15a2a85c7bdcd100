#include <doctest.h>

#include "nt/exponents.hpp"

using namespace nt;

TEST_CASE("m table entries") {
    auto t4 = m_table(4);
    CHECK(t4.m[1].neg_inf());             // alpha odd, alpha < beta/2
    CHECK(*t4.m[2].twice == 2);           // floor(beta/4) = 1 for alpha >= beta/2
    CHECK(*t4.m[0].twice == 0);           // alpha even below beta/2: alpha/2
    auto t5 = m_table(5);
    CHECK(*t5.m[0].twice == 0);
    CHECK(t5.m[1].neg_inf());
    CHECK(*t5.m[2].twice == 1);           // (alpha-1)/2 = 1/2
    CHECK(*t5.m[4].twice == 2 * 1 - 1);   // floor(6/4) - 1/2 = 1/2
    auto t10 = m_table(10);
    CHECK(*t10.m[5].twice == 4);          // alpha = beta/2: floor(10/4) = 2
    CHECK_THROWS_AS(m_table(0), std::invalid_argument);
}

TEST_CASE("exponent inequality holds through beta = 200") {
    auto rows = exponent_inequality_check(200);
    CHECK(rows.size() == 200 * 201 / 2);
    for (const auto& r : rows) {
        CHECK(r.holds);
        if (!r.m.neg_inf()) CHECK(r.twice_slack >= 0);
    }
    // beta = 10, alpha = 5: floor(10/4) + ceil(20/3) = 2 + 7 = 9 <= 10
    for (const auto& r : rows)
        if (r.beta == 10 && r.alpha == 5) {
            CHECK(*r.m.twice == 4);
            CHECK(r.twice_lhs == 18);
        }
    // beta = 2, alpha = 0: 0 + max(2,2) = 2 <= 2, zero slack
    for (const auto& r : rows)
        if (r.beta == 2 && r.alpha == 0) {
            CHECK(r.twice_lhs == 4);
            CHECK(r.twice_slack == 0);
        }
}

TEST_CASE("even beta reduction") { CHECK(even_beta_reduction_holds(200)); }
