#pragma once

#include <array>
#include <vector>

#include "nt/arith.hpp"

namespace nt {

// Fixed generators and discrete-log tables for (Z/p^beta Z)^x.
//
// odd p        : one generator g (smallest primitive root that stays
//                primitive mod p^2), cyclic of order phi(p^beta)
// p = 2, b <= 2: {1} or {-1}; at most one cyclic part of order 2
// p = 2, b >= 3: the pair (-1, 5) with orders (2, 2^{beta-2})
//
// Tables are built eagerly; moduli are capped at 10^6.
struct UnitGroupBasis {
    i64 p = 0;
    int beta = 0;
    i64 modulus = 1;              // p^beta
    std::vector<i64> gens;        // 0, 1 or 2 generators
    std::vector<i64> orders;      // matching cyclic orders
    std::vector<std::array<i64, 2>> dlog;  // exponent vector per residue; {-1,-1} on non-units

    static constexpr i64 kModulusCap = 1000000;

    bool is_unit(i64 x) const { return dlog[static_cast<size_t>(mod(x, modulus))][0] >= 0; }

    std::array<i64, 2> exponents(i64 x) const {
        auto e = dlog[static_cast<size_t>(mod(x, modulus))];
        if (e[0] < 0) throw std::domain_error("dlog of non-unit");
        return e;
    }

    static UnitGroupBasis build(i64 p, int beta);
};

i64 smallest_primitive_root(i64 p);

// t -> log_p(1 + p t) mod p^beta for odd p (indexed by t mod p^{beta-1});
// t -> log_2(1 + 4 t) mod 2^beta for p = 2 (indexed by t mod 2^{beta-2}).
struct PadicLogTable {
    i64 p = 0;
    int beta = 0;
    i64 modulus = 1;          // p^beta
    i64 unit_step = 0;        // p (odd) or 4 (p = 2)
    std::vector<i64> table;   // size modulus / unit_step

    // log of x, for x = 1 mod unit_step; throws on domain violation
    i64 log1(i64 x) const {
        x = mod(x, modulus);
        if (mod(x - 1, unit_step) != 0)
            throw std::domain_error("padic_log: argument not = 1 mod " + std::to_string(unit_step));
        return table[static_cast<size_t>((x - 1) / unit_step)];
    }

    static PadicLogTable build(i64 p, int beta);
};

// log_p(1+x) mod p^cap for v_p(x) >= 1 (odd p) or >= 2 (p=2), by the
// truncated alternating series; all series coefficients are p-integral.
i64 padic_log_series(i64 x, i64 p, i64 cap_pow);

inline i64 padic_log(i64 x, i64 p, int beta) {
    i64 q = ipow(p, beta);
    i64 step = (p == 2) ? 4 : p;
    x = mod(x, q);
    if (mod(x - 1, step) != 0)
        throw std::domain_error("padic_log: argument not = 1 mod " + std::to_string(step));
    return padic_log_series(x - 1, p, q);
}

}  // namespace nt
