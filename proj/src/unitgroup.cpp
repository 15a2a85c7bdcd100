#include "nt/unitgroup.hpp"

namespace nt {

i64 smallest_primitive_root(i64 p) {
    if (p == 2) return 1;
    i64 phi = p - 1;
    auto f = factor(phi);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& pp : f.parts)
            if (pow_mod(g, static_cast<u64>(phi / pp.p), p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

UnitGroupBasis UnitGroupBasis::build(i64 p, int beta) {
    UnitGroupBasis b;
    b.p = p;
    b.beta = beta;
    b.modulus = ipow(p, beta);
    if (b.modulus > kModulusCap)
        throw std::invalid_argument("modulus exceeds desk-scale cap of 10^6");
    b.dlog.assign(static_cast<size_t>(b.modulus), {-1, -1});

    if (p == 2) {
        if (beta == 1) {
            b.dlog[1] = {0, 0};  // trivial group
            return b;
        }
        if (beta == 2) {
            b.gens = {3};  // -1 mod 4
            b.orders = {2};
            b.dlog[1] = {0, 0};
            b.dlog[3] = {1, 0};
            return b;
        }
        // (-1, 5): every unit is (-1)^e * 5^k uniquely
        b.gens = {b.modulus - 1, 5};
        b.orders = {2, b.modulus / 4};
        i64 x = 1;
        for (i64 k = 0; k < b.orders[1]; ++k) {
            b.dlog[static_cast<size_t>(x)] = {0, k};
            b.dlog[static_cast<size_t>(b.modulus - x)] = {1, k};
            x = mod(x * 5, b.modulus);
        }
        return b;
    }

    // odd p: lift the primitive root mod p to one mod p^beta
    i64 g = smallest_primitive_root(p);
    i64 phi = (p - 1) * ipow(p, beta - 1);
    if (beta >= 2 && pow_mod(g, static_cast<u64>(p - 1), p * p) == 1) g += p;
    b.gens = {g};
    b.orders = {phi};
    i64 x = 1;
    for (i64 k = 0; k < phi; ++k) {
        b.dlog[static_cast<size_t>(x)] = {k, 0};
        x = mul_mod(x, g, b.modulus);
    }
    if (x != 1) throw std::logic_error("generator does not have full order");
    return b;
}

i64 padic_log_series(i64 x, i64 p, i64 cap_pow) {
    // log(1+x) = x - x^2/2 + x^3/3 -+ ...; every coefficient x^n/n is
    // p-integral on the domain, with v_p(x^n/n) >= n v_p(x) - floor(log_p n),
    // an increasing lower bound, so the series truncates exactly mod p^vcap.
    i64 vcap = valuation(cap_pow, p);
    if (ipow(p, static_cast<int>(vcap)) != cap_pow)
        throw std::invalid_argument("padic_log_series: cap must be a power of p");
    if (x == 0) return 0;
    i64 vx = valuation(x, p);
    if ((p != 2 && vx < 1) || (p == 2 && vx < 2))
        throw std::domain_error("padic_log_series: insufficient valuation");

    i64 s = 0;
    for (i64 n = 1;; ++n) {
        i64 lg = 0;
        for (i64 t = n; t >= p; t /= p) ++lg;
        if (n * vx - lg >= vcap) break;
        i64 vn = (n % p == 0) ? valuation(n, p) : 0;
        i64 lift_m = cap_pow * ipow(p, static_cast<int>(vn));
        i64 xn = pow_mod(x, static_cast<u64>(n), lift_m);
        i64 term = (xn / ipow(p, static_cast<int>(vn))) % cap_pow;  // x^n / p^vn is exact
        term = mul_mod(term, inv_mod(n / ipow(p, static_cast<int>(vn)), cap_pow), cap_pow);
        if (n % 2 == 0) term = mod(-term, cap_pow);
        s = mod(s + term, cap_pow);
    }
    return s;
}

PadicLogTable PadicLogTable::build(i64 p, int beta) {
    PadicLogTable t;
    t.p = p;
    t.beta = beta;
    t.modulus = ipow(p, beta);
    t.unit_step = (p == 2) ? 4 : p;
    if (p == 2 && beta < 2) throw std::invalid_argument("PadicLogTable: p=2 needs beta >= 2");
    i64 n = t.modulus / t.unit_step;
    t.table.resize(static_cast<size_t>(n));
    for (i64 k = 0; k < n; ++k)
        t.table[static_cast<size_t>(k)] = padic_log_series(t.unit_step * k, p, t.modulus);
    return t;
}

}  // namespace nt
