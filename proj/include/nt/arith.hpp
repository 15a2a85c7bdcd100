#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Basic exact integer arithmetic on moduli <= 10^6.  All products fit in
// int64 without overflow (desk-scale moduli), except where noted.

namespace nt {

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

inline i64 pow_mod(i64 base, u64 e, i64 m) {
    if (m == 1) return 0;
    i64 r = 1;
    base = mod(base, m);
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

// extended gcd: returns g and x,y with a*x + b*y = g
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline i64 inv_mod(i64 a, i64 m) {
    a = mod(a, m);
    if (m == 1) return 0;
    i64 x, y;
    i64 g = ext_gcd(a, m, x, y);
    if (g != 1)
        throw std::domain_error("inv_mod: " + std::to_string(a) +
                                " not invertible mod " + std::to_string(m));
    return mod(x, m);
}

inline int valuation(i64 n, i64 p) {
    if (n == 0) throw std::domain_error("valuation of 0");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

struct PrimePower {
    i64 p;
    int beta;
    i64 value;  // p^beta
};

// Modulus as an ordered product of prime powers; primes strictly increasing.
struct Factorization {
    i64 value = 1;
    std::vector<PrimePower> parts;
};

inline Factorization factor(i64 n) {
    if (n < 1) throw std::domain_error("factor: n must be positive");
    Factorization f;
    f.value = n;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int beta = 0;
            i64 pw = 1;
            while (n % p == 0) { n /= p; ++beta; pw *= p; }
            f.parts.push_back({p, beta, pw});
        }
    }
    if (n > 1) f.parts.push_back({n, 1, n});
    return f;
}

inline i64 euler_phi(const Factorization& f) {
    i64 r = 1;
    for (const auto& pp : f.parts) r *= pp.value / pp.p * (pp.p - 1);
    return r;
}

inline i64 euler_phi(i64 n) { return euler_phi(factor(n)); }

inline int mobius(i64 n) {
    auto f = factor(n);
    for (const auto& pp : f.parts)
        if (pp.beta > 1) return 0;
    return (f.parts.size() % 2 == 0) ? 1 : -1;
}

inline std::vector<i64> divisors(i64 n) {
    auto f = factor(n);
    std::vector<i64> ds{1};
    for (const auto& pp : f.parts) {
        size_t sz = ds.size();
        i64 pw = 1;
        for (int e = 1; e <= pp.beta; ++e) {
            pw *= pp.p;
            for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pw);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// q* = prod p^{ceil(2 beta / 3)}: least q* with q^2 | (q*)^3
inline i64 q_star(const Factorization& q) {
    i64 r = 1;
    for (const auto& pp : q.parts) r *= ipow(pp.p, (2 * pp.beta + 2) / 3);
    return r;
}

inline i64 q_star(i64 q) { return q_star(factor(q)); }

// CRT.  Moduli must be pairwise coprime.
inline std::vector<i64> crt_split(i64 x, const std::vector<i64>& moduli) {
    std::vector<i64> r;
    r.reserve(moduli.size());
    for (i64 m : moduli) r.push_back(mod(x, m));
    return r;
}

inline i64 crt_combine(const std::vector<i64>& residues, const std::vector<i64>& moduli) {
    if (residues.size() != moduli.size())
        throw std::invalid_argument("crt_combine: size mismatch");
    i64 M = 1, x = 0;
    for (size_t i = 0; i < moduli.size(); ++i) {
        i64 m = moduli[i];
        if (std::gcd(M, m) != 1)
            throw std::domain_error("crt_combine: moduli not coprime");
        // x' = x + M * ((r - x) * M^{-1} mod m)
        i64 t = mod((residues[i] - x) % m * inv_mod(M % m, m), m);
        x += M * t;
        M *= m;
        x = mod(x, M);
    }
    return x;
}

}  // namespace nt
