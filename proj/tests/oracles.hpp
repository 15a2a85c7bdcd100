#pragma once

// Test-side oracles, independent of the library's evaluation paths.

#include <cmath>
#include <complex>
#include <cstdint>

namespace oracles {

// zeta(s) for real s by long-double Euler-Maclaurin with a large shift and
// Bernoulli corrections through B_24; ~18 correct digits on [1/2, 4]
inline long double real_zeta(long double s) {
    const int N = 400;
    static const long double B2k_over_fact[13] = {
        0.0L,
        8.3333333333333333333e-2L,   // B2/2!
        -1.3888888888888888889e-3L,  // B4/4!
        3.3068783068783068783e-5L,   // B6/6!
        -8.2671957671957671958e-7L,  // B8/8!
        2.0876756987868098979e-8L,   // B10/10!
        -5.2841901386874931848e-10L, // B12/12!
        1.3382536530684678833e-11L,  // B14/14!
        -3.3896802963225828668e-13L, // B16/16!
        8.5860620562778445641e-15L,  // B18/18!
        -2.1748686985580618730e-16L, // B20/20!
        5.5090028283602295152e-18L,  // B22/22!
        -1.3954464685812522340e-19L  // B24/24!
    };
    long double sum = 0.0L;
    for (int k = 1; k < N; ++k) sum += powl((long double)k, -s);
    long double w = (long double)N;
    sum += powl(w, 1.0L - s) / (s - 1.0L);
    sum += 0.5L * powl(w, -s);
    long double poch = s;
    long double wp = powl(w, -s - 1.0L);
    for (int j = 1; j <= 12; ++j) {
        sum += B2k_over_fact[j] * poch * wp;
        poch *= (s + (long double)(2 * j - 1)) * (s + (long double)(2 * j));
        wp /= w * w;
    }
    return sum;
}

// least m >= 1 with q^2 | m^3, by direct scan
inline std::int64_t q_star_scan(std::int64_t q) {
    for (std::int64_t m = 1;; ++m) {
        __int128 m3 = (__int128)m * m * m;
        if (m3 % ((__int128)q * q) == 0) return m;
    }
}

// CRT by scanning 0..prod-1
inline std::int64_t crt_scan(std::int64_t r1, std::int64_t m1, std::int64_t r2, std::int64_t m2) {
    for (std::int64_t x = 0; x < m1 * m2; ++x)
        if (x % m1 == r1 && x % m2 == r2) return x;
    return -1;
}

// count of characters mod p^beta trivial on 1 + p^c Z, by brute force over
// the value table of one character is overkill; instead count solutions of
// the defining congruence directly: used via conductor_scan below.

}  // namespace oracles
