#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "nt/arith.hpp"

// Exponential-sum machinery.  Finite sums of roots of unity are accumulated
// as integer histograms of exact exponents k mod M (value = e(k/M)); the
// conversion to a complex double happens once at the end, so the float error
// is O(M eps) independent of the number of summands.

namespace nt {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// e(k/M) lookup table
struct RootTable {
    i64 order;
    std::vector<cplx> w;

    explicit RootTable(i64 M) : order(M), w(static_cast<size_t>(M)) {
        for (i64 k = 0; k < M; ++k)
            w[static_cast<size_t>(k)] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(M));
    }
    cplx at(i64 k) const { return w[static_cast<size_t>(mod(k, order))]; }

    // process-wide cache; tables are immutable once built
    static const RootTable& shared(i64 M);
};

// Value of a finite character/exponential sum plus its summand count.
// tol = max(1, sqrt(terms)) * 1e-9 * max(1, |value|), the project-wide
// tolerance for comparing such sums.
struct CharSumValue {
    cplx value{0.0, 0.0};
    i64 terms = 0;

    double tol() const {
        double scale = std::max(1.0, std::abs(value));
        double t = std::max(1.0, std::sqrt(static_cast<double>(terms)));
        return t * 1e-9 * scale;
    }
};

inline double sum_tol(const CharSumValue& a, const CharSumValue& b) {
    return std::max(a.tol(), b.tol());
}

struct ExponentHistogram {
    i64 order;
    std::vector<i64> count;
    i64 terms = 0;

    explicit ExponentHistogram(i64 M) : order(M), count(static_cast<size_t>(M), 0) {}

    // k must already be reduced mod order
    void add(i64 k) {
        ++count[static_cast<size_t>(k)];
        ++terms;
    }

    CharSumValue value() const { return value(RootTable::shared(order)); }

    CharSumValue value(const RootTable& rt) const {
        cplx s{0.0, 0.0};
        for (i64 k = 0; k < order; ++k)
            if (count[static_cast<size_t>(k)] != 0)
                s += static_cast<double>(count[static_cast<size_t>(k)]) * rt.w[static_cast<size_t>(k)];
        return {s, terms};
    }
};

// Kloosterman sum S(m,n;c) = sum over units x mod c of e_c(m x + n x^{-1}).
// S(m,0;c) is the Ramanujan sum.
inline CharSumValue kloosterman(i64 m, i64 n, i64 c) {
    if (c < 1) throw std::domain_error("kloosterman: c must be positive");
    ExponentHistogram h(c);
    m = mod(m, c);
    n = mod(n, c);
    for (i64 x = 1; x <= c; ++x) {
        if (std::gcd(x, c) != 1) continue;
        i64 xinv = inv_mod(x, c);
        h.add(mod(m * x + n * xinv, c));
    }
    return h.value();
}

// S(m,0;q) by the divisor formula, exact integer
inline i64 ramanujan_exact(i64 m, i64 q) {
    i64 s = 0;
    for (i64 d : divisors(q))
        if (mod(m, d) == 0) s += d * mobius(q / d);
    return s;
}

}  // namespace nt
