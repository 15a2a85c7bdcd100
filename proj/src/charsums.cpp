#include "nt/charsums.hpp"

#include <cmath>

namespace nt {

// ----- Gauss sums -----

CharSumValue gauss_sum(const DirichletCharacter& chi, i64 n) {
    i64 q = chi.modulus();
    i64 M = chi.group().root_order();
    i64 R = std::lcm(M, q);
    ExponentHistogram h(R);
    n = mod(n, q);
    for (i64 x = 0; x < q; ++x) {
        auto k = chi.index(x);
        if (!k) continue;
        h.add(mod(*k * (R / M) + n * x % q * (R / q), R));
    }
    return h.value();
}

cplx gauss_sum_structural(const DirichletCharacter& chi, i64 n) {
    i64 q = chi.modulus();
    if (chi.is_trivial()) return {static_cast<double>(ramanujan_exact(n, q)), 0.0};
    auto chip = chi.primitive_part();
    i64 qp = chip.modulus();
    cplx tau_prim = gauss_sum(chip, 1).value;
    auto chip_conj = chip.conj();
    cplx s{0.0, 0.0};
    i64 m = q / qp;
    for (i64 d : divisors(std::gcd(mod(n, q) == 0 ? q : mod(n, q), m))) {
        i64 md = m / d;
        int mu = mobius(md);
        if (mu == 0) continue;
        cplx term = static_cast<double>(d) * chip_conj(n / d) * chip(md) * static_cast<double>(mu);
        s += term;
    }
    return tau_prim * s;
}

double gauss_sum_bound(const DirichletCharacter& chi, i64 n) {
    i64 q = chi.modulus();
    i64 qp = chi.conductor();
    i64 m = q / qp;
    i64 g = std::gcd(mod(n, q) == 0 ? q : mod(n, q), m);
    return std::sqrt(static_cast<double>(qp)) * static_cast<double>(g);
}

// ----- quadratic Gauss sums -----

CharSumValue quadratic_gauss(const QuadraticFormModP& f) {
    i64 p = f.p;
    if (p == 2) throw std::domain_error("quadratic_gauss: p must be odd");
    i64 inv2 = inv_mod(2, p);
    ExponentHistogram h(p);
    std::array<i64, 3> t{0, 0, 0};
    i64 total = ipow(p, f.n);
    for (i64 it = 0; it < total; ++it) {
        i64 v = it;
        for (int i = 0; i < f.n; ++i) { t[static_cast<size_t>(i)] = v % p; v /= p; }
        i64 e = 0;
        for (int i = 0; i < f.n; ++i) {
            e += f.L[static_cast<size_t>(i)] * t[static_cast<size_t>(i)];
            for (int j = 0; j < f.n; ++j)
                e += inv2 * f.twoQ[static_cast<size_t>(i)][static_cast<size_t>(j)] % p * t[static_cast<size_t>(i)] % p * t[static_cast<size_t>(j)];
        }
        h.add(mod(e, p));
    }
    return h.value();
}

QuadGaussLaw quadratic_gauss_law(const QuadraticFormModP& f) {
    i64 p = f.p;
    int n = f.n;
    // row-reduce 2Q mod p; track the radical (nullspace)
    std::array<std::array<i64, 6>, 3> m{};  // [2Q | I]
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = mod(f.twoQ[static_cast<size_t>(i)][static_cast<size_t>(j)], p);
        m[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
    }
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(rank)]);
        i64 inv = inv_mod(m[static_cast<size_t>(rank)][static_cast<size_t>(col)], p);
        for (int j = 0; j < 2 * n; ++j) m[static_cast<size_t>(rank)][static_cast<size_t>(j)] = mod(m[static_cast<size_t>(rank)][static_cast<size_t>(j)] * inv, p);
        for (int r = 0; r < n; ++r) {
            if (r == rank || m[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
            i64 c = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            for (int j = 0; j < 2 * n; ++j)
                m[static_cast<size_t>(r)][static_cast<size_t>(j)] = mod(m[static_cast<size_t>(r)][static_cast<size_t>(j)] - c * m[static_cast<size_t>(rank)][static_cast<size_t>(j)], p);
        }
        ++rank;
    }
    // rows rank..n-1 of the right block span the radical {v : (2Q) v = 0}
    bool ok = true;
    for (int r = rank; r < n; ++r) {
        i64 dot = 0;
        for (int j = 0; j < n; ++j) dot += f.L[static_cast<size_t>(j)] * m[static_cast<size_t>(r)][static_cast<size_t>(n + j)];
        if (mod(dot, p) != 0) ok = false;
    }
    QuadGaussLaw law;
    law.rank = rank;
    law.L_vanishes_on_radical = ok;
    law.magnitude = ok ? std::pow(static_cast<double>(p), static_cast<double>(n) - static_cast<double>(rank) / 2.0) : 0.0;
    return law;
}

// ----- rho -----

i64 rho_bruteforce(i64 Delta, i64 p, int beta) {
    i64 m = ipow(p, beta);
    i64 d = mod(Delta, m);
    i64 cnt = 0;
    for (i64 x = 0; x < m; ++x)
        if (mul_mod(x, x, m) == d) ++cnt;
    return cnt;
}

namespace {
int legendre(i64 a, i64 p) {
    a = mod(a, p);
    if (a == 0) return 0;
    i64 r = pow_mod(a, static_cast<u64>((p - 1) / 2), p);
    return r == 1 ? 1 : -1;
}
}  // namespace

RhoFormula rho_formula(i64 Delta, i64 p, int beta) {
    if (p == 2) throw std::domain_error("rho_formula: p must be odd");
    if (beta == 0) return {true, 1};
    i64 m = ipow(p, beta);
    i64 d = mod(Delta, m);
    if (d == 0) return {true, ipow(p, beta / 2)};
    int v = valuation(d, p);
    if (v == 0) return {true, 1 + legendre(d, p)};
    // intermediate case: upper bound 2 (Delta, p^beta)^{1/2} delta(gcd is a square)
    if (v % 2 != 0) return {false, 0};
    return {false, 2 * ipow(p, v / 2)};
}

// ----- Ramanujan series -----

RamanujanSeriesCheck ramanujan_series_check(i64 q, double s, i64 M) {
    if (q <= 1) throw std::domain_error("ramanujan_series_check: series has a pole for q = 1");
    if (s <= 1.0) throw std::domain_error("ramanujan_series_check: need s > 1");
    auto ds = divisors(q);
    std::vector<int> mu(ds.size());
    for (size_t i = 0; i < ds.size(); ++i) mu[i] = mobius(q / ds[i]);
    long double lhs = 0.0L;
    for (i64 m = 1; m <= M; ++m) {
        i64 S = 0;
        for (size_t i = 0; i < ds.size(); ++i)
            if (m % ds[i] == 0) S += ds[i] * mu[i];
        if (S != 0) lhs += static_cast<long double>(S) * std::pow(static_cast<long double>(m), static_cast<long double>(-s));
    }
    long double rhs = 0.0L;
    for (size_t i = 0; i < ds.size(); ++i)
        rhs += static_cast<long double>(mu[i]) * std::pow(static_cast<long double>(ds[i]), static_cast<long double>(1.0 - s));
    rhs *= std::riemann_zeta(s);
    RamanujanSeriesCheck out;
    out.lhs = static_cast<double>(lhs);
    out.rhs = static_cast<double>(rhs);
    out.residual = static_cast<double>(std::fabs(lhs - rhs));
    out.tail_bound = 3.0 / (s - 1.0) * static_cast<double>(q) * std::pow(static_cast<double>(M), 1.0 - s);
    return out;
}

}  // namespace nt
