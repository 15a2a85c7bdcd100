#pragma once

#include <functional>
#include <optional>

#include "nt/characters.hpp"

namespace nt {

struct not_primitive_error : std::domain_error {
    using std::domain_error::domain_error;
};

// ----- Gauss sums -----

// tau(chi, n) = sum_{x mod q} chi(x) e_q(n x), by direct summation
CharSumValue gauss_sum(const DirichletCharacter& chi, i64 n);

// tau(chi, n) for non-trivial chi via the exact formula
//   tau(chi') sum_{d | (n, q/q')} d conj(chi')(n/d) chi'(q/(d q')) mu(q/(d q'));
// trivial chi falls back to the Ramanujan sum S(n,0;q).
cplx gauss_sum_structural(const DirichletCharacter& chi, i64 n);

// |tau(chi,n)| <= sqrt(q') (n, q/q')
double gauss_sum_bound(const DirichletCharacter& chi, i64 n);

// ----- quadratic Gauss sums over F_p -----

// Q given by its doubled matrix 2Q (symmetric, entries mod p); L a linear form
struct QuadraticFormModP {
    i64 p;
    int n;                          // dimension <= 3
    std::array<std::array<i64, 3>, 3> twoQ{};  // symmetric
    std::array<i64, 3> L{};
};

// G_p(Q, L) = sum_{t in F_p^n} e_p(Q[t] + L t), direct
CharSumValue quadratic_gauss(const QuadraticFormModP& f);

struct QuadGaussLaw {
    int rank;                // rank of Q over F_p
    bool L_vanishes_on_radical;
    double magnitude;        // p^{rank/2} p^{n-rank} if L|_V = 0, else 0
};
QuadGaussLaw quadratic_gauss_law(const QuadraticFormModP& f);

// ----- rho(Delta, p^beta): number of square roots of Delta -----

i64 rho_bruteforce(i64 Delta, i64 p, int beta);

// the three-case lemma: exact value when p does not divide Delta or when
// p^beta | Delta; otherwise an upper bound
struct RhoFormula {
    bool exact;
    i64 value;  // exact value or upper bound
};
RhoFormula rho_formula(i64 Delta, i64 p, int beta);

// ----- g(chi, psi) -----

enum class GMethod { direct, shifted };

// g(chi,psi) = sum_{u,t mod q} chi(t) conj(chi)(t+1) conj(chi)(u) chi(u+1) psi(ut-1)
// (direct), or the t -> t-1, u -> u-1 shifted form.  chi, psi primitive mod
// p^beta; identically zero (zero summands) for p = 2, beta >= 2.
CharSumValue g_sum(const DirichletCharacter& chi, const DirichletCharacter& psi, GMethod method);

// batch evaluation of g for every pair of characters mod an odd prime power,
// via a joint exponent histogram and a row-column DFT over the (cyclic)
// character group; g(chi_a, psi_b) = table[a][b]
struct GTable {
    i64 q;
    i64 n;  // phi(q)
    std::vector<cplx> val;  // n*n, row-major in (a, b)
    i64 terms = 0;          // summand count of each entry's defining sum
    cplx at(i64 a, i64 b) const { return val[static_cast<size_t>(a * n + b)]; }
};
GTable g_table(i64 q, GMethod method);

// Theorem bound on |g| for odd p, beta >= 2, from the Postnikov indices:
// A = ell_chi / ell_psi mod p^{beta-1}, Delta = A^2 + 4.
struct GBound {
    i64 A;
    i64 Delta;       // integer lift, A in [0, p^{beta-1})
    double bound;    // q rho(Delta,p^alpha) for beta = 2 alpha;
                     // 2q or q sqrt(p) delta(p^2|Delta) rho(Delta/p^2, p^{alpha-1}) for beta = 2 alpha + 1
};
GBound g_bound(i64 ell_chi, i64 ell_psi, i64 p, int beta);

// ----- T_chi, Kl_3 -----

// T_chi(h,m,n) = sum over units x,y mod q of chi(x+h) conj(chi)(x) e_q(m x y^{-1} + n y)
CharSumValue tchi(const DirichletCharacter& chi, i64 h, i64 m, i64 n);

// Kl_3(a,b,c;q) = sum_{x y z = 1 mod q} e_q(a x + b y + c z)
CharSumValue kl3(i64 a, i64 b, i64 c, i64 q);

// multiplicative-character expansion of Kl_3: decompose a = a0 a' with
// a0 | q^inf, (a', q) = 1 (a, b, c taken as the positive integers given) and
// average tau(conj(eta), a0) tau(conj(eta), b0) tau(conj(eta), c0) eta(a'b'c')
cplx kl3_expansion(i64 a, i64 b, i64 c, i64 q);

// ----- Hhat character-sum lemma -----

// S = sum_{y,u mod p^beta} conj(chi)(u p^{2(gamma-beta)} y + 1)
//     chi(1 + p^{gamma-beta} y) chi(1 - p^{gamma-beta} u) psi(u) psi(y),
// chi primitive mod p^gamma, psi of conductor p^beta, 1 <= beta < gamma.
CharSumValue hhat_sum(const DirichletCharacter& chi, const DirichletCharacter& psi);

// ----- stationary-phase reduction checks -----

// Verifies the prime-power reduction of the complete two-variable sums: the
// full p^beta-point sum equals p^{2 alpha} times the reduced sum over
// stationary points t0 mod p^alpha (with the quadratic Gauss factor when
// beta is odd).  Returns both sides.
struct StationaryCheck {
    CharSumValue full;
    cplx reduced;
    i64 stationary_points;
};
StationaryCheck stationary_reduction_gsum(const DirichletCharacter& chi, const DirichletCharacter& psi);
StationaryCheck stationary_reduction_hhat(const DirichletCharacter& chi, const DirichletCharacter& psi);

// ----- Ramanujan-sum Dirichlet series -----

// residual of sum_{m<=M} S(m,0;q) m^{-s} against zeta(s) sum_{a|q} a^{1-s} mu(q/a),
// plus the tail bound it must stay under
struct RamanujanSeriesCheck {
    double lhs;
    double rhs;
    double residual;
    double tail_bound;  // 3/(s-1) * q * M^{1-s}
};
RamanujanSeriesCheck ramanujan_series_check(i64 q, double s, i64 M);

}  // namespace nt
