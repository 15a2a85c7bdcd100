#pragma once

#include "nt/characters.hpp"
#include "nt/charsums.hpp"

namespace nt {

struct ZetaValue {
    cplx value;
    double est_error;
};

// Hurwitz zeta(s, a) for a in (0,1], Euler-Maclaurin with Bernoulli
// corrections through B_30; est_error <= 1e-10 for |Im s| <= 40
ZetaValue hurwitz_zeta(cplx s, double a);

cplx lgamma_complex(cplx z);

struct LValue {
    cplx s;
    i64 q;
    i64 char_index;
    cplx value;
    double est_error;
};

// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q); for imprimitive chi this is
// the Dirichlet series with the chi(n)=0 terms removed, as usual
LValue dirichlet_l(cplx s, const DirichletCharacter& chi);

// shared Hurwitz evaluations for all characters mod q at one s
struct HurwitzRow {
    cplx s;
    i64 q;
    std::vector<cplx> zeta;  // zeta(s, a/q) for a = 1..q at units; 0 elsewhere
    double est_error;
};
HurwitzRow hurwitz_row(cplx s, i64 q);
LValue dirichlet_l_from_row(const HurwitzRow& row, const DirichletCharacter& chi);

// |Lambda(s,chi) - eps(chi) Lambda(1-s, conj(chi))| for primitive chi,
// Lambda(s) = (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s,chi)
double functional_equation_residual(cplx s, const DirichletCharacter& chi);

// same residual from precomputed L-values (Ls at s for chi, L1ms at 1-s for
// conj chi) and tau(chi); lets sweeps share Hurwitz rows across characters
double functional_equation_residual(const LValue& Ls, const LValue& L1ms,
                                    const DirichletCharacter& chi, cplx tau_chi);

// |L(1/2+it, chi)| / (q (1+|t|))^{1/6}, diagnostic only
double weyl_ratio(const DirichletCharacter& chi, double t);

struct PartialSumProfile {
    double max_abs;     // max over x <= q of |sum_{n<=x} chi(n)|, from exact counts
    i64 argmax_x;
    double polya_vinogradov;  // sqrt(q) log q
    double env_weyl;          // x^{1/2} q^{11/64} at the maximising x
    double env_weyl_alt;      // x^{8/15} q^{7/45}
};
PartialSumProfile partial_sum_profile(const DirichletCharacter& chi);

// divisor AFE: tau(n) chi(n) against the c-expansion with kernel
// f(x) = (1/2 pi i) int_{(1)} x^{-2s} L(1+2s, chi_0 mod q) exp(s^2)/s ds
struct AfeCheck {
    cplx lhs;
    cplx rhs;
    double residual;
};
AfeCheck divisor_afe_check(const DirichletCharacter& chi, i64 n, double c_max,
                           double quad_height = 40.0, double quad_step = 0.05);

// the AFE kernel f by vertical-line quadrature (diagnostic / tests)
double afe_kernel(double x, i64 q, double quad_height = 40.0, double quad_step = 0.05);

struct MomentReport {
    i64 q;
    i64 d;
    i64 alpha_index;   // flat index of the coset representative
    double T;
    double step;
    double moment;     // trapezoid of int_{-T}^{T} sum_psi |L(1/2+it, psi.alpha)|^4
    double normalizer; // T * lcm(d, q*)
    double ratio;
};

// fourth moment along the coset {alpha psi : psi mod d}; alpha primitive mod q
MomentReport fourth_moment_coset(i64 q, i64 d, const DirichletCharacter& alpha,
                                 double T, double step);

// same integrand over an arbitrary family of mod-q characters (used for the
// full group and for coset-partition consistency, where the identity coset
// has no primitive representative)
double fourth_moment_family(const std::vector<DirichletCharacter>& family,
                            double T, double step);

}  // namespace nt
