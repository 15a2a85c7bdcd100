#include "nt/lfunc.hpp"

#include <cmath>

namespace nt {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// B_{2j} / (2j)! for j = 1..15
const double* bernoulli_over_factorial() {
    static double c[16] = {0.0};
    static bool init = false;
    if (!init) {
        const double B2[15] = {1.0 / 6,       -1.0 / 30,      1.0 / 42,       -1.0 / 30,
                               5.0 / 66,      -691.0 / 2730,  7.0 / 6,        -3617.0 / 510,
                               43867.0 / 798, -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730,
                               8553103.0 / 6, -23749461029.0 / 870, 8615841276005.0 / 14322};
        for (int j = 1; j <= 15; ++j) c[j] = B2[j - 1] / std::tgamma(2.0 * j + 1.0);
        init = true;
    }
    return c;
}

inline cplx cpow_real_base(double b, cplx e) {
    // b^e = exp(e ln b) for b > 0
    double lb = std::log(b);
    return std::exp(e.real() * lb) * std::polar(1.0, e.imag() * lb);
}

}  // namespace

ZetaValue hurwitz_zeta(cplx s, double a) {
    if (!(a > 0.0 && a <= 1.0)) throw std::domain_error("hurwitz_zeta: a must be in (0,1]");
    if (s == cplx{1.0, 0.0}) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    const double* coef = bernoulli_over_factorial();
    int N = std::max(25, static_cast<int>(std::ceil(10.0 + 2.0 * std::fabs(s.imag()))));

    cplx sum{0.0, 0.0};
    double sumabs = 0.0;
    for (int k = 0; k < N; ++k) {
        cplx t = cpow_real_base(a + k, -s);
        sum += t;
        sumabs += std::abs(t);
    }
    double w = a + N;
    cplx wms = cpow_real_base(w, -s);           // w^{-s}
    sum += wms * w / (s - 1.0);                 // w^{1-s}/(s-1)
    sum += 0.5 * wms;

    cplx poch = s;                              // s(s+1)...(s+2j-2), starting at j=1
    cplx wp = wms / w;                          // w^{-s-2j+1} at j=1
    double w2 = 1.0 / (w * w);
    cplx last{0.0, 0.0};
    for (int j = 1; j <= 15; ++j) {
        last = coef[j] * poch * wp;
        sum += last;
        poch *= (s + cplx(2.0 * j - 1.0, 0.0)) * (s + cplx(2.0 * j, 0.0));
        wp *= w2;
    }
    ZetaValue out;
    out.value = sum;
    out.est_error = 2.0 * std::abs(last) + 5e-16 * (sumabs + std::abs(sum));
    return out;
}

cplx lgamma_complex(cplx z) {
    // Lanczos, g = 7, 9 coefficients
    static const double g = 7.0;
    static const double c[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059, 12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        return std::log(kPi / std::sin(kPi * z)) - lgamma_complex(1.0 - z);
    }
    z -= 1.0;
    cplx x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    cplx t = z + g + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

LValue dirichlet_l(cplx s, const DirichletCharacter& chi) {
    return dirichlet_l_from_row(hurwitz_row(s, chi.modulus()), chi);
}

HurwitzRow hurwitz_row(cplx s, i64 q) {
    HurwitzRow row;
    row.s = s;
    row.q = q;
    row.zeta.assign(static_cast<size_t>(q), cplx{0.0, 0.0});
    row.est_error = 0.0;
    auto G = CharacterGroup::get(q);
    for (i64 a = 1; a <= q; ++a) {
        if (!G->is_unit(a)) continue;
        auto z = hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(q));
        row.zeta[static_cast<size_t>(a - 1)] = z.value;
        row.est_error = std::max(row.est_error, z.est_error);
    }
    return row;
}

LValue dirichlet_l_from_row(const HurwitzRow& row, const DirichletCharacter& chi) {
    i64 q = chi.modulus();
    if (q != row.q) throw std::invalid_argument("dirichlet_l_from_row: modulus mismatch");
    LValue out;
    out.s = row.s;
    out.q = q;
    out.char_index = chi.flat_index();
    if (q == 1) {
        auto z = hurwitz_zeta(row.s, 1.0);
        out.value = z.value;
        out.est_error = z.est_error;
        return out;
    }
    const RootTable& rt = chi.group().roots();
    cplx sum{0.0, 0.0};
    for (i64 a = 1; a <= q; ++a) {
        auto k = chi.index(a);
        if (!k) continue;
        sum += rt.w[static_cast<size_t>(*k)] * row.zeta[static_cast<size_t>(a - 1)];
    }
    cplx qs = cpow_real_base(static_cast<double>(q), -row.s);
    out.value = qs * sum;
    out.est_error = std::abs(qs) * row.est_error * static_cast<double>(euler_phi(q)) + 1e-15 * std::abs(out.value);
    return out;
}

namespace {

cplx completed_lambda(cplx s, const DirichletCharacter& chi, const LValue& L, int parity) {
    double q = static_cast<double>(chi.modulus());
    cplx shalf = (s + static_cast<double>(parity)) / 2.0;
    cplx log_pref = shalf * std::log(q / kPi);
    return std::exp(log_pref + lgamma_complex(shalf)) * L.value;
}

}  // namespace

double functional_equation_residual(const LValue& Ls, const LValue& L1ms,
                                    const DirichletCharacter& chi, cplx tau_chi) {
    i64 q = chi.modulus();
    int parity = chi.is_even() ? 0 : 1;
    cplx lam1 = completed_lambda(Ls.s, chi, Ls, parity);
    cplx lam2 = completed_lambda(L1ms.s, chi, L1ms, parity);
    cplx i_pow_a = (parity == 0) ? cplx{1.0, 0.0} : cplx{0.0, 1.0};
    cplx eps = tau_chi / (i_pow_a * std::sqrt(static_cast<double>(q)));
    return std::abs(lam1 - eps * lam2);
}

double functional_equation_residual(cplx s, const DirichletCharacter& chi) {
    if (!chi.is_primitive())
        throw not_primitive_error("functional_equation_residual: chi must be primitive");
    i64 q = chi.modulus();
    if (q == 1) {
        // xi(s) = pi^{-s/2} Gamma(s/2) zeta(s) = xi(1-s)
        auto z1 = hurwitz_zeta(s, 1.0);
        auto z2 = hurwitz_zeta(1.0 - s, 1.0);
        cplx xi1 = std::exp(-s / 2.0 * std::log(kPi) + lgamma_complex(s / 2.0)) * z1.value;
        cplx xi2 = std::exp(-(1.0 - s) / 2.0 * std::log(kPi) + lgamma_complex((1.0 - s) / 2.0)) * z2.value;
        return std::abs(xi1 - xi2);
    }
    auto L1 = dirichlet_l(s, chi);
    auto L2 = dirichlet_l(1.0 - s, chi.conj());
    return functional_equation_residual(L1, L2, chi, gauss_sum(chi, 1).value);
}

double weyl_ratio(const DirichletCharacter& chi, double t) {
    auto L = dirichlet_l(cplx{0.5, t}, chi);
    double cond = static_cast<double>(chi.modulus()) * (1.0 + std::fabs(t));
    return std::abs(L.value) / std::pow(cond, 1.0 / 6.0);
}

PartialSumProfile partial_sum_profile(const DirichletCharacter& chi) {
    if (!chi.is_primitive()) throw not_primitive_error("partial_sum_profile: chi must be primitive");
    i64 q = chi.modulus();
    i64 M = chi.group().root_order();
    const RootTable& rt = chi.group().roots();
    std::vector<i64> counts(static_cast<size_t>(M), 0);
    cplx run{0.0, 0.0};
    double best = -1.0;
    i64 bestx = 0;
    std::vector<i64> best_counts(counts);
    for (i64 x = 1; x <= q; ++x) {
        auto k = chi.index(x);
        if (k) {
            ++counts[static_cast<size_t>(*k)];
            run += rt.w[static_cast<size_t>(*k)];
        }
        double ab = std::abs(run);
        if (ab > best) {
            best = ab;
            bestx = x;
            best_counts = counts;
        }
    }
    // re-evaluate the maximum from the exact integer counts
    cplx exact{0.0, 0.0};
    for (i64 k = 0; k < M; ++k)
        if (best_counts[static_cast<size_t>(k)] != 0)
            exact += static_cast<double>(best_counts[static_cast<size_t>(k)]) * rt.w[static_cast<size_t>(k)];
    PartialSumProfile out;
    out.max_abs = std::abs(exact);
    out.argmax_x = bestx;
    double qd = static_cast<double>(q);
    out.polya_vinogradov = std::sqrt(qd) * std::log(qd);
    double xd = static_cast<double>(bestx);
    out.env_weyl = std::pow(xd, 0.5) * std::pow(qd, 11.0 / 64.0);
    out.env_weyl_alt = std::pow(xd, 8.0 / 15.0) * std::pow(qd, 7.0 / 45.0);
    return out;
}

// ----- divisor AFE -----

namespace {

struct AfeQuadrature {
    std::vector<double> v;
    std::vector<cplx> weight;  // (step / 2 pi) zeta(3+2iv) prod_p|q (1 - p^{-3-2iv}) e^{(1+iv)^2} / (1+iv)
};

AfeQuadrature afe_quadrature(i64 q, double H, double step) {
    AfeQuadrature quad;
    auto fq = factor(q);
    int n = static_cast<int>(std::llround(2.0 * H / step));
    for (int k = 0; k <= n; ++k) {
        double v = -H + step * k;
        cplx s2 = cplx{3.0, 2.0 * v};  // 1 + 2s on the line s = 1 + iv
        cplx z = hurwitz_zeta(s2, 1.0).value;
        for (const auto& pp : fq.parts)
            z *= 1.0 - cpow_real_base(static_cast<double>(pp.p), -s2);
        cplx s = cplx{1.0, v};
        cplx w = z * std::exp(s * s) / s * (step / (2.0 * kPi));
        if (k == 0 || k == n) w *= 0.5;
        quad.v.push_back(v);
        quad.weight.push_back(w);
    }
    return quad;
}

double afe_kernel_from_quadrature(double x, const AfeQuadrature& quad) {
    // f(x) = (1/2 pi i) int x^{-2s} L(1+2s, chi_0) e^{s^2}/s ds on Re s = 1
    cplx acc{0.0, 0.0};
    double lx = std::log(x);
    double x2 = 1.0 / (x * x);
    for (size_t k = 0; k < quad.v.size(); ++k)
        acc += quad.weight[k] * (x2 * std::polar(1.0, -2.0 * quad.v[k] * lx));
    return acc.real();
}

}  // namespace

double afe_kernel(double x, i64 q, double quad_height, double quad_step) {
    return afe_kernel_from_quadrature(x, afe_quadrature(q, quad_height, quad_step));
}

AfeCheck divisor_afe_check(const DirichletCharacter& chi, i64 n, double c_max,
                           double quad_height, double quad_step) {
    if (!chi.is_primitive() || chi.modulus() == 1)
        throw not_primitive_error("divisor_afe_check: chi must be primitive, q > 1");
    i64 q = chi.modulus();
    if (std::gcd(n, q) != 1) throw std::domain_error("divisor_afe_check: need (n,q) = 1");
    auto quad = afe_quadrature(q, quad_height, quad_step);
    auto chibar = chi.conj();

    // tau(n) chi(n)
    i64 taun = static_cast<i64>(divisors(n).size());
    cplx lhs = static_cast<double>(taun) * chi(n);

    // sum over c coprime to q; inner complete sum tau(conj chi mod cq, n)
    // collapses through the Gauss-sum lemma, cancelling tau(conj chi):
    // rhs = 2 sum_c chi(c)/c f(c/sqrt n) sum_{d | (n,c)} d chi(n/d) conj(chi)(c/d) mu(c/d)
    cplx rhs{0.0, 0.0};
    double sqn = std::sqrt(static_cast<double>(n));
    for (i64 c = 1; c <= static_cast<i64>(c_max); ++c) {
        auto kc = chi.index(c);
        if (!kc) continue;
        double f = afe_kernel_from_quadrature(static_cast<double>(c) / sqn, quad);
        cplx inner{0.0, 0.0};
        for (i64 d : divisors(std::gcd(n, c))) {
            int mu = mobius(c / d);
            if (mu == 0) continue;
            inner += static_cast<double>(d * mu) * chi(n / d) * chibar(c / d);
        }
        rhs += chi.group().roots().w[static_cast<size_t>(*kc)] / static_cast<double>(c) * f * inner;
    }
    rhs *= 2.0;
    return {lhs, rhs, std::abs(lhs - rhs)};
}

// ----- fourth moment along cosets -----

double fourth_moment_family(const std::vector<DirichletCharacter>& family, double T, double step) {
    if (family.empty()) return 0.0;
    i64 q = family.front().modulus();
    for (const auto& chi : family)
        if (chi.modulus() != q) throw std::invalid_argument("fourth_moment_family: mixed moduli");
    int npts = static_cast<int>(std::llround(2.0 * T / step));
    double integral = 0.0;
    for (int k = 0; k <= npts; ++k) {
        double t = -T + step * k;
        auto row = hurwitz_row(cplx{0.5, t}, q);
        double s = 0.0;
        for (const auto& chi : family) {
            double a = std::abs(dirichlet_l_from_row(row, chi).value);
            s += a * a * a * a;
        }
        integral += (k == 0 || k == npts) ? 0.5 * s : s;
    }
    return integral * step;
}

MomentReport fourth_moment_coset(i64 q, i64 d, const DirichletCharacter& alpha, double T, double step) {
    if (alpha.modulus() != q) throw std::invalid_argument("fourth_moment_coset: alpha not mod q");
    if (!alpha.is_primitive()) throw not_primitive_error("fourth_moment_coset: alpha must be primitive");
    if (d <= 0 || q % d != 0) throw std::invalid_argument("fourth_moment_coset: d must divide q");
    auto family = coset(alpha, d);
    MomentReport r;
    r.q = q;
    r.d = d;
    r.alpha_index = alpha.flat_index();
    r.T = T;
    r.step = step;
    r.moment = fourth_moment_family(family, T, step);
    r.normalizer = T * static_cast<double>(std::lcm(d, q_star(q)));
    r.ratio = r.moment / r.normalizer;
    return r;
}

}  // namespace nt
