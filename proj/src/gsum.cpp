#include "nt/charsums.hpp"

#include <cmath>

namespace nt {

namespace {

struct OddPrimePowerCtx {
    i64 q;
    i64 p;
    int beta;
    i64 n;                       // phi(q), unit group cyclic order
    const std::array<i64, 2>* dlog;  // basis dlog table, slot 0
    GroupPtr group;

    explicit OddPrimePowerCtx(GroupPtr g) : group(std::move(g)) {
        if (group->ncomp() != 1 || group->comp(0).p == 2)
            throw std::domain_error("g-sum machinery requires an odd prime power modulus");
        const auto& c = group->comp(0);
        q = c.pbeta;
        p = c.p;
        beta = c.beta;
        n = c.part_order[0];
        dlog = group->comp(0).basis.dlog.data();
    }
    i64 dl(i64 x) const { return dlog[static_cast<size_t>(x)][0]; }  // -1 on non-units
};

void require_primitive_pair(const DirichletCharacter& chi, const DirichletCharacter& psi) {
    if (chi.modulus() != psi.modulus())
        throw std::invalid_argument("g_sum: chi and psi must share a modulus");
    if (!chi.is_primitive()) throw not_primitive_error("g_sum: chi is not primitive");
    if (!psi.is_primitive()) throw not_primitive_error("g_sum: psi is not primitive");
}

}  // namespace

CharSumValue g_sum(const DirichletCharacter& chi, const DirichletCharacter& psi, GMethod method) {
    require_primitive_pair(chi, psi);
    i64 q = chi.modulus();
    const auto& f = chi.group().fact();
    if (f.parts.size() != 1)
        throw std::domain_error("g_sum: modulus must be a prime power");
    if (f.parts[0].p == 2) {
        // t(t+1) is even, so chi(t) conj(chi)(t+1) has no nonzero term
        return {cplx{0.0, 0.0}, 0};
    }

    OddPrimePowerCtx ctx(chi.group_ptr());
    i64 a = mod(chi.exponents()[0].a[0], ctx.n);
    i64 b = mod(psi.exponents()[0].a[0], ctx.n);
    ExponentHistogram h(ctx.n);

    if (method == GMethod::direct) {
        // sum_{t,u} chi(t) conj(chi)(t+1) conj(chi)(u) chi(u+1) psi(ut-1)
        for (i64 t = 1; t < q; ++t) {
            i64 dt = ctx.dl(t);
            if (dt < 0) continue;
            i64 dt1 = ctx.dl((t + 1) % q);
            if (dt1 < 0) continue;
            i64 ct = mod(a * (dt - dt1), ctx.n);
            for (i64 u = 1; u < q; ++u) {
                i64 du = ctx.dl(u);
                if (du < 0) continue;
                i64 du1 = ctx.dl((u + 1) % q);
                if (du1 < 0) continue;
                i64 dut = ctx.dl(mod(u * t - 1, q));
                if (dut < 0) continue;
                h.add(mod(ct + a * (du1 - du) + b * dut, ctx.n));
            }
        }
    } else {
        // sum*_{t,u} chi(u (t-1) / (t (u-1))) psi(ut - t - u)
        for (i64 t = 1; t < q; ++t) {
            i64 dt = ctx.dl(t);
            if (dt < 0) continue;
            i64 dtm1 = ctx.dl(mod(t - 1, q));
            if (dtm1 < 0) continue;
            i64 ct = mod(a * (dtm1 - dt), ctx.n);
            for (i64 u = 1; u < q; ++u) {
                i64 du = ctx.dl(u);
                if (du < 0) continue;
                i64 dum1 = ctx.dl(mod(u - 1, q));
                if (dum1 < 0) continue;
                i64 darg = ctx.dl(mod(u * t - t - u, q));
                if (darg < 0) continue;
                h.add(mod(ct + a * (du - dum1) + b * darg, ctx.n));
            }
        }
    }
    return h.value();
}

GTable g_table(i64 q, GMethod method) {
    OddPrimePowerCtx ctx(CharacterGroup::get(q));
    i64 n = ctx.n;
    // joint histogram: cnt[r][s] = #{(t,u) : chi-exponent r, psi-exponent s}
    std::vector<i64> cnt(static_cast<size_t>(n * n), 0);
    i64 terms = 0;
    for (i64 t = 1; t < q; ++t) {
        i64 dt = ctx.dl(t);
        if (dt < 0) continue;
        i64 dshift = ctx.dl(mod(method == GMethod::direct ? t + 1 : t - 1, q));
        if (dshift < 0) continue;
        i64 rt = method == GMethod::direct ? dt - dshift : dshift - dt;
        for (i64 u = 1; u < q; ++u) {
            i64 du = ctx.dl(u);
            if (du < 0) continue;
            i64 dushift = ctx.dl(mod(method == GMethod::direct ? u + 1 : u - 1, q));
            if (dushift < 0) continue;
            i64 darg = ctx.dl(mod(method == GMethod::direct ? u * t - 1 : u * t - t - u, q));
            if (darg < 0) continue;
            i64 r = mod(method == GMethod::direct ? rt + dushift - du : rt + du - dushift, n);
            ++cnt[static_cast<size_t>(r * n + darg)];
            ++terms;
        }
    }
    // row-column DFT: G[a][b] = sum_{r,s} cnt[r][s] e((a r + b s)/n)
    const RootTable& rt_n = RootTable::shared(n);
    std::vector<cplx> W(static_cast<size_t>(n * n));
    for (i64 a = 0; a < n; ++a)
        for (i64 s = 0; s < n; ++s) {
            cplx acc{0.0, 0.0};
            for (i64 r = 0; r < n; ++r) {
                i64 c = cnt[static_cast<size_t>(r * n + s)];
                if (c != 0) acc += static_cast<double>(c) * rt_n.w[static_cast<size_t>(a * r % n)];
            }
            W[static_cast<size_t>(a * n + s)] = acc;
        }
    GTable out;
    out.q = q;
    out.n = n;
    out.terms = terms;
    out.val.resize(static_cast<size_t>(n * n));
    for (i64 a = 0; a < n; ++a)
        for (i64 b = 0; b < n; ++b) {
            cplx acc{0.0, 0.0};
            for (i64 s = 0; s < n; ++s)
                acc += W[static_cast<size_t>(a * n + s)] * rt_n.w[static_cast<size_t>(b * s % n)];
            out.val[static_cast<size_t>(a * n + b)] = acc;
        }
    return out;
}

GBound g_bound(i64 ell_chi, i64 ell_psi, i64 p, int beta) {
    if (p == 2 || beta < 2) throw std::domain_error("g_bound: need odd p and beta >= 2");
    i64 m = ipow(p, beta - 1);
    i64 q = ipow(p, beta);
    GBound out;
    out.A = mul_mod(mod(ell_chi, m), inv_mod(ell_psi, m), m);
    out.Delta = out.A * out.A + 4;
    if (beta % 2 == 0) {
        int alpha = beta / 2;
        out.bound = static_cast<double>(q) * static_cast<double>(rho_bruteforce(out.Delta, p, alpha));
    } else {
        int alpha = (beta - 1) / 2;
        if (out.Delta % p != 0) {
            out.bound = 2.0 * static_cast<double>(q);
        } else if (out.Delta % (p * p) != 0) {
            out.bound = 0.0;
        } else {
            out.bound = static_cast<double>(q) * std::sqrt(static_cast<double>(p)) *
                        static_cast<double>(rho_bruteforce(out.Delta / (p * p), p, alpha - 1));
        }
    }
    return out;
}

// ----- stationary-phase reduction checks -----

namespace {

// entries of ell_chi (log f1)' + ell_psi (log f2)' for the g-sum family
// f1 = u(t-1)/(t(u-1)), f2 = ut-t-u, evaluated mod `m` (denominators units)
std::array<i64, 2> gsum_gradient(i64 t, i64 u, i64 ell_chi, i64 ell_psi, i64 m) {
    i64 f2 = mod(u * t - t - u, m);
    i64 g1t = mul_mod(1, inv_mod(mul_mod(t, mod(t - 1, m), m), m), m);           // 1/(t(t-1))
    i64 g1u = mod(-inv_mod(mul_mod(u, mod(u - 1, m), m), m), m);                 // -1/(u(u-1))
    i64 g2t = mul_mod(mod(u - 1, m), inv_mod(f2, m), m);
    i64 g2u = mul_mod(mod(t - 1, m), inv_mod(f2, m), m);
    return {mod(ell_chi * g1t + ell_psi * g2t, m), mod(ell_chi * g1u + ell_psi * g2u, m)};
}

}  // namespace

StationaryCheck stationary_reduction_gsum(const DirichletCharacter& chi, const DirichletCharacter& psi) {
    require_primitive_pair(chi, psi);
    const auto& f = chi.group().fact();
    if (f.parts.size() != 1 || f.parts[0].p == 2 || f.parts[0].beta < 2)
        throw std::domain_error("stationary_reduction_gsum: need odd p^beta, beta >= 2");
    i64 p = f.parts[0].p;
    int beta = f.parts[0].beta;
    i64 q = f.parts[0].value;
    int alpha = beta / 2;
    bool odd_case = (beta % 2 == 1);
    i64 pa = ipow(p, alpha);
    i64 pa1 = pa * p;

    i64 ell_chi = postnikov_index(chi, 0).value;
    i64 ell_psi = postnikov_index(psi, 0).value;

    const RootTable& rt = RootTable::shared(chi.group().root_order());
    cplx reduced{0.0, 0.0};
    i64 points = 0;
    for (i64 t0 = 0; t0 < pa; ++t0) {
        if (t0 % p == 0 || mod(t0 - 1, p) == 0) continue;
        for (i64 u0 = 0; u0 < pa; ++u0) {
            if (u0 % p == 0 || mod(u0 - 1, p) == 0) continue;
            i64 f2 = mod(u0 * t0 - t0 - u0, pa1);
            if (f2 % p == 0) continue;  // psi-argument must be a unit
            auto v = gsum_gradient(t0, u0, ell_chi, ell_psi, pa1);
            if (v[0] % pa != 0 || v[1] % pa != 0) continue;
            ++points;
            // chi(f1) psi(f2) at any lift of (t0,u0) mod q
            i64 f1 = mul_mod(mul_mod(u0, mod(t0 - 1, q), q), inv_mod(mul_mod(t0, mod(u0 - 1, q), q), q), q);
            auto k1 = chi.index(f1);
            auto k2 = psi.index(mod(u0 * t0 - t0 - u0, q));
            cplx term = rt.w[static_cast<size_t>(*k1)] * rt.w[static_cast<size_t>(*k2)];
            if (odd_case) {
                QuadraticFormModP Q;
                Q.p = p;
                Q.n = 2;
                // Hessians of log f1 (diagonal) and log f2 mod p
                i64 t2 = mul_mod(t0, t0, p), u2 = mul_mod(u0, u0, p);
                i64 tm1 = mod(t0 - 1, p), um1 = mod(u0 - 1, p);
                i64 h1t = mod(inv_mod(t2, p) - inv_mod(mul_mod(tm1, tm1, p), p), p);
                i64 h1u = mod(inv_mod(mul_mod(um1, um1, p), p) - inv_mod(u2, p), p);
                i64 f2p = mod(f2, p);
                i64 inv_f22 = inv_mod(mul_mod(f2p, f2p, p), p);
                i64 h2tt = mod(-mul_mod(mul_mod(um1, um1, p), inv_f22, p), p);
                i64 h2uu = mod(-mul_mod(mul_mod(tm1, tm1, p), inv_f22, p), p);
                i64 h2tu = mod(-inv_f22, p);
                Q.twoQ[0][0] = mod(ell_chi * h1t + ell_psi * h2tt, p);
                Q.twoQ[1][1] = mod(ell_chi * h1u + ell_psi * h2uu, p);
                Q.twoQ[0][1] = Q.twoQ[1][0] = mod(ell_psi * h2tu, p);
                Q.L = {mod(v[0] / pa, p), mod(v[1] / pa, p), 0};
                term *= quadratic_gauss(Q).value;
            }
            reduced += term;
        }
    }
    StationaryCheck out;
    out.full = g_sum(chi, psi, GMethod::shifted);
    out.reduced = std::pow(static_cast<double>(p), 2.0 * alpha) * reduced;
    out.stationary_points = points;
    return out;
}

StationaryCheck stationary_reduction_hhat(const DirichletCharacter& chi, const DirichletCharacter& psi) {
    const auto& fc = chi.group().fact();
    const auto& fp = psi.group().fact();
    if (fc.parts.size() != 1 || fp.parts.size() != 1 || fc.parts[0].p != fp.parts[0].p)
        throw std::domain_error("stationary_reduction_hhat: need a common prime power");
    i64 p = fc.parts[0].p;
    if (p == 2) throw std::domain_error("stationary_reduction_hhat: p must be odd");
    int gamma = fc.parts[0].beta;
    int beta = fp.parts[0].beta;
    if (!(2 <= beta && beta < gamma))
        throw std::domain_error("stationary_reduction_hhat: need 2 <= beta < gamma");
    if (!chi.is_primitive() || !psi.is_primitive())
        throw not_primitive_error("stationary_reduction_hhat: need primitive chi, psi");

    i64 qg = fc.parts[0].value;
    i64 P = ipow(p, gamma - beta);
    int alpha = beta / 2;
    bool odd_case = (beta % 2 == 1);
    i64 pa = ipow(p, alpha);
    i64 pa1 = pa * p;

    i64 ell_chi = postnikov_index(chi, 0).value;
    i64 ell_psi = postnikov_index(psi, 0).value;

    const RootTable& rt = RootTable::shared(chi.group().root_order());
    i64 stride = chi.group().root_order() / psi.group().root_order();

    cplx reduced{0.0, 0.0};
    i64 points = 0;
    for (i64 y0 = 0; y0 < pa; ++y0) {
        if (y0 % p == 0) continue;
        for (i64 u0 = 0; u0 < pa; ++u0) {
            if (u0 % p == 0) continue;
            // gradient rows: d log f1 at (P y0, P u0), and (1/y0, 1/u0)
            i64 Y = mod(P * y0, pa1), U = mod(P * u0, pa1);
            i64 denom = inv_mod(mod(1 + mul_mod(Y, U, pa1), pa1), pa1);
            i64 g1y = mod(mul_mod(mod(1 - U, pa1), mul_mod(inv_mod(mod(1 + Y, pa1), pa1), denom, pa1), pa1), pa1);
            i64 g1u = mod(mul_mod(mod(-1 - Y, pa1), mul_mod(inv_mod(mod(1 - U, pa1), pa1), denom, pa1), pa1), pa1);
            i64 v0 = mod(ell_chi * g1y + ell_psi * inv_mod(y0, pa1), pa1);
            i64 v1 = mod(ell_chi * g1u + ell_psi * inv_mod(u0, pa1), pa1);
            if (v0 % pa != 0 || v1 % pa != 0) continue;
            ++points;
            i64 Yg = mod(P * y0, qg), Ug = mod(P * u0, qg);
            i64 F1 = mul_mod(mul_mod(mod(1 + Yg, qg), mod(1 - Ug, qg), qg),
                             inv_mod(mod(1 + mul_mod(Yg, Ug, qg), qg), qg), qg);
            auto k1 = chi.index(F1);
            auto k2 = psi.index(mod(y0 * u0, fp.parts[0].value));
            cplx term = rt.w[static_cast<size_t>(*k1)] * rt.w[static_cast<size_t>(mod(*k2 * stride, chi.group().root_order()))];
            if (odd_case) {
                // gamma > beta kills the f1 Hessian mod p; 2Q = ell_psi diag(-1/y0^2, -1/u0^2)
                QuadraticFormModP Q;
                Q.p = p;
                Q.n = 2;
                Q.twoQ[0][0] = mod(-ell_psi * inv_mod(mul_mod(y0, y0, p), p), p);
                Q.twoQ[1][1] = mod(-ell_psi * inv_mod(mul_mod(u0, u0, p), p), p);
                Q.twoQ[0][1] = Q.twoQ[1][0] = 0;
                Q.L = {mod(v0 / pa, p), mod(v1 / pa, p), 0};
                if (p == 3 && beta == 3) {
                    // the w^3/3 tail of log(1+w) survives mod 3^3 on the diagonal
                    // third-order coefficients; cubes fold linearly over F_3 and
                    // shift L by ell_psi (1/y0, 1/u0).  (For families with all
                    // components at one modulus the shift is the stationary
                    // congruence value, which vanishes.)
                    Q.L[0] = mod(Q.L[0] + ell_psi * inv_mod(y0, 3), 3);
                    Q.L[1] = mod(Q.L[1] + ell_psi * inv_mod(u0, 3), 3);
                }
                term *= quadratic_gauss(Q).value;
            }
            reduced += term;
        }
    }
    StationaryCheck out;
    out.full = hhat_sum(chi, psi);
    out.reduced = std::pow(static_cast<double>(p), 2.0 * alpha) * reduced;
    out.stationary_points = points;
    return out;
}

}  // namespace nt
