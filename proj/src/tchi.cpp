#include "nt/charsums.hpp"

namespace nt {

CharSumValue tchi(const DirichletCharacter& chi, i64 h, i64 m, i64 n) {
    i64 q = chi.modulus();
    i64 M = chi.group().root_order();
    i64 R = std::lcm(M, q);
    const auto& G = chi.group();
    h = mod(h, q);
    m = mod(m, q);
    n = mod(n, q);

    std::vector<i64> units;
    std::vector<i64> inv(static_cast<size_t>(q), 0);
    for (i64 x = 0; x < q; ++x)
        if (G.is_unit(x)) {
            units.push_back(x);
            inv[static_cast<size_t>(x)] = inv_mod(x, q);
        }

    ExponentHistogram hist(R);
    for (i64 x : units) {
        auto kxh = chi.index(mod(x + h, q));
        if (!kxh) continue;
        auto kx = chi.index(x);
        i64 kchi = mod((*kxh - *kx) * (R / M), R);
        for (i64 y : units) {
            i64 add = mod(m * x % q * inv[static_cast<size_t>(y)] + n * y, q);
            hist.add(mod(kchi + add * (R / q), R));
        }
    }
    return hist.value();
}

CharSumValue kl3(i64 a, i64 b, i64 c, i64 q) {
    if (q < 1) throw std::domain_error("kl3: q must be positive");
    a = mod(a, q);
    b = mod(b, q);
    c = mod(c, q);
    ExponentHistogram h(q);
    std::vector<i64> units, invs;
    for (i64 x = 0; x < q; ++x)
        if (std::gcd(x, q) == 1 || q == 1) {
            units.push_back(x);
            invs.push_back(inv_mod(x, q));
        }
    for (size_t i = 0; i < units.size(); ++i)
        for (size_t j = 0; j < units.size(); ++j) {
            i64 z = invs[i] * invs[j] % q;
            h.add(mod(a * units[i] + b * units[j] + c * z, q));
        }
    return h.value();
}

cplx kl3_expansion(i64 a, i64 b, i64 c, i64 q) {
    if (a < 1 || b < 1 || c < 1)
        throw std::domain_error("kl3_expansion: arguments must be positive integers");
    auto f = factor(q);
    auto q_part = [&](i64 x) {
        i64 x0 = 1;
        for (const auto& pp : f.parts) x0 *= ipow(pp.p, valuation(x, pp.p));
        return x0;
    };
    i64 a0 = q_part(a), b0 = q_part(b), c0 = q_part(c);
    i64 coprime_part = mod(a / a0 % q * (b / b0 % q) % q * (c / c0 % q), q);

    auto chars = enumerate_characters(q, CharFilter::all);
    cplx s{0.0, 0.0};
    for (const auto& eta : chars) {
        auto etabar = eta.conj();
        cplx t = gauss_sum(etabar, a0).value * gauss_sum(etabar, b0).value * gauss_sum(etabar, c0).value;
        s += t * eta(coprime_part);
    }
    return s / static_cast<double>(euler_phi(f));
}

CharSumValue hhat_sum(const DirichletCharacter& chi, const DirichletCharacter& psi) {
    const auto& fc = chi.group().fact();
    const auto& fp = psi.group().fact();
    if (fc.parts.size() != 1 || fp.parts.size() != 1 || fc.parts[0].p != fp.parts[0].p)
        throw std::domain_error("hhat_sum: chi, psi must be characters to powers of one prime");
    i64 p = fc.parts[0].p;
    int gamma = fc.parts[0].beta;
    int beta = fp.parts[0].beta;
    if (gamma < 2 || beta < 1 || beta >= gamma)
        throw std::domain_error("hhat_sum: need gamma >= 2 and 1 <= beta < gamma");
    if (!chi.is_primitive()) throw not_primitive_error("hhat_sum: chi must be primitive mod p^gamma");
    if (!psi.is_primitive()) throw not_primitive_error("hhat_sum: psi must have conductor p^beta");

    i64 qg = fc.parts[0].value;  // p^gamma
    i64 qb = fp.parts[0].value;  // p^beta
    i64 P = ipow(p, gamma - beta);
    i64 P2 = mul_mod(P, P, qg);
    i64 Mg = chi.group().root_order();
    i64 Mb = psi.group().root_order();
    i64 stride = Mg / Mb;

    ExponentHistogram h(Mg);
    for (i64 y = 0; y < qb; ++y) {
        auto ky = psi.index(y);
        if (!ky) continue;
        auto kb = chi.index(mod(1 + P * y, qg));
        for (i64 u = 0; u < qb; ++u) {
            auto ku = psi.index(u);
            if (!ku) continue;
            auto ka = chi.index(mod(mul_mod(mul_mod(u, P2, qg), y, qg) + 1, qg));
            auto kc = chi.index(mod(1 - P * u, qg));
            h.add(mod(-*ka + *kb + *kc + (*ku + *ky) * stride, Mg));
        }
    }
    return h.value();
}

}  // namespace nt
