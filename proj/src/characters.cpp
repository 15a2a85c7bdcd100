#include "nt/characters.hpp"

#include <map>
#include <mutex>

namespace nt {

namespace {
std::mutex g_cache_mutex;
std::map<i64, GroupPtr> g_group_cache;
}  // namespace

GroupPtr CharacterGroup::get(i64 q) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_group_cache.find(q);
    if (it != g_group_cache.end()) return it->second;
    auto g = std::make_shared<CharacterGroup>(q);
    g_group_cache.emplace(q, g);
    return g;
}

CharacterGroup::CharacterGroup(i64 q) : q_(q), fact_(factor(q)) {
    phi_ = euler_phi(fact_);
    M_ = 1;
    for (const auto& pp : fact_.parts) {
        Component c;
        c.p = pp.p;
        c.beta = pp.beta;
        c.pbeta = pp.value;
        c.basis = UnitGroupBasis::build(pp.p, pp.beta);
        if (pp.beta >= 2) c.logs = PadicLogTable::build(pp.p, pp.beta);
        c.nparts = static_cast<int>(c.basis.gens.size());
        for (int i = 0; i < c.nparts; ++i) c.part_order[static_cast<size_t>(i)] = c.basis.orders[static_cast<size_t>(i)];
        comps_.push_back(std::move(c));
        for (int i = 0; i < comps_.back().nparts; ++i)
            M_ = std::lcm(M_, comps_.back().part_order[static_cast<size_t>(i)]);
    }
    for (auto& c : comps_)
        for (int i = 0; i < c.nparts; ++i)
            c.stride[static_cast<size_t>(i)] = M_ / c.part_order[static_cast<size_t>(i)];
    roots_ = std::make_unique<RootTable>(M_);
}

bool CharacterGroup::is_unit(i64 x) const {
    for (const auto& c : comps_)
        if (!c.basis.is_unit(mod(x, c.pbeta))) return false;
    return true;
}

DirichletCharacter CharacterGroup::character(std::vector<LocalExponents> exps) const {
    if (exps.size() != comps_.size())
        throw std::invalid_argument("character: wrong number of components");
    for (size_t i = 0; i < exps.size(); ++i)
        for (int j = 0; j < comps_[i].nparts; ++j)
            exps[i].a[static_cast<size_t>(j)] = mod(exps[i].a[static_cast<size_t>(j)], comps_[i].part_order[static_cast<size_t>(j)]);
    return DirichletCharacter(shared_from_this(), std::move(exps));
}

DirichletCharacter CharacterGroup::character_by_flat_index(i64 idx) const {
    std::vector<LocalExponents> exps(comps_.size());
    for (size_t i = 0; i < comps_.size(); ++i)
        for (int j = 0; j < comps_[i].nparts; ++j) {
            i64 n = comps_[i].part_order[static_cast<size_t>(j)];
            exps[i].a[static_cast<size_t>(j)] = idx % n;
            idx /= n;
        }
    return DirichletCharacter(shared_from_this(), std::move(exps));
}

DirichletCharacter CharacterGroup::trivial() const {
    return DirichletCharacter(shared_from_this(), std::vector<LocalExponents>(comps_.size()));
}

std::vector<DirichletCharacter> CharacterGroup::all_characters() const {
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<size_t>(phi_));
    for (i64 i = 0; i < phi_; ++i) out.push_back(character_by_flat_index(i));
    return out;
}

std::vector<DirichletCharacter> CharacterGroup::primitive_characters() const {
    std::vector<DirichletCharacter> out;
    for (i64 i = 0; i < phi_; ++i) {
        auto chi = character_by_flat_index(i);
        if (chi.is_primitive()) out.push_back(std::move(chi));
    }
    return out;
}

std::vector<DirichletCharacter> CharacterGroup::even_characters() const {
    std::vector<DirichletCharacter> out;
    for (i64 i = 0; i < phi_; ++i) {
        auto chi = character_by_flat_index(i);
        if (chi.is_even()) out.push_back(std::move(chi));
    }
    return out;
}

std::vector<DirichletCharacter> enumerate_characters(i64 q, CharFilter filter) {
    auto g = CharacterGroup::get(q);
    switch (filter) {
        case CharFilter::all: return g->all_characters();
        case CharFilter::primitive: return g->primitive_characters();
        case CharFilter::even: return g->even_characters();
    }
    throw std::logic_error("unreachable");
}

DirichletCharacter::DirichletCharacter(GroupPtr group, std::vector<LocalExponents> exps)
    : group_(std::move(group)), exps_(std::move(exps)) {}

i64 DirichletCharacter::modulus() const { return group_->modulus(); }

std::optional<i64> DirichletCharacter::index(i64 x) const {
    i64 k = 0;
    for (size_t i = 0; i < exps_.size(); ++i) {
        const auto& c = group_->comps_[i];
        i64 xi = mod(x, c.pbeta);
        if (!c.basis.is_unit(xi)) return std::nullopt;
        auto d = c.basis.dlog[static_cast<size_t>(xi)];
        for (int j = 0; j < c.nparts; ++j)
            k = mod(k + mod(exps_[i].a[static_cast<size_t>(j)] * d[static_cast<size_t>(j)], c.part_order[static_cast<size_t>(j)]) * c.stride[static_cast<size_t>(j)],
                    group_->M_);
    }
    return k;
}

cplx DirichletCharacter::operator()(i64 x) const {
    auto k = index(x);
    if (!k) return {0.0, 0.0};
    return group_->roots().w[static_cast<size_t>(*k)];
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& other) const {
    if (group_ != other.group_ && modulus() != other.modulus())
        throw std::invalid_argument("character product: moduli differ");
    std::vector<LocalExponents> e(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i)
        for (int j = 0; j < group_->comps_[i].nparts; ++j)
            e[i].a[static_cast<size_t>(j)] = mod(exps_[i].a[static_cast<size_t>(j)] + other.exps_[i].a[static_cast<size_t>(j)],
                                                 group_->comps_[i].part_order[static_cast<size_t>(j)]);
    return DirichletCharacter(group_, std::move(e));
}

DirichletCharacter DirichletCharacter::conj() const { return pow(-1); }

DirichletCharacter DirichletCharacter::pow(i64 n) const {
    std::vector<LocalExponents> e(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i)
        for (int j = 0; j < group_->comps_[i].nparts; ++j)
            e[i].a[static_cast<size_t>(j)] = mod(exps_[i].a[static_cast<size_t>(j)] * n, group_->comps_[i].part_order[static_cast<size_t>(j)]);
    return DirichletCharacter(group_, std::move(e));
}

namespace {

// conductor of one component from its exponent vector
i64 component_conductor(const CharacterGroup::Component& c, const LocalExponents& e) {
    if (c.p != 2) {
        i64 a = e.a[0];
        if (c.nparts == 0 || a == 0) return 1;
        int v = std::min(valuation(a, c.p), c.beta - 1);
        return ipow(c.p, c.beta - v);
    }
    if (c.beta == 1) return 1;
    if (c.beta == 2) return e.a[0] == 0 ? 1 : 4;
    i64 a = e.a[0], b = e.a[1];
    if (b == 0) return a == 0 ? 1 : 4;
    int v = valuation(b, 2);
    return ipow(2, std::max(2, c.beta - v));
}

}  // namespace

i64 DirichletCharacter::conductor() const {
    i64 f = 1;
    for (size_t i = 0; i < exps_.size(); ++i) f *= component_conductor(group_->comps_[i], exps_[i]);
    return f;
}

bool DirichletCharacter::is_primitive() const {
    for (size_t i = 0; i < exps_.size(); ++i)
        if (component_conductor(group_->comps_[i], exps_[i]) != group_->comps_[i].pbeta) return false;
    return true;
}

bool DirichletCharacter::is_trivial() const {
    for (const auto& e : exps_)
        if (e.a[0] != 0 || e.a[1] != 0) return false;
    return true;
}

bool DirichletCharacter::is_even() const {
    if (modulus() == 1) return true;
    auto k = index(modulus() - 1);
    return k && *k == 0;
}

DirichletCharacter DirichletCharacter::lift_to(i64 Q) const {
    if (Q % modulus() != 0)
        throw std::invalid_argument("lift_to: modulus does not divide target");
    auto big = CharacterGroup::get(Q);
    std::vector<LocalExponents> e(big->ncomp());
    for (size_t i = 0; i < big->ncomp(); ++i) {
        const auto& cb = big->comp(i);
        // locate this prime in our own factorization
        const CharacterGroup::Component* cs = nullptr;
        const LocalExponents* es = nullptr;
        for (size_t j = 0; j < exps_.size(); ++j)
            if (group_->comps_[j].p == cb.p) { cs = &group_->comps_[j]; es = &exps_[j]; }
        if (!cs || cs->nparts == 0) continue;  // component absent or trivial group
        if (cb.p != 2) {
            // chi'(g_B^j) = chi(g_B^j mod p^delta): exponent transport through
            // the small modulus dlog of the big generator
            i64 gB = cb.basis.gens[0];
            i64 k = cs->basis.dlog[static_cast<size_t>(mod(gB, cs->pbeta))][0];
            i64 c = mod(es->a[0] * k, cs->part_order[0]);
            e[i].a[0] = mod(c * (cb.part_order[0] / cs->part_order[0]), cb.part_order[0]);
        } else {
            if (cs->beta <= 2) {
                // chi mod 4 lifts to the (-1)-part only (5-powers are 1 mod 4)
                if (cb.beta == 2) e[i].a[0] = es->a[0];
                else e[i] = {es->a[0], 0};
            } else {
                e[i].a[0] = es->a[0];
                e[i].a[1] = mod(es->a[1] * ipow(2, cb.beta - cs->beta), cb.part_order[1]);
            }
        }
    }
    return big->character(std::move(e));
}

DirichletCharacter DirichletCharacter::primitive_part() const {
    i64 f = conductor();
    auto small = CharacterGroup::get(f);
    std::vector<LocalExponents> e(small->ncomp());
    for (size_t i = 0; i < small->ncomp(); ++i) {
        const auto& cs = small->comp(i);
        const CharacterGroup::Component* cb = nullptr;
        const LocalExponents* eb = nullptr;
        for (size_t j = 0; j < exps_.size(); ++j)
            if (group_->comps_[j].p == cs.p) { cb = &group_->comps_[j]; eb = &exps_[j]; }
        if (cb->p != 2) {
            // invert the lift: a_big = a_small * dlog_small(g_big) * (n_big/n_small)
            i64 ratio = cb->part_order[0] / cs.part_order[0];
            i64 k = cs.basis.dlog[static_cast<size_t>(mod(cb->basis.gens[0], cs.pbeta))][0];
            i64 a_small = mod((eb->a[0] / ratio) * inv_mod(k, cs.part_order[0]), cs.part_order[0]);
            e[i].a[0] = a_small;
        } else {
            if (cs.beta == 2) e[i].a[0] = eb->a[0];
            else {
                e[i].a[0] = eb->a[0];
                e[i].a[1] = eb->a[1] / ipow(2, cb->beta - cs.beta);
            }
        }
    }
    auto chi = small->character(std::move(e));
    // the exponent transport above is checked structurally by lift_to
    return chi;
}

i64 DirichletCharacter::flat_index() const {
    i64 idx = 0, mult = 1;
    for (size_t i = 0; i < exps_.size(); ++i)
        for (int j = 0; j < group_->comps_[i].nparts; ++j) {
            idx += exps_[i].a[static_cast<size_t>(j)] * mult;
            mult *= group_->comps_[i].part_order[static_cast<size_t>(j)];
        }
    return idx;
}

PostnikovIndex postnikov_index(const DirichletCharacter& chi, size_t comp_idx) {
    const auto& c = chi.group().comp(comp_idx);
    const auto& e = chi.exponents()[comp_idx];
    if (c.p != 2) {
        if (c.beta < 2) throw std::domain_error("postnikov_index: need beta >= 2 for odd p");
        i64 m = c.pbeta / c.p;  // p^{beta-1}
        // chi(1+p) = e(a k / phi) with k = dlog(1+p) = (p-1) w, and
        // log_p(1+p) = p u; matching at the generator 1+p of 1+pZ gives
        // ell = a w u^{-1} mod p^{beta-1}
        i64 k = c.basis.dlog[static_cast<size_t>(1 + c.p)][0];
        i64 w = k / (c.p - 1);
        i64 u = c.logs->log1(1 + c.p) / c.p;
        i64 ell = mul_mod(mod(e.a[0], m), mul_mod(w, inv_mod(u, m), m), m);
        return {c.p, c.beta, m, ell};
    }
    if (c.beta < 3) throw std::domain_error("postnikov_index: need beta >= 3 for p = 2");
    i64 m = c.pbeta / 4;  // 2^{beta-2}
    i64 u = c.logs->log1(5) / 4;
    i64 ell = mul_mod(mod(e.a[1], m), inv_mod(u, m), m);
    return {2, c.beta, m, ell};
}

i64 conductor_drop_index(const DirichletCharacter& chi, i64 h, i64 d) {
    i64 q = chi.modulus();
    if (!chi.is_primitive()) throw std::domain_error("conductor_drop_index: chi must be primitive");
    if (d <= 0 || q % d != 0 || mod(h, d) != 0 || (d * d) % q != 0)
        throw std::domain_error("conductor_drop_index: need d | (q,h) and q | d^2");
    i64 hq = std::gcd(mod(h, q) == 0 ? q : mod(h, q), q);
    if (hq == q)
        throw std::domain_error("conductor_drop_index: q | h is the degenerate branch");
    i64 Qp = q / hq;
    i64 M = chi.group().root_order();
    auto k1 = chi.index(1 + hq);
    if (!k1) throw std::logic_error("1 + (h,q) must be a unit");
    // chi(1+hq) is a Qp-th root of unity: k/M = ell/Qp
    if ((*k1 * Qp) % M != 0)
        throw std::logic_error("conductor_drop_index: value is not a q/(h,q)-th root of unity");
    i64 ell = mod(*k1 * Qp / M, Qp);
    // defining property, checked for every u
    for (i64 u = 0; u < Qp; ++u) {
        auto ku = chi.index(mod(1 + hq * u, q));
        if (!ku || mod(*ku * Qp - ell * u * M, M * Qp) != 0)
            throw std::logic_error("conductor_drop_index: additive-character identity failed");
    }
    if (std::gcd(ell, Qp) != 1)
        throw std::logic_error("conductor_drop_index: index not coprime to q/(h,q)");
    return ell;
}

std::vector<DirichletCharacter> coset(const DirichletCharacter& alpha, i64 d) {
    i64 q = alpha.modulus();
    if (d <= 0 || q % d != 0) throw std::invalid_argument("coset: d must divide q");
    std::vector<DirichletCharacter> out;
    for (const auto& psi : enumerate_characters(d, CharFilter::all))
        out.push_back(alpha * psi.lift_to(q));
    return out;
}

}  // namespace nt
