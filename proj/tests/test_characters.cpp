#include <doctest.h>

#include "nt/characters.hpp"

using namespace nt;

namespace {

// conductor by definition: smallest q' | q with chi trivial on units = 1 mod q'
i64 conductor_scan(const DirichletCharacter& chi) {
    i64 q = chi.modulus();
    for (i64 qp : divisors(q)) {
        bool ok = true;
        for (i64 x = 1; x <= q && ok; ++x) {
            if (!chi.group().is_unit(x) || mod(x - 1, qp) != 0) continue;
            auto k = chi.index(x);
            if (!k || *k != 0) ok = false;
        }
        if (ok) return qp;
    }
    return q;
}

}  // namespace

TEST_CASE("enumeration counts") {
    CHECK(enumerate_characters(1).size() == 1);
    CHECK(enumerate_characters(1, CharFilter::primitive).size() == 1);
    CHECK(enumerate_characters(9).size() == 6);
    CHECK(enumerate_characters(9, CharFilter::primitive).size() == 4);  // phi(9) - phi(3)
    CHECK(enumerate_characters(8).size() == 4);
    CHECK(enumerate_characters(8, CharFilter::primitive).size() == 2);
    CHECK(enumerate_characters(45).size() == 24);
}

TEST_CASE("character values are multiplicative and vanish off units") {
    for (i64 q : {9, 8, 45, 32}) {
        for (const auto& chi : enumerate_characters(q)) {
            CHECK(std::abs(chi(1) - cplx{1.0, 0.0}) < 1e-15);
            for (i64 m = 0; m < q; ++m) {
                if (std::gcd(m, q) > 1) CHECK(chi(m) == cplx{0.0, 0.0});
                for (i64 n = 0; n < q; ++n) {
                    cplx lhs = chi(mod(m * n, q));
                    cplx rhs = chi(m) * chi(n);
                    CHECK(std::abs(lhs - rhs) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("conductor matches the defining scan") {
    for (i64 q : {9, 27, 8, 16, 45, 75}) {
        i64 prim = 0;
        for (const auto& chi : enumerate_characters(q)) {
            i64 c = chi.conductor();
            CHECK(c == conductor_scan(chi));
            CHECK(chi.is_primitive() == (c == q));
            if (c == q) ++prim;
        }
        i64 smaller = static_cast<i64>(enumerate_characters(q).size()) - prim;
        CHECK(enumerate_characters(q, CharFilter::primitive).size() == static_cast<size_t>(prim));
        CHECK(prim == euler_phi(q) - smaller);
    }
    // trivial character has conductor 1
    CHECK(CharacterGroup::get(12)->trivial().conductor() == 1);
}

TEST_CASE("lift and primitive part invert each other") {
    for (auto [d, q] : std::vector<std::pair<i64, i64>>{{3, 9}, {9, 27}, {5, 45}, {4, 16}, {8, 32}, {15, 45}}) {
        for (const auto& psi : enumerate_characters(d)) {
            auto lifted = psi.lift_to(q);
            // lifted value agrees with psi on units of q
            for (i64 x = 1; x <= q; ++x) {
                if (!lifted.group().is_unit(x)) continue;
                CHECK(std::abs(lifted(x) - psi(mod(x, d))) < 1e-12);
            }
            if (psi.is_primitive()) {
                CHECK(lifted.conductor() == d);
                CHECK(lifted.primitive_part() == psi);
            }
        }
    }
}

TEST_CASE("coset structure") {
    auto G = CharacterGroup::get(27);
    auto alpha = G->character_by_flat_index(1);
    REQUIRE(alpha.is_primitive());
    CHECK(coset(alpha, 1).size() == 1);
    CHECK(coset(alpha, 1)[0] == alpha);
    auto cs = coset(alpha, 9);
    CHECK(cs.size() == 6);
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j) CHECK(!(cs[i] == cs[j]));
    // d = q: a coset of the full group is the full group
    auto full = coset(alpha, 27);
    CHECK(full.size() == 18);
}

TEST_CASE("postnikov index: examples and structure") {
    // trivial character has index 0
    auto G27 = CharacterGroup::get(27);
    CHECK(postnikov_index(G27->trivial(), 0).value == 0);

    // homomorphism: ell(chi^2) = 2 ell(chi) mod p^{beta-1}
    for (const auto& chi : G27->all_characters()) {
        i64 l1 = postnikov_index(chi, 0).value;
        i64 l2 = postnikov_index(chi.pow(2), 0).value;
        CHECK(l2 == mod(2 * l1, 9));
    }

    // image over all chi mod 25 is Z/5, each value hit phi(5) = 4 times
    auto G25 = CharacterGroup::get(25);
    std::vector<int> hits(5, 0);
    for (const auto& chi : G25->all_characters()) ++hits[static_cast<size_t>(postnikov_index(chi, 0).value)];
    for (int h : hits) CHECK(h == 4);

    // the identity itself, exact, mod 27 and mod 32
    for (i64 q : {27, 32}) {
        auto G = CharacterGroup::get(q);
        i64 p = G->comp(0).p;
        i64 step = p == 2 ? 4 : p;
        i64 M = G->root_order();
        const auto& logs = *G->comp(0).logs;
        for (const auto& chi : G->all_characters()) {
            i64 ell = postnikov_index(chi, 0).value;
            for (i64 t = 0; t * step < q; ++t) {
                i64 x = mod(1 + step * t, q);
                auto k = chi.index(x);
                REQUIRE(k);
                CHECK(mod(*k * q - ell * logs.log1(x) % q * M, M * q) == 0);
            }
        }
    }

    CHECK_THROWS_AS(postnikov_index(CharacterGroup::get(3)->trivial(), 0), std::domain_error);
}

TEST_CASE("postnikov equivalence criterion mod 27 and mod 32") {
    for (i64 q : {27, 32}) {
        auto G = CharacterGroup::get(q);
        i64 p = G->comp(0).p;
        int beta = G->comp(0).beta;
        auto chars = G->all_characters();
        int alpha_min = p == 2 ? 2 : 1;
        for (const auto& c1 : chars)
            for (const auto& c2 : chars) {
                i64 l1 = postnikov_index(c1, 0).value;
                i64 l2 = postnikov_index(c2, 0).value;
                i64 cond = (c1 * c2.conj()).conductor();
                for (int alpha = alpha_min; alpha <= beta; ++alpha) {
                    bool lhs = mod(l1 - l2, ipow(p, beta - alpha)) == 0;
                    bool rhs = cond <= ipow(p, alpha);
                    CHECK(lhs == rhs);
                }
            }
    }
}

TEST_CASE("conductor drop index") {
    // q = 9, d = 3, h = 3: chi(1+3u) = e_3(ell u); ell agrees with the
    // postnikov index mod 3 since log(1+3u) = 3u mod 9
    auto G = CharacterGroup::get(9);
    for (const auto& chi : G->primitive_characters()) {
        i64 ell = conductor_drop_index(chi, 3, 3);
        CHECK(std::gcd(ell, 3) == 1);
        CHECK(ell == mod(postnikov_index(chi, 0).value, 3));
    }
    // homomorphism in chi
    auto prims = G->primitive_characters();
    for (const auto& a : prims)
        for (const auto& b : prims) {
            auto ab = a * b;
            if (!ab.is_primitive()) continue;
            CHECK(conductor_drop_index(ab, 3, 3) ==
                  mod(conductor_drop_index(a, 3, 3) + conductor_drop_index(b, 3, 3), 3));
        }
    // q | h is the degenerate branch
    CHECK_THROWS_AS(conductor_drop_index(prims[0], 9, 3), std::domain_error);
    // preconditions
    CHECK_THROWS_AS(conductor_drop_index(prims[0], 3, 1), std::domain_error);
}

TEST_CASE("even characters") {
    auto evens = enumerate_characters(9, CharFilter::even);
    CHECK(evens.size() == 3);  // kernel of chi(-1)
    for (const auto& chi : evens) CHECK(std::abs(chi(9 - 1) - cplx{1.0, 0.0}) < 1e-15);
}
