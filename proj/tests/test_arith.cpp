#include <doctest.h>

#include <random>

#include "nt/expsum.hpp"
#include "nt/unitgroup.hpp"
#include "oracles.hpp"

using namespace nt;

TEST_CASE("factor basic") {
    CHECK(factor(1).parts.empty());
    auto f = factor(2401);
    REQUIRE(f.parts.size() == 1);
    CHECK(f.parts[0].p == 7);
    CHECK(f.parts[0].beta == 4);
    auto g = factor(45);
    REQUIRE(g.parts.size() == 2);
    CHECK(g.parts[0].p == 3);
    CHECK(g.parts[0].beta == 2);
    CHECK(g.parts[1].p == 5);
    CHECK(g.parts[1].beta == 1);
}

TEST_CASE("factor round-trips on sampled n up to 1e6") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        i64 n = 1 + static_cast<i64>(rng() % 1000000);
        auto f = factor(n);
        i64 prod = 1;
        i64 last_p = 0;
        for (const auto& pp : f.parts) {
            CHECK(pp.p > last_p);
            last_p = pp.p;
            CHECK(pp.value == ipow(pp.p, pp.beta));
            prod *= pp.value;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("q_star examples and minimality") {
    CHECK(q_star(27) == 9);
    CHECK(q_star(1) == 1);
    CHECK(q_star(45) == 45);  // 3^ceil(4/3) * 5^ceil(2/3) = 9 * 5
    for (i64 q : {2, 8, 12, 27, 45, 64, 125, 720})
        CHECK(q_star(q) == oracles::q_star_scan(q));
}

TEST_CASE("q_star cube divisibility for all q <= 1e5") {
    for (i64 q = 1; q <= 100000; ++q) {
        __int128 s = q_star(q);
        CHECK(static_cast<i64>((s * s * s) % (static_cast<__int128>(q) * q)) == 0);
    }
}

TEST_CASE("crt split and combine") {
    CHECK(crt_combine({0}, {1}) == 0);
    auto r = crt_split(7, {9, 5});
    CHECK(r[0] == 7);
    CHECK(r[1] == 2);
    CHECK(crt_combine({7, 2}, {9, 5}) == 7);
    CHECK(crt_combine({7, 2}, {9, 5}) == oracles::crt_scan(7, 9, 2, 5));
    CHECK_THROWS_AS(crt_combine({1, 1}, {6, 4}), std::domain_error);
}

TEST_CASE("padic log values and homomorphism") {
    // p = 3, beta = 2: log(1+3) = 3 - 9/2 + ... = 3 mod 9
    CHECK(padic_log(4, 3, 2) == 3);
    // hom witness: 4*4 = 7 mod 9, log(7) = 2 log(4) = 6 mod 9
    CHECK(padic_log(7, 3, 2) == 6);
    CHECK(padic_log(1, 3, 4) == 0);
    CHECK_THROWS_AS(padic_log(2, 3, 2), std::domain_error);
    CHECK_THROWS_AS(padic_log(3, 2, 3), std::domain_error);  // 3 != 1 mod 4

    for (auto [p, beta] : std::vector<std::pair<i64, int>>{{3, 3}, {5, 2}, {7, 2}, {3, 5}, {2, 5}, {2, 6}}) {
        auto t = PadicLogTable::build(p, beta);
        i64 q = t.modulus;
        i64 step = t.unit_step;
        for (i64 x = 1; x < q; x += step)
            for (i64 y = 1; y < q; y += step) {
                i64 xy = mod(x * y, q);
                CHECK(mod(t.log1(x) + t.log1(y), q) == t.log1(xy));
            }
    }
}

TEST_CASE("padic log linearization: log(1 + p^b x) = p^b x mod p^2b") {
    for (i64 p : {3, 5}) {
        int b = 2;
        i64 cap = ipow(p, 2 * b);
        for (i64 x = 0; x < ipow(p, b); ++x) {
            i64 lhs = padic_log_series(ipow(p, b) * x, p, cap);
            CHECK(lhs == mod(ipow(p, b) * x, cap));
        }
    }
}

TEST_CASE("unit group basis generates the full group") {
    for (auto [p, beta] : std::vector<std::pair<i64, int>>{{3, 4}, {7, 2}, {11, 1}, {2, 1}, {2, 2}, {2, 3}, {2, 6}}) {
        auto b = UnitGroupBasis::build(p, beta);
        i64 q = b.modulus;
        i64 units = 0;
        for (i64 x = 0; x < q; ++x)
            if (std::gcd(x, q) == 1) {
                CHECK(b.is_unit(x));
                auto e = b.exponents(x);
                i64 y = 1;
                for (size_t i = 0; i < b.gens.size(); ++i)
                    y = mul_mod(y, pow_mod(b.gens[i], static_cast<u64>(e[i]), q), q);
                CHECK(y == mod(x, q));
                ++units;
            }
        CHECK(units == euler_phi(q));
    }
}

TEST_CASE("kloosterman sums: frozen values and invariants") {
    auto v = kloosterman(1, 1, 5);
    CHECK(v.terms == 4);
    CHECK(std::abs(v.value - cplx{0.3819660112501051, 0.0}) < 1e-12);  // 2 + 2 cos(4 pi/5)
    CHECK(std::abs(kloosterman(1, 0, 6).value - cplx{1.0, 0.0}) < 1e-12);   // mu(6)
    CHECK(std::abs(kloosterman(0, 0, 12).value - cplx{4.0, 0.0}) < 1e-12);  // phi(12)
    CHECK(std::abs(kloosterman(3, 7, 1).value - cplx{1.0, 0.0}) < 1e-15);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        i64 c = 1 + static_cast<i64>(rng() % 150);
        i64 m = static_cast<i64>(rng() % c), n = static_cast<i64>(rng() % c);
        auto a = kloosterman(m, n, c);
        auto b = kloosterman(n, m, c);
        CHECK(std::abs(a.value - b.value) < 1e-10);  // x -> x^{-1} bijection
        CHECK(std::abs(a.value.imag()) < 1e-10);     // pairing x -> -x
        CHECK(std::abs(a.value) <= static_cast<double>(c) + 1e-9);
        auto r = kloosterman(m, 0, c);
        CHECK(std::abs(r.value - cplx{static_cast<double>(ramanujan_exact(m, c)), 0.0}) < 1e-9);
    }
}

TEST_CASE("mobius and divisors") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
    CHECK(divisors(28) == std::vector<i64>{1, 2, 4, 7, 14, 28});
}
