#include <doctest.h>

#include "nt/suites.hpp"

using namespace nt;

TEST_CASE("empty report serializes with failures: []") {
    SweepReport r;
    r.suite = "demo";
    auto j = to_json(r);
    CHECK(j["failures"].is_array());
    CHECK(j["failures"].empty());
    CHECK(r.passed());
}

TEST_CASE("dump is idempotent under parse") {
    json j = {{"b", 1}, {"a", 0.1234567890123456}, {"list", {1, 2.5, "x"}},
              {"nested", {{"z", -3.5e-12}, {"y", nullptr}}}};
    std::string s1 = dump_json(j, 2);
    std::string s2 = dump_json(json::parse(s1), 2);
    CHECK(s1 == s2);
    // keys come out sorted
    CHECK(s1.find("\"a\"") < s1.find("\"b\""));
}

TEST_CASE("floats render as %.12e") {
    json j = {{"x", 0.25}};
    CHECK(dump_json(j) == "{\"x\":2.500000000000e-01}");
}

TEST_CASE("report merge is associative on the recorded data") {
    SweepReport a, b, c;
    a.record(true, 0.5, {});
    b.record(false, 2.0, {{"w", 1}});
    c.record(true, 1.0, {});
    SweepReport ab = a;
    ab.merge(b);
    ab.merge(c);
    SweepReport bc = b;
    bc.merge(c);
    SweepReport a_bc = a;
    a_bc.merge(bc);
    CHECK(ab.checks == a_bc.checks);
    CHECK(ab.max_deviation == a_bc.max_deviation);
    CHECK(ab.failures.size() == a_bc.failures.size());
}

TEST_CASE("moment csv schema") {
    MomentReport r{27, 9, 1, 10.0, 0.25, 4435.95, 90.0, 49.288};
    auto csv = moment_csv({r});
    CHECK(csv.rfind("q,d,T,step,moment,normalizer,ratio\n", 0) == 0);
    CHECK(csv.find("27,9,") != std::string::npos);
}

TEST_CASE("exponent csv") {
    auto csv = exponent_csv(4);
    CHECK(csv.rfind("beta,alpha,m,slack\n", 0) == 0);
    CHECK(csv.find("-inf") != std::string::npos);
}

TEST_CASE("identical seed gives identical report bytes") {
    SuiteParams P;
    P.q_max = 9;  // small kl3 run with sampling machinery untouched
    auto r1 = run_suite("kl3", P);
    auto r2 = run_suite("kl3", P);
    auto j1 = to_json(r1), j2 = to_json(r2);
    j1.erase("wall_seconds");
    j2.erase("wall_seconds");
    CHECK(dump_json(j1, 2) == dump_json(j2, 2));
}

TEST_CASE("failure witnesses replay") {
    // force failures by shrinking the tolerance below float rounding, then
    // re-run the op from a serialized witness
    SuiteParams P;
    P.p = 5;
    P.beta = 2;
    P.tol_scale = 1e-12;
    auto r = run_suite("gsum", P);
    REQUIRE(!r.failures.empty());
    bool replayed = false;
    for (const auto& w : r.failures) {
        if (w["op"] != "g_direct_vs_shifted") continue;
        auto G = CharacterGroup::get(w["q"].get<i64>());
        auto vd = g_sum(G->character_by_flat_index(w["chi"].get<i64>()),
                        G->character_by_flat_index(w["psi"].get<i64>()), GMethod::direct);
        CHECK(vd.value.real() == doctest::Approx(w["direct_re"].get<double>()).epsilon(1e-9));
        replayed = true;
        break;
    }
    CHECK(replayed);
}
