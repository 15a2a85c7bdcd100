// nt - verification CLI: run suites, emit reports, manage fixtures.
//
//   nt verify <suite> [flags]    run one verification suite
//   nt moment [--q --d --T ...]  run a single coset-moment experiment
//   nt fixtures --refresh        regenerate regression fixtures
//
// Exit codes: 0 all checks passed, 1 failures found, 2 usage error.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "nt/suites.hpp"

using namespace nt;

int main(int argc, char** argv) {
    CLI::App app{"character-sum and L-function verification suites"};
    app.require_subcommand(1);

    SuiteParams P;
    std::string suite_name;
    std::string out_path;
    std::string format = "json";

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_name, "one of: " + [] {
                           std::string all;
                           for (const auto& s : suite_names()) all += s + " ";
                           return all;
                       }())
        ->required();
    verify->add_option("--q-max", P.q_max, "modulus / range cap (suite default if 0)");
    verify->add_option("--p", P.p, "restrict to one prime");
    verify->add_option("--beta", P.beta, "restrict to one exponent");
    verify->add_option("--sample", P.sample, "sample size for sampled sweeps");
    verify->add_option("--seed", P.seed, "RNG seed for sampled sweeps");
    verify->add_option("--tol", P.tol_scale, "tolerance scale factor");
    verify->add_option("--T", P.T, "moment integration half-length");
    verify->add_option("--step", P.step, "moment t-grid step");
    verify->add_option("--cmax", P.cmax, "AFE c-truncation override");
    verify->add_option("--fixtures", P.fixture_dir, "fixture directory for regression checks");
    verify->add_option("--out", out_path, "write the report to this path");
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    i64 mq = 27, md = 9, malpha = 1;
    std::string mout;
    auto* moment = app.add_subcommand("moment", "coset fourth-moment experiment (CSV)");
    moment->add_option("--q", mq, "modulus");
    moment->add_option("--d", md, "coset subgroup modulus, d | q");
    moment->add_option("--T", P.T, "integration half-length");
    moment->add_option("--step", P.step, "t-grid step");
    moment->add_option("--alpha", malpha, "flat index of the primitive coset representative");
    moment->add_option("--out", mout, "write CSV here instead of stdout");

    std::string fdir = "tests/fixtures";
    bool refresh = false;
    auto* fixtures = app.add_subcommand("fixtures", "manage regression fixtures");
    fixtures->add_flag("--refresh", refresh, "regenerate all fixtures");
    fixtures->add_option("--dir", fdir, "fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            auto R = run_suite(suite_name, P);
            std::string payload;
            if (format == "csv" && suite_name == "exponents")
                payload = exponent_csv(P.q_max > 0 ? static_cast<int>(P.q_max) : 200);
            else
                payload = dump_report(R);
            if (out_path.empty()) std::cout << payload << "\n";
            else write_text_file(out_path, payload);
            std::fprintf(stderr, "[%s] checks=%lld failures=%zu max_dev=%.3e wall=%.2fs\n",
                         suite_name.c_str(), static_cast<long long>(R.checks), R.failures.size(),
                         R.max_deviation, R.wall_seconds);
            return R.passed() ? 0 : 1;
        }
        if (moment->parsed()) {
            auto G = CharacterGroup::get(mq);
            auto alpha = G->character_by_flat_index(malpha);
            auto r = fourth_moment_coset(mq, md, alpha, P.T, P.step);
            std::string csv = moment_csv({r});
            if (mout.empty()) std::cout << csv;
            else write_text_file(mout, csv);
            return 0;
        }
        if (fixtures->parsed()) {
            if (!refresh) {
                std::fprintf(stderr, "nothing to do (use --refresh)\n");
                return 2;
            }
            refresh_fixtures(fdir);
            std::fprintf(stderr, "fixtures written to %s\n", fdir.c_str());
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
