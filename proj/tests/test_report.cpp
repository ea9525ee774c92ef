#include <doctest.h>

#include <regex>
#include <string>

#include "qnk/report.hpp"
#include "qnk/suites.hpp"

using namespace qnk;

namespace {

std::string strip_wall_times(std::string text) {
    static const std::regex wall(" wall_ms=[^ \n]+");
    return std::regex_replace(text, wall, "");
}

SuiteConfig small_config(const std::string& suite) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.nk = {{3, 1}};
    cfg.seed = 42;
    cfg.random_matrix_count = 2;
    cfg.config_echo = "--suite " + suite + " --nk 3,1 --seed 42";
    return cfg;
}

} // namespace

TEST_CASE("config validation: suite, nk list, coprimality, tau height") {
    SuiteConfig cfg = small_config("all");
    CHECK_NOTHROW(validate(cfg));

    cfg.nk.clear();
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = small_config("all");
    cfg.nk.push_back({4, 2});
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = small_config("all");
    cfg.nk.push_back({2, 3});
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = small_config("nosuch");
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = small_config("theta");
    cfg.taus.push_back(cplx(0.3, 0.01));
    CHECK_THROWS_AS(validate(cfg), ConfigError);

    cfg = small_config("qybe");
    cfg.tol_override["not.a.check"] = 1e-8;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
}

TEST_CASE("qybe suite: twenty residual records per pair, deterministic bytes") {
    const SuiteConfig cfg = small_config("qybe");
    const Report rep1 = run_suites(cfg);
    int residuals = 0;
    for (const auto& c : rep1.checks)
        if (c.check_id == "qybe.residual") ++residuals;
    CHECK(residuals == 20);
    CHECK(rep1.all_pass());

    const Report rep2 = run_suites(cfg);
    CHECK(strip_wall_times(rep1.serialize()) == strip_wall_times(rep2.serialize()));

    // thread scheduling must not leak into the records either
    SuiteConfig serial_cfg = cfg;
    serial_cfg.parallel = false;
    const Report rep3 = run_suites(serial_cfg);
    CHECK(strip_wall_times(rep1.serialize()) == strip_wall_times(rep3.serialize()));
}

TEST_CASE("different seeds move the sampled values") {
    SuiteConfig a = small_config("qybe");
    SuiteConfig b = small_config("qybe");
    b.seed = 43;
    CHECK(strip_wall_times(run_suites(a).serialize()) !=
          strip_wall_times(run_suites(b).serialize()));
}

TEST_CASE("report serialisation carries the documented fields") {
    const Report rep = run_suites(small_config("qybe"));
    const std::string text = rep.serialize();
    for (const char* needle :
         {"qnk report v1", "library_version", "generator xoshiro256starstar", "seed 42",
          "check_id=qybe.residual", " n=3", " k=1", "eta_re=", "eta_im=", "tau_re=",
          "tau_im=", "metric=residual", "value=", "tol=", "pass=1", "summary checks="})
        CHECK(text.find(needle) != std::string::npos);
    // 17 significant digits on floating-point fields
    CHECK(format_g17(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("tolerance overrides flip pass/fail") {
    SuiteConfig cfg = small_config("qybe");
    cfg.tol_override["qybe.residual"] = 1e-30;  // unreachable
    const Report rep = run_suites(cfg);
    int fails = 0;
    for (const auto& c : rep.checks)
        if (c.check_id == "qybe.residual" && !c.pass) ++fails;
    CHECK(fails == 20);
    CHECK(!rep.all_pass());
}
