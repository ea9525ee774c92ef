#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qnk/report.hpp"
#include "qnk/rng.hpp"
#include "qnk/sl2.hpp"
#include "qnk/theta.hpp"

namespace qnk {

struct SuiteConfig {
    std::string suite = "all";  // theta | heisenberg | qybe | modular | algebra | all
    std::vector<std::pair<int, int>> nk;
    std::vector<cplx> taus;  // empty -> suite defaults / seeded sampling
    std::vector<cplx> etas;
    std::vector<Sl2> matrices;  // explicit list; empty -> random_matrix_count draws
    int random_matrix_count = 5;
    long long random_matrix_bound = 5;
    std::uint64_t seed = 1;
    std::map<std::string, double> tol_override;
    std::string out_path;  // empty -> stdout
    bool parallel = true;
    std::string config_echo;
};

/// Throws ConfigError with a field diagnostic on the first violation.
void validate(const SuiteConfig& cfg);

/// Runs the configured suite(s); records appear in a deterministic order that
/// does not depend on thread scheduling.
Report run_suites(const SuiteConfig& cfg);

void run_theta_suite(const SuiteConfig& cfg, Report& rep);
void run_heisenberg_suite(const SuiteConfig& cfg, Report& rep);
void run_qybe_suite(const SuiteConfig& cfg, Report& rep);
void run_modular_suite(const SuiteConfig& cfg, Report& rep);
void run_algebra_suite(const SuiteConfig& cfg, Report& rep);

/// Effective tolerance for one check id (default unless overridden).
double tol_for(const SuiteConfig& cfg, const std::string& check_id, double dflt);

/// Seeded samplers shared by the suites and the acceptance runner.
cplx sample_tau(Rng& rng);
cplx sample_eta_generic(Rng& rng, cplx tau, int n, bool avoid_low_torsion = false,
                        const ThetaParams& p = {});
/// Random matrix whose action keeps tau at workable height and the
/// transformed eta generic for every index.
Sl2 sample_matrix_valid(Rng& rng, long long bound, cplx eta, cplx tau, int n,
                        const ThetaParams& p = {});

} // namespace qnk
