// Batch verification front-end: configures (n,k,eta,tau,M) grids, runs the
// requested suite, and emits a machine-readable report.
//
// Exit status: 0 all checks pass, 1 any check fails, 2 configuration error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qnk/suites.hpp"

namespace {

qnk::cplx parse_complex(const std::string& text, const std::string& field) {
    std::istringstream in(text);
    double re = 0, im = 0;
    char comma = 0;
    if (!(in >> re >> comma >> im) || comma != ',')
        throw qnk::ConfigError(field + ": expected RE,IM, got '" + text + "'");
    return {re, im};
}

std::pair<int, int> parse_nk(const std::string& text, std::size_t idx) {
    std::istringstream in(text);
    int n = 0, k = 0;
    char comma = 0;
    if (!(in >> n >> comma >> k) || comma != ',')
        throw qnk::ConfigError("nk[" + std::to_string(idx) + "]: expected N,K, got '" + text + "'");
    return {n, k};
}

void parse_matrices(const std::string& spec, qnk::SuiteConfig& cfg) {
    if (spec.rfind("random:", 0) == 0) {
        std::istringstream in(spec.substr(7));
        int count = 0;
        long long bound = 0;
        char colon = 0;
        if (!(in >> count >> colon >> bound) || colon != ':')
            throw qnk::ConfigError("matrices: expected random:COUNT:BOUND, got '" + spec + "'");
        cfg.random_matrix_count = count;
        cfg.random_matrix_bound = bound;
        return;
    }
    if (spec.rfind("file:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in)
            throw qnk::ConfigError("matrices: cannot open '" + path + "'");
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            long long a, b, c, d;
            if (!(ls >> a >> b >> c >> d))
                throw qnk::ConfigError("matrices: " + path + ":" + std::to_string(lineno) +
                                       ": expected four integers");
            try {
                cfg.matrices.push_back(qnk::Sl2{a, b, c, d});
            } catch (const qnk::Error& err) {
                throw qnk::ConfigError("matrices: " + path + ":" + std::to_string(lineno) +
                                       ": " + err.what());
            }
        }
        return;
    }
    throw qnk::ConfigError("matrices: expected random:COUNT:BOUND or file:PATH");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qnk-verify: batch identity verification for the Q_{n,k} construction"};

    std::string suite = "all";
    std::vector<std::string> nk_args, tau_args, eta_args, tol_args;
    std::string matrices_arg, out_path;
    std::uint64_t seed = 1;
    bool serial = false;

    app.add_option("--suite", suite, "theta|heisenberg|qybe|modular|algebra|all");
    app.add_option("--nk", nk_args, "coprime pair N,K (repeatable)");
    app.add_option("--tau", tau_args, "tau as RE,IM (repeatable; sampled when absent)");
    app.add_option("--eta", eta_args, "eta as RE,IM (repeatable; sampled when absent)");
    app.add_option("--seed", seed, "RNG seed (xoshiro256**)");
    app.add_option("--tol-override", tol_args, "CHECK_ID=VALUE (repeatable)");
    app.add_option("--matrices", matrices_arg, "random:COUNT:BOUND or file:PATH");
    app.add_option("--out", out_path, "report path (stdout when absent)");
    app.add_flag("--serial", serial, "disable the parallel scan paths");

    CLI11_PARSE(app, argc, argv);

    qnk::SuiteConfig cfg;
    try {
        cfg.suite = suite;
        cfg.seed = seed;
        cfg.out_path = out_path;
        cfg.parallel = !serial;
        for (std::size_t i = 0; i < nk_args.size(); ++i)
            cfg.nk.push_back(parse_nk(nk_args[i], i));
        for (const auto& t : tau_args) cfg.taus.push_back(parse_complex(t, "tau"));
        for (const auto& t : eta_args) cfg.etas.push_back(parse_complex(t, "eta"));
        for (const auto& t : tol_args) {
            const auto eq = t.find('=');
            if (eq == std::string::npos)
                throw qnk::ConfigError("tol-override: expected CHECK_ID=VALUE, got '" + t + "'");
            cfg.tol_override[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
        }
        if (!matrices_arg.empty()) parse_matrices(matrices_arg, cfg);
        std::ostringstream echo;
        for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
        cfg.config_echo = echo.str();
        qnk::validate(cfg);
    } catch (const qnk::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    }

    qnk::Report rep;
    try {
        rep = qnk::run_suites(cfg);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }

    const std::string text = rep.serialize();
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "config error: cannot write '" << cfg.out_path << "'\n";
            return 2;
        }
        out << text;
        std::cerr << "report: " << cfg.out_path << " (" << rep.passed() << "/"
                  << rep.checks.size() << " passed)\n";
    }
    return rep.all_pass() ? 0 : 1;
}
