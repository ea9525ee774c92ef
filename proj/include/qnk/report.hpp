#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnk/linalg.hpp"

namespace qnk {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr const char* kGeneratorName = "xoshiro256starstar";

enum class Metric { residual, angle, rank };

const char* metric_name(Metric m);

struct CheckRecord {
    std::string check_id;
    int n = 0, k = 0;
    std::optional<cplx> eta, tau;
    std::optional<std::array<long long, 4>> matrix;  // a, b, c, d
    Metric metric = Metric::residual;
    double value = 0.0;
    double tol = 0.0;
    bool pass = false;
    double wall_ms = 0.0;
};

/// Deterministic for a fixed config and seed; wall_ms is the only field that
/// may differ between identical runs and is printed last on each line.
struct Report {
    std::string config_echo;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    std::string serialize() const;
};

/// %.17g rendering used for every floating-point field.
std::string format_g17(double x);

} // namespace qnk
