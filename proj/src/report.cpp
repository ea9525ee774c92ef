#include "qnk/report.hpp"

#include <cstdio>
#include <sstream>

namespace qnk {

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::residual: return "residual";
        case Metric::angle: return "angle";
        case Metric::rank: return "rank";
    }
    return "?";
}

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

int Report::passed() const {
    int count = 0;
    for (const auto& c : checks) count += c.pass ? 1 : 0;
    return count;
}

int Report::failed() const {
    return static_cast<int>(checks.size()) - passed();
}

std::string Report::serialize() const {
    std::ostringstream out;
    out << "qnk report v1\n";
    out << "library_version " << kLibraryVersion << "\n";
    out << "generator " << kGeneratorName << "\n";
    out << "seed " << seed << "\n";
    out << "config " << config_echo << "\n";
    out << "checks " << checks.size() << "\n";
    for (const auto& c : checks) {
        out << "check check_id=" << c.check_id << " n=" << c.n << " k=" << c.k;
        if (c.eta)
            out << " eta_re=" << format_g17(c.eta->real()) << " eta_im=" << format_g17(c.eta->imag());
        if (c.tau)
            out << " tau_re=" << format_g17(c.tau->real()) << " tau_im=" << format_g17(c.tau->imag());
        if (c.matrix)
            out << " matrix=" << (*c.matrix)[0] << "," << (*c.matrix)[1] << ","
                << (*c.matrix)[2] << "," << (*c.matrix)[3];
        out << " metric=" << metric_name(c.metric)
            << " value=" << format_g17(c.value)
            << " tol=" << format_g17(c.tol)
            << " pass=" << (c.pass ? 1 : 0)
            << " wall_ms=" << format_g17(c.wall_ms) << "\n";
    }
    out << "summary checks=" << checks.size() << " passed=" << passed()
        << " failed=" << failed() << "\n";
    return out.str();
}

} // namespace qnk
