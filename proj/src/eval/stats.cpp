#include "odsl/eval/stats.hpp"

#include <cmath>

namespace odsl::eval {

namespace {

double round2(double v) {
    return std::round(v * 100.0) / 100.0;
}

}  // namespace

Interval agresti_coull(long passes, long total, double z) {
    if (total < 1) throw InvalidCounts("total must be at least 1");
    if (passes < 0 || passes > total) throw InvalidCounts("passes must be within [0, total]");

    const double n_adj = static_cast<double>(total) + z * z;
    const double p_adj = (static_cast<double>(passes) + z * z / 2.0) / n_adj;
    const double halfwidth = z * std::sqrt(p_adj * (1.0 - p_adj) / n_adj);
    return Interval{round2(p_adj * 100.0), round2(halfwidth * 100.0)};
}

}  // namespace odsl::eval
