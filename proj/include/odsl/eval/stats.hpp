#pragma once

#include <stdexcept>

namespace odsl::eval {

class InvalidCounts : public std::invalid_argument {
public:
    explicit InvalidCounts(const std::string& what) : std::invalid_argument(what) {}
};

// 95% (by default) Agresti-Coull interval, in percent rounded to two
// decimals: n~ = n + z^2, p~ = (x + z^2/2) / n~, halfwidth =
// z * sqrt(p~ (1 - p~) / n~).
struct Interval {
    double center = 0.0;     // percent
    double halfwidth = 0.0;  // percent
};

Interval agresti_coull(long passes, long total, double z = 1.96);

}  // namespace odsl::eval
