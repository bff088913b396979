#pragma once

#include <cmath>
#include <sstream>

#include "riskfuzz/error.hpp"

namespace riskfuzz::fuzzy {

// Normalized trapezoidal fuzzy set on [0,1] given by breakpoints
// a1 <= a2 <= a3 <= a4, with unit plateau on [a2,a3].  Degenerate edges
// (a1 == a2 or a3 == a4) behave as steps: membership is 1 at the breakpoint.
struct TrapezoidalSet {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;

    TrapezoidalSet() = default;

    TrapezoidalSet(double b1, double b2, double b3, double b4)
        : a1(b1), a2(b2), a3(b3), a4(b4) {
        if (!(std::isfinite(a1) && std::isfinite(a2) && std::isfinite(a3) && std::isfinite(a4)) ||
            a1 > a2 || a2 > a3 || a3 > a4 || a1 < 0.0 || a4 > 1.0) {
            std::ostringstream os;
            os << "invalid trapezoid (" << b1 << ", " << b2 << ", " << b3 << ", " << b4
               << "): need 0 <= a1 <= a2 <= a3 <= a4 <= 1";
            throw validation_error(os.str());
        }
    }

    double membership(double x) const {
        if (x < a1 || x > a4) return 0.0;
        if (x >= a2 && x <= a3) return 1.0;
        if (x < a2) return (x - a1) / (a2 - a1);
        return (a4 - x) / (a4 - a3);
    }

    // Exact centroid of the unit-height trapezoid (reference for COA tests).
    double centroid() const {
        const double den = 3.0 * (a4 + a3 - a1 - a2);
        if (den == 0.0) return 0.5 * (a1 + a4);
        return ((a4 * a4 + a3 * a3 + a3 * a4) - (a1 * a1 + a2 * a2 + a1 * a2)) / den;
    }

    double peak() const { return 0.5 * (a2 + a3); }

    bool operator==(const TrapezoidalSet& o) const {
        return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4;
    }
};

inline double trapezoid_membership(double x, const TrapezoidalSet& set) {
    return set.membership(x);
}

} // namespace riskfuzz::fuzzy
