#ifndef QT_PELL_HPP
#define QT_PELL_HPP

#include "qt/exact.hpp"

#include <optional>
#include <vector>

namespace qt::pell {

// sqrt(d) = [a0; period, period, ...] with period ending in 2*a0.
struct CFExpansion {
    Int a0;
    std::vector<Int> period;
};

// Least positive solution of u^2 + 1 = d v^2.
struct PellFundamental {
    Int d;
    Int u;
    Int v;

    friend bool operator==(const PellFundamental&, const PellFundamental&) = default;
};

// Throws DomainError for d < 2 or d a perfect square.
CFExpansion sqrt_cf(const Int& d);

// Empty when X^2 + 1 = dY^2 has no solution (even period, or d square).
// Throws DomainError for d < 2.
std::optional<PellFundamental> neg_pell_fundamental(const Int& d);

// Continued fraction of sqrt(d) together with the negative Pell outcome.
struct PellReport {
    Int d;
    Int a0;
    std::vector<Int> period;
    std::optional<PellFundamental> fundamental;
    friend bool operator==(const PellReport&, const PellReport&) = default;
};

// Throws DomainError for d < 2 or d a perfect square.
PellReport pell_report(const Int& d);

} // namespace qt::pell

#endif
