#include "qt/pell.hpp"

#include "qt/errors.hpp"

namespace qt::pell {

CFExpansion sqrt_cf(const Int& d) {
    if (d < 2) {
        throw DomainError("sqrt_cf needs d >= 2, got " + d.get_str());
    }
    if (is_perfect_square(d)) {
        throw DomainError("sqrt_cf: d = " + d.get_str() + " is a perfect square");
    }
    CFExpansion cf;
    mpz_sqrt(cf.a0.get_mpz_t(), d.get_mpz_t());
    // (sqrt(d) + m) / q iteration
    Int m = 0;
    Int q = 1;
    Int a = cf.a0;
    const Int end = 2 * cf.a0;
    do {
        m = q * a - m;
        q = (d - m * m) / q;
        a = (cf.a0 + m) / q;
        cf.period.push_back(a);
    } while (a != end);
    return cf;
}

std::optional<PellFundamental> neg_pell_fundamental(const Int& d) {
    if (d < 2) {
        throw DomainError("neg_pell_fundamental needs d >= 2, got " + d.get_str());
    }
    if (is_perfect_square(d)) {
        return std::nullopt;
    }
    CFExpansion cf = sqrt_cf(d);
    if (cf.period.size() % 2 == 0) {
        return std::nullopt;
    }
    // Convergent p/q just before the end of the first period.
    Int p_prev = 1;
    Int q_prev = 0;
    Int p = cf.a0;
    Int q = 1;
    for (std::size_t k = 0; k + 1 < cf.period.size(); ++k) {
        Int pn = cf.period[k] * p + p_prev;
        Int qn = cf.period[k] * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(pn);
        q = std::move(qn);
    }
    if (p * p + 1 != d * q * q) {
        throw InternalConsistencyError("negative Pell convergent fails u^2 + 1 = d v^2 for d = " + d.get_str());
    }
    return PellFundamental{d, p, q};
}

PellReport pell_report(const Int& d) {
    CFExpansion cf = sqrt_cf(d);
    return {d, cf.a0, std::move(cf.period), neg_pell_fundamental(d)};
}

} // namespace qt::pell
