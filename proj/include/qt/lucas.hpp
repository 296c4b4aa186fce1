#ifndef QT_LUCAS_HPP
#define QT_LUCAS_HPP

#include "qt/exact.hpp"

#include <string>
#include <vector>

namespace qt::lucas {

// alpha, beta are the roots of X^2 - a X - b.
struct LucasParams {
    Int a;
    Int b;
};

// U_m = alpha^m + beta^m, V_m = (alpha^m - beta^m) / (alpha - beta).
struct LucasPair {
    long m = 0;
    Int U;
    Int V;
};

// Negative m is supported for b = 1 only (DomainError otherwise).
LucasPair lucas_uv(const LucasParams& p, long m);

// Both sequences for indices 0..m_max.
struct LucasTable {
    std::vector<Int> U;
    std::vector<Int> V;
};
LucasTable lucas_table(const LucasParams& p, long m_max);

// gcd(V_m, V_n) == V_gcd(m,n). m, n >= 1.
bool gcd_index_identity(const LucasParams& p, long m, long n);

// Jacobi symbol (V_m / V_n) for a even positive, b = 1, m, n odd coprime
// positive. Throws DomainError on precondition violations.
int jacobi_vv(const LucasParams& p, long m, long n);

struct IdentityCheck {
    std::string name;
    bool passed = false;
    bool applicable = true;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
};

// Checks, for the given indices and b = 1:
//   2V_{m+n} = U_m V_n + U_n V_m
//   U_m^2 - (a^2+4) V_m^2 = 4(-1)^m
//   U_{2km} - 2(-1)^{km} = (a^2+4) V_{km}^2
//   U_{2km}/2 = (-1)^{km} (mod V_m)                (a even)
//   V_{2km+n} = (-1)^{km} V_n (mod V_m)             (a even)
//   V_{2m+1} = V_m^2 + V_{m+1}^2
//   V_{2m+1} = 1 (mod 4)                            (a even)
//   V_{-m} = (-1)^{m+1} V_m, U_{-m} = (-1)^m U_m
IdentityReport identity_suite(const LucasParams& p, long m, long n, long k);

} // namespace qt::lucas

#endif
