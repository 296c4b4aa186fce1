#ifndef QT_QUARTIC_HPP
#define QT_QUARTIC_HPP

#include "qt/evidence.hpp"
#include "qt/exact.hpp"

#include <optional>
#include <string>
#include <vector>

// Positive integer solutions of X^2 + 1 = d Y^4.
namespace qt::quartic {

enum class Status { NoPell, NoSolution, Unique, SpecialD1, SpecialD2 };
const char* to_string(Status s);

struct QuarticSolution {
    Int x;
    Int y;
    friend bool operator==(const QuarticSolution&, const QuarticSolution&) = default;
};

struct QuarticResult {
    Int d;
    Status status = Status::NoSolution;
    std::vector<QuarticSolution> solutions; // sorted by x
    std::optional<Int> pell_u;              // fundamental u^2 + 1 = d v^2
    std::optional<Int> pell_v;
    Evidence evidence;

    friend bool operator==(const QuarticResult&, const QuarticResult&) = default;
};

// d = 1, 2 are special; otherwise a solution exists iff the fundamental
// solution (u, v) of the negative Pell equation has v square, and then
// it is (u, sqrt v). d >= 1, else DomainError.
QuarticResult solve_quartic(const Int& d);

// Every (x, y) with 1 <= y <= y_max, x >= 0 and x^2 + 1 = d y^4.
std::vector<QuarticSolution> brute_force(const Int& d, long y_max);

// A Thue solution (a, b) of P_{4 x0}(a, b) = +-1 written against the
// Lucas sequence of x0 + sqrt(x0^2 + 1).
struct ReductionWitness {
    Int a;
    Int b;
    bool even_branch = false; // V_m = 2ab, V_{m+1} = a^2 - b^2 (up to sign)
    long m = -1;              // -1 when no index within range matches
    Int y;                    // a^2 + b^2
    bool y_squared_is_v = false; // y^2 == V_{2m+1}
};

struct ThueReduction {
    Int x0;
    Int t; // 4 x0
    Int d; // 1 + x0^2
    std::vector<ReductionWitness> witnesses;
    std::vector<Int> y_values; // distinct |y| from the Thue solutions
    Evidence evidence;
};

// Ties solutions of X^2 + 1 = (1 + x0^2) Y^4 to P_{4 x0}(a, b) = +-1 with
// y = a^2 + b^2. x0 >= 1.
ThueReduction reduce_to_thue(const Int& x0);

struct ChainReport {
    Int x0;
    long t_idx = 0;
    bool step_identity = true;   // V_{m+1} = x0 V_m + U_m / 2
    bool doubling_identity = true; // V_{2m+1} = V_m^2 + V_{m+1}^2
    std::vector<long> square_indices; // odd n <= 2 t_idx + 1 with V_n square
    std::vector<Int> square_roots;
    bool passed() const { return step_identity && doubling_identity; }
};

// x0 >= 1, t_idx >= 1.
ChainReport identity_chain_check(const Int& x0, long t_idx);

} // namespace qt::quartic

#endif
