#ifndef QT_THUE_HPP
#define QT_THUE_HPP

#include "qt/ball.hpp"
#include "qt/evidence.hpp"
#include "qt/exact.hpp"

#include <array>
#include <string>
#include <vector>

// Integer solutions of
//   P_t(X, Y) = X^4 - t X^3 Y - 6 X^2 Y^2 + t X Y^3 + Y^4 = +-1.
namespace qt::thue {

Int form_value(const Int& t, const Int& x, const Int& y);

struct QuarticRoots {
    Int t;
    unsigned precision = 0;
    std::array<RealBall, 4> beta;
};

// Roots of P_t(X, 1), each certified inside its interval
//   (-1/t, -1/(t+1)), (1-2/(t+1), 1-2/(t+2)), (t+5/(t+1), t+5/t), (-1-2/(t-1), -1-2/t).
// t >= 5.
QuarticRoots roots(const Int& t, const PrecisionPolicy& policy = PrecisionPolicy::from_env());

struct Solution {
    Int x;
    Int y;
    int value = 0; // P_t(x, y), either +1 or -1

    friend bool operator==(const Solution&, const Solution&) = default;
};

enum class Method { Certified, BoundedSearch, Factorization, Partial };
const char* to_string(Method m);

struct ThueSolutionSet {
    Int t;
    std::vector<Solution> solutions; // sorted by (x, y), no duplicates
    Method method = Method::Partial;
    bool certified = false;
    Int search_bound; // 0 unless a bounded search produced the set
    Evidence evidence;

    friend bool operator==(const ThueSolutionSet&, const ThueSolutionSet&) = default;
};

// Sorts, deduplicates and re-verifies every pair exactly.
void finalize(ThueSolutionSet& s);

// All solutions with |y| <= 1, by integer-root testing.
ThueSolutionSet solve_small_y(const Int& t);

struct Convergent {
    Int p;
    Int q;
    long index = 0;
};

struct ScanResult {
    int j = 0;
    Int q_max;
    unsigned precision = 0;
    std::vector<Int> digits; // certified partial quotients
    std::vector<Convergent> convergents;
    std::vector<Solution> hits;
};

// Convergents of beta^(j) with q <= q_max, each tested against P_t = +-1.
ScanResult convergent_scan(const Int& t, int j, const Int& q_max,
                           const PrecisionPolicy& policy = PrecisionPolicy::from_env());

// Complete, certified solution for t >= 128.
ThueSolutionSet solve_certified(const Int& t, const PrecisionPolicy& policy = PrecisionPolicy::from_env());

// Every solution with |y| <= B. Not a proof beyond B.
ThueSolutionSet solve_bounded(const Int& t, const Int& B);

ThueSolutionSet solve_t3();

// The reference solution lists; t = 1 and t = 4 have extra solutions.
std::vector<Solution> reference_table(const Int& t);

inline constexpr long kDefaultSearchBound = 10000;

// t = 3: factorisation; t >= 128: certified; otherwise bounded search
// checked against the reference table.
ThueSolutionSet solve(const Int& t, const Int& B = Int(kDefaultSearchBound),
                      const PrecisionPolicy& policy = PrecisionPolicy::from_env());

} // namespace qt::thue

#endif
