#ifndef QT_PADE_HPP
#define QT_PADE_HPP

#include "qt/ball.hpp"
#include "qt/exact.hpp"

#include <array>
#include <string>
#include <vector>

// Thue's hypergeometric construction for the family
//   P_t(X) = X^4 - t X^3 - 6 X^2 + t X + 1,   U(X) = X^2 + 1.
// Approximations to the roots beta^(0), beta^(1) come from the
// polynomials A_r, B_r evaluated at x = 0 and x = 1 respectively.
namespace qt::pade {

inline constexpr int kDegree = 4;
// mu_4 = prod over p | 4 of p^(1/(p-1)) = 2.
inline constexpr int kMu4 = 2;

struct ThueData {
    Int t;
    RatPoly P;
    RatPoly U;
    RatPoly Y1;
    RatPoly A0;
    RatPoly A1;
    RatPoly B0;
    RatPoly B1;
    Int h;
    Int lambda;
};

// All fields are derived from P and U; the differential equation
//   U P'' - (n-1) U' P' + n(n-1)/2 U'' P = 0
// is checked as an exact polynomial identity.
ThueData build_thue_data(const Int& t);

// A_r(x), B_r(x) for r = 0..r_max, advanced pointwise by the three-term
// recurrence. x is any rational point.
struct PointSequences {
    Rat x;
    std::vector<Rat> A;
    std::vector<Rat> B;
};
PointSequences ab_values(const ThueData& td, const Rat& x, long r_max);

// Full polynomial sequences; degree grows like 4r, so keep r small.
struct PolySequences {
    std::vector<RatPoly> A;
    std::vector<RatPoly> B;
};
PolySequences ab_polys(const ThueData& td, long r_max);

// Coefficients of X_r(X) = 2F1(-r, -r - 1/4; 3/4; X), lowest degree first.
struct HyperCoeffs {
    long r = 0;
    std::vector<Rat> coeffs;
};
HyperCoeffs xnr_coeffs(long r);
// Generalised binomial C(x, k) for rational x.
Rat binomial(const Rat& x, long k);
// X_r^*(X, Y) = Y^r X_r(X / Y).
GaussRat xstar(const HyperCoeffs& h, const GaussRat& X, const GaussRat& Y);

// z(x), u(x), a(x), b(x), c(x), d(x) at a rational point, with sqrt(lambda) = i.
struct PointParams {
    Rat x;
    GaussRat z;
    GaussRat u;
    GaussRat a;
    GaussRat b;
    GaussRat c;
    GaussRat d;
};
PointParams point_params(const ThueData& td, const Rat& x);

GaussRat w_value(const Int& t); // ((t^2-16) + 8t i) / (t^2+16)
GaussRat z_prime(const Int& t); // -it + 4
GaussRat u_prime(const Int& t); // -it - 4

// M = 3*7*...*(4r-1) / (4^r r!) and D_r(0) = 8^r/5, D_r(1) = (-2)^r/5.
Rat m_factor(long r);
Rat d_factor(long r, int j);

struct ApproximantPair {
    Int t;
    long r = 0;
    int j = 0;
    Int P;
    Int Q;
    Rat D;
    Rat M;

    friend bool operator==(const ApproximantPair&, const ApproximantPair&) = default;
};

// Integer approximants (P_r, Q_r) to beta^(j), j in {0, 1}, t >= 5.
// Both the recurrence and the hypergeometric evaluation are computed and
// must agree exactly; any disagreement, a non-real hypergeometric value or
// a non-integral result raises InternalConsistencyError.
ApproximantPair approximants(const Int& t, long r, int j);
std::vector<ApproximantPair> approximant_sequence(const Int& t, long r_max, int j);

// Real constants of the family, as balls.
struct Roots {
    RealBall epsilon; // (t + sqrt(t^2+16)) / 4
    RealBall rho;     // sqrt(1 + epsilon^2)
    std::array<RealBall, 4> beta;
};
Roots roots_at(const Int& t, unsigned prec);

struct WData {
    Int t;
    GaussRat w;
    GaussRat zp;
    GaussRat up;
    RealBall phi;
    ComplexBall sqrt_w;
    ComplexBall fourth_root_w;
    RealBall epsilon;
    RealBall rho;
};
WData w_data(const Int& t, unsigned prec);

// R_r(w) = w^(1/4) w^r X_r(1/w) - X_r(w), principal fourth root.
ComplexBall remainder_at(const Int& t, long r, unsigned prec);
// Escalates until the enclosure has small relative radius.
Escalated<ComplexBall> remainder_eval(const Int& t, long r,
                                      const PrecisionPolicy& policy = PrecisionPolicy::from_env());

struct BoundCheck {
    std::string name;
    long r = 0;
    int j = 0;
    std::string lhs;
    std::string rhs;
    bool passed = false;
};

struct BoundReport {
    Int t;
    long r_max = 0;
    unsigned precision = 0;
    std::vector<BoundCheck> checks;
    bool all_passed() const;
};

// Certified size bounds for |P_r|, |Q_r|, |S_r| (j = 0, 1, r <= r_max),
// the remainder and polynomial bounds on the unit circle (r <= min(r_max, 20)),
// and the defect relation between S_r and the remainder. t >= 128.
BoundReport bound_suite(const Int& t, long r_max,
                        const PrecisionPolicy& policy = PrecisionPolicy::from_env());

struct VanishingReport {
    Int t;
    long r = 0;
    int j = 0;
    unsigned precision = 0;
    long radius_exponent = 0; // every vanishing value has radius < 10^-radius_exponent
    std::vector<std::string> values; // C_r^(k)(beta), k = 0..2r+1
    bool vanish = false;
    bool next_nonzero = false;
    bool passed() const { return vanish && next_nonzero; }
};

// C_r = beta A_r - B_r vanishes to order exactly 2r+1 at beta^(j).
VanishingReport vanishing_order(const Int& t, long r, int j, unsigned precision = 512);

struct DetReport {
    Int t;
    long r_max = 0;
    int j = 0;
    std::vector<Int> dets; // P_r Q_{r+1} - P_{r+1} Q_r, r < r_max
    bool all_nonzero = false;
};
DetReport det_nonvanish(const Int& t, long r_max, int j);

// P_r, Q_r with the defect S_r = Q_r beta^(j) - P_r and the certified
// comparison |S_r| <= pi t/(16+t^2) (8/eps)^r.
struct DefectReport {
    ApproximantPair pair;
    unsigned precision = 0;
    std::string defect; // S_r as a ball
    std::string bound;
    bool certified = false;

    friend bool operator==(const DefectReport&, const DefectReport&) = default;
};

DefectReport approx_report(const Int& t, long r, int j,
                           const PrecisionPolicy& policy = PrecisionPolicy::from_env());

} // namespace qt::pade

#endif
