#ifndef QT_MEASURE_HPP
#define QT_MEASURE_HPP

#include "qt/ball.hpp"
#include "qt/evidence.hpp"
#include "qt/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qt::measure {

// An approximation sequence p_r/q_r to theta with
//   |q_r| < k0 Q^r,   |q_r theta - p_r| <= l0 E^-r,   p_r q_{r+1} != p_{r+1} q_r.
struct ApproxScheme {
    Rat k0;
    RealBall l0;
    RealBall E;
    RealBall Q;
};

enum class Orientation { Standard, Switched };
const char* to_string(Orientation o);

// |p - theta q| > 1 / (c |q|^kappa) for |q| >= q_min, equivalently
// |theta - p/q| > 1 / (c |q|^(kappa+1)).
struct MeasureCertificate {
    std::string subject;
    Int t;   // 0 when the subject is not a family root
    int j = -1;
    Orientation orientation = Orientation::Standard;
    RealBall kappa;
    RealBall c;
    Int q_min;
    unsigned precision = 0;
    Evidence evidence;

    friend bool operator==(const MeasureCertificate&, const MeasureCertificate&) = default;
};

MeasureCertificate scheme_certificate(const ApproxScheme& scheme, std::string subject = "theta");

// kappa = log(8 eps) / log(eps / 8).
RealBall kappa_of(const Int& t, unsigned prec);

// The reference constants c_0 = c_1 = c_3 = 11.33 t 0.4^kappa and
// c_2 = 8.01 t (0.4 t)^kappa, valid for |q| > 0.16 t. The constants are
// re-derived from the approximation sequences and must be dominated by
// the reference ones; otherwise UncertifiedError.
MeasureCertificate root_certificate(const Int& t, int j,
                                     const PrecisionPolicy& policy = PrecisionPolicy::from_env());

// Certified evaluation of |p - beta q| > 1 / (c |q|^kappa).
// DomainError when |q| < q_min; Undecided when the balls overlap.
Certainty check_point(const MeasureCertificate& cert, const RealBall& beta, const Int& p, const Int& q);

struct ScanReport {
    Int t;
    int j = 0;
    Int q_lo;
    Int q_hi;
    long checked = 0;
    long failed = 0;
    unsigned precision = 0;
    Int tightest_q; // q with the smallest margin
    std::string tightest_margin;
};

// Every q in [q_lo, q_hi] with p the nearest integer to q beta^(j).
ScanReport scan_points(const Int& t, int j, const Int& q_lo, const Int& q_hi,
                       const PrecisionPolicy& policy = PrecisionPolicy::from_env());

struct ExclusionCase {
    int j = 0;
    std::string method; // "direct" or "reciprocal"
    bool certified = false;
    Evidence evidence;
};

struct ExclusionReport {
    Int t;
    Int y_floor;
    unsigned precision = 0;
    std::vector<ExclusionCase> cases;
    bool certified() const;
};

// Case j alone at a fixed precision; nullopt when undecided.
std::optional<ExclusionCase> exclusion_case(const Int& t, int j, const Int& y_floor, unsigned prec);

// For each j, no solution of P_t(x, y) = +-1 with |y| >= y_floor has
// |x - beta^(j) y| < 1. t >= 128, y_floor >= max(floor(t/5), 25).
ExclusionReport exclusion_check(const Int& t, const Int& y_floor,
                                const PrecisionPolicy& policy = PrecisionPolicy::from_env());

} // namespace qt::measure

#endif
