#include "qt/measure.hpp"

#include "qt/errors.hpp"
#include "qt/pade.hpp"

#include <algorithm>
#include <cmath>

namespace qt::measure {

const char* to_string(Orientation o) { return o == Orientation::Standard ? "standard" : "switched"; }

namespace {

struct Undecided {};

bool decide(Certainty c) {
    if (c == Certainty::Undecided) {
        throw Undecided{};
    }
    return c == Certainty::True;
}

std::string str(const RealBall& b) { return b.to_string(15); }

Int ceil_positive(const RealBall& x) {
    if (auto f = x.certified_floor()) {
        if (x.is_exact() && x.contains(Rat(*f))) {
            return *f;
        }
        return *f + 1;
    }
    // Undecided floor: any integer above the ball is safe.
    Int hi;
    mpfr_get_z(hi.get_mpz_t(), x.upper().get(), MPFR_RNDU);
    return hi + 1;
}

Int reference_q_min(const Int& t) { return floor_div(4 * t, Int(25)) + 1; } // |q| > 0.16 t

void require_family(const Int& t, int j) {
    if (t < 128) {
        throw OutOfMethodRange("measure certificates need t >= 128, got " + t.get_str());
    }
    if (j < 0 || j > 3) {
        throw DomainError("root index must be in 0..3");
    }
}

} // namespace

MeasureCertificate scheme_certificate(const ApproxScheme& s, std::string subject) {
    if (sgn(s.k0) <= 0 || !s.l0.is_positive()) {
        throw DomainError("scheme_certificate needs k0, l0 > 0");
    }
    const unsigned prec = std::min({s.l0.precision(), s.E.precision(), s.Q.precision()});
    const RealBall one = RealBall::from(1L, prec);
    if (ball_strict_less(one, s.E) != Certainty::True || ball_strict_less(one, s.Q) != Certainty::True) {
        throw DomainError("scheme_certificate needs E > 1 and Q > 1 certified");
    }
    MeasureCertificate cert;
    cert.subject = std::move(subject);
    cert.kappa = log(s.Q) / log(s.E);
    cert.c = s.Q * s.k0 * Rat(2) * pow(s.l0 * s.E * Rat(2), cert.kappa);
    cert.q_min = std::max(Int(1), ceil_positive(one / (s.l0 * Rat(2))));
    cert.precision = prec;
    cert.evidence.push_back({"scheme", "kappa = log Q / log E, c = 2 k0 Q (2 l0 E)^kappa", true,
                             {{"k0", qt::to_string(s.k0)},
                              {"l0", str(s.l0)},
                              {"E", str(s.E)},
                              {"Q", str(s.Q)},
                              {"kappa", str(cert.kappa)},
                              {"c", str(cert.c)},
                              {"q_min", cert.q_min.get_str()}}});
    return cert;
}

RealBall kappa_of(const Int& t, unsigned prec) {
    const RealBall eps = pade::roots_at(t, prec).epsilon;
    return log(eps * Rat(8)) / log(eps / Rat(8));
}

namespace {

// Certificate at one precision; throws Undecided.
MeasureCertificate certificate_at(const Int& t, int j, unsigned prec) {
    const pade::Roots rs = pade::roots_at(t, prec);
    const RealBall& eps = rs.epsilon;
    const RealBall one = RealBall::from(1L, prec);
    const RealBall three = RealBall::from(3L, prec);
    const RealBall tb = RealBall::from(t, prec);
    const RealBall kappa = log(eps * Rat(8)) / log(eps / Rat(8));

    MeasureCertificate cert;
    cert.subject = "beta^(" + std::to_string(j) + ") of P_" + t.get_str();
    cert.t = t;
    cert.j = j;
    cert.orientation = (j >= 2) ? Orientation::Switched : Orientation::Standard;
    cert.kappa = kappa;
    cert.q_min = reference_q_min(t);
    cert.precision = prec;
    const RealBall point4 = RealBall::from(frac(2, 5), prec);
    if (j == 2) {
        cert.c = tb * frac(801, 100) * pow(point4 * tb, kappa);
    } else {
        cert.c = tb * frac(1133, 100) * pow(point4, kappa);
    }

    const bool kappa_lt_3 = decide(ball_strict_less(kappa, three));
    const bool kappa_gt_1 = decide(ball_strict_less(one, kappa));
    cert.evidence.push_back({"kappa", "1 < kappa < 3", kappa_lt_3 && kappa_gt_1, {{"kappa", str(kappa)}}});

    // Re-derivation through the generic scheme.
    const Rat k0 = (j == 0 || j == 2) ? frac(10005, 10000) : frac(1415, 1000);
    RealBall l0 = RealBall::pi(prec) * Rat(t) / Rat(t * t + 16);
    if (j >= 2) {
        l0 = l0 * abs(rs.beta[static_cast<std::size_t>(j)]);
    }
    ApproxScheme scheme{k0, l0, eps / Rat(8), eps * Rat(8)};
    MeasureCertificate derived = scheme_certificate(scheme, cert.subject);
    cert.evidence.insert(cert.evidence.end(), derived.evidence.begin(), derived.evidence.end());

    const bool dominated = decide(ball_less_equal(derived.c, cert.c));
    cert.evidence.push_back({"dominance", "derived c <= reference c", dominated,
                             {{"derived_c", str(derived.c)}, {"reference_c", str(cert.c)}}});
    const bool threshold_ok = derived.q_min <= cert.q_min;
    cert.evidence.push_back({"threshold", "ceil(1/(2 l0)) <= floor(0.16 t) + 1", threshold_ok,
                             {{"derived_q_min", derived.q_min.get_str()},
                              {"reference_q_min", cert.q_min.get_str()}}});

    const RealBall two_l0_e = l0 * scheme.E * Rat(2);
    const RealBall two_k0_q = scheme.Q * k0 * Rat(2);
    if (j == 0 || j == 1) {
        bool ok = decide(ball_strict_less(two_l0_e, point4));
        cert.evidence.push_back({"intermediate", "2 l0 E < 0.4", ok, {{"2l0E", str(two_l0_e)}}});
    }
    if (j == 0) {
        // 2 k0 Q = 16.008 eps exactly, as 2 * 1.0005 * 8 = 16.008.
        bool ok = k0 * 16 == frac(16008, 1000) &&
                  decide(ball_strict_less(eps * frac(16008, 1000), tb * frac(801, 100)));
        cert.evidence.push_back({"intermediate", "2 k0 Q <= 16.008 eps < 8.01 t", ok, {{"2k0Q", str(two_k0_q)}}});
    }
    if (j == 2) {
        bool ok = decide(ball_strict_less(two_l0_e, point4 * tb));
        cert.evidence.push_back({"intermediate", "2 l0 E < 0.4 t", ok, {{"2l0E", str(two_l0_e)}}});
    }
    if (j == 3) {
        bool ok = decide(ball_strict_less(eps / (rs.rho + one), one));
        cert.evidence.push_back({"intermediate", "eps / (rho + 1) < 1", ok, {}});
    }
    return cert;
}

bool all_certified(const Evidence& ev) {
    return std::all_of(ev.begin(), ev.end(), [](const EvidenceEntry& e) { return e.certified; });
}

std::string first_failure(const Evidence& ev) {
    for (const auto& e : ev) {
        if (!e.certified) {
            return e.claim;
        }
    }
    return "none";
}

} // namespace

MeasureCertificate root_certificate(const Int& t, int j, const PrecisionPolicy& policy) {
    require_family(t, j);
    auto res = escalate(policy, "root_certificate", [&](unsigned prec) -> std::optional<MeasureCertificate> {
        try {
            return certificate_at(t, j, prec);
        } catch (const Undecided&) {
            return std::nullopt;
        }
    });
    MeasureCertificate cert = std::move(res.value);
    if (!all_certified(cert.evidence)) {
        throw UncertifiedError("measure certificate for " + cert.subject +
                                 " could not be established: " + first_failure(cert.evidence));
    }
    return cert;
}

Certainty check_point(const MeasureCertificate& cert, const RealBall& beta, const Int& p, const Int& q) {
    if (abs(q) < cert.q_min) {
        throw DomainError("check_point needs |q| >= " + cert.q_min.get_str() + ", got " + q.get_str());
    }
    const unsigned prec = std::min(beta.precision(), cert.kappa.precision());
    const RealBall aq = RealBall::from(Int(abs(q)), prec);
    const RealBall defect = abs(RealBall::from(p, prec) - beta * RealBall::from(q, prec));
    const RealBall scaled = defect * cert.c * exp(cert.kappa * log(aq));
    return ball_strict_less(RealBall::from(1L, prec), scaled);
}

ScanReport scan_points(const Int& t, int j, const Int& q_lo, const Int& q_hi, const PrecisionPolicy& policy) {
    require_family(t, j);
    if (q_hi < q_lo) {
        throw DomainError("empty scan range");
    }
    auto res = escalate(policy, "scan_points", [&](unsigned prec) -> std::optional<ScanReport> {
        MeasureCertificate cert;
        try {
            cert = certificate_at(t, j, prec);
        } catch (const Undecided&) {
            return std::nullopt;
        }
        if (!all_certified(cert.evidence)) {
            throw UncertifiedError("measure certificate for " + cert.subject +
                                 " could not be established: " + first_failure(cert.evidence));
        }
        const RealBall beta = pade::roots_at(t, prec).beta[static_cast<std::size_t>(j)];
        ScanReport rep;
        rep.t = t;
        rep.j = j;
        rep.q_lo = q_lo;
        rep.q_hi = q_hi;
        rep.precision = prec;
        double best = HUGE_VAL;
        for (Int q = q_lo; q <= q_hi; ++q) {
            const Int p = (beta * RealBall::from(q, prec)).round_mid();
            Certainty c = check_point(cert, beta, p, q);
            if (c == Certainty::Undecided) {
                return std::nullopt;
            }
            ++rep.checked;
            if (c == Certainty::False) {
                ++rep.failed;
            }
            const RealBall margin = abs(RealBall::from(p, prec) - beta * RealBall::from(q, prec)) * cert.c *
                                    exp(cert.kappa * log(RealBall::from(Int(abs(q)), prec)));
            if (margin.to_double() < best) {
                best = margin.to_double();
                rep.tightest_q = q;
                rep.tightest_margin = margin.to_string(8);
            }
        }
        return rep;
    });
    return std::move(res.value);
}

// ------------------------------------------------------------- exclusion

bool ExclusionReport::certified() const {
    return cases.size() == 4 &&
           std::all_of(cases.begin(), cases.end(), [](const ExclusionCase& c) { return c.certified; });
}

namespace {

// Lower bound K t for prod_{k != j} (|beta_j - beta_k| - 1/|y|), and the
// rational constant in |y|^(3-kappa) < K' 0.4^kappa.
struct DirectConstants {
    Rat product;
    Rat contradiction;
};

DirectConstants direct_constants(int j) {
    switch (j) {
    case 0: return {frac(911, 1000), frac(25, 2)};
    case 1: return {frac(184, 100), frac(1133, 100) / frac(184, 100)};
    default: return {frac(189, 100), frac(1133, 100) / frac(189, 100)};
    }
}

ExclusionCase direct_case(const Int& t, int j, const Int& y, unsigned prec) {
    const pade::Roots rs = pade::roots_at(t, prec);
    const RealBall yb = RealBall::from(y, prec);
    const RealBall inv_y = RealBall::from(1L, prec) / yb;
    const DirectConstants k = direct_constants(j);
    const auto bj = rs.beta[static_cast<std::size_t>(j)];

    ExclusionCase ec;
    ec.j = j;
    ec.method = "direct";
    bool ok = true;

    RealBall prod = RealBall::from(1L, prec);
    for (int i = 0; i < 4; ++i) {
        if (i == j) {
            continue;
        }
        RealBall f = abs(bj - rs.beta[static_cast<std::size_t>(i)]) - inv_y;
        ok = ok && decide(ball_strict_less(RealBall(prec), f));
        prod *= f;
    }
    const bool prod_ok = decide(ball_less_equal(RealBall::from(Rat(t) * k.product, prec), prod));
    ec.evidence.push_back({"exclusion", "prod_{k!=j} (|beta_j - beta_k| - 1/y) >= K t, factors positive",
                           ok && prod_ok,
                           {{"product", str(prod)}, {"K", qt::to_string(k.product)}, {"y", y.get_str()}}});

    const bool constant_ok = frac(1133, 100) / k.product <= k.contradiction;
    ec.evidence.push_back({"exclusion", "11.33 / K <= contradiction constant", constant_ok,
                           {{"constant", qt::to_string(k.contradiction)}}});

    const RealBall kappa = log(rs.epsilon * Rat(8)) / log(rs.epsilon / Rat(8));
    const RealBall gap = RealBall::from(3L, prec) - kappa;
    const bool mono = decide(ball_strict_less(RealBall(prec), gap));
    const RealBall lhs = exp(gap * log(yb));
    const RealBall rhs = exp(kappa * log(RealBall::from(frac(2, 5), prec))) * k.contradiction;
    const bool fails = decide(ball_less_equal(rhs, lhs));
    ec.evidence.push_back({"exclusion", "y^(3-kappa) >= K' 0.4^kappa at y_floor, increasing in |y|",
                           mono && fails, {{"lhs", str(lhs)}, {"rhs", str(rhs)}, {"kappa", str(kappa)}}});

    const bool applicable = y >= reference_q_min(t);
    ec.evidence.push_back({"exclusion", "y_floor >= q_min of the measure", applicable,
                           {{"q_min", reference_q_min(t).get_str()}}});

    ec.certified = ok && prod_ok && constant_ok && mono && fails && applicable;
    return ec;
}

// delta^(2) < 1 maps to delta^(0) < 1 under (x, y) -> (-y, x).
ExclusionCase reciprocal_case(const Int& t, const Int& y, unsigned prec) {
    const pade::Roots rs = pade::roots_at(t, prec);
    ExclusionCase ec;
    ec.j = 2;
    ec.method = "reciprocal";

    // P_t(-Y, X) = P_t(X, Y): coefficients (1, -t, -6, t, 1) are palindromic
    // up to the sign pattern of odd powers.
    const std::vector<Int> c{1, -t, -6, t, 1};
    bool sym = true;
    for (std::size_t k = 0; k < 5; ++k) {
        // term X^(4-k) Y^k becomes (-Y)^(4-k) X^k: coefficient of X^k Y^(4-k)
        Int mapped = ((4 - k) % 2 == 0) ? c[k] : Int(-c[k]);
        sym = sym && mapped == c[4 - k];
    }
    ec.evidence.push_back({"exclusion", "P_t(-y, x) = P_t(x, y)", sym, {}});

    const RealBall one = RealBall::from(1L, prec);
    const bool small = decide(ball_strict_less(abs(rs.beta[0]), one));
    ec.evidence.push_back({"exclusion", "|beta^(0)| < 1, so delta'^(0) = |beta^(0)| delta^(2) < 1", small,
                           {{"beta0", str(rs.beta[0])}}});

    const RealBall yb = RealBall::from(y, prec);
    const RealBall image = abs(rs.beta[2]) * yb - one;
    const bool large = decide(ball_less_equal(yb, image));
    ec.evidence.push_back({"exclusion", "|x| > |beta^(2)| y_floor - 1 >= y_floor", large,
                           {{"bound", str(image)}}});

    ExclusionCase base = direct_case(t, 0, y, prec);
    ec.evidence.push_back({"exclusion", "case j=0 excludes the image", base.certified, {}});

    // The displayed inequality |y|^(3-kappa) < 8.02 t^-2 (0.4 t)^kappa, kept
    // for reference; it does not yield a contradiction on its own.
    const RealBall kappa = log(rs.epsilon * Rat(8)) / log(rs.epsilon / Rat(8));
    const RealBall tb = RealBall::from(t, prec);
    const RealBall lhs = exp((RealBall::from(3L, prec) - kappa) * log(yb));
    const RealBall rhs = exp(kappa * log(tb * frac(2, 5))) * frac(802, 100) / square(tb);
    Certainty informative = ball_less_equal(rhs, lhs);
    ec.evidence.push_back({"informational", "displayed j=2 inequality fails at y_floor",
                           informative == Certainty::True,
                           {{"lhs", str(lhs)}, {"rhs", str(rhs)}, {"outcome", qt::to_string(informative)}}});

    ec.certified = sym && small && large && base.certified;
    return ec;
}

} // namespace

std::optional<ExclusionCase> exclusion_case(const Int& t, int j, const Int& y_floor, unsigned prec) {
    require_family(t, j);
    const Int lo = std::max(floor_div(t, Int(5)), Int(25));
    if (y_floor < lo) {
        throw DomainError("exclusion_check needs y_floor >= " + lo.get_str());
    }
    try {
        return j == 2 ? reciprocal_case(t, y_floor, prec) : direct_case(t, j, y_floor, prec);
    } catch (const Undecided&) {
        return std::nullopt;
    }
}

ExclusionReport exclusion_check(const Int& t, const Int& y_floor, const PrecisionPolicy& policy) {
    auto res = escalate(policy, "exclusion_check", [&](unsigned prec) -> std::optional<ExclusionReport> {
        ExclusionReport rep;
        rep.t = t;
        rep.y_floor = y_floor;
        rep.precision = prec;
        for (int j = 0; j < 4; ++j) {
            auto c = exclusion_case(t, j, y_floor, prec);
            if (!c) {
                return std::nullopt;
            }
            rep.cases.push_back(std::move(*c));
        }
        return rep;
    });
    return std::move(res.value);
}

} // namespace qt::measure
