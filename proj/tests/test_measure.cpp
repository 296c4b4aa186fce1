#include "qt/errors.hpp"
#include "qt/measure.hpp"
#include "qt/pade.hpp"

#include "doctest.h"

using namespace qt;
using namespace qt::measure;

TEST_SUITE("measure") {

TEST_CASE("generic scheme with Q = E") {
    const unsigned prec = 128;
    ApproxScheme s{Rat(1), RealBall::from(1L, prec), RealBall::from(10L, prec), RealBall::from(10L, prec)};
    MeasureCertificate c = scheme_certificate(s);
    CHECK(c.kappa.contains(Rat(1)));
    CHECK(c.c.contains(Rat(400)));
    CHECK(c.q_min == 1);
    ApproxScheme bad{Rat(1), RealBall::from(1L, prec), RealBall::from(1L, prec), RealBall::from(10L, prec)};
    CHECK_THROWS_AS(scheme_certificate(bad), DomainError);
}

TEST_CASE("kappa at t = 128") {
    // Oracle: 2.99976529984403805683... (50-digit evaluation).
    RealBall k = kappa_of(Int(128), 256);
    CHECK(ball_strict_less(RealBall::from(frac(299976529984LL, 100000000000LL), 256), k) == Certainty::True);
    CHECK(ball_strict_less(k, RealBall::from(frac(299976529985LL, 100000000000LL), 256)) == Certainty::True);
    CHECK(ball_strict_less(k, RealBall::from(3L, 256)) == Certainty::True);
}

TEST_CASE("kappa decreases with t") {
    RealBall prev = kappa_of(Int(128), 256);
    for (long t : {200L, 500L, 1000L, 10000L}) {
        RealBall k = kappa_of(Int(t), 256);
        CHECK(ball_strict_less(k, prev) == Certainty::True);
        prev = k;
    }
}

TEST_CASE("certificates at t = 128") {
    MeasureCertificate c0 = root_certificate(Int(128), 0);
    // Oracle: 11.33 * 128 * 0.4^kappa = 92.8353224216495737...
    CHECK(ball_strict_less(RealBall::from(frac(928353, 10000), 256), c0.c) == Certainty::True);
    CHECK(ball_strict_less(c0.c, RealBall::from(frac(928354, 10000), 256)) == Certainty::True);
    CHECK(c0.q_min == 21);
    CHECK(c0.orientation == Orientation::Standard);
    MeasureCertificate c2 = root_certificate(Int(128), 2);
    CHECK(c2.orientation == Orientation::Switched);
    CHECK(ball_strict_less(RealBall::from(Rat(137483697), 256), c2.c) == Certainty::True);
    CHECK(ball_strict_less(c2.c, RealBall::from(Rat(137483698), 256)) == Certainty::True);
    for (const auto& e : c0.evidence) {
        CHECK_MESSAGE(e.certified, e.claim);
    }
    CHECK_THROWS_AS(root_certificate(Int(127), 0), OutOfMethodRange);
    CHECK_THROWS_AS(root_certificate(Int(128), 4), DomainError);
}

TEST_CASE("point checks") {
    MeasureCertificate c0 = root_certificate(Int(128), 0);
    RealBall beta = pade::roots_at(Int(128), 256).beta[0];
    CHECK(check_point(c0, beta, Int(-1), Int(128)) == Certainty::True);
    Int p21 = (beta * RealBall::from(21L, 256)).round_mid();
    CHECK(check_point(c0, beta, p21, Int(21)) == Certainty::True);
    CHECK_THROWS_AS(check_point(c0, beta, Int(0), Int(20)), DomainError);
}

TEST_CASE("exhaustive scan to 10^4") {
    for (long t : {128L, 200L}) {
        for (int j = 0; j <= 3; ++j) {
            MeasureCertificate c = root_certificate(Int(t), j);
            ScanReport s = scan_points(Int(t), j, c.q_min, Int(10000));
            CHECK_MESSAGE(s.failed == 0, "t=" << t << " j=" << j);
            CHECK(s.checked == 10000 - c.q_min.get_si() + 1);
        }
    }
}

TEST_CASE("large solutions excluded") {
    for (long t : {128L, 129L, 200L, 1000L, 100000L}) {
        Int floor_y = std::max(Int(t / 5), Int(25));
        ExclusionReport r = exclusion_check(Int(t), floor_y);
        CHECK_MESSAGE(r.certified(), "t=" << t);
        CHECK(r.cases.size() == 4);
    }
    CHECK_THROWS_AS(exclusion_check(Int(128), Int(24)), DomainError);
}

} // TEST_SUITE
