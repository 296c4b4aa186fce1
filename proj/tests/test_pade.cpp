#include "qt/errors.hpp"
#include "qt/pade.hpp"

#include "doctest.h"

using namespace qt;
using namespace qt::pade;

namespace {

struct Frozen {
    long t;
    int j;
    std::vector<std::pair<const char*, const char*>> pq; // (P_r, Q_r), r = 0..6
};

// Computed independently from the three-term recurrence in exact
// rational arithmetic with a computer algebra system.
const std::vector<Frozen>& frozen() {
    static const std::vector<Frozen> f{
        {128, 0, {{"0", "-1"}, {"-2", "256"}, {"768", "-98334"}, {"-327764", "41966592"},
                  {"146874880", "-18805720470"}, {"-67696660668", "8667816288768"},
                  {"31780113150464", "-4069095575857452"}}},
        {128, 1, {{"-1", "-1"}, {"254", "258"}, {"-97566", "-99102"}, {"41638828", "42294356"},
                  {"-18658845590", "-18952595350"}, {"8600119628100", "8735512949436"},
                  {"-4037315462706988", "-4100875689007916"}}},
        {200, 0, {{"0", "-1"}, {"-2", "400"}, {"1200", "-240030"}, {"-800084", "160036800"},
                  {"560116000", "-112037201430"}, {"-403324324284", "80674946906400"},
                  {"295800969312800", "-59167588110476076"}}},
        {200, 1, {{"-1", "-1"}, {"398", "402"}, {"-238830", "-241230"}, {"159236716", "160836884"},
                  {"-111477085430", "-112597317430"}, {"80271622582116", "81078271230684"},
                  {"-58871787141163276", "-59463389079788876"}}},
    };
    return f;
}

} // namespace

TEST_SUITE("pade") {

TEST_CASE("family data") {
    ThueData td = build_thue_data(Int(128));
    CHECK(td.h == -15);
    CHECK(td.lambda == -1);
    CHECK(td.P == RatPoly{Rat(1), Rat(128), Rat(-6), Rat(-128), Rat(1)});
    CHECK(td.A0 == RatPoly{Rat(-10)});
    CHECK(td.B0 == RatPoly{Rat(0), Rat(-10)});
}

TEST_CASE("approximants match the frozen oracle") {
    for (const auto& f : frozen()) {
        auto seq = approximant_sequence(Int(f.t), 6, f.j);
        for (std::size_t r = 0; r < f.pq.size(); ++r) {
            CHECK_MESSAGE(seq[r].P == Int(f.pq[r].first), "t=" << f.t << " j=" << f.j << " r=" << r);
            CHECK_MESSAGE(seq[r].Q == Int(f.pq[r].second), "t=" << f.t << " j=" << f.j << " r=" << r);
        }
    }
    ApproximantPair a = approximants(Int(128), 1, 0);
    CHECK(a.P == -2);
    CHECK(a.Q == 256);
}

TEST_CASE("polynomial and pointwise recurrences agree") {
    ThueData td = build_thue_data(Int(37));
    PolySequences polys = ab_polys(td, 8);
    for (const Rat& x : {Rat(0), Rat(1), frac(-2, 3)}) {
        PointSequences pts = ab_values(td, x, 8);
        for (std::size_t r = 0; r <= 8; ++r) {
            CHECK(polys.A[r](x) == pts.A[r]);
            CHECK(polys.B[r](x) == pts.B[r]);
        }
    }
}

TEST_CASE("hypergeometric coefficients") {
    HyperCoeffs h = xnr_coeffs(2);
    REQUIRE(h.coeffs.size() == 3);
    // Term ratio (k-r)(k-r-1/4)/((k+3/4)(k+1)).
    for (long k = 0; k + 1 < 3; ++k) {
        Rat ratio = (Rat(k - 2) * (Rat(k - 2) - frac(1, 4))) / ((Rat(k) + frac(3, 4)) * Rat(k + 1));
        CHECK(h.coeffs[static_cast<std::size_t>(k + 1)] == h.coeffs[static_cast<std::size_t>(k)] * ratio);
    }
    CHECK(binomial(frac(1, 2), 2) == frac(-1, 8));
}

TEST_CASE("defect relation at r = 1") {
    // S_1 = 256 beta^(0) + 2, oracle value 6.1000906708782e-4.
    DefectReport rep = approx_report(Int(128), 1, 0);
    CHECK(rep.certified);
    CHECK(rep.defect.rfind("0.000610009067087", 0) == 0);
}

TEST_CASE("bound suite at t = 128") {
    BoundReport b = bound_suite(Int(128), 30, PrecisionPolicy{128, 4096});
    CHECK(b.all_passed());
    CHECK(b.checks.size() > 200);
    CHECK_THROWS_AS(bound_suite(Int(100), 5), OutOfMethodRange);
}

TEST_CASE("vanishing order") {
    for (long r = 1; r <= 3; ++r) {
        for (int j = 0; j <= 1; ++j) {
            VanishingReport v = vanishing_order(Int(128), r, j, 512);
            CHECK_MESSAGE(v.passed(), "r=" << r << " j=" << j);
            CHECK(v.values.size() == static_cast<std::size_t>(2 * r + 2));
        }
    }
}

TEST_CASE("consecutive determinants") {
    DetReport d = det_nonvanish(Int(200), 30, 1);
    CHECK(d.all_nonzero);
    CHECK(d.dets.size() == 30);
    CHECK(det_nonvanish(Int(128), 1, 0).dets[0] == -2);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(approximants(Int(4), 1, 0), DomainError);
    CHECK_THROWS_AS(approximants(Int(128), 1, 2), DomainError);
    CHECK_THROWS_AS(approximants(Int(128), -1, 0), DomainError);
}

TEST_CASE("roots satisfy the reciprocal pairing") {
    Roots rs = roots_at(Int(128), 256);
    CHECK((rs.beta[0] * rs.beta[2]).contains(Rat(-1)));
    CHECK((rs.beta[1] * rs.beta[3]).contains(Rat(-1)));
    // -1/128 < beta^(0) < -1/129
    CHECK(ball_strict_less(RealBall::from(frac(-1, 128), 256), rs.beta[0]) == Certainty::True);
    CHECK(ball_strict_less(rs.beta[0], RealBall::from(frac(-1, 129), 256)) == Certainty::True);
}

} // TEST_SUITE
