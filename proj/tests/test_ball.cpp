#include "qt/ball.hpp"

#include "doctest.h"

#include <cstdlib>
#include <random>

using namespace qt;

TEST_SUITE("ball") {

TEST_CASE("exact construction and containment") {
    RealBall third = RealBall::from(frac(1, 3), 128);
    CHECK(third.contains(frac(1, 3)));
    CHECK_FALSE(third.contains(frac(1, 3) + frac(1, 1000000)));
    CHECK(RealBall::from(7L, 128).is_exact());
    CHECK(third.is_positive());
    CHECK((-third).is_negative());
}

TEST_CASE("enclosures contain the exact value") {
    const unsigned prec = 200;
    RealBall two = RealBall::from(2L, prec);
    RealBall s = sqrt(two);
    CHECK(square(s).contains(Rat(2)));
    CHECK((exp(log(two)) - two).contains_zero());
    // pi/4 = atan(1)
    CHECK((RealBall::pi(prec) / Rat(4) - atan(RealBall::from(1L, prec))).contains_zero());
    CHECK(pow(two, 10UL).contains(Rat(1024)));
    CHECK((pow(two, RealBall::from(frac(1, 2), prec)) - s).contains_zero());
}

TEST_CASE("certified comparisons") {
    RealBall a = RealBall::from(frac(1, 3), 128);
    RealBall b = RealBall::from(frac(1, 2), 128);
    CHECK(ball_strict_less(a, b) == Certainty::True);
    CHECK(ball_strict_less(b, a) == Certainty::False);
    RealBall wide = RealBall::from_mid_rad(0.4, 0.2, 128);
    CHECK(ball_strict_less(a, wide) == Certainty::Undecided);
    // 1/3 is not representable, so a <= a cannot be certified; 2 <= 2 can.
    CHECK(ball_less_equal(a, a) == Certainty::Undecided);
    RealBall two = RealBall::from(2L, 128);
    CHECK(ball_less_equal(two, two) == Certainty::True);
    CHECK(ball_strict_less(two, two) == Certainty::False);
    CHECK(std::string(to_string(Certainty::Undecided)) == "undecided");
}

TEST_CASE("certified floor") {
    CHECK(RealBall::from(frac(7, 2), 128).certified_floor() == Int(3));
    CHECK(RealBall::from(frac(-7, 2), 128).certified_floor() == Int(-4));
    CHECK_FALSE(RealBall::from_mid_rad(3.0, 0.25, 128).certified_floor().has_value());
    CHECK(RealBall::from(3L, 128).certified_floor() == Int(3));
}

TEST_CASE("hex round trip is exact") {
    RealBall x = sqrt(RealBall::from(3L, 256));
    RealBall y = RealBall::from_hex(x.mid_hex(), x.rad_hex(), x.precision());
    CHECK(x == y);
}

TEST_CASE("polynomial evaluation and relative tightness") {
    RatPoly f{Rat(-2), Rat(0), Rat(1)};
    RealBall s = sqrt(RealBall::from(2L, 256));
    CHECK(evaluate(f, s).contains_zero());
    CHECK(relatively_tight(s, 200));
    CHECK_FALSE(relatively_tight(evaluate(f, s), 10));
}

TEST_CASE("complex balls") {
    ComplexBall z = ComplexBall::from(GaussRat(Rat(3), Rat(4)), 128);
    CHECK(z.norm().contains(Rat(25)));
    CHECK(z.abs().contains(Rat(5)));
    CHECK((z * z.conj()).im().contains_zero());
    ComplexBall q = z / z;
    CHECK(q.re().contains(Rat(1)));
}

TEST_CASE("precision policy") {
    PrecisionPolicy p{128, 1024};
    int attempts = 0;
    auto r = escalate(p, "test", [&](unsigned prec) -> std::optional<unsigned> {
        ++attempts;
        return prec >= 512 ? std::optional<unsigned>(prec) : std::nullopt;
    });
    CHECK(r.value == 512);
    CHECK(r.precision == 512);
    CHECK(attempts == 3);
    CHECK_THROWS_AS(escalate(p, "never", [](unsigned) -> std::optional<int> { return std::nullopt; }),
                    PrecisionCapExceeded);
    CHECK_THROWS_AS((PrecisionPolicy{32, 64}.validate()), DomainError);
    CHECK_THROWS_AS((PrecisionPolicy{256, 128}.validate()), DomainError);
}

TEST_CASE("QT_PRECISION_CAP overrides the cap") {
    setenv("QT_PRECISION_CAP", "4096", 1);
    CHECK(PrecisionPolicy::from_env().cap == 4096);
    setenv("QT_PRECISION_CAP", "lots", 1);
    CHECK_THROWS_AS(PrecisionPolicy::from_env(), DomainError);
    unsetenv("QT_PRECISION_CAP");
    CHECK(PrecisionPolicy::from_env().cap == 16384);
}

TEST_CASE("property: arithmetic encloses exact rational results") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int trial = 0; trial < 300; ++trial) {
        Rat a = frac(num(rng), den(rng));
        Rat b = frac(num(rng), den(rng));
        if (b == 0) {
            continue;
        }
        RealBall x = RealBall::from(a, 64) * RealBall::from(frac(1, 1), 64);
        RealBall y = RealBall::from(b, 64);
        CHECK((x + y).contains(a + b));
        CHECK((x - y).contains(a - b));
        CHECK((x * y).contains(a * b));
        CHECK((x / y).contains(a / b));
    }
}

} // TEST_SUITE
