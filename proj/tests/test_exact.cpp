#include "qt/errors.hpp"
#include "qt/exact.hpp"

#include "doctest.h"

#include <random>

using namespace qt;

TEST_SUITE("exact") {

TEST_CASE("rationals are canonical") {
    CHECK(frac(6, 4) == frac(3, 2));
    CHECK(frac(6, 4).get_den() == 2);
    CHECK(make_rat(Int(-10), Int(-4)) == frac(5, 2));
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), DomainError);
    CHECK(is_integer(frac(8, 4)));
    CHECK_FALSE(is_integer(frac(7, 4)));
}

TEST_CASE("floor division rounds toward minus infinity") {
    CHECK(floor_div(Int(7), Int(2)) == 3);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(floor_div(Int(7), Int(-2)) == -4);
    CHECK(floor_div(Int(128), Int(5)) == 25);
}

TEST_CASE("integer parsing") {
    CHECK(parse_int("123456789012345678901234567890") == Int("123456789012345678901234567890"));
    CHECK(parse_int("-42") == -42);
    CHECK(parse_int("+7") == 7);
    CHECK_THROWS_AS(parse_int(""), DomainError);
    CHECK_THROWS_AS(parse_int("12a"), DomainError);
    CHECK_THROWS_AS(parse_int("-"), DomainError);
    CHECK_THROWS_AS(parse_int("1.5"), DomainError);
}

TEST_CASE("jacobi symbol agrees with Euler's criterion for primes") {
    for (long p : {3L, 5L, 7L, 11L, 13L, 101L, 997L}) {
        for (long a = 0; a < p; ++a) {
            Int e;
            mpz_powm_ui(e.get_mpz_t(), Int(a).get_mpz_t(), static_cast<unsigned long>((p - 1) / 2),
                        Int(p).get_mpz_t());
            int euler = (e == 0) ? 0 : (e == 1 ? 1 : -1);
            CHECK(jacobi(Int(a), Int(p)) == euler);
        }
    }
    // Multiplicative in the modulus.
    CHECK(jacobi(Int(2), Int(15)) == jacobi(Int(2), Int(3)) * jacobi(Int(2), Int(5)));
    CHECK(jacobi(Int(-1), Int(21)) == 1);
    CHECK_THROWS_AS(jacobi(Int(3), Int(8)), DomainError);
    CHECK_THROWS_AS(jacobi(Int(3), Int(-3)), DomainError);
}

TEST_CASE("perfect squares") {
    CHECK(is_perfect_square(Int(169)) == Int(13));
    CHECK(is_perfect_square(Int(0)) == Int(0));
    CHECK_FALSE(is_perfect_square(Int(170)));
    CHECK_FALSE(is_perfect_square(Int(-4)));
}

TEST_CASE("gaussian rationals") {
    const GaussRat i = GaussRat::i_unit();
    CHECK(i * i == GaussRat(Rat(-1)));
    CHECK(pow(GaussRat(Rat(1), Rat(1)), 4) == GaussRat(Rat(-4)));
    for (long k = -8; k <= 8; ++k) {
        GaussRat direct = k >= 0 ? pow(i, static_cast<unsigned>(k)) : GaussRat(Rat(1)) / pow(i, static_cast<unsigned>(-k));
        CHECK(i_pow(k) == direct);
    }
    GaussRat z(frac(3, 2), frac(-1, 3));
    CHECK(z / z == GaussRat(Rat(1)));
    CHECK((z * z.conj()).is_real());
    CHECK((z * z.conj()).re == z.norm());
    CHECK_THROWS_AS(z / GaussRat(), DomainError);
}

TEST_CASE("polynomials") {
    // P_3(X, 1) = (X^2 + X - 1)(X^2 - 4X - 1)
    RatPoly f{Rat(1), Rat(3), Rat(-6), Rat(-3), Rat(1)};
    RatPoly g{Rat(-1), Rat(1), Rat(1)};
    RatPoly h{Rat(-1), Rat(-4), Rat(1)};
    CHECK(g * h == f);
    CHECK(f.degree() == 4);
    CHECK(f.derivative() == RatPoly{Rat(3), Rat(-12), Rat(-9), Rat(4)});
    CHECK(f(Rat(2)) == 16 - 24 - 24 + 6 + 1);
    CHECK((f - f).is_zero());
    CHECK((f - f).degree() == -1);
    // 1 + 3i + 6 + 3i + 1
    CHECK(f(GaussRat::i_unit()) == GaussRat(Rat(8), Rat(6)));
}

TEST_CASE("integer roots") {
    // x (x^3 - 7x^2 - 6x + 7) from P_7(x, 1) = 1.
    RatPoly p{Rat(0), Rat(7), Rat(-6), Rat(-7), Rat(1)};
    CHECK(integer_roots(p) == std::vector<Int>{Int(0)});
    RatPoly q{Rat(-6), Rat(11), Rat(-6), Rat(1)}; // (x-1)(x-2)(x-3)
    CHECK(integer_roots(q) == std::vector<Int>{Int(1), Int(2), Int(3)});
    CHECK_THROWS_AS(integer_roots(RatPoly{frac(1, 2), Rat(1)}), DomainError);
    CHECK_THROWS_AS(integer_roots(RatPoly{}), DomainError);
    CHECK_THROWS_AS(integer_roots(RatPoly{Rat(Int("1000000000000000000")), Rat(1), Rat(1)}), DomainError);
}

TEST_CASE("property: integer roots of random products of linear factors") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> dist(-30, 30);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> roots;
        RatPoly p{Rat(1)};
        for (int k = 0; k < 3; ++k) {
            long r = dist(rng);
            roots.emplace_back(r);
            p *= RatPoly{Rat(-r), Rat(1)};
        }
        p *= RatPoly{Rat(1), Rat(0), Rat(1)}; // x^2 + 1 adds no real root
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        CHECK(integer_roots(p) == roots);
    }
}

} // TEST_SUITE
