#include "qt/errors.hpp"
#include "qt/lucas.hpp"

#include "doctest.h"

#include <numeric>

using namespace qt;
using namespace qt::lucas;

TEST_SUITE("lucas") {

TEST_CASE("x0 = 1 sequence") {
    LucasTable t = lucas_table({Int(2), Int(1)}, 7);
    const std::vector<Int> v{Int(0), Int(1), Int(2), Int(5), Int(12), Int(29), Int(70), Int(169)};
    CHECK(t.V == v);
    CHECK(t.U[0] == 2);
    CHECK(t.U[1] == 2);
    CHECK(t.U[2] == 6);
}

TEST_CASE("direct evaluation matches the table, including negative indices") {
    const LucasParams p{Int(6), Int(1)};
    LucasTable t = lucas_table(p, 30);
    for (long m = 0; m <= 30; ++m) {
        LucasPair q = lucas_uv(p, m);
        CHECK(q.U == t.U[static_cast<std::size_t>(m)]);
        CHECK(q.V == t.V[static_cast<std::size_t>(m)]);
        LucasPair n = lucas_uv(p, -m);
        CHECK(n.V == (m % 2 == 0 ? -q.V : q.V));
        CHECK(n.U == (m % 2 == 0 ? q.U : -q.U));
    }
    CHECK_THROWS_AS(lucas_uv({Int(3), Int(2)}, -1), DomainError);
}

TEST_CASE("strong divisibility") {
    for (long a : {2L, 3L, 4L, 10L}) {
        for (long m = 1; m <= 25; ++m) {
            for (long n = 1; n <= 25; ++n) {
                CHECK(gcd_index_identity({Int(a), Int(1)}, m, n));
            }
        }
    }
}

TEST_CASE("jacobi symbols of V terms") {
    for (long a = 2; a <= 40; a += 2) {
        for (long m = 1; m <= 39; m += 2) {
            for (long n = 1; n <= 39; n += 2) {
                if (std::gcd(m, n) == 1) {
                    CHECK(jacobi_vv({Int(a), Int(1)}, m, n) == 1);
                }
            }
        }
    }
    CHECK_THROWS_AS(jacobi_vv({Int(3), Int(1)}, 1, 3), DomainError);
    CHECK_THROWS_AS(jacobi_vv({Int(2), Int(1)}, 2, 3), DomainError);
    CHECK_THROWS_AS(jacobi_vv({Int(2), Int(1)}, 3, 9), DomainError);
}

TEST_CASE("identity suite on a grid") {
    for (long a = 2; a <= 20; a += 2) {
        for (long m = 1; m <= 10; ++m) {
            for (long n = 0; n <= 10; ++n) {
                for (long k = 1; k <= 2; ++k) {
                    IdentityReport r = identity_suite({Int(a), Int(1)}, m, n, k);
                    CHECK_MESSAGE(r.all_passed(), "a=" << a << " m=" << m << " n=" << n << " k=" << k);
                }
            }
        }
    }
    // Odd a: the even-only congruences are reported as not applicable.
    IdentityReport odd = identity_suite({Int(3), Int(1)}, 4, 3, 1);
    CHECK(odd.all_passed());
    CHECK(std::any_of(odd.checks.begin(), odd.checks.end(), [](const auto& c) { return !c.applicable; }));
    CHECK_THROWS_AS(identity_suite({Int(2), Int(2)}, 1, 1, 1), DomainError);
}

} // TEST_SUITE
