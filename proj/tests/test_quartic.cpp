#include "qt/errors.hpp"
#include "qt/quartic.hpp"

#include "doctest.h"

using namespace qt;
using namespace qt::quartic;

TEST_SUITE("quartic") {

TEST_CASE("special and worked cases") {
    QuarticResult r2 = solve_quartic(Int(2));
    CHECK(r2.status == Status::SpecialD2);
    CHECK(r2.solutions == std::vector<QuarticSolution>{{Int(1), Int(1)}, {Int(239), Int(13)}});
    QuarticResult r1 = solve_quartic(Int(1));
    CHECK(r1.status == Status::SpecialD1);
    CHECK(r1.solutions == std::vector<QuarticSolution>{{Int(0), Int(1)}});
    CHECK(solve_quartic(Int(5)).solutions == std::vector<QuarticSolution>{{Int(2), Int(1)}});
    QuarticResult r13 = solve_quartic(Int(13));
    CHECK(r13.status == Status::NoSolution);
    CHECK(r13.pell_v == Int(5));
    CHECK(solve_quartic(Int(17)).solutions == std::vector<QuarticSolution>{{Int(4), Int(1)}});
    CHECK(solve_quartic(Int(3)).status == Status::NoPell);
    CHECK(solve_quartic(Int(9)).status == Status::NoPell);
    CHECK_THROWS_AS(solve_quartic(Int(0)), DomainError);
}

TEST_CASE("oracle agreement for d <= 5000") {
    for (long d = 1; d <= 5000; ++d) {
        QuarticResult r = solve_quartic(Int(d));
        CHECK_MESSAGE(r.solutions == brute_force(Int(d), 200), "d=" << d);
        if (d >= 3) {
            CHECK(r.solutions.size() <= 1);
        }
        if (r.status == Status::Unique) {
            REQUIRE(r.pell_u);
            CHECK(r.solutions[0].x == *r.pell_u);
            CHECK(r.solutions[0].y * r.solutions[0].y == *r.pell_v);
        }
    }
}

TEST_CASE("identity chain") {
    ChainReport c = identity_chain_check(Int(1), 3);
    CHECK(c.passed());
    CHECK(c.square_indices == std::vector<long>{1, 7});
    CHECK(c.square_roots == std::vector<Int>{Int(1), Int(13)});
    ChainReport c2 = identity_chain_check(Int(2), 7);
    CHECK(c2.square_indices == std::vector<long>{1});
    for (long x0 = 1; x0 <= 50; ++x0) {
        ChainReport r = identity_chain_check(Int(x0), 20);
        CHECK(r.passed());
        CHECK(r.square_indices == (x0 == 1 ? std::vector<long>{1, 7} : std::vector<long>{1}));
    }
    CHECK_THROWS_AS(identity_chain_check(Int(0), 3), DomainError);
}

TEST_CASE("reduction to the Thue family") {
    ThueReduction r = reduce_to_thue(Int(1));
    CHECK(r.t == 4);
    CHECK(r.d == 2);
    CHECK(r.y_values == std::vector<Int>{Int(1), Int(13)});
    for (const auto& w : r.witnesses) {
        CHECK(w.m >= 0);
        CHECK(w.y_squared_is_v);
        if (w.y == 13) {
            CHECK(w.m == 3);
            CHECK_FALSE(w.even_branch);
        }
    }
    for (long x0 : {2L, 3L}) {
        ThueReduction rr = reduce_to_thue(Int(x0));
        CHECK(rr.t == 4 * x0);
        CHECK(rr.y_values == std::vector<Int>{Int(1)});
    }
    CHECK_THROWS_AS(reduce_to_thue(Int(0)), DomainError);
}

} // TEST_SUITE
