#include "qt/qt.h"

#include "doctest.h"

#include <cstdlib>
#include <string>

namespace {

struct Ctx {
    qt_context* c = qt_context_new();
    ~Ctx() { qt_context_free(c); }
};

std::string run_json(qt_status expect, qt_status (*fn)(qt_context*, const char*, qt_result**), const char* arg) {
    Ctx ctx;
    qt_result* res = nullptr;
    qt_status st = fn(ctx.c, arg, &res);
    CHECK(st == expect);
    std::string out = res != nullptr ? qt_result_json(res) : std::string();
    qt_result_free(res);
    return out;
}

} // namespace

TEST_CASE("status strings and version") {
    CHECK(std::string(qt_status_string(QT_OK)) == "ok");
    CHECK(std::string(qt_status_string(QT_PRECISION_CAP)) == "precision cap exceeded");
    CHECK(std::string(qt_version()) == "1.0.0");
}

TEST_CASE("solvers through the C interface") {
    std::string j = run_json(QT_OK, qt_quartic, "2");
    CHECK(j.find("\"special-d2\"") != std::string::npos);
    CHECK(j.find("\"239\"") != std::string::npos);
    j = run_json(QT_OK, qt_thue, "128");
    CHECK(j.find("\"certified\": true") != std::string::npos);
    j = run_json(QT_OK, qt_pell, "13");
    CHECK(j.find("\"u\": \"18\"") != std::string::npos);
}

TEST_CASE("bounded results are uncertified") {
    Ctx ctx;
    REQUIRE(qt_context_set_search_bound(ctx.c, "100") == QT_OK);
    qt_result* res = nullptr;
    CHECK(qt_thue(ctx.c, "7", &res) == QT_UNCERTIFIED);
    REQUIRE(res != nullptr);
    CHECK(qt_result_certified(res) == 0);
    CHECK(std::string(qt_result_text(res)).find("bounded-search") != std::string::npos);
    qt_result_free(res);
}

TEST_CASE("invalid input") {
    Ctx ctx;
    qt_result* res = nullptr;
    CHECK(qt_thue(ctx.c, "x1", &res) == QT_INVALID_INPUT);
    CHECK(res == nullptr);
    CHECK(std::string(qt_context_last_error(ctx.c)).find("not an integer") != std::string::npos);
    CHECK(qt_pell(ctx.c, "16", &res) == QT_INVALID_INPUT);
    CHECK(qt_measure(ctx.c, "100", 0, &res) == QT_INVALID_INPUT);
    CHECK(qt_measure(ctx.c, "128", 7, &res) == QT_INVALID_INPUT);
    CHECK(qt_approx(ctx.c, "128", 1, 2, &res) == QT_INVALID_INPUT);
    CHECK(qt_quartic_range(ctx.c, "10", "5", &res) == QT_INVALID_INPUT);
    CHECK(qt_verify(ctx.c, "bogus", &res) == QT_INVALID_INPUT);
    CHECK(qt_verify(ctx.c, nullptr, &res) == QT_INVALID_INPUT);
    CHECK(qt_context_set_precision(ctx.c, 32, 64) == QT_INVALID_INPUT);
    CHECK(qt_context_set_search_bound(ctx.c, "0") == QT_INVALID_INPUT);
    CHECK(qt_thue(nullptr, "5", &res) == QT_INVALID_INPUT);
}

TEST_CASE("precision cap") {
    Ctx ctx;
    REQUIRE(qt_context_set_precision(ctx.c, 128, 128) == QT_OK);
    qt_result* res = nullptr;
    CHECK(qt_approx(ctx.c, "128", 30, 0, &res) == QT_PRECISION_CAP);
    CHECK(res == nullptr);
    REQUIRE(qt_context_set_precision(ctx.c, 128, 4096) == QT_OK);
    CHECK(qt_approx(ctx.c, "128", 30, 0, &res) == QT_OK);
    qt_result_free(res);
}

TEST_CASE("environment cap") {
    setenv("QT_PRECISION_CAP", "64", 1);
    CHECK(qt_context_new() == nullptr);
    unsetenv("QT_PRECISION_CAP");
}

TEST_CASE("measure for all roots and a quartic range") {
    Ctx ctx;
    qt_result* res = nullptr;
    REQUIRE(qt_measure(ctx.c, "128", -1, &res) == QT_OK);
    std::string j = qt_result_json(res);
    CHECK(j.find("\"q_min\": \"21\"") != std::string::npos);
    qt_result_free(res);
    REQUIRE(qt_quartic_range(ctx.c, "1", "20", &res) == QT_OK);
    CHECK(std::string(qt_result_text(res)).find("d = 17 (unique): (4, 1)") != std::string::npos);
    qt_result_free(res);
}
