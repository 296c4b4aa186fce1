// Command-line front end; talks to the library through the C API only.
#include "qt/qt.h"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct ContextDeleter {
    void operator()(qt_context* c) const { qt_context_free(c); }
};
struct ResultDeleter {
    void operator()(qt_result* r) const { qt_result_free(r); }
};
using Context = std::unique_ptr<qt_context, ContextDeleter>;
using Result = std::unique_ptr<qt_result, ResultDeleter>;

struct Options {
    bool json = false;
    std::string out;
    unsigned precision_start = 128;
    unsigned precision_cap = 0; // 0: keep the default or $QT_PRECISION_CAP
    std::string bound = "10000";
};

int finish(qt_context* ctx, qt_status st, qt_result* raw, const Options& opt) {
    Result res(raw);
    if (!res) {
        std::cerr << "error: " << qt_status_string(st) << ": " << qt_context_last_error(ctx) << '\n';
        return static_cast<int>(st);
    }
    std::cout << (opt.json ? qt_result_json(res.get()) : qt_result_text(res.get()));
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!(f << qt_result_json(res.get()))) {
            std::cerr << "error: cannot write " << opt.out << '\n';
            return QT_INVALID_INPUT;
        }
    }
    return static_cast<int>(st);
}

// "a..b" into its two halves.
bool split_range(const std::string& s, std::string& lo, std::string& hi) {
    auto pos = s.find("..");
    if (pos == std::string::npos || pos == 0 || pos + 2 == s.size()) {
        return false;
    }
    lo = s.substr(0, pos);
    hi = s.substr(pos + 2);
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver and verifier for X^4 - tX^3Y - 6X^2Y^2 + tXY^3 + Y^4 = +-1 and X^2 + 1 = dY^4"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "Print JSON instead of text");
    app.add_option("--out", opt.out, "Also write the JSON result to this file");
    app.add_option("--precision-start", opt.precision_start, "Initial ball precision in bits")
        ->check(CLI::Range(64U, 1U << 24));
    app.add_option("--precision-cap", opt.precision_cap, "Largest ball precision in bits")
        ->check(CLI::Range(64U, 1U << 24));

    std::string d, t, suite, range;
    long r = 0;
    int j = 0;
    int mj = -1;

    auto* pell = app.add_subcommand("pell", "Fundamental solution of u^2 + 1 = d v^2");
    pell->add_option("d", d, "Non-square d >= 2")->required();

    auto* thue = app.add_subcommand("thue", "All solutions of P_t(x, y) = +-1");
    thue->add_option("t", t, "t >= 1")->required();
    thue->add_option("--bound", opt.bound, "Search bound on |y| for 1 <= t <= 127");

    auto* quartic = app.add_subcommand("quartic", "Positive solutions of x^2 + 1 = d y^4");
    quartic->add_option("d", d, "d >= 1");
    quartic->add_option("--range", range, "Solve every d in a..b");

    auto* approx = app.add_subcommand("approx", "Integer approximants P_r, Q_r and the defect bound");
    approx->add_option("t", t, "t >= 5")->required();
    approx->add_option("r", r, "r >= 0")->required();
    approx->add_option("--j", j, "0 or 1")->check(CLI::Range(0, 1));

    auto* measure = app.add_subcommand("measure", "Irrationality measure certificate for the roots");
    measure->add_option("t", t, "t >= 128")->required();
    measure->add_option("--j", mj, "Root index 0..3 (default: all)")->check(CLI::Range(0, 3));

    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("suite", suite, "pade-bounds | lucas-identities | measure-scan | oracle-agreement")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return QT_INVALID_INPUT;
    }

    Context ctx(qt_context_new());
    if (!ctx) {
        std::cerr << "error: invalid QT_PRECISION_CAP\n";
        return QT_INVALID_INPUT;
    }
    if (opt.precision_cap != 0 || opt.precision_start != 128) {
        // Keep the environment cap unless one was given explicitly.
        unsigned cap = opt.precision_cap;
        if (cap == 0) {
            const char* env = std::getenv("QT_PRECISION_CAP");
            cap = (env != nullptr && *env != '\0') ? static_cast<unsigned>(std::stoul(env)) : 16384;
        }
        if (qt_context_set_precision(ctx.get(), opt.precision_start, cap) != QT_OK) {
            std::cerr << "error: " << qt_context_last_error(ctx.get()) << '\n';
            return QT_INVALID_INPUT;
        }
    }
    if (qt_context_set_search_bound(ctx.get(), opt.bound.c_str()) != QT_OK) {
        std::cerr << "error: " << qt_context_last_error(ctx.get()) << '\n';
        return QT_INVALID_INPUT;
    }

    qt_result* res = nullptr;
    qt_status st = QT_INVALID_INPUT;
    if (*pell) {
        st = qt_pell(ctx.get(), d.c_str(), &res);
    } else if (*thue) {
        st = qt_thue(ctx.get(), t.c_str(), &res);
    } else if (*quartic) {
        if (range.empty() == d.empty()) {
            std::cerr << "error: give either d or --range a..b\n" << quartic->help();
            return QT_INVALID_INPUT;
        }
        if (!range.empty()) {
            std::string lo, hi;
            if (!split_range(range, lo, hi)) {
                std::cerr << "error: range must look like a..b\n";
                return QT_INVALID_INPUT;
            }
            st = qt_quartic_range(ctx.get(), lo.c_str(), hi.c_str(), &res);
        } else {
            st = qt_quartic(ctx.get(), d.c_str(), &res);
        }
    } else if (*approx) {
        st = qt_approx(ctx.get(), t.c_str(), r, j, &res);
    } else if (*measure) {
        st = qt_measure(ctx.get(), t.c_str(), mj, &res);
    } else if (*verify) {
        st = qt_verify(ctx.get(), suite.c_str(), &res);
    }
    return finish(ctx.get(), st, res, opt);
}
