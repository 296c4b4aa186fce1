#include "qt/qt.h"

#include "qt/errors.hpp"
#include "qt/serialize.hpp"

#include <new>
#include <string>

struct qt_context {
    qt::PrecisionPolicy policy;
    qt::Int bound{qt::thue::kDefaultSearchBound};
    std::string last_error;
};

struct qt_result {
    std::string json;
    std::string text;
    bool certified = false;
};

namespace {

using qt::io::json;

qt_result* make_result(const json& j, std::string text, bool certified) {
    return new qt_result{qt::io::dump(j), std::move(text), certified};
}

qt::Int parse(const char* s, const char* what) {
    if (s == nullptr) {
        throw qt::DomainError(std::string(what) + " is missing");
    }
    return qt::parse_int(s);
}

qt::Int parse_at_least(const char* s, const char* what, long lo) {
    qt::Int v = parse(s, what);
    if (v < lo) {
        throw qt::DomainError(std::string(what) + " must be >= " + std::to_string(lo) + ", got " + v.get_str());
    }
    return v;
}

// Runs body, mapping exceptions to status codes and recording messages.
template <class F>
qt_status guard(qt_context* ctx, qt_result** out, F&& body) {
    if (out != nullptr) {
        *out = nullptr;
    }
    if (ctx == nullptr || out == nullptr) {
        return QT_INVALID_INPUT;
    }
    ctx->last_error.clear();
    try {
        *out = body();
        return (*out)->certified ? QT_OK : QT_UNCERTIFIED;
    } catch (const qt::DomainError& e) {
        ctx->last_error = e.what();
        return QT_INVALID_INPUT;
    } catch (const qt::PrecisionCapExceeded& e) {
        ctx->last_error = e.what();
        return QT_PRECISION_CAP;
    } catch (const qt::UncertifiedError& e) {
        ctx->last_error = e.what();
        return QT_UNCERTIFIED;
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
        return QT_INTERNAL;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return QT_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* qt_version(void) { return "1.0.0"; }

const char* qt_status_string(qt_status status) {
    switch (status) {
    case QT_OK: return "ok";
    case QT_UNCERTIFIED: return "uncertified";
    case QT_INVALID_INPUT: return "invalid input";
    case QT_PRECISION_CAP: return "precision cap exceeded";
    case QT_INTERNAL: return "internal consistency error";
    }
    return "unknown status";
}

qt_context* qt_context_new(void) {
    try {
        return new qt_context{qt::PrecisionPolicy::from_env(), qt::Int(qt::thue::kDefaultSearchBound), {}};
    } catch (...) {
        return nullptr;
    }
}

void qt_context_free(qt_context* ctx) { delete ctx; }

qt_status qt_context_set_precision(qt_context* ctx, unsigned start_bits, unsigned cap_bits) {
    if (ctx == nullptr) {
        return QT_INVALID_INPUT;
    }
    qt::PrecisionPolicy p{start_bits, cap_bits};
    try {
        p.validate();
    } catch (const qt::DomainError& e) {
        ctx->last_error = e.what();
        return QT_INVALID_INPUT;
    }
    ctx->policy = p;
    ctx->last_error.clear();
    return QT_OK;
}

qt_status qt_context_set_search_bound(qt_context* ctx, const char* bound) {
    if (ctx == nullptr) {
        return QT_INVALID_INPUT;
    }
    try {
        ctx->bound = parse_at_least(bound, "search bound", 1);
    } catch (const qt::DomainError& e) {
        ctx->last_error = e.what();
        return QT_INVALID_INPUT;
    }
    ctx->last_error.clear();
    return QT_OK;
}

const char* qt_context_last_error(const qt_context* ctx) { return ctx == nullptr ? "" : ctx->last_error.c_str(); }

qt_status qt_pell(qt_context* ctx, const char* d, qt_result** out) {
    return guard(ctx, out, [&] {
        auto r = qt::pell::pell_report(parse_at_least(d, "d", 2));
        return make_result(qt::io::to_json(r), qt::io::to_text(r), true);
    });
}

qt_status qt_thue(qt_context* ctx, const char* t, qt_result** out) {
    return guard(ctx, out, [&] {
        auto s = qt::thue::solve(parse_at_least(t, "t", 1), ctx->bound, ctx->policy);
        return make_result(qt::io::to_json(s), qt::io::to_text(s), s.certified);
    });
}

qt_status qt_quartic(qt_context* ctx, const char* d, qt_result** out) {
    return guard(ctx, out, [&] {
        auto r = qt::quartic::solve_quartic(parse_at_least(d, "d", 1));
        return make_result(qt::io::to_json(r), qt::io::to_text(r), true);
    });
}

qt_status qt_quartic_range(qt_context* ctx, const char* lo, const char* hi, qt_result** out) {
    return guard(ctx, out, [&] {
        const qt::Int a = parse_at_least(lo, "range start", 1);
        const qt::Int b = parse(hi, "range end");
        if (b < a) {
            throw qt::DomainError("empty range " + a.get_str() + ".." + b.get_str());
        }
        if (b - a >= 1000000) {
            throw qt::DomainError("range spans more than 10^6 values");
        }
        json results = json::array();
        std::string text;
        for (qt::Int d = a; d <= b; ++d) {
            auto r = qt::quartic::solve_quartic(d);
            results.push_back(qt::io::to_json(r));
            if (!r.solutions.empty()) {
                text += "d = " + d.get_str() + " (" + qt::quartic::to_string(r.status) + "):";
                for (const auto& s : r.solutions) {
                    text += " (" + s.x.get_str() + ", " + s.y.get_str() + ")";
                }
                text += "\n";
            }
        }
        text += "solved d = " + a.get_str() + ".." + b.get_str() + "\n";
        json j{{"range", json::array({qt::io::to_json(a), qt::io::to_json(b)})}, {"results", results}};
        return make_result(j, text, true);
    });
}

qt_status qt_approx(qt_context* ctx, const char* t, long r, int j, qt_result** out) {
    return guard(ctx, out, [&] {
        if (r < 0) {
            throw qt::DomainError("r must be >= 0");
        }
        if (j != 0 && j != 1) {
            throw qt::DomainError("j must be 0 or 1");
        }
        auto rep = qt::pade::approx_report(parse_at_least(t, "t", 5), r, j, ctx->policy);
        return make_result(qt::io::to_json(rep), qt::io::to_text(rep), rep.certified);
    });
}

qt_status qt_measure(qt_context* ctx, const char* t, int j, qt_result** out) {
    return guard(ctx, out, [&] {
        if (j < -1 || j > 3) {
            throw qt::DomainError("j must be in 0..3");
        }
        const qt::Int tv = parse(t, "t");
        json certs = json::array();
        std::string text;
        for (int k = (j < 0 ? 0 : j); k <= (j < 0 ? 3 : j); ++k) {
            auto c = qt::measure::root_certificate(tv, k, ctx->policy);
            certs.push_back(qt::io::to_json(c));
            text += qt::io::to_text(c);
        }
        return make_result(json{{"t", qt::io::to_json(tv)}, {"certificates", certs}}, text, true);
    });
}

qt_status qt_verify(qt_context* ctx, const char* suite, qt_result** out) {
    return guard(ctx, out, [&] {
        if (suite == nullptr) {
            throw qt::DomainError("suite name is missing");
        }
        auto rep = qt::verify::run_suite(suite, ctx->policy);
        return make_result(qt::io::to_json(rep), qt::io::to_text(rep), rep.passed());
    });
}

const char* qt_result_json(const qt_result* res) { return res == nullptr ? "" : res->json.c_str(); }

const char* qt_result_text(const qt_result* res) { return res == nullptr ? "" : res->text.c_str(); }

int qt_result_certified(const qt_result* res) { return res != nullptr && res->certified ? 1 : 0; }

void qt_result_free(qt_result* res) { delete res; }

} // extern "C"
