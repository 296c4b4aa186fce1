#include "qt/serialize.hpp"

#include "qt/errors.hpp"

#include <sstream>

namespace qt::io {

namespace {

// Wraps nlohmann parse/type errors as invalid input.
template <class F>
auto checked(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

Rat rat_from_json(const json& j) {
    Rat q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) {
        throw DomainError("not a rational: " + j.dump());
    }
    q.canonicalize();
    return q;
}

json pair(const Int& x, const Int& y) { return json::array({to_json(x), to_json(y)}); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void text_evidence(std::ostringstream& os, const Evidence& ev) {
    for (const auto& e : ev) {
        os << "  [" << (e.certified ? "ok" : "--") << "] " << e.stage << ": " << e.claim << '\n';
        for (const auto& [k, v] : e.data) {
            os << "        " << k << " = " << v << '\n';
        }
    }
}

} // namespace

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const Int& n) { return n.get_str(); }

Int int_from_json(const json& j) { return parse_int(j.get<std::string>()); }

json to_json(const RealBall& b) {
    return {{"mid", b.mid_hex()}, {"rad", b.rad_hex()}, {"precision", b.precision()}, {"approx", b.to_string(20)}};
}

RealBall ball_from_json(const json& j) {
    return RealBall::from_hex(j.at("mid").get<std::string>(), j.at("rad").get<std::string>(),
                              j.at("precision").get<unsigned>());
}

json to_json(const Evidence& ev) {
    json arr = json::array();
    for (const auto& e : ev) {
        json data = json::object();
        for (const auto& [k, v] : e.data) {
            data[k] = v;
        }
        arr.push_back({{"stage", e.stage}, {"claim", e.claim}, {"certified", e.certified}, {"data", data}});
    }
    return arr;
}

Evidence evidence_from_json(const json& j) {
    Evidence ev;
    for (const auto& e : j) {
        EvidenceEntry entry{e.at("stage").get<std::string>(), e.at("claim").get<std::string>(),
                            e.at("certified").get<bool>(), {}};
        for (const auto& [k, v] : e.at("data").items()) {
            entry.data[k] = v.get<std::string>();
        }
        ev.push_back(std::move(entry));
    }
    return ev;
}

// ------------------------------------------------------------------ pell

json to_json(const pell::PellReport& r) {
    json period = json::array();
    for (const auto& a : r.period) {
        period.push_back(to_json(a));
    }
    json out{{"d", to_json(r.d)},
             {"a0", to_json(r.a0)},
             {"period", period},
             {"period_length", r.period.size()},
             {"solvable", r.fundamental.has_value()}};
    if (r.fundamental) {
        out["u"] = to_json(r.fundamental->u);
        out["v"] = to_json(r.fundamental->v);
    }
    return out;
}

pell::PellReport pell_from_json(const json& j) {
    return checked("pell", [&] {
        pell::PellReport r;
        r.d = int_from_json(j.at("d"));
        r.a0 = int_from_json(j.at("a0"));
        for (const auto& a : j.at("period")) {
            r.period.push_back(int_from_json(a));
        }
        if (j.at("solvable").get<bool>()) {
            r.fundamental = pell::PellFundamental{r.d, int_from_json(j.at("u")), int_from_json(j.at("v"))};
        }
        return r;
    });
}

std::string to_text(const pell::PellReport& r) {
    std::ostringstream os;
    os << "d = " << r.d << '\n' << "sqrt(d) = [" << r.a0 << "; ";
    for (std::size_t i = 0; i < r.period.size(); ++i) {
        os << (i ? "," : "") << r.period[i];
    }
    os << "], period " << r.period.size() << '\n';
    if (r.fundamental) {
        os << "u^2 + 1 = d v^2: u = " << r.fundamental->u << ", v = " << r.fundamental->v << '\n';
    } else {
        os << "u^2 + 1 = d v^2: no solution (even period)\n";
    }
    return os.str();
}

// ------------------------------------------------------------------ thue

json to_json(const thue::ThueSolutionSet& s) {
    json sols = json::array();
    json values = json::array();
    for (const auto& p : s.solutions) {
        sols.push_back(pair(p.x, p.y));
        values.push_back(p.value);
    }
    return {{"t", to_json(s.t)},
            {"solutions", sols},
            {"values", values},
            {"method", thue::to_string(s.method)},
            {"certified", s.certified},
            {"search_bound", to_json(s.search_bound)},
            {"evidence", to_json(s.evidence)}};
}

thue::ThueSolutionSet thue_from_json(const json& j) {
    return checked("thue", [&] {
        thue::ThueSolutionSet s;
        s.t = int_from_json(j.at("t"));
        const json& sols = j.at("solutions");
        const json& values = j.at("values");
        if (sols.size() != values.size()) {
            throw DomainError("solutions and values differ in length");
        }
        for (std::size_t i = 0; i < sols.size(); ++i) {
            s.solutions.push_back(
                {int_from_json(sols[i].at(0)), int_from_json(sols[i].at(1)), values[i].get<int>()});
        }
        const std::string m = j.at("method").get<std::string>();
        bool known = false;
        for (auto cand : {thue::Method::Certified, thue::Method::BoundedSearch, thue::Method::Factorization,
                          thue::Method::Partial}) {
            if (m == thue::to_string(cand)) {
                s.method = cand;
                known = true;
            }
        }
        if (!known) {
            throw DomainError("unknown method '" + m + "'");
        }
        s.certified = j.at("certified").get<bool>();
        s.search_bound = int_from_json(j.at("search_bound"));
        s.evidence = evidence_from_json(j.at("evidence"));
        return s;
    });
}

std::string to_text(const thue::ThueSolutionSet& s) {
    std::ostringstream os;
    os << "t = " << s.t << '\n' << "method: " << thue::to_string(s.method) << '\n'
       << "certified: " << yes_no(s.certified) << '\n';
    if (s.search_bound != 0) {
        os << "search bound: |y| <= " << s.search_bound << '\n';
    }
    os << "solutions (" << s.solutions.size() << "):\n";
    for (const auto& p : s.solutions) {
        os << "  (" << p.x << ", " << p.y << ")  P_t = " << (p.value > 0 ? "+1" : "-1") << '\n';
    }
    os << "evidence:\n";
    text_evidence(os, s.evidence);
    return os.str();
}

// --------------------------------------------------------------- quartic

json to_json(const quartic::QuarticResult& r) {
    json sols = json::array();
    for (const auto& s : r.solutions) {
        sols.push_back(pair(s.x, s.y));
    }
    json out{{"d", to_json(r.d)}, {"status", quartic::to_string(r.status)}, {"solutions", sols}};
    if (r.pell_u) {
        out["pell_u"] = to_json(*r.pell_u);
        out["pell_v"] = to_json(*r.pell_v);
    }
    out["evidence"] = to_json(r.evidence);
    return out;
}

quartic::QuarticResult quartic_from_json(const json& j) {
    return checked("quartic", [&] {
        quartic::QuarticResult r;
        r.d = int_from_json(j.at("d"));
        const std::string st = j.at("status").get<std::string>();
        bool known = false;
        for (auto cand : {quartic::Status::NoPell, quartic::Status::NoSolution, quartic::Status::Unique,
                          quartic::Status::SpecialD1, quartic::Status::SpecialD2}) {
            if (st == quartic::to_string(cand)) {
                r.status = cand;
                known = true;
            }
        }
        if (!known) {
            throw DomainError("unknown status '" + st + "'");
        }
        for (const auto& s : j.at("solutions")) {
            r.solutions.push_back({int_from_json(s.at(0)), int_from_json(s.at(1))});
        }
        if (j.contains("pell_u")) {
            r.pell_u = int_from_json(j.at("pell_u"));
            r.pell_v = int_from_json(j.at("pell_v"));
        }
        r.evidence = evidence_from_json(j.at("evidence"));
        return r;
    });
}

std::string to_text(const quartic::QuarticResult& r) {
    std::ostringstream os;
    os << "d = " << r.d << '\n' << "status: " << quartic::to_string(r.status) << '\n';
    if (r.pell_u) {
        os << "pell fundamental: u = " << *r.pell_u << ", v = " << *r.pell_v << '\n';
    }
    os << "solutions of x^2 + 1 = d y^4 (" << r.solutions.size() << "):\n";
    for (const auto& s : r.solutions) {
        os << "  (" << s.x << ", " << s.y << ")\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- approx

json to_json(const pade::DefectReport& r) {
    return {{"t", to_json(r.pair.t)},
            {"r", r.pair.r},
            {"j", r.pair.j},
            {"P", to_json(r.pair.P)},
            {"Q", to_json(r.pair.Q)},
            {"D", r.pair.D.get_str()},
            {"M", r.pair.M.get_str()},
            {"precision", r.precision},
            {"defect", r.defect},
            {"bound", r.bound},
            {"certified", r.certified}};
}

pade::DefectReport approx_from_json(const json& j) {
    return checked("approx", [&] {
        pade::DefectReport r;
        r.pair.t = int_from_json(j.at("t"));
        r.pair.r = j.at("r").get<long>();
        r.pair.j = j.at("j").get<int>();
        r.pair.P = int_from_json(j.at("P"));
        r.pair.Q = int_from_json(j.at("Q"));
        r.pair.D = rat_from_json(j.at("D"));
        r.pair.M = rat_from_json(j.at("M"));
        r.precision = j.at("precision").get<unsigned>();
        r.defect = j.at("defect").get<std::string>();
        r.bound = j.at("bound").get<std::string>();
        r.certified = j.at("certified").get<bool>();
        return r;
    });
}

std::string to_text(const pade::DefectReport& r) {
    std::ostringstream os;
    os << "t = " << r.pair.t << ", r = " << r.pair.r << ", j = " << r.pair.j << '\n'
       << "P = " << r.pair.P << '\n'
       << "Q = " << r.pair.Q << '\n'
       << "S = Q beta - P = " << r.defect << '\n'
       << "bound pi t/(16+t^2) (8/eps)^r = " << r.bound << '\n'
       << "|S| <= bound certified: " << yes_no(r.certified) << " (" << r.precision << " bits)\n";
    return os.str();
}

// --------------------------------------------------------------- measure

json to_json(const measure::MeasureCertificate& c) {
    return {{"subject", c.subject},
            {"t", to_json(c.t)},
            {"j", c.j},
            {"orientation", measure::to_string(c.orientation)},
            {"kappa", to_json(c.kappa)},
            {"c", to_json(c.c)},
            {"q_min", to_json(c.q_min)},
            {"precision", c.precision},
            {"evidence", to_json(c.evidence)}};
}

measure::MeasureCertificate measure_from_json(const json& j) {
    return checked("measure", [&] {
        measure::MeasureCertificate c;
        c.subject = j.at("subject").get<std::string>();
        c.t = int_from_json(j.at("t"));
        c.j = j.at("j").get<int>();
        const std::string o = j.at("orientation").get<std::string>();
        if (o == measure::to_string(measure::Orientation::Standard)) {
            c.orientation = measure::Orientation::Standard;
        } else if (o == measure::to_string(measure::Orientation::Switched)) {
            c.orientation = measure::Orientation::Switched;
        } else {
            throw DomainError("unknown orientation '" + o + "'");
        }
        c.kappa = ball_from_json(j.at("kappa"));
        c.c = ball_from_json(j.at("c"));
        c.q_min = int_from_json(j.at("q_min"));
        c.precision = j.at("precision").get<unsigned>();
        c.evidence = evidence_from_json(j.at("evidence"));
        return c;
    });
}

std::string to_text(const measure::MeasureCertificate& c) {
    std::ostringstream os;
    os << "t = " << c.t << ", j = " << c.j << " (" << measure::to_string(c.orientation) << ")\n"
       << "kappa = " << c.kappa.to_string(20) << '\n'
       << "c = " << c.c.to_string(20) << '\n'
       << "q_min = " << c.q_min << '\n'
       << "|p - beta q| > 1/(c |q|^kappa) for all |q| >= q_min\n"
       << "evidence:\n";
    text_evidence(os, c.evidence);
    return os.str();
}

// ---------------------------------------------------------------- verify

json to_json(const verify::SuiteReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"suite", r.suite}, {"passed", r.passed()}, {"failures", r.failures()}, {"checks", checks}};
}

verify::SuiteReport suite_from_json(const json& j) {
    return checked("suite", [&] {
        verify::SuiteReport r;
        r.suite = j.at("suite").get<std::string>();
        for (const auto& c : j.at("checks")) {
            r.checks.push_back(
                {c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
        }
        return r;
    });
}

std::string to_text(const verify::SuiteReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) {
            os << "  (" << c.detail << ")";
        }
        os << '\n';
    }
    os << r.suite << ": " << (r.checks.size() - static_cast<std::size_t>(r.failures())) << "/" << r.checks.size()
       << " passed\n";
    return os.str();
}

} // namespace qt::io
