#include "qt/thue.hpp"

#include "qt/errors.hpp"
#include "qt/measure.hpp"
#include "qt/pade.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qt::thue {

Int form_value(const Int& t, const Int& x, const Int& y) {
    const Int x2 = x * x;
    const Int y2 = y * y;
    return x2 * x2 - t * x2 * x * y - 6 * x2 * y2 + t * x * y2 * y + y2 * y2;
}

const char* to_string(Method m) {
    switch (m) {
    case Method::Certified: return "certified";
    case Method::BoundedSearch: return "bounded-search";
    case Method::Factorization: return "factorization";
    default: return "partial";
    }
}

namespace {

void require_t(const Int& t, long lo, const char* what) {
    if (t < lo) {
        throw DomainError(std::string(what) + " needs t >= " + std::to_string(lo) + ", got " + t.get_str());
    }
}

bool less_xy(const Solution& a, const Solution& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

std::string pairs_string(const std::vector<Solution>& v) {
    std::string s;
    for (const auto& p : v) {
        s += (s.empty() ? "" : " ") + ("(" + p.x.get_str() + "," + p.y.get_str() + ")");
    }
    return s.empty() ? "none" : s;
}

// Adds (x, y) when P_t(x, y) = +-1.
bool try_add(std::vector<Solution>& out, const Int& t, const Int& x, const Int& y) {
    Int v = form_value(t, x, y);
    if (v == 1 || v == -1) {
        out.push_back({x, y, static_cast<int>(v.get_si())});
        return true;
    }
    return false;
}

using i128 = __int128;

i128 form_value_128(i128 t, i128 x, i128 y) {
    const i128 x2 = x * x;
    const i128 y2 = y * y;
    return x2 * x2 - t * x2 * x * y - 6 * x2 * y2 + t * x * y2 * y + y2 * y2;
}

// True when every |term| of P_t on |x|, |y| <= L stays below 2^124.
bool fits_128(const Int& t, const Int& L) {
    Int l4 = L * L * L * L;
    Int bound = l4 * (2 * abs(t) + 8);
    return mpz_sizeinbase(bound.get_mpz_t(), 2) < 124;
}

i128 to_i128(const Int& n) {
    // |n| < 2^62 whenever fits_128 holds for the ranges used below.
    return static_cast<i128>(n.get_si());
}

} // namespace

void finalize(ThueSolutionSet& s) {
    std::sort(s.solutions.begin(), s.solutions.end(), less_xy);
    s.solutions.erase(std::unique(s.solutions.begin(), s.solutions.end(),
                                  [](const Solution& a, const Solution& b) { return a.x == b.x && a.y == b.y; }),
                      s.solutions.end());
    for (const auto& p : s.solutions) {
        Int v = form_value(s.t, p.x, p.y);
        if (v != p.value || (v != 1 && v != -1)) {
            throw InternalConsistencyError("listed pair (" + p.x.get_str() + "," + p.y.get_str() +
                                           ") is not a solution");
        }
    }
}

// ----------------------------------------------------------------- roots

QuarticRoots roots(const Int& t, const PrecisionPolicy& policy) {
    require_t(t, 5, "roots");
    const Rat tq(t);
    // Rational brackets, ordered as beta^(0..3).
    const std::array<std::pair<Rat, Rat>, 4> brackets{{
        {-1 / tq, -1 / (tq + 1)},
        {1 - 2 / (tq + 1), 1 - 2 / (tq + 2)},
        {tq + 5 / (tq + 1), tq + 5 / tq},
        {-1 - 2 / (tq - 1), -1 - 2 / tq},
    }};
    const RatPoly f{Rat(1), Rat(t), Rat(-6), Rat(-t), Rat(1)};
    for (const auto& [lo, hi] : brackets) {
        if (sgn(f(lo)) * sgn(f(hi)) >= 0) {
            throw InternalConsistencyError("no sign change of P_t on a root bracket");
        }
    }
    auto res = escalate(policy, "roots", [&](unsigned prec) -> std::optional<QuarticRoots> {
        pade::Roots rs = pade::roots_at(t, prec);
        for (std::size_t j = 0; j < 4; ++j) {
            const RealBall& b = rs.beta[j];
            if (ball_strict_less(RealBall::from(brackets[j].first, prec), b) != Certainty::True ||
                ball_strict_less(b, RealBall::from(brackets[j].second, prec)) != Certainty::True) {
                return std::nullopt;
            }
        }
        const RealBall m1 = RealBall::from(-1L, prec);
        if (!(rs.beta[0] * rs.beta[2] - m1).contains_zero() || !(rs.beta[1] * rs.beta[3] - m1).contains_zero()) {
            throw InternalConsistencyError("root products differ from -1");
        }
        return QuarticRoots{t, prec, rs.beta};
    });
    return std::move(res.value);
}

// --------------------------------------------------------------- small y

namespace {

// Integer x with P_t(x, y) = e, from the roots near beta^(j) y.
void window_roots(std::vector<Solution>& out, const Int& t, const Int& y) {
    const pade::Roots rs = pade::roots_at(t, 128);
    for (const auto& b : rs.beta) {
        const Int c = (b * RealBall::from(y, 128)).round_mid();
        for (Int x = c - 2; x <= c + 2; ++x) {
            try_add(out, t, x, y);
        }
    }
}

} // namespace

ThueSolutionSet solve_small_y(const Int& t) {
    require_t(t, 1, "solve_small_y");
    ThueSolutionSet s;
    s.t = t;
    s.method = Method::Partial;
    std::vector<std::string> notes;
    for (long yv : {-1L, 0L, 1L}) {
        const Int y(yv);
        for (int e : {-1, 1}) {
            // P_t(X, y) - e as a polynomial in X.
            RatPoly g{Rat(y * y * y * y - e), Rat(t * y * y * y), Rat(-6 * y * y), Rat(-t * y), Rat(1)};
            try {
                for (const Int& x : integer_roots(g)) {
                    try_add(s.solutions, t, x, y);
                }
            } catch (const DomainError&) {
                // Constant term too large to factor: every solution lies
                // within distance 1 of some beta^(j) y.
                window_roots(s.solutions, t, y);
            }
        }
    }
    finalize(s);
    s.certified = true;
    s.evidence.push_back({"small-y", "all solutions with |y| <= 1 by integer-root testing", true,
                          {{"solutions", pairs_string(s.solutions)}}});
    return s;
}

// ----------------------------------------------------------- convergents

ScanResult convergent_scan(const Int& t, int j, const Int& q_max, const PrecisionPolicy& policy) {
    require_t(t, 5, "convergent_scan");
    if (j < 0 || j > 3) {
        throw DomainError("root index must be in 0..3");
    }
    if (q_max < 1) {
        throw DomainError("convergent_scan needs q_max >= 1");
    }
    auto res = escalate(policy, "convergent_scan", [&](unsigned prec) -> std::optional<ScanResult> {
        ScanResult sr;
        sr.j = j;
        sr.q_max = q_max;
        sr.precision = prec;
        RealBall x = pade::roots_at(t, prec).beta[static_cast<std::size_t>(j)];
        Int p_prev(1), q_prev(0), p_prev2(0), q_prev2(1);
        for (long k = 0;; ++k) {
            auto a = x.certified_floor();
            if (!a) {
                return std::nullopt;
            }
            Int p = *a * p_prev + p_prev2;
            Int q = *a * q_prev + q_prev2;
            if (q > q_max) {
                break;
            }
            sr.digits.push_back(*a);
            sr.convergents.push_back({p, q, k});
            try_add(sr.hits, t, p, q);
            try_add(sr.hits, t, Int(-p), Int(-q));
            RealBall frac_part = x - RealBall::from(*a, prec);
            if (frac_part.contains_zero()) {
                return std::nullopt;
            }
            x = RealBall::from(1L, prec) / frac_part;
            p_prev2 = p_prev;
            q_prev2 = q_prev;
            p_prev = p;
            q_prev = q;
        }
        return sr;
    });
    return std::move(res.value);
}

// --------------------------------------------------------- bounded search

ThueSolutionSet solve_bounded(const Int& t, const Int& B) {
    require_t(t, 1, "solve_bounded");
    if (B < 1) {
        throw DomainError("solve_bounded needs B >= 1");
    }
    ThueSolutionSet s = solve_small_y(t);
    s.method = Method::BoundedSearch;
    s.search_bound = B;
    s.evidence.clear();

    // Any solution with y != 0 has |x - beta^(j) y| < 1 for some j, since the
    // four distances multiply to 1.
    const unsigned prec = 128;
    const pade::Roots rs = pade::roots_at(t, prec);
    Int beta_max(0);
    for (const auto& b : rs.beta) {
        Int cand = abs(b.round_mid()) + 1;
        beta_max = std::max(beta_max, cand);
    }
    const Int x_reach = beta_max * B + 4;
    const bool fast = fits_128(t, std::max(x_reach, B)) && B < Int(1L << 40);
    const bool dbl = fast && beta_max * B < Int(1L << 40);
    std::array<double, 4> bd{};
    for (std::size_t k = 0; k < 4; ++k) {
        bd[k] = rs.beta[k].to_double();
    }

    std::vector<Solution> found;
    if (fast) {
        const i128 tt = to_i128(t);
        const long Bl = B.get_si();
        for (long y = 2; y <= Bl; ++y) {
            for (std::size_t k = 0; k < 4; ++k) {
                long c = 0;
                if (dbl) {
                    c = static_cast<long>(std::floor(bd[k] * static_cast<double>(y)));
                } else {
                    c = (rs.beta[k] * RealBall::from(y, prec)).round_mid().get_si();
                }
                for (long x = c - 2; x <= c + 3; ++x) {
                    i128 v = form_value_128(tt, x, y);
                    if (v == 1 || v == -1) {
                        int vi = static_cast<int>(v);
                        found.push_back({Int(x), Int(y), vi});
                        found.push_back({Int(-x), Int(-y), vi});
                    }
                }
            }
        }
    } else {
        for (Int y = 2; y <= B; ++y) {
            for (const auto& b : rs.beta) {
                const Int c = (b * RealBall::from(y, prec)).round_mid();
                for (Int x = c - 3; x <= c + 3; ++x) {
                    if (try_add(found, t, x, y)) {
                        found.push_back({Int(-x), Int(-y), found.back().value});
                    }
                }
            }
        }
    }
    s.solutions.insert(s.solutions.end(), found.begin(), found.end());
    finalize(s);

    // Independent naive sweep on a small box.
    const long N = std::min(B, Int(200)).get_si();
    std::vector<Solution> naive;
    for (long y = -N; y <= N; ++y) {
        for (long x = -N; x <= N; ++x) {
            try_add(naive, t, Int(x), Int(y));
        }
    }
    std::sort(naive.begin(), naive.end(), less_xy);
    std::vector<Solution> boxed;
    for (const auto& p : s.solutions) {
        if (abs(p.x) <= N && abs(p.y) <= N) {
            boxed.push_back(p);
        }
    }
    if (boxed != naive) {
        throw InternalConsistencyError("pruned search disagrees with naive sweep for t = " + t.get_str());
    }
    s.evidence.push_back({"bounded-search", "pruned search over |y| <= B", false,
                          {{"B", B.get_str()}, {"solutions", pairs_string(s.solutions)}}});
    s.evidence.push_back({"bounded-search", "naive sweep agrees on |x|, |y| <= " + std::to_string(N), true,
                          {{"box", std::to_string(N)}}});
    s.certified = false;
    return s;
}

// ------------------------------------------------------------------- t = 3

ThueSolutionSet solve_t3() {
    const Int t(3);
    // P_3(X, 1) = (X^2 + X - 1)(X^2 - 4X - 1)
    const RatPoly f{Rat(1), Rat(3), Rat(-6), Rat(-3), Rat(1)};
    const RatPoly g{Rat(-1), Rat(1), Rat(1)};
    const RatPoly h{Rat(-1), Rat(-4), Rat(1)};
    if (!(g * h == f)) {
        throw InternalConsistencyError("factorisation of P_3 failed");
    }
    // Both factors are +-1, so 5xy = e1 - e2 is in {-2, 0, 2}, forcing xy = 0.
    ThueSolutionSet s;
    s.t = t;
    s.method = Method::Factorization;
    for (long x : {-1L, 1L}) {
        try_add(s.solutions, t, Int(x), Int(0));
    }
    for (long y : {-1L, 1L}) {
        try_add(s.solutions, t, Int(0), Int(y));
    }
    finalize(s);
    s.certified = s.solutions.size() == 4;
    s.evidence.push_back({"factorization", "P_3 = (X^2+XY-Y^2)(X^2-4XY-Y^2); 5xy = e1 - e2 forces xy = 0",
                          s.certified, {{"solutions", pairs_string(s.solutions)}}});
    return s;
}

// ------------------------------------------------------------ certified

ThueSolutionSet solve_certified(const Int& t, const PrecisionPolicy& policy) {
    if (t < 128) {
        throw OutOfMethodRange("the certified solver needs t >= 128, got " + t.get_str());
    }
    ThueSolutionSet s = solve_small_y(t);
    s.method = Method::Certified;
    bool ok = true;

    // min |f'(beta^(j))| > 32 makes every solution with |y| > 1 a convergent.
    const QuarticRoots qr = roots(t, policy);
    {
        const RatPoly fprime = RatPoly{Rat(1), Rat(t), Rat(-6), Rat(-t), Rat(1)}.derivative();
        bool big = true;
        std::string vals;
        for (const auto& b : qr.beta) {
            RealBall d = abs(evaluate(fprime, b));
            big = big && ball_strict_less(RealBall::from(32L, qr.precision), d) == Certainty::True;
            vals += (vals.empty() ? "" : " ") + d.to_string(8);
        }
        ok = ok && big;
        s.evidence.push_back({"convergent-criterion", "min_j |f'(beta^(j))| > 32", big, {{"values", vals}}});
    }

    const Int y_floor = std::max(floor_div(t, Int(5)), Int(25));
    {
        std::vector<Solution> hits;
        Int smallest_q(0);
        long tested = 0;
        for (int j = 0; j < 4; ++j) {
            ScanResult sr = convergent_scan(t, j, y_floor, policy);
            tested += static_cast<long>(sr.convergents.size());
            for (const auto& c : sr.convergents) {
                if (c.q >= 2 && (smallest_q == 0 || c.q < smallest_q)) {
                    smallest_q = c.q;
                }
            }
            for (const auto& h : sr.hits) {
                if (abs(h.y) >= 2) {
                    hits.push_back(h);
                }
            }
            std::string digits;
            for (const auto& d : sr.digits) {
                digits += (digits.empty() ? "" : ",") + d.get_str();
            }
            s.evidence.push_back({"convergent-scan", "convergents of beta^(" + std::to_string(j) + ") tested", true,
                                  {{"digits", digits},
                                   {"count", std::to_string(sr.convergents.size())},
                                   {"q_max", y_floor.get_str()},
                                   {"precision", std::to_string(sr.precision)}}});
        }
        s.solutions.insert(s.solutions.end(), hits.begin(), hits.end());
        const bool gap = smallest_q == 0 || Rat(smallest_q) >= Rat(t - 4) / 5;
        s.evidence.push_back({"convergent-scan", "solutions with 2 <= |y| <= q_max", true,
                              {{"hits", pairs_string(hits)},
                               {"convergents", std::to_string(tested)},
                               {"smallest_denominator_above_1", smallest_q.get_str()},
                               {"gap_at_least_(t-4)/5", gap ? "true" : "false"}}});
        ok = ok && gap;
    }

    for (int j = 0; j < 4; ++j) {
        measure::MeasureCertificate cert = measure::root_certificate(t, j, policy);
        s.evidence.push_back({"measure", "|p - beta^(" + std::to_string(j) + ") q| > 1/(c |q|^kappa) for |q| >= q_min",
                              true,
                              {{"kappa", cert.kappa.to_string(15)},
                               {"c", cert.c.to_string(15)},
                               {"q_min", cert.q_min.get_str()},
                               {"orientation", measure::to_string(cert.orientation)}}});
    }

    measure::ExclusionReport ex = measure::exclusion_check(t, y_floor, policy);
    for (const auto& c : ex.cases) {
        s.evidence.push_back({"exclusion", "no solution with |y| >= y_floor and delta^(" + std::to_string(c.j) +
                                               ") < 1 (" + c.method + ")",
                              c.certified, {{"y_floor", y_floor.get_str()}}});
    }
    ok = ok && ex.certified();

    // Redundant bounded search over |y| <= 200.
    ThueSolutionSet bounded = solve_bounded(t, Int(200));
    finalize(s);
    std::vector<Solution> inside;
    for (const auto& p : s.solutions) {
        if (abs(p.y) <= 200) {
            inside.push_back(p);
        }
    }
    const bool agree = inside == bounded.solutions;
    s.evidence.push_back({"cross-check", "bounded search with |y| <= 200 agrees", agree,
                          {{"bounded", pairs_string(bounded.solutions)}}});
    if (!agree) {
        throw InternalConsistencyError("certified and bounded solutions differ for t = " + t.get_str());
    }
    if (!ok) {
        throw UncertifiedError("certified solve failed for t = " + t.get_str());
    }
    s.certified = true;
    return s;
}

// ---------------------------------------------------------------- tables

std::vector<Solution> reference_table(const Int& t) {
    require_t(t, 1, "reference_table");
    std::vector<std::pair<long, long>> pairs{{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
    if (t == 1) {
        pairs.insert(pairs.end(), {{-2, 1}, {-1, -2}, {1, 2}, {2, -1}});
    } else if (t == 4) {
        // Not (-2,3): P_4(-2,3) = -239. The partner of (-3,2) under
        // (x,y) -> (-y,x) is (-2,-3).
        pairs.insert(pairs.end(), {{-3, 2}, {-2, -3}, {2, 3}, {3, -2}});
    }
    ThueSolutionSet s;
    s.t = t;
    for (const auto& [x, y] : pairs) {
        Int v = form_value(t, Int(x), Int(y));
        s.solutions.push_back({Int(x), Int(y), static_cast<int>(v.get_si())});
    }
    finalize(s);
    return s.solutions;
}

ThueSolutionSet solve(const Int& t, const Int& B, const PrecisionPolicy& policy) {
    require_t(t, 1, "solve");
    if (t == 3) {
        return solve_t3();
    }
    if (t >= 128) {
        return solve_certified(t, policy);
    }
    ThueSolutionSet s = solve_bounded(t, B);
    const auto table = reference_table(t);
    const bool match = s.solutions == table;
    s.evidence.push_back({"table", "bounded result equals the reference solution list", match,
                          {{"table", pairs_string(table)}}});
    if (!match) {
        throw InternalConsistencyError("bounded search disagrees with the reference list for t = " + t.get_str());
    }
    return s;
}

} // namespace qt::thue
