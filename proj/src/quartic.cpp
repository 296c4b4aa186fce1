#include "qt/quartic.hpp"

#include "qt/errors.hpp"
#include "qt/lucas.hpp"
#include "qt/pell.hpp"
#include "qt/thue.hpp"

#include <algorithm>

namespace qt::quartic {

const char* to_string(Status s) {
    switch (s) {
    case Status::NoPell: return "no-pell";
    case Status::NoSolution: return "no-solution";
    case Status::Unique: return "unique";
    case Status::SpecialD1: return "special-d1";
    default: return "special-d2";
    }
}

namespace {

void verify(const QuarticResult& r) {
    for (const auto& s : r.solutions) {
        Int y2 = s.y * s.y;
        if (s.x < 0 || s.y < 1 || s.x * s.x + 1 != r.d * y2 * y2) {
            throw InternalConsistencyError("(" + s.x.get_str() + "," + s.y.get_str() + ") does not solve X^2+1 = " +
                                           r.d.get_str() + " Y^4");
        }
    }
}

} // namespace

QuarticResult solve_quartic(const Int& d) {
    if (d < 1) {
        throw DomainError("solve_quartic needs d >= 1, got " + d.get_str());
    }
    QuarticResult r;
    r.d = d;
    if (d == 1) {
        r.status = Status::SpecialD1;
        r.solutions = {{Int(0), Int(1)}};
        r.evidence.push_back({"special", "X^2 + 1 = Y^4 forces X = 0", true, {}});
    } else if (d == 2) {
        r.status = Status::SpecialD2;
        r.solutions = {{Int(1), Int(1)}, {Int(239), Int(13)}};
        r.evidence.push_back({"special", "X^2 + 1 = 2Y^4 has exactly (1,1) and (239,13)", true,
                              {{"reference", "classical result for d = 2"}}});
    } else if (is_perfect_square(d)) {
        r.status = Status::NoPell;
        r.evidence.push_back({"pell", "d is a square, so x^2 + 1 = (k y)^2 has no solution with y > 0", true,
                              {{"sqrt_d", is_perfect_square(d)->get_str()}}});
    } else {
        auto f = pell::neg_pell_fundamental(d);
        if (!f) {
            r.status = Status::NoPell;
            r.evidence.push_back({"pell", "continued fraction of sqrt(d) has even period", true, {}});
        } else {
            r.pell_u = f->u;
            r.pell_v = f->v;
            auto s = is_perfect_square(f->v);
            r.evidence.push_back({"pell", "fundamental solution of x^2 + 1 = d y^2", true,
                                  {{"u", f->u.get_str()}, {"v", f->v.get_str()}}});
            r.evidence.push_back({"square-test", "v is a perfect square", true,
                                  {{"v", f->v.get_str()}, {"square", s ? "true" : "false"}}});
            if (s) {
                r.status = Status::Unique;
                r.solutions = {{f->u, *s}};
            } else {
                r.status = Status::NoSolution;
            }
        }
    }
    verify(r);
    return r;
}

std::vector<QuarticSolution> brute_force(const Int& d, long y_max) {
    if (d < 1 || y_max < 1) {
        throw DomainError("brute_force needs d >= 1 and y_max >= 1");
    }
    std::vector<QuarticSolution> out;
    for (long y = 1; y <= y_max; ++y) {
        Int y2 = Int(y) * y;
        if (auto x = is_perfect_square(d * y2 * y2 - 1)) {
            out.push_back({*x, Int(y)});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
    return out;
}

ThueReduction reduce_to_thue(const Int& x0) {
    if (x0 < 1) {
        throw DomainError("reduce_to_thue needs x0 >= 1, got " + x0.get_str());
    }
    ThueReduction red;
    red.x0 = x0;
    red.t = 4 * x0;
    red.d = 1 + x0 * x0;
    const thue::ThueSolutionSet ts = thue::solve(red.t);

    // Indices of interest stay tiny: y = a^2 + b^2 with |a|, |b| <= 3.
    constexpr long kIndexLimit = 40;
    const lucas::LucasTable tab = lucas::lucas_table({2 * x0, Int(1)}, 2 * kIndexLimit + 1);
    for (const auto& s : ts.solutions) {
        ReductionWitness w;
        w.a = s.x;
        w.b = s.y;
        w.y = s.x * s.x + s.y * s.y;
        const Int two_ab = abs(2 * s.x * s.y);
        const Int diff = abs(s.x * s.x - s.y * s.y);
        for (long m = 0; m < kIndexLimit && w.m < 0; ++m) {
            const Int& vm = tab.V[static_cast<std::size_t>(m)];
            const Int& vm1 = tab.V[static_cast<std::size_t>(m + 1)];
            if (vm == two_ab && vm1 == diff) {
                w.m = m;
                w.even_branch = true;
            } else if (vm == diff && vm1 == two_ab) {
                w.m = m;
                w.even_branch = false;
            }
        }
        if (w.m >= 0) {
            w.y_squared_is_v = w.y * w.y == tab.V[static_cast<std::size_t>(2 * w.m + 1)];
        }
        red.witnesses.push_back(w);
        if (std::find(red.y_values.begin(), red.y_values.end(), w.y) == red.y_values.end()) {
            red.y_values.push_back(w.y);
        }
    }
    std::sort(red.y_values.begin(), red.y_values.end());
    std::string ys;
    for (const auto& y : red.y_values) {
        ys += (ys.empty() ? "" : ",") + y.get_str();
    }
    red.evidence.push_back({"thue", "solutions of P_t(a, b) = +-1 with t = 4 x0", ts.certified,
                            {{"t", red.t.get_str()}, {"method", thue::to_string(ts.method)}}});
    red.evidence.push_back({"reduction", "candidate y = a^2 + b^2", true, {{"y", ys}}});
    return red;
}

ChainReport identity_chain_check(const Int& x0, long t_idx) {
    if (x0 < 1 || t_idx < 1) {
        throw DomainError("identity_chain_check needs x0 >= 1 and t_idx >= 1");
    }
    ChainReport rep;
    rep.x0 = x0;
    rep.t_idx = t_idx;
    const lucas::LucasTable tab = lucas::lucas_table({2 * x0, Int(1)}, 2 * t_idx + 1);
    const auto& U = tab.U;
    const auto& V = tab.V;
    for (long m = 0; m <= t_idx; ++m) {
        const auto k = static_cast<std::size_t>(m);
        if (V[k + 1] * 2 != 2 * x0 * V[k] + U[k]) {
            rep.step_identity = false;
        }
        if (V[2 * k + 1] != V[k] * V[k] + V[k + 1] * V[k + 1]) {
            rep.doubling_identity = false;
        }
    }
    for (long n = 1; n <= 2 * t_idx + 1; n += 2) {
        if (auto s = is_perfect_square(V[static_cast<std::size_t>(n)])) {
            rep.square_indices.push_back(n);
            rep.square_roots.push_back(*s);
        }
    }
    return rep;
}

} // namespace qt::quartic
