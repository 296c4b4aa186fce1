#include "qt/pade.hpp"

#include "qt/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qt::pade {

namespace {

const GaussRat kI = GaussRat::i_unit();

RatPoly X() { return RatPoly{Rat(0), Rat(1)}; }

Rat half() { return frac(1, 2); }

void require_j01(int j) {
    if (j != 0 && j != 1) {
        throw DomainError("approximants exist for j = 0 and j = 1 only");
    }
}

void require_t_at_least(const Int& t, long lo, const char* what) {
    if (t < lo) {
        throw DomainError(std::string(what) + " needs t >= " + std::to_string(lo) + ", got " + t.get_str());
    }
}

ComplexBall to_ball(const GaussRat& z, unsigned prec) { return ComplexBall::from(z, prec); }

std::string ball_str(const RealBall& b) { return b.to_string(12); }

} // namespace

// ------------------------------------------------------------------ data

ThueData build_thue_data(const Int& t) {
    require_t_at_least(t, 1, "build_thue_data");
    constexpr long n = kDegree;
    ThueData td;
    td.t = t;
    td.P = RatPoly{Rat(1), Rat(t), Rat(-6), Rat(-t), Rat(1)};
    td.U = RatPoly{Rat(1), Rat(0), Rat(1)};
    const RatPoly P1 = td.P.derivative();
    const RatPoly P2 = P1.derivative();
    const RatPoly U1 = td.U.derivative();
    const RatPoly U2 = U1.derivative();

    RatPoly ode = td.U * P2 - Rat(n - 1) * (U1 * P1) + Rat(n * (n - 1) / 2) * (U2 * td.P);
    if (!ode.is_zero()) {
        throw InternalConsistencyError("differential equation residual is nonzero");
    }
    Rat disc = td.U.coeff(1) * td.U.coeff(1) - 4 * td.U.coeff(2) * td.U.coeff(0);
    if (disc == 0) {
        throw InternalConsistencyError("U has zero discriminant");
    }

    td.Y1 = Rat(2) * (td.U * P1) - Rat(n) * (U1 * td.P);
    RatPoly hpoly = frac(n * n - 1, 4) * (U1 * U1 - Rat(2) * (td.U * U2));
    if (hpoly.degree() > 0 || !is_integer(hpoly.coeff(0))) {
        throw InternalConsistencyError("h is not an integer constant");
    }
    td.h = hpoly.coeff(0).get_num();
    Rat lambda = Rat(td.h) / (n * n - 1);
    if (lambda != -1) {
        throw InternalConsistencyError("expected lambda = -1, got " + to_string(lambda));
    }
    td.lambda = lambda.get_num();

    const Rat two_h_3 = Rat(2 * td.h) / 3;
    const Rat k = frac(2 * (n + 1), 3);
    td.A0 = RatPoly{two_h_3};
    td.A1 = k * (td.U * P1 - frac(n - 1, 2) * (U1 * td.P));
    td.B0 = RatPoly{Rat(0), two_h_3};
    td.B1 = X() * td.A1 - k * (td.U * td.P);
    return td;
}

PointSequences ab_values(const ThueData& td, const Rat& x, long r_max) {
    if (r_max < 0) {
        throw DomainError("ab_values needs r_max >= 0");
    }
    PointSequences s;
    s.x = x;
    s.A = {td.A0(x), td.A1(x)};
    s.B = {td.B0(x), td.B1(x)};
    const Rat y1 = td.Y1(x);
    const Rat px = td.P(x);
    const Rat p2 = px * px;
    const long n = kDegree;
    const Rat lam(td.lambda);
    for (long r = 1; r < r_max; ++r) {
        auto i = static_cast<std::size_t>(r);
        Rat lead = lam * (n * (r + 1) - 1);
        Rat c1 = frac(2 * r + 1, 2) * y1;
        Rat c2 = Rat(n * r + 1) * p2;
        s.A.push_back((c1 * s.A[i] - c2 * s.A[i - 1]) / lead);
        s.B.push_back((c1 * s.B[i] - c2 * s.B[i - 1]) / lead);
    }
    s.A.resize(static_cast<std::size_t>(r_max) + 1);
    s.B.resize(static_cast<std::size_t>(r_max) + 1);
    return s;
}

PolySequences ab_polys(const ThueData& td, long r_max) {
    if (r_max < 0) {
        throw DomainError("ab_polys needs r_max >= 0");
    }
    PolySequences s;
    s.A = {td.A0, td.A1};
    s.B = {td.B0, td.B1};
    const RatPoly p2 = td.P * td.P;
    const long n = kDegree;
    for (long r = 1; r < r_max; ++r) {
        auto i = static_cast<std::size_t>(r);
        Rat inv_lead = 1 / (Rat(td.lambda) * (n * (r + 1) - 1));
        RatPoly c1 = frac(2 * r + 1, 2) * td.Y1;
        RatPoly c2 = Rat(n * r + 1) * p2;
        s.A.push_back((c1 * s.A[i] - c2 * s.A[i - 1]) * inv_lead);
        s.B.push_back((c1 * s.B[i] - c2 * s.B[i - 1]) * inv_lead);
    }
    s.A.resize(static_cast<std::size_t>(r_max) + 1);
    s.B.resize(static_cast<std::size_t>(r_max) + 1);
    return s;
}

// ----------------------------------------------------------- hypergeometric

Rat binomial(const Rat& x, long k) {
    if (k < 0) {
        return Rat(0);
    }
    Rat c(1);
    for (long i = 0; i < k; ++i) {
        c *= (x - i) / (i + 1);
    }
    return c;
}

HyperCoeffs xnr_coeffs(long r) {
    if (r < 0) {
        throw DomainError("xnr_coeffs needs r >= 0");
    }
    HyperCoeffs h;
    h.r = r;
    h.coeffs.reserve(static_cast<std::size_t>(r) + 1);
    Rat c(1);
    h.coeffs.push_back(c);
    const Rat quarter(1, 4);
    const Rat three_quarters(3, 4);
    for (long k = 0; k < r; ++k) {
        c *= Rat(k - r) * (Rat(k - r) - quarter) / ((Rat(k) + three_quarters) * (k + 1));
        h.coeffs.push_back(c);
    }
    return h;
}

GaussRat xstar(const HyperCoeffs& h, const GaussRat& X, const GaussRat& Y) {
    const auto n = static_cast<std::size_t>(h.r);
    std::vector<GaussRat> xp(n + 1);
    std::vector<GaussRat> yp(n + 1);
    xp[0] = GaussRat(Rat(1));
    yp[0] = GaussRat(Rat(1));
    for (std::size_t k = 1; k <= n; ++k) {
        xp[k] = xp[k - 1] * X;
        yp[k] = yp[k - 1] * Y;
    }
    GaussRat sum;
    for (std::size_t k = 0; k <= n; ++k) {
        sum += GaussRat(h.coeffs[k]) * xp[k] * yp[n - k];
    }
    return sum;
}

PointParams point_params(const ThueData& td, const Rat& x) {
    const long n = kDegree;
    const Rat px = td.P(x);
    if (px == 0) {
        throw DomainError("point_params at a root of P");
    }
    const Rat yx = td.Y1(x);
    const GaussRat sqrt_lambda = kI;
    // Y1 / (2n sqrt(lambda)) and Y1 / (4 sqrt(lambda) P)
    const GaussRat y_over = GaussRat(yx) / (GaussRat(Rat(2 * n)) * sqrt_lambda);
    const GaussRat y_over_p = GaussRat(yx) / (GaussRat(Rat(4) * px) * sqrt_lambda);
    const GaussRat lead = GaussRat(Rat(n - 1) / (2 * px)) * sqrt_lambda;

    PointParams pp;
    pp.x = x;
    pp.z = GaussRat(half()) * (y_over + GaussRat(px));
    pp.u = GaussRat(half()) * (y_over - GaussRat(px));
    const Rat a0 = td.A0(x);
    const Rat a1 = td.A1(x);
    const Rat b0 = td.B0(x);
    const Rat b1 = td.B1(x);
    pp.a = lead * GaussRat(a1) - (y_over_p - GaussRat(half())) * GaussRat(a0);
    pp.b = lead * GaussRat(a1) - (y_over_p + GaussRat(half())) * GaussRat(a0);
    pp.c = lead * GaussRat(b1) - (y_over_p - GaussRat(half())) * GaussRat(b0);
    pp.d = lead * GaussRat(b1) - (y_over_p + GaussRat(half())) * GaussRat(b0);
    return pp;
}

GaussRat w_value(const Int& t) {
    Rat den(t * t + 16);
    return {Rat(t * t - 16) / den, Rat(8 * t) / den};
}

GaussRat z_prime(const Int& t) { return {Rat(4), Rat(-t)}; }

GaussRat u_prime(const Int& t) { return {Rat(-4), Rat(-t)}; }

Rat m_factor(long r) {
    Rat m(1);
    for (long k = 1; k <= r; ++k) {
        m *= frac(4 * k - 1, 4 * k);
    }
    return m;
}

Rat d_factor(long r, int j) {
    require_j01(j);
    Int base = (j == 0) ? Int(8) : Int(-2);
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(r));
    return Rat(p) / 5;
}

// ------------------------------------------------------------- approximants

std::vector<ApproximantPair> approximant_sequence(const Int& t, long r_max, int j) {
    require_t_at_least(t, 5, "approximants");
    require_j01(j);
    if (r_max < 0) {
        throw DomainError("approximants need r >= 0");
    }
    const ThueData td = build_thue_data(t);
    const Rat x(j);
    const PointSequences seq = ab_values(td, x, r_max);
    const PointParams pp = point_params(td, x);

    std::vector<ApproximantPair> out;
    out.reserve(static_cast<std::size_t>(r_max) + 1);
    for (long r = 0; r <= r_max; ++r) {
        const auto i = static_cast<std::size_t>(r);
        const HyperCoeffs h = xnr_coeffs(r);
        const GaussRat xzu = xstar(h, pp.z, pp.u);
        const GaussRat xuz = xstar(h, pp.u, pp.z);
        const GaussRat unrot = i_pow(-r);
        const GaussRat a_hyp = unrot * (pp.a * xzu - pp.b * xuz);
        const GaussRat b_hyp = unrot * (pp.c * xzu - pp.d * xuz);
        const std::string where =
            " (t=" + t.get_str() + ", r=" + std::to_string(r) + ", j=" + std::to_string(j) + ")";
        if (!a_hyp.is_real() || !b_hyp.is_real()) {
            throw InternalConsistencyError("hypergeometric value is not real" + where);
        }
        if (a_hyp.re != seq.A[i] || b_hyp.re != seq.B[i]) {
            throw InternalConsistencyError("recurrence and hypergeometric routes disagree" + where);
        }
        ApproximantPair ap;
        ap.t = t;
        ap.r = r;
        ap.j = j;
        ap.M = m_factor(r);
        ap.D = d_factor(r, j);
        const Rat scale = ap.M * ap.D / 2;
        const Rat p = scale * seq.B[i];
        const Rat q = scale * seq.A[i];
        if (!is_integer(p) || !is_integer(q)) {
            throw InternalConsistencyError("approximant is not an integer" + where);
        }
        ap.P = p.get_num();
        ap.Q = q.get_num();
        out.push_back(std::move(ap));
    }
    return out;
}

ApproximantPair approximants(const Int& t, long r, int j) { return approximant_sequence(t, r, j).back(); }

// ------------------------------------------------------------------- balls

Roots roots_at(const Int& t, unsigned prec) {
    require_t_at_least(t, 1, "roots");
    RealBall tb = RealBall::from(t, prec);
    RealBall eps = (tb + sqrt(RealBall::from(Int(t * t + 16), prec))) / Rat(4);
    RealBall rho = sqrt(RealBall::from(1L, prec) + square(eps));
    RealBall one = RealBall::from(1L, prec);
    Roots rs{eps, rho, {-(one / (eps + rho)), eps / (rho + one), rho + eps, -((rho + one) / eps)}};
    return rs;
}

WData w_data(const Int& t, unsigned prec) {
    require_t_at_least(t, 5, "w_data");
    Roots rs = roots_at(t, prec);
    WData wd{t,
             w_value(t),
             z_prime(t),
             u_prime(t),
             RealBall(prec),
             ComplexBall(prec),
             ComplexBall(prec),
             rs.epsilon,
             rs.rho};
    wd.phi = atan(RealBall::from(Rat(4) / Rat(t), prec)) * Rat(2);
    RealBall root = sqrt(RealBall::from(Int(t * t + 16), prec));
    wd.sqrt_w = ComplexBall(RealBall::from(t, prec) / root, RealBall::from(4L, prec) / root);
    wd.fourth_root_w = ComplexBall(rs.epsilon / rs.rho, RealBall::from(1L, prec) / rs.rho);
    return wd;
}

ComplexBall remainder_at(const Int& t, long r, unsigned prec) {
    if (r < 0) {
        throw DomainError("remainder needs r >= 0");
    }
    require_t_at_least(t, 5, "remainder");
    const HyperCoeffs h = xnr_coeffs(r);
    const WData wd = w_data(t, prec);
    const ComplexBall w = to_ball(wd.w, prec);
    const auto n = static_cast<std::size_t>(r);
    std::vector<ComplexBall> wp;
    wp.reserve(n + 1);
    wp.push_back(ComplexBall(RealBall::from(1L, prec), RealBall(prec)));
    for (std::size_t k = 1; k <= n; ++k) {
        wp.push_back(wp.back() * w);
    }
    ComplexBall reversed(prec);
    ComplexBall direct(prec);
    for (std::size_t k = 0; k <= n; ++k) {
        RealBall c = RealBall::from(h.coeffs[k], prec);
        reversed += wp[n - k] * c;
        direct += wp[k] * c;
    }
    return wd.fourth_root_w * reversed - direct;
}

Escalated<ComplexBall> remainder_eval(const Int& t, long r, const PrecisionPolicy& policy) {
    return escalate(policy, "remainder_eval", [&](unsigned prec) -> std::optional<ComplexBall> {
        ComplexBall rem = remainder_at(t, r, prec);
        if (!relatively_tight(rem.norm(), 64)) {
            return std::nullopt;
        }
        return rem;
    });
}

// ------------------------------------------------------------------ bounds

bool BoundReport::all_passed() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.passed; });
}

namespace {

struct Undecided {};

// Records lhs < rhs (strict) or lhs <= rhs; throws Undecided.
void record(std::vector<BoundCheck>& out, std::string name, long r, int j, const RealBall& lhs,
            const RealBall& rhs, bool strict) {
    Certainty c = strict ? ball_strict_less(lhs, rhs) : ball_less_equal(lhs, rhs);
    if (c == Certainty::Undecided) {
        throw Undecided{};
    }
    out.push_back({std::move(name), r, j, ball_str(lhs), ball_str(rhs), c == Certainty::True});
}

// Gamma(r+1+1/4) / (r! Gamma(1/4)) = (1/4) prod_{k=1..r} (k+1/4)/k
Rat remainder_constant(long r) {
    Rat c(1, 4);
    for (long k = 1; k <= r; ++k) {
        c *= (Rat(k) + frac(1, 4)) / k;
    }
    return c;
}

std::optional<std::vector<BoundCheck>>
bound_attempt(const Int& t, long r_max, const std::array<std::vector<ApproximantPair>, 2>& seqs,
              unsigned prec) {
    std::vector<BoundCheck> out;
    try {
        const WData wd = w_data(t, prec);
        const Roots rs = roots_at(t, prec);
        const RealBall one = RealBall::from(1L, prec);
        const RealBall eight_eps = rs.epsilon * Rat(8);
        const RealBall eight_over_eps = RealBall::from(8L, prec) / rs.epsilon;
        const RealBall l0 = RealBall::pi(prec) * Rat(t) / Rat(t * t + 16);
        const ComplexBall one_c(one, RealBall(prec));
        const RealBall opw2 = (one_c + wd.sqrt_w).norm(); // |1 + sqrt w|^2
        const RealBall omw2 = (one_c - wd.sqrt_w).norm(); // |1 - sqrt w|^2
        const ThueData td = build_thue_data(t);
        const GaussRat up = u_prime(t);
        const Rat tt16(t * t + 16);

        record(out, "|1+sqrt(w)|^2 > 3.999", -1, -1, RealBall::from(frac(3999, 1000), prec), opw2, true);
        record(out, "4/3.999 < 1.0005", -1, -1, RealBall::from(frac(4000, 3999), prec),
               RealBall::from(frac(10005, 10000), prec), true);

        for (int j = 0; j <= 1; ++j) {
            const Rat k0 = (j == 0) ? frac(10005, 10000) : frac(1415, 1000);
            const RealBall sharp =
                RealBall::from(4L, prec) / opw2 * (j == 0 ? one : sqrt(RealBall::from(2L, prec)));
            const RealBall& beta = rs.beta[static_cast<std::size_t>(j)];
            const PointParams pp = point_params(td, Rat(j));
            const ComplexBall defect_coeff(beta * pp.a.re - pp.c.re, beta * pp.a.im - pp.c.im);
            record(out, "|beta a(j) - c(j)| <= 10", -1, j, defect_coeff.norm(), RealBall::from(100L, prec),
                   false);

            RealBall grow = one;   // (8 eps)^r
            RealBall decay = one;  // (8/eps)^r
            RealBall omw2r = one;  // |1 - sqrt w|^(2r)
            RealBall opw2r = one;  // |1 + sqrt w|^(2r)
            GaussRat up_r(Rat(1)); // u'^r
            for (long r = 0; r <= r_max; ++r) {
                const ApproximantPair& ap = seqs[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
                const RealBall P = RealBall::from(ap.P, prec);
                const RealBall Q = RealBall::from(ap.Q, prec);
                const RealBall rhs = grow * k0;
                record(out, "|P_r| < k0 (8 eps)^r", r, j, abs(P), rhs, true);
                record(out, "|Q_r| < k0 (8 eps)^r", r, j, abs(Q), rhs, true);
                record(out, "|P_r| <= sharp (8 eps)^r", r, j, abs(P), sharp * grow, false);
                record(out, "|Q_r| <= sharp (8 eps)^r", r, j, abs(Q), sharp * grow, false);

                const RealBall S = Q * beta - P;
                record(out, "|S_r| <= pi t/(16+t^2) (8/eps)^r", r, j, abs(S), l0 * decay, false);

                // S_r = -(M/10) i^-r (beta a - c) u'^r R_r(w)
                const ComplexBall R = remainder_at(t, r, prec);
                const GaussRat lead = GaussRat(-ap.M / 10) * i_pow(-r) * up_r;
                const ComplexBall F = defect_coeff * to_ball(lead, prec) * R;
                if (!relatively_tight(S, 20) || !relatively_tight(F.re(), 20)) {
                    throw Undecided{};
                }
                const bool agree = (F.re() - S).contains_zero() && F.im().contains_zero();
                out.push_back({"S_r = -(M/10) i^-r (beta a - c) u'^r R_r(w)", r, j, ball_str(S),
                               F.to_string(12), agree});

                if (r <= 20 && j == 0) {
                    const RealBall int_bound = wd.phi * omw2r * remainder_constant(r);
                    record(out, "|R_r(w)| <= integral bound", r, -1, R.norm(), square(int_bound), false);
                    const HyperCoeffs h = xnr_coeffs(r);
                    const Rat lhs = xstar(h, wd.zp, wd.up).norm();
                    Int tr;
                    mpz_pow_ui(tr.get_mpz_t(), tt16.get_num().get_mpz_t(), static_cast<unsigned long>(r));
                    const RealBall growth =
                        square(opw2r) / square(opw2) * (Rat(16) * Rat(tr) / (ap.M * ap.M));
                    record(out, "|X*_r(z',u')| <= growth bound", r, -1, RealBall::from(lhs, prec), growth,
                           false);
                }

                grow *= eight_eps;
                decay *= eight_over_eps;
                omw2r *= omw2;
                opw2r *= opw2;
                up_r *= up;
            }
        }
    } catch (const Undecided&) {
        return std::nullopt;
    }
    return out;
}

} // namespace

BoundReport bound_suite(const Int& t, long r_max, const PrecisionPolicy& policy) {
    if (t < 128) {
        throw OutOfMethodRange("bound_suite needs t >= 128, got " + t.get_str());
    }
    if (r_max < 0) {
        throw DomainError("bound_suite needs r_max >= 0");
    }
    std::array<std::vector<ApproximantPair>, 2> seqs{approximant_sequence(t, r_max, 0),
                                                     approximant_sequence(t, r_max, 1)};
    auto res = escalate(policy, "bound_suite",
                        [&](unsigned prec) { return bound_attempt(t, r_max, seqs, prec); });
    BoundReport rep;
    rep.t = t;
    rep.r_max = r_max;
    rep.precision = res.precision;
    rep.checks = std::move(res.value);
    return rep;
}

// --------------------------------------------------------------- vanishing

VanishingReport vanishing_order(const Int& t, long r, int j, unsigned precision) {
    require_t_at_least(t, 5, "vanishing_order");
    if (r < 0 || r > 6) {
        throw DomainError("vanishing_order supports 0 <= r <= 6");
    }
    if (j < 0 || j > 3) {
        throw DomainError("root index must be in 0..3");
    }
    PrecisionPolicy{precision, precision}.validate();
    const ThueData td = build_thue_data(t);
    const PolySequences ps = ab_polys(td, r);
    const RealBall beta = roots_at(t, precision).beta[static_cast<std::size_t>(j)];

    VanishingReport rep;
    rep.t = t;
    rep.r = r;
    rep.j = j;
    rep.precision = precision;
    rep.radius_exponent =
        std::max(30L, static_cast<long>(std::floor(precision * std::log10(2.0) / 2)));
    rep.vanish = true;
    RatPoly a = ps.A[static_cast<std::size_t>(r)];
    RatPoly b = ps.B[static_cast<std::size_t>(r)];
    for (long k = 0; k <= 2 * r + 1; ++k) {
        RealBall v = beta * evaluate(a, beta) - evaluate(b, beta);
        rep.values.push_back(ball_str(v));
        if (k <= 2 * r) {
            rep.vanish = rep.vanish && v.contains_zero() && v.rad_less_than_pow10(-rep.radius_exponent);
        } else {
            rep.next_nonzero = !v.contains_zero();
        }
        a = a.derivative();
        b = b.derivative();
    }
    return rep;
}

DetReport det_nonvanish(const Int& t, long r_max, int j) {
    if (r_max < 1) {
        throw DomainError("det_nonvanish needs r_max >= 1");
    }
    const auto seq = approximant_sequence(t, r_max, j);
    DetReport rep;
    rep.t = t;
    rep.r_max = r_max;
    rep.j = j;
    rep.all_nonzero = true;
    for (long r = 0; r < r_max; ++r) {
        const auto& cur = seq[static_cast<std::size_t>(r)];
        const auto& nxt = seq[static_cast<std::size_t>(r + 1)];
        Int d = cur.P * nxt.Q - nxt.P * cur.Q;
        rep.all_nonzero = rep.all_nonzero && d != 0;
        rep.dets.push_back(std::move(d));
    }
    return rep;
}

DefectReport approx_report(const Int& t, long r, int j, const PrecisionPolicy& policy) {
    DefectReport rep;
    rep.pair = approximants(t, r, j);
    auto res = escalate(policy, "approx_report", [&](unsigned prec) -> std::optional<DefectReport> {
        const Roots rs = roots_at(t, prec);
        const RealBall S = RealBall::from(rep.pair.Q, prec) * rs.beta[static_cast<std::size_t>(j)] -
                           RealBall::from(rep.pair.P, prec);
        const RealBall bound = RealBall::pi(prec) * Rat(t) / Rat(t * t + 16) *
                               pow(RealBall::from(8L, prec) / rs.epsilon, static_cast<unsigned long>(r));
        const Certainty c = ball_less_equal(abs(S), bound);
        if (c == Certainty::Undecided || !relatively_tight(S, 20)) {
            return std::nullopt;
        }
        DefectReport out = rep;
        out.precision = prec;
        out.defect = S.to_string(15);
        out.bound = bound.to_string(15);
        out.certified = c == Certainty::True;
        return out;
    });
    return std::move(res.value);
}

} // namespace qt::pade
