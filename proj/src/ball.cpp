#include "qt/ball.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>

namespace qt {

using detail::Mpfr;

namespace {

constexpr mpfr_prec_t kRad = RealBall::kRadPrec;

mpfr_prec_t max_prec(const RealBall& a, const RealBall& b) {
    return static_cast<mpfr_prec_t>(std::max(a.precision(), b.precision()));
}

// |x| rounded up (or down) to radius precision.
Mpfr abs_rounded(const Mpfr& x, mpfr_rnd_t rnd) {
    Mpfr r(kRad);
    mpfr_abs(r.get(), x.get(), rnd);
    return r;
}

std::string mpfr_format(const char* fmt, int digits, mpfr_srcptr x) {
    char* buf = nullptr;
    int n = digits >= 0 ? mpfr_asprintf(&buf, fmt, digits, x) : mpfr_asprintf(&buf, fmt, x);
    if (n < 0 || buf == nullptr) {
        return "?";
    }
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

} // namespace

const char* to_string(Certainty c) {
    switch (c) {
    case Certainty::True: return "certified-true";
    case Certainty::False: return "certified-false";
    default: return "undecided";
    }
}

RealBall::RealBall(unsigned prec) : mid_(static_cast<mpfr_prec_t>(prec)), rad_(kRad) {}

void RealBall::set_infinite() {
    mpfr_set_zero(mid_.get(), 1);
    mpfr_set_inf(rad_.get(), 1);
}

void RealBall::add_rounding_error(int ternary) {
    if (ternary == 0) {
        return;
    }
    if (!mpfr_regular_p(mid_.get())) {
        // Only reachable on exponent underflow/overflow.
        set_infinite();
        return;
    }
    Mpfr ulp(kRad);
    mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid_.get()) - mid_.prec(), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
}

RealBall RealBall::from(const Rat& q, unsigned prec) {
    RealBall b(prec);
    b.add_rounding_error(mpfr_set_q(b.mid_.get(), q.get_mpq_t(), MPFR_RNDN));
    return b;
}

RealBall RealBall::from(const Int& n, unsigned prec) {
    RealBall b(prec);
    b.add_rounding_error(mpfr_set_z(b.mid_.get(), n.get_mpz_t(), MPFR_RNDN));
    return b;
}

RealBall RealBall::from(long n, unsigned prec) {
    RealBall b(prec);
    b.add_rounding_error(mpfr_set_si(b.mid_.get(), n, MPFR_RNDN));
    return b;
}

RealBall RealBall::from_mid_rad(double mid, double rad, unsigned prec) {
    RealBall b(std::max(prec, 64U));
    mpfr_set_d(b.mid_.get(), mid, MPFR_RNDN);
    mpfr_set_d(b.rad_.get(), std::abs(rad), MPFR_RNDU);
    return b;
}

RealBall RealBall::pi(unsigned prec) {
    RealBall b(prec);
    b.add_rounding_error(mpfr_const_pi(b.mid_.get(), MPFR_RNDN));
    return b;
}

RealBall RealBall::from_hex(const std::string& mid, const std::string& rad, unsigned prec) {
    RealBall b(prec);
    if (mpfr_set_str(b.mid_.get(), mid.c_str(), 0, MPFR_RNDN) != 0 ||
        mpfr_set_str(b.rad_.get(), rad.c_str(), 0, MPFR_RNDU) != 0) {
        throw DomainError("malformed ball serialisation: " + mid + " +/- " + rad);
    }
    return b;
}

bool RealBall::is_finite() const { return mpfr_number_p(mid_.get()) && mpfr_number_p(rad_.get()); }

bool RealBall::is_exact() const { return mpfr_zero_p(rad_.get()); }

Mpfr RealBall::lower() const {
    Mpfr lo(mid_.prec() + 64);
    mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return lo;
}

Mpfr RealBall::upper() const {
    Mpfr hi(mid_.prec() + 64);
    mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return hi;
}

bool RealBall::contains_zero() const {
    if (!is_finite()) {
        return true;
    }
    return mpfr_sgn(lower().get()) <= 0 && mpfr_sgn(upper().get()) >= 0;
}

bool RealBall::contains(const Rat& q) const {
    if (!is_finite()) {
        return true;
    }
    return mpfr_cmp_q(lower().get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(upper().get(), q.get_mpq_t()) >= 0;
}

bool RealBall::is_positive() const { return is_finite() && mpfr_sgn(lower().get()) > 0; }

bool RealBall::is_negative() const { return is_finite() && mpfr_sgn(upper().get()) < 0; }

bool RealBall::rad_less_than(double bound) const {
    return is_finite() && mpfr_cmp_d(rad_.get(), bound) < 0;
}

bool RealBall::rad_less_than_pow10(long exponent) const {
    if (!is_finite()) {
        return false;
    }
    Mpfr bound(kRad);
    mpfr_set_ui(bound.get(), 10, MPFR_RNDN);
    mpfr_pow_si(bound.get(), bound.get(), exponent, MPFR_RNDD);
    return mpfr_less_p(rad_.get(), bound.get());
}

std::optional<Int> RealBall::certified_floor() const {
    if (!is_finite()) {
        return std::nullopt;
    }
    Int lo;
    Int hi;
    mpfr_get_z(lo.get_mpz_t(), lower().get(), MPFR_RNDD);
    mpfr_get_z(hi.get_mpz_t(), upper().get(), MPFR_RNDD);
    if (lo != hi) {
        return std::nullopt;
    }
    return lo;
}

Int RealBall::round_mid() const {
    Int n;
    mpfr_get_z(n.get_mpz_t(), mid_.get(), MPFR_RNDN);
    return n;
}

double RealBall::to_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }

double RealBall::rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

std::string RealBall::mid_string(int digits) const { return mpfr_format("%.*Rg", digits, mid_.get()); }

std::string RealBall::to_string(int digits) const {
    return mid_string(digits) + " +/- " + mpfr_format("%.3RUe", -1, rad_.get());
}

std::string RealBall::mid_hex() const { return mpfr_format("%Ra", -1, mid_.get()); }

std::string RealBall::rad_hex() const { return mpfr_format("%Ra", -1, rad_.get()); }

RealBall& RealBall::operator+=(const RealBall& o) {
    if (!is_finite() || !o.is_finite()) {
        set_infinite();
        return *this;
    }
    Mpfr m(max_prec(*this, o));
    int t = mpfr_add(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mid_ = std::move(m);
    mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    add_rounding_error(t);
    return *this;
}

RealBall& RealBall::operator-=(const RealBall& o) {
    if (!is_finite() || !o.is_finite()) {
        set_infinite();
        return *this;
    }
    Mpfr m(max_prec(*this, o));
    int t = mpfr_sub(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mid_ = std::move(m);
    mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    add_rounding_error(t);
    return *this;
}

RealBall& RealBall::operator*=(const RealBall& o) {
    if (!is_finite() || !o.is_finite()) {
        set_infinite();
        return *this;
    }
    Mpfr am = abs_rounded(mid_, MPFR_RNDU);
    Mpfr bm = abs_rounded(o.mid_, MPFR_RNDU);
    Mpfr r(kRad);
    Mpfr tmp(kRad);
    mpfr_mul(r.get(), am.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), bm.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), tmp.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), tmp.get(), MPFR_RNDU);

    Mpfr m(max_prec(*this, o));
    int t = mpfr_mul(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mid_ = std::move(m);
    rad_ = std::move(r);
    add_rounding_error(t);
    return *this;
}

RealBall& RealBall::operator/=(const RealBall& o) {
    if (!is_finite() || !o.is_finite() || o.contains_zero()) {
        set_infinite();
        return *this;
    }
    Mpfr am = abs_rounded(mid_, MPFR_RNDU);
    Mpfr bm_up = abs_rounded(o.mid_, MPFR_RNDU);
    Mpfr bm_dn = abs_rounded(o.mid_, MPFR_RNDD);

    Mpfr num(kRad);
    Mpfr tmp(kRad);
    mpfr_mul(num.get(), rad_.get(), bm_up.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), am.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_add(num.get(), num.get(), tmp.get(), MPFR_RNDU);

    Mpfr den(kRad);
    mpfr_sub(den.get(), bm_dn.get(), o.rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(den.get()) <= 0) {
        set_infinite();
        return *this;
    }
    mpfr_mul(den.get(), den.get(), bm_dn.get(), MPFR_RNDD);
    Mpfr r(kRad);
    mpfr_div(r.get(), num.get(), den.get(), MPFR_RNDU);

    Mpfr m(max_prec(*this, o));
    int t = mpfr_div(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mid_ = std::move(m);
    rad_ = std::move(r);
    add_rounding_error(t);
    return *this;
}

RealBall operator-(const RealBall& a) {
    RealBall b = a;
    mpfr_neg(b.mid_.get(), b.mid_.get(), MPFR_RNDN);
    return b;
}

RealBall abs(const RealBall& a) {
    RealBall b = a;
    mpfr_abs(b.mid_.get(), b.mid_.get(), MPFR_RNDN);
    return b;
}

RealBall sqrt(const RealBall& a) {
    RealBall b(a.precision());
    if (!a.is_finite()) {
        b.set_infinite();
        return b;
    }
    if (a.is_exact() && mpfr_sgn(a.mid_.get()) >= 0) {
        b.add_rounding_error(mpfr_sqrt(b.mid_.get(), a.mid_.get(), MPFR_RNDN));
        return b;
    }
    Mpfr lo(kRad);
    mpfr_sub(lo.get(), a.mid_.get(), a.rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(lo.get()) <= 0) {
        b.set_infinite();
        return b;
    }
    // |sqrt(x) - sqrt(m)| = |x - m| / (sqrt(x) + sqrt(m)) <= r / (sqrt(lo) + sqrt(m))
    Mpfr den(kRad);
    Mpfr sm(kRad);
    mpfr_sqrt(den.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(sm.get(), a.mid_.get(), MPFR_RNDD);
    mpfr_add(den.get(), den.get(), sm.get(), MPFR_RNDD);
    mpfr_div(b.rad_.get(), a.rad_.get(), den.get(), MPFR_RNDU);
    b.add_rounding_error(mpfr_sqrt(b.mid_.get(), a.mid_.get(), MPFR_RNDN));
    return b;
}

RealBall log(const RealBall& a) {
    RealBall b(a.precision());
    if (!a.is_finite()) {
        b.set_infinite();
        return b;
    }
    Mpfr lo(kRad);
    mpfr_sub(lo.get(), a.mid_.get(), a.rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(lo.get()) <= 0) {
        b.set_infinite();
        return b;
    }
    mpfr_div(b.rad_.get(), a.rad_.get(), lo.get(), MPFR_RNDU);
    b.add_rounding_error(mpfr_log(b.mid_.get(), a.mid_.get(), MPFR_RNDN));
    return b;
}

RealBall exp(const RealBall& a) {
    RealBall b(a.precision());
    if (!a.is_finite()) {
        b.set_infinite();
        return b;
    }
    if (!a.is_exact()) {
        // |e^x - e^m| <= e^(m + r) * r
        Mpfr top(kRad);
        mpfr_add(top.get(), a.mid_.get(), a.rad_.get(), MPFR_RNDU);
        mpfr_exp(top.get(), top.get(), MPFR_RNDU);
        mpfr_mul(b.rad_.get(), top.get(), a.rad_.get(), MPFR_RNDU);
    }
    b.add_rounding_error(mpfr_exp(b.mid_.get(), a.mid_.get(), MPFR_RNDN));
    return b;
}

RealBall atan(const RealBall& a) {
    RealBall b(a.precision());
    if (!a.is_finite()) {
        b.set_infinite();
        return b;
    }
    mpfr_set(b.rad_.get(), a.rad_.get(), MPFR_RNDU);
    b.add_rounding_error(mpfr_atan(b.mid_.get(), a.mid_.get(), MPFR_RNDN));
    return b;
}

bool operator==(const RealBall& a, const RealBall& b) {
    return a.precision() == b.precision() && mpfr_equal_p(a.mid_.get(), b.mid_.get()) &&
           mpfr_equal_p(a.rad_.get(), b.rad_.get());
}

RealBall operator+(RealBall a, const RealBall& b) { return a += b; }
RealBall operator-(RealBall a, const RealBall& b) { return a -= b; }
RealBall operator*(RealBall a, const RealBall& b) { return a *= b; }
RealBall operator/(RealBall a, const RealBall& b) { return a /= b; }
RealBall operator+(const RealBall& a, const Rat& q) { return a + RealBall::from(q, a.precision()); }
RealBall operator-(const RealBall& a, const Rat& q) { return a - RealBall::from(q, a.precision()); }
RealBall operator-(const Rat& q, const RealBall& a) { return RealBall::from(q, a.precision()) - a; }
RealBall operator*(const RealBall& a, const Rat& q) { return a * RealBall::from(q, a.precision()); }
RealBall operator*(const Rat& q, const RealBall& a) { return a * q; }
RealBall operator/(const RealBall& a, const Rat& q) { return a / RealBall::from(q, a.precision()); }
RealBall operator/(const Rat& q, const RealBall& a) { return RealBall::from(q, a.precision()) / a; }

RealBall pow(const RealBall& base, unsigned long e) {
    RealBall result = RealBall::from(1L, base.precision());
    RealBall b = base;
    while (e > 0) {
        if (e & 1UL) {
            result *= b;
        }
        e >>= 1UL;
        if (e > 0) {
            b *= b;
        }
    }
    return result;
}

RealBall pow(const RealBall& base, const RealBall& e) { return exp(e * log(base)); }

RealBall square(const RealBall& a) { return a * a; }

RealBall evaluate(const RatPoly& p, const RealBall& x) {
    RealBall acc(x.precision());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

bool relatively_tight(const RealBall& x, long bits) {
    if (!x.is_finite() || x.contains_zero()) {
        return false;
    }
    Mpfr scaled(RealBall::kRadPrec);
    mpfr_mul_2si(scaled.get(), x.rad().get(), bits, MPFR_RNDU);
    return mpfr_cmpabs(scaled.get(), x.mid().get()) < 0;
}

Certainty ball_strict_less(const RealBall& x, const RealBall& y) {
    if (!x.is_finite() || !y.is_finite()) {
        return Certainty::Undecided;
    }
    if (mpfr_less_p(x.upper().get(), y.lower().get())) {
        return Certainty::True;
    }
    if (mpfr_greaterequal_p(x.lower().get(), y.upper().get())) {
        return Certainty::False;
    }
    return Certainty::Undecided;
}

Certainty ball_less_equal(const RealBall& x, const RealBall& y) {
    if (!x.is_finite() || !y.is_finite()) {
        return Certainty::Undecided;
    }
    if (mpfr_lessequal_p(x.upper().get(), y.lower().get())) {
        return Certainty::True;
    }
    if (mpfr_greater_p(x.lower().get(), y.upper().get())) {
        return Certainty::False;
    }
    return Certainty::Undecided;
}

// ------------------------------------------------------------ ComplexBall

ComplexBall ComplexBall::from(const GaussRat& z, unsigned prec) {
    return {RealBall::from(z.re, prec), RealBall::from(z.im, prec)};
}

RealBall ComplexBall::norm() const { return square(re_) + square(im_); }

RealBall ComplexBall::abs() const { return sqrt(norm()); }

std::string ComplexBall::to_string(int digits) const {
    return "(" + re_.to_string(digits) + ") + (" + im_.to_string(digits) + ")i";
}

ComplexBall& ComplexBall::operator+=(const ComplexBall& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ComplexBall& ComplexBall::operator-=(const ComplexBall& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ComplexBall& ComplexBall::operator*=(const ComplexBall& o) {
    RealBall r = re_ * o.re_ - im_ * o.im_;
    RealBall i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

ComplexBall& ComplexBall::operator/=(const ComplexBall& o) {
    RealBall n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

ComplexBall operator+(ComplexBall a, const ComplexBall& b) { return a += b; }
ComplexBall operator-(ComplexBall a, const ComplexBall& b) { return a -= b; }
ComplexBall operator*(ComplexBall a, const ComplexBall& b) { return a *= b; }
ComplexBall operator/(ComplexBall a, const ComplexBall& b) { return a /= b; }
ComplexBall operator*(const ComplexBall& a, const RealBall& b) { return {a.re() * b, a.im() * b}; }

// -------------------------------------------------------- PrecisionPolicy

PrecisionPolicy PrecisionPolicy::from_env() {
    PrecisionPolicy p;
    if (const char* cap = std::getenv("QT_PRECISION_CAP"); cap != nullptr && *cap != '\0') {
        char* end = nullptr;
        unsigned long v = std::strtoul(cap, &end, 10);
        if (end == cap || *end != '\0' || v > (1UL << 24)) {
            throw DomainError(std::string("invalid QT_PRECISION_CAP: ") + cap);
        }
        p.cap = static_cast<unsigned>(v);
    }
    p.validate();
    return p;
}

void PrecisionPolicy::validate() const {
    if (start < 64 || start > cap) {
        throw DomainError("precision policy needs 64 <= start <= cap (start " + std::to_string(start) +
                          ", cap " + std::to_string(cap) + ")");
    }
}

} // namespace qt
