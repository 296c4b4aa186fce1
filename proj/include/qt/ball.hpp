#ifndef QT_BALL_HPP
#define QT_BALL_HPP

#include "qt/errors.hpp"
#include "qt/exact.hpp"

#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace qt {

namespace detail {

// Owning handle for an mpfr_t.
class Mpfr {
  public:
    explicit Mpfr(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Mpfr(const Mpfr& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpfr(Mpfr&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Mpfr& operator=(Mpfr o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpfr() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  private:
    mpfr_t v_;
};

} // namespace detail

enum class Certainty { True, False, Undecided };

const char* to_string(Certainty c);

// Midpoint-radius enclosure of a real number. The midpoint carries the
// working precision; the radius is a 64-bit upper bound. Every operation
// returns a ball containing the exact image of every point of its inputs.
class RealBall {
  public:
    static constexpr mpfr_prec_t kRadPrec = 64;

    explicit RealBall(unsigned prec = 128);

    static RealBall from(const Rat& q, unsigned prec);
    static RealBall from(const Int& n, unsigned prec);
    static RealBall from(long n, unsigned prec);
    // Ball centred at mid with the given radius; both are taken exactly
    // from their decimal/double values.
    static RealBall from_mid_rad(double mid, double rad, unsigned prec);
    static RealBall pi(unsigned prec);
    // Hexadecimal (exact) serialisation of the two components.
    static RealBall from_hex(const std::string& mid, const std::string& rad, unsigned prec);

    unsigned precision() const { return static_cast<unsigned>(mid_.prec()); }
    bool is_finite() const;
    bool is_exact() const;
    bool contains_zero() const;
    bool contains(const Rat& q) const;
    // Certified sign tests.
    bool is_positive() const;
    bool is_negative() const;
    bool rad_less_than(double bound) const;
    bool rad_less_than_pow10(long exponent) const;

    // floor(x) if every point of the ball has the same floor.
    std::optional<Int> certified_floor() const;
    // Some integer n with |x - n| <= 1/2 + rad; used for nearest-integer picks.
    Int round_mid() const;

    double to_double() const;
    double rad_double() const;
    std::string mid_string(int digits = 20) const;
    std::string to_string(int digits = 20) const; // "mid +/- rad"
    std::string mid_hex() const;
    std::string rad_hex() const;

    const detail::Mpfr& mid() const { return mid_; }
    const detail::Mpfr& rad() const { return rad_; }
    // Directed endpoints at precision() + 64 bits.
    detail::Mpfr lower() const;
    detail::Mpfr upper() const;

    RealBall& operator+=(const RealBall& o);
    RealBall& operator-=(const RealBall& o);
    RealBall& operator*=(const RealBall& o);
    RealBall& operator/=(const RealBall& o);

    friend RealBall operator-(const RealBall& a);
    friend RealBall abs(const RealBall& a);
    friend RealBall sqrt(const RealBall& a);
    friend RealBall log(const RealBall& a);
    friend RealBall exp(const RealBall& a);
    friend RealBall atan(const RealBall& a);
    friend bool operator==(const RealBall& a, const RealBall& b);

  private:
    void add_rounding_error(int ternary);
    void set_infinite();

    detail::Mpfr mid_;
    detail::Mpfr rad_;
};

RealBall operator+(RealBall a, const RealBall& b);
RealBall operator-(RealBall a, const RealBall& b);
RealBall operator*(RealBall a, const RealBall& b);
RealBall operator/(RealBall a, const RealBall& b);
RealBall operator+(const RealBall& a, const Rat& q);
RealBall operator-(const RealBall& a, const Rat& q);
RealBall operator-(const Rat& q, const RealBall& a);
RealBall operator*(const RealBall& a, const Rat& q);
RealBall operator*(const Rat& q, const RealBall& a);
RealBall operator/(const RealBall& a, const Rat& q);
RealBall operator/(const Rat& q, const RealBall& a);
RealBall pow(const RealBall& base, unsigned long e);
// base^e = exp(e log base), base certified positive.
RealBall pow(const RealBall& base, const RealBall& e);
RealBall square(const RealBall& a);
// Horner evaluation of an exact polynomial on a ball.
RealBall evaluate(const RatPoly& p, const RealBall& x);

// Finite, bounded away from zero, and rad * 2^bits < |mid|.
bool relatively_tight(const RealBall& x, long bits);

// certified-true iff sup(x) < inf(y); certified-false iff inf(x) >= sup(y).
Certainty ball_strict_less(const RealBall& x, const RealBall& y);
// certified-true iff sup(x) <= inf(y).
Certainty ball_less_equal(const RealBall& x, const RealBall& y);

// Exact complex enclosure as a rectangle of two real balls.
class ComplexBall {
  public:
    explicit ComplexBall(unsigned prec = 128) : re_(prec), im_(prec) {}
    ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
    static ComplexBall from(const GaussRat& z, unsigned prec);

    const RealBall& re() const { return re_; }
    const RealBall& im() const { return im_; }
    unsigned precision() const { return re_.precision(); }

    ComplexBall conj() const { return {re_, -im_}; }
    RealBall norm() const; // |z|^2
    RealBall abs() const;
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    std::string to_string(int digits = 20) const;

    ComplexBall& operator+=(const ComplexBall& o);
    ComplexBall& operator-=(const ComplexBall& o);
    ComplexBall& operator*=(const ComplexBall& o);
    ComplexBall& operator/=(const ComplexBall& o);

  private:
    RealBall re_;
    RealBall im_;
};

ComplexBall operator+(ComplexBall a, const ComplexBall& b);
ComplexBall operator-(ComplexBall a, const ComplexBall& b);
ComplexBall operator*(ComplexBall a, const ComplexBall& b);
ComplexBall operator/(ComplexBall a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const RealBall& b);

// Precision escalation: start bits, doubled on every undecided attempt,
// up to and including cap bits.
struct PrecisionPolicy {
    unsigned start = 128;
    unsigned cap = 16384;

    // Default policy with QT_PRECISION_CAP applied when set.
    static PrecisionPolicy from_env();
    void validate() const; // throws DomainError
};

template <class T>
struct Escalated {
    T value;
    unsigned precision;
};

// attempt(prec) returns std::optional<T>; nullopt means undecided.
template <class F>
auto escalate(const PrecisionPolicy& policy, std::string_view what, F&& attempt)
    -> Escalated<typename std::invoke_result_t<F&, unsigned>::value_type> {
    policy.validate();
    for (unsigned prec = policy.start;; prec = std::min(prec * 2, policy.cap)) {
        auto r = attempt(prec);
        if (r) {
            return {std::move(*r), prec};
        }
        if (prec >= policy.cap) {
            throw PrecisionCapExceeded(std::string(what) + ": undecided at precision cap of " +
                                       std::to_string(policy.cap) + " bits");
        }
    }
}

} // namespace qt

#endif
