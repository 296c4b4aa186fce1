#ifndef QT_EXACT_HPP
#define QT_EXACT_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qt {

// Arbitrary precision integer / always-canonical rational.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);
// Canonical num/den for machine integers; mpq_class(num, den) alone is not.
Rat frac(long num, long den);
Int floor_div(const Int& a, const Int& b);
bool is_integer(const Rat& q);
std::string to_string(const Int& n);
std::string to_string(const Rat& q);
Int parse_int(const std::string& s); // throws DomainError

// Jacobi symbol (a/n) for odd n >= 1. Throws DomainError otherwise.
int jacobi(const Int& a, const Int& n);

// s >= 0 with s*s == n, or nullopt (including for negative n).
std::optional<Int> is_perfect_square(const Int& n);

// Exact complex rational. No polar form is ever stored.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRat i_unit() { return {Rat(0), Rat(1)}; }

    GaussRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
};

GaussRat operator+(GaussRat a, const GaussRat& b);
GaussRat operator-(GaussRat a, const GaussRat& b);
GaussRat operator-(const GaussRat& a);
GaussRat operator*(GaussRat a, const GaussRat& b);
GaussRat operator/(GaussRat a, const GaussRat& b);
GaussRat pow(const GaussRat& base, unsigned e);
// i^k for any integer k.
GaussRat i_pow(long k);
std::ostream& operator<<(std::ostream& os, const GaussRat& z);

// Dense univariate polynomial with rational coefficients, lowest degree first.
class RatPoly {
  public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rat> coeffs);
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly monomial(const Rat& c, unsigned degree);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(unsigned k) const;
    Rat leading() const;

    RatPoly derivative() const;
    Rat operator()(const Rat& x) const;
    GaussRat operator()(const GaussRat& x) const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const Rat& c);

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

RatPoly operator+(RatPoly a, const RatPoly& b);
RatPoly operator-(RatPoly a, const RatPoly& b);
RatPoly operator*(RatPoly a, const RatPoly& b);
RatPoly operator*(RatPoly a, const Rat& c);
RatPoly operator*(const Rat& c, RatPoly a);
std::ostream& operator<<(std::ostream& os, const RatPoly& p);

// Integer roots of a polynomial with integer coefficients, by testing
// divisors of the (x-stripped) constant term. Sorted ascending.
// Throws DomainError when the constant term is too large to enumerate.
std::vector<Int> integer_roots(const RatPoly& p);

} // namespace qt

#endif
