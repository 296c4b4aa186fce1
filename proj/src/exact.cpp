#include "qt/exact.hpp"

#include "qt/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace qt {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat frac(long num, long den) { return make_rat(Int(num), Int(den)); }

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

Int parse_int(const std::string& s) {
    if (s.empty()) {
        throw DomainError("empty integer literal");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw DomainError("not an integer: '" + s + "'");
    }
    return Int(s[0] == '+' ? s.substr(1) : s, 10);
}

int jacobi(const Int& a_in, const Int& n_in) {
    if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t())) {
        throw DomainError("jacobi symbol needs an odd positive modulus, got " + n_in.get_str());
    }
    Int n = n_in;
    Int a;
    mpz_mod(a.get_mpz_t(), a_in.get_mpz_t(), n.get_mpz_t());
    int result = 1;
    while (a != 0) {
        unsigned long twos = mpz_scan1(a.get_mpz_t(), 0);
        if (twos > 0) {
            mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
            unsigned long n_mod8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if ((twos & 1UL) && (n_mod8 == 3 || n_mod8 == 5)) {
                result = -result;
            }
        }
        // reciprocity
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) {
            result = -result;
        }
        std::swap(a, n);
        mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    }
    return n == 1 ? result : 0;
}

std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0) {
        return std::nullopt;
    }
    Int root;
    Int rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) {
        return std::nullopt;
    }
    return root;
}

// ---------------------------------------------------------------- GaussRat

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    Rat n = o.norm();
    if (n == 0) {
        throw DomainError("division by zero Gaussian rational");
    }
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

GaussRat pow(const GaussRat& base, unsigned e) {
    GaussRat result(Rat(1));
    GaussRat b = base;
    while (e > 0) {
        if (e & 1U) {
            result *= b;
        }
        e >>= 1U;
        if (e > 0) {
            b *= b;
        }
    }
    return result;
}

GaussRat i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {Rat(1), Rat(0)};
    case 1: return {Rat(0), Rat(1)};
    case 2: return {Rat(-1), Rat(0)};
    default: return {Rat(0), Rat(-1)};
    }
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
    return os << '(' << z.re << (sgn(z.im) < 0 ? " - " : " + ") << abs(z.im) << "i)";
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rat& c, unsigned degree) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Rat RatPoly::coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }

Rat RatPoly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    }
    return RatPoly(std::move(d));
}

Rat RatPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

GaussRat RatPoly::operator()(const GaussRat& x) const {
    GaussRat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc.re += *it;
    }
    return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rat(0));
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rat(0));
    }
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> prod(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(prod);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rat& c) {
    for (auto& a : coeffs_) {
        a *= c;
    }
    trim();
    return *this;
}

RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
RatPoly operator*(RatPoly a, const Rat& c) { return a *= c; }
RatPoly operator*(const Rat& c, RatPoly a) { return a *= c; }

std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
    if (p.is_zero()) {
        return os << "0";
    }
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) {
            continue;
        }
        os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
        Rat a = abs(c);
        if (a != 1 || k == 0) {
            os << a;
        }
        if (k > 0) {
            os << "X";
            if (k > 1) {
                os << '^' << k;
            }
        }
        first = false;
    }
    return os;
}

namespace {

constexpr std::uint64_t kMaxEnumerableConstant = 100'000'000'000'000ULL; // 1e14

std::vector<Int> divisors(const Int& n_in) {
    Int n = abs(n_in);
    if (n > Int(std::to_string(kMaxEnumerableConstant))) {
        throw DomainError("constant term " + n.get_str() + " too large for divisor enumeration");
    }
    std::uint64_t m = n.get_ui();
    std::vector<Int> small;
    std::vector<Int> large;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.emplace_back(static_cast<unsigned long>(d));
            if (d != m / d) {
                large.emplace_back(static_cast<unsigned long>(m / d));
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<Int> integer_roots(const RatPoly& p) {
    for (const auto& c : p.coeffs()) {
        if (!is_integer(c)) {
            throw DomainError("integer_roots needs integer coefficients");
        }
    }
    if (p.is_zero()) {
        throw DomainError("integer_roots of the zero polynomial");
    }
    std::vector<Int> roots;
    std::size_t shift = 0;
    while (sgn(p.coeffs()[shift]) == 0) {
        ++shift;
    }
    if (shift > 0) {
        roots.emplace_back(0);
    }
    if (static_cast<int>(shift) == p.degree()) {
        return roots;
    }
    std::vector<Rat> rest(p.coeffs().begin() + static_cast<long>(shift), p.coeffs().end());
    RatPoly q(std::move(rest));
    for (const Int& d : divisors(q.coeffs()[0].get_num())) {
        for (int s : {-1, 1}) {
            Int x = d * s;
            if (q(Rat(x)) == 0) {
                roots.push_back(x);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace qt
