#include "qt/lucas.hpp"

#include "qt/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qt::lucas {

namespace {

bool is_even(const Int& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

Int sign_pow(long e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool congruent(const Int& a, const Int& b, const Int& m) {
    if (m == 0) {
        return a == b;
    }
    return mod_floor(a - b, abs(m)) == 0;
}

} // namespace

LucasTable lucas_table(const LucasParams& p, long m_max) {
    if (m_max < 0) {
        throw DomainError("lucas_table needs m_max >= 0");
    }
    LucasTable t;
    t.U.reserve(static_cast<std::size_t>(m_max) + 1);
    t.V.reserve(static_cast<std::size_t>(m_max) + 1);
    t.U.emplace_back(2);
    t.V.emplace_back(0);
    if (m_max >= 1) {
        t.U.push_back(p.a);
        t.V.emplace_back(1);
    }
    for (long m = 2; m <= m_max; ++m) {
        auto i = static_cast<std::size_t>(m);
        t.U.push_back(p.a * t.U[i - 1] + p.b * t.U[i - 2]);
        t.V.push_back(p.a * t.V[i - 1] + p.b * t.V[i - 2]);
    }
    return t;
}

LucasPair lucas_uv(const LucasParams& p, long m) {
    if (m < 0) {
        if (p.b != 1) {
            throw DomainError("negative Lucas indices are supported for b = 1 only");
        }
        LucasPair pos = lucas_uv(p, -m);
        return {m, sign_pow(-m) * pos.U, sign_pow(-m + 1) * pos.V};
    }
    LucasTable t = lucas_table(p, m);
    return {m, t.U.back(), t.V.back()};
}

bool gcd_index_identity(const LucasParams& p, long m, long n) {
    if (m < 1 || n < 1) {
        throw DomainError("gcd_index_identity needs m, n >= 1");
    }
    LucasTable t = lucas_table(p, std::max(m, n));
    Int g;
    mpz_gcd(g.get_mpz_t(), t.V[static_cast<std::size_t>(m)].get_mpz_t(),
            t.V[static_cast<std::size_t>(n)].get_mpz_t());
    return g == abs(t.V[static_cast<std::size_t>(std::gcd(m, n))]);
}

int jacobi_vv(const LucasParams& p, long m, long n) {
    if (p.b != 1 || p.a <= 0 || !is_even(p.a)) {
        throw DomainError("jacobi_vv needs a even positive and b = 1");
    }
    if (m < 1 || n < 1 || m % 2 == 0 || n % 2 == 0 || std::gcd(m, n) != 1) {
        throw DomainError("jacobi_vv needs odd coprime positive indices");
    }
    LucasTable t = lucas_table(p, std::max(m, n));
    return jacobi(t.V[static_cast<std::size_t>(m)], t.V[static_cast<std::size_t>(n)]);
}

bool IdentityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

IdentityReport identity_suite(const LucasParams& p, long m, long n, long k) {
    if (p.b != 1) {
        throw DomainError("identity_suite needs b = 1");
    }
    if (m < 0 || n < 0 || k < 0) {
        throw DomainError("identity_suite needs non-negative indices");
    }
    const long top = std::max({m + n, 2 * k * m + n, 2 * m + 1, 2 * k * m});
    LucasTable t = lucas_table(p, top);
    auto U = [&](long i) -> const Int& { return t.U[static_cast<std::size_t>(i)]; };
    auto V = [&](long i) -> const Int& { return t.V[static_cast<std::size_t>(i)]; };
    const Int disc = p.a * p.a + 4;
    const bool a_even = is_even(p.a);

    IdentityReport rep;
    auto add = [&](std::string name, bool ok, bool applicable = true) {
        rep.checks.push_back({std::move(name), applicable ? ok : true, applicable});
    };

    add("sum: 2V(m+n) = U(m)V(n) + U(n)V(m)", 2 * V(m + n) == U(m) * V(n) + U(n) * V(m));
    add("norm: U(m)^2 - (a^2+4)V(m)^2 = 4(-1)^m", U(m) * U(m) - disc * V(m) * V(m) == 4 * sign_pow(m));
    add("double: U(2km) - 2(-1)^(km) = (a^2+4)V(km)^2",
        U(2 * k * m) - 2 * sign_pow(k * m) == disc * V(k * m) * V(k * m));
    add("half-U congruence: U(2km)/2 = (-1)^(km) mod V(m)",
        a_even && is_even(U(2 * k * m)) && congruent(U(2 * k * m) / 2, sign_pow(k * m), V(m)), a_even);
    add("shift congruence: V(2km+n) = (-1)^(km) V(n) mod V(m)",
        congruent(V(2 * k * m + n), sign_pow(k * m) * V(n), V(m)), a_even);
    add("odd index: V(2m+1) = V(m)^2 + V(m+1)^2", V(2 * m + 1) == V(m) * V(m) + V(m + 1) * V(m + 1));
    add("odd index mod 4: V(2m+1) = 1 mod 4", mod_floor(V(2 * m + 1), 4) == 1, a_even);
    LucasPair neg = lucas_uv(p, -m);
    add("negative index: V(-m) = (-1)^(m+1) V(m), U(-m) = (-1)^m U(m)",
        neg.V == sign_pow(m + 1) * V(m) && neg.U == sign_pow(m) * U(m));
    return rep;
}

} // namespace qt::lucas
