#pragma once

#include <vector>

#include "qra/laurent.hpp"
#include "qra/ratfunc.hpp"

namespace qra {

// coefficients of the l-th cyclotomic polynomial, ascending degree (memoized)
const std::vector<Rat>& cyclotomic_poly(long ell);
long phi_degree(long ell);  // its degree

// Element of Q(eps) = Q[x] / Phi_l(x), eps a primitive l-th root of unity.
// ell == 0 marks an unbound zero (default-constructed); arithmetic with a
// bound operand adopts its modulus.
class Cyc {
public:
    Cyc() = default;
    static Cyc zero(long ell) { return from_rat(Rat(0), ell); }
    static Cyc from_rat(const Rat& r, long ell);
    static Cyc from_long(long n, long ell) { return from_rat(Rat(n), ell); }
    static Cyc eps_power(long j, long ell);  // eps^j, any j (reduced mod l)

    long ell() const { return ell_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rat() const;  // lies in Q
    Rat as_rat() const;   // throws unless is_rat()

    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);
    Cyc operator-() const;

    Cyc inverse() const;
    Cyc pow(long e) const;
    Cyc conj() const;           // eps -> eps^{-1}
    Cyc galois(long j) const;   // eps -> eps^j, gcd(j, l) = 1

    bool operator==(const Cyc& o) const;
    bool operator<(const Cyc& o) const;  // lex on coefficients (total order for sorting)

    // coefficient of eps^i, 0 <= i < phi(l)
    Rat coeff(long i) const;

private:
    long ell_ = 0;
    std::vector<Rat> c_;  // size phi(ell_) when bound, reduced mod Phi_l

    void bind(long ell);
    static long common_ell(const Cyc& a, const Cyc& b);
    friend Cyc cyc_from_coeffs(std::vector<Rat> v, long ell);
};

Cyc operator+(Cyc a, const Cyc& b);
Cyc operator-(Cyc a, const Cyc& b);
Cyc operator*(Cyc a, const Cyc& b);
Cyc operator/(Cyc a, const Cyc& b);

// evaluate at q = eps
Cyc cyc_eval(const Laurent& f, long ell);

// evaluate a reduced rational function at q = eps; throws PoleAtRoot if the
// canonical denominator vanishes there (Phi_l irreducible over Q makes the
// reduced denominator's vanishing a genuine pole)
Cyc specialize(const RatFunc& f, long ell);
bool has_pole(const RatFunc& f, long ell);

Cyc qint_eps(long n, long ell);
Cyc qfact_eps(long n, long ell);
Cyc qbinom_eps(long n, long r, long ell);

}  // namespace qra
