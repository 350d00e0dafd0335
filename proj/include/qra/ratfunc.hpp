#pragma once

#include "qra/laurent.hpp"

namespace qra {

// Element of Q(q). Canonical form: den is an ordinary polynomial in q,
// monic, with nonzero constant term (all q^v units live in num);
// gcd(num, den) = 1 over Q[q]. Zero is 0/1.
class RatFunc {
public:
    RatFunc() : den_(1L) {}
    RatFunc(const Laurent& n) : num_(n), den_(1L) {}  // NOLINT: implicit by design
    explicit RatFunc(const Rat& c) : num_(c), den_(1L) {}
    explicit RatFunc(long n) : num_(n), den_(1L) {}
    RatFunc(const Laurent& num, const Laurent& den) : num_(num), den_(den) { reduce(); }

    static RatFunc q_power(long e) { return RatFunc(Laurent::q_power(e)); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    RatFunc operator-() const;

    RatFunc inverse() const;
    RatFunc pow(long e) const;
    RatFunc bar() const;  // q -> q^{-1}

    bool operator==(const RatFunc&) const = default;

    bool invariant_ok() const;  // canonical-form check (tests)

private:
    Laurent num_, den_;
    void reduce();
};

RatFunc operator+(RatFunc a, const RatFunc& b);
RatFunc operator-(RatFunc a, const RatFunc& b);
RatFunc operator*(RatFunc a, const RatFunc& b);
RatFunc operator/(RatFunc a, const RatFunc& b);

}  // namespace qra
