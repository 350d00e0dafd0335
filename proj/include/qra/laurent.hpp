#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qra/rationals.hpp"

namespace qra {

// Sparse Laurent polynomial in q over Q. Invariant: no stored coefficient is zero.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rat& c) {
        if (c != 0) c_[0] = c;
    }
    explicit Laurent(long n) : Laurent(Rat(n)) {}

    static Laurent q_power(long e, const Rat& c = Rat(1));

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
    Rat coeff(long e) const;
    long deg_low() const;   // throws on zero
    long deg_high() const;  // throws on zero

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent operator-() const;
    Laurent& mul_rat(const Rat& c);
    Laurent& mul_qpow(long e);  // multiply by q^e

    Laurent bar() const;                // q -> q^{-1}
    Laurent subst_power(long k) const;  // q -> q^k, k != 0

    const std::map<long, Rat>& terms() const { return c_; }
    bool operator==(const Laurent&) const = default;

    // dense coefficients from deg_low upward, plus the shift (deg_low); zero -> ({}, 0)
    std::pair<std::vector<Rat>, long> poly_view() const;
    static Laurent from_poly(const std::vector<Rat>& v, long shift);

private:
    std::map<long, Rat> c_;
};

Laurent operator+(Laurent a, const Laurent& b);
Laurent operator-(Laurent a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);

// exact division; throws QraError if b == 0 or the remainder is nonzero
Laurent div_exact(const Laurent& a, const Laurent& b);

// monic gcd of the polynomial parts (q^v units ignored); gcd(0,0) = 0
Laurent poly_gcd(const Laurent& a, const Laurent& b);

}  // namespace qra
