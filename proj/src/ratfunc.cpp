#include "qra/ratfunc.hpp"

#include "qra/errors.hpp"

namespace qra {

void RatFunc::reduce() {
    if (den_.is_zero()) throw QraError("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = Laurent(1L);
        return;
    }
    // move the denominator's q^v unit into the numerator
    long dl = den_.deg_low();
    if (dl != 0) {
        den_.mul_qpow(-dl);
        num_.mul_qpow(-dl);
    }
    Laurent g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        // g divides the polynomial part of num; shift-invariance of div_exact handles q^v
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
    Rat lead = den_.coeff(den_.deg_high());
    if (lead != 1) {
        num_.mul_rat(Rat(1) / lead);
        den_.mul_rat(Rat(1) / lead);
    }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw QraError("RatFunc: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw QraError("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(1L);
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

bool RatFunc::invariant_ok() const {
    if (den_.is_zero()) return false;
    if (num_.is_zero()) return den_.is_one();
    if (den_.deg_low() != 0) return false;
    if (den_.coeff(den_.deg_high()) != 1) return false;
    return poly_gcd(num_, den_).is_one();
}

RatFunc operator+(RatFunc a, const RatFunc& b) {
    a += b;
    return a;
}
RatFunc operator-(RatFunc a, const RatFunc& b) {
    a -= b;
    return a;
}
RatFunc operator*(RatFunc a, const RatFunc& b) {
    a *= b;
    return a;
}
RatFunc operator/(RatFunc a, const RatFunc& b) {
    a /= b;
    return a;
}

}  // namespace qra
