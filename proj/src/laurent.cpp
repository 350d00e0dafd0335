#include "qra/laurent.hpp"

#include "qra/errors.hpp"

namespace qra {

Laurent Laurent::q_power(long e, const Rat& c) {
    Laurent r;
    if (c != 0) r.c_[e] = c;
    return r;
}

Rat Laurent::coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

long Laurent::deg_low() const {
    if (c_.empty()) throw QraError("deg_low of zero");
    return c_.begin()->first;
}

long Laurent::deg_high() const {
    if (c_.empty()) throw QraError("deg_high of zero");
    return c_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) {
        Rat s = coeff(e) + c;
        if (s == 0)
            c_.erase(e);
        else
            c_[e] = s;
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) {
        Rat s = coeff(e) - c;
        if (s == 0)
            c_.erase(e);
        else
            c_[e] = s;
    }
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.c_) c = -c;
    return r;
}

Laurent& Laurent::mul_rat(const Rat& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [e, v] : c_) v *= c;
    return *this;
}

Laurent& Laurent::mul_qpow(long e) {
    if (e == 0 || c_.empty()) return *this;
    std::map<long, Rat> shifted;
    for (auto& [k, v] : c_) shifted.emplace(k + e, std::move(v));
    c_ = std::move(shifted);
    return *this;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

Laurent Laurent::subst_power(long k) const {
    if (k == 0) throw QraError("subst_power: k must be nonzero");
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e * k] = c;
    return r;
}

std::pair<std::vector<Rat>, long> Laurent::poly_view() const {
    if (c_.empty()) return {{}, 0};
    long lo = deg_low(), hi = deg_high();
    std::vector<Rat> v(static_cast<size_t>(hi - lo + 1), Rat(0));
    for (const auto& [e, c] : c_) v[static_cast<size_t>(e - lo)] = c;
    return {v, lo};
}

Laurent Laurent::from_poly(const std::vector<Rat>& v, long shift) {
    Laurent r;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) r.c_[shift + static_cast<long>(i)] = v[i];
    return r;
}

Laurent operator+(Laurent a, const Laurent& b) {
    a += b;
    return a;
}

Laurent operator-(Laurent a, const Laurent& b) {
    a -= b;
    return a;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.is_zero() || b.is_zero()) return r;
    std::map<long, Rat> acc;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) acc[ea + eb] += ca * cb;
    std::vector<Rat> v;
    long lo = acc.begin()->first;
    long hi = acc.rbegin()->first;
    v.assign(static_cast<size_t>(hi - lo + 1), Rat(0));
    for (const auto& [e, c] : acc) v[static_cast<size_t>(e - lo)] = c;
    return Laurent::from_poly(v, lo);
}

Laurent div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw QraError("div_exact by zero");
    if (a.is_zero()) return Laurent();
    auto [av, alo] = a.poly_view();
    auto [bv, blo] = b.poly_view();
    if (av.size() < bv.size()) throw QraError("div_exact: not divisible (degree)");
    std::vector<Rat> quot(av.size() - bv.size() + 1, Rat(0));
    std::vector<Rat> rem = av;
    const Rat& lead = bv.back();
    for (size_t i = quot.size(); i-- > 0;) {
        Rat c = rem[i + bv.size() - 1] / lead;
        quot[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < bv.size(); ++j) rem[i + j] -= c * bv[j];
    }
    for (const Rat& c : rem)
        if (c != 0) throw QraError("div_exact: remainder nonzero");
    return Laurent::from_poly(quot, alo - blo);
}

// remainder of dense polynomial division, both nonzero
static std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.size() < b.size()) return a;
    const Rat& lead = b.back();
    for (size_t i = a.size() - b.size() + 1; i-- > 0;) {
        Rat c = a[i + b.size() - 1] / lead;
        if (c == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Laurent poly_gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero()) return Laurent();
    if (a.is_zero() || b.is_zero()) {
        const Laurent& n = a.is_zero() ? b : a;
        auto [v, lo] = n.poly_view();
        (void)lo;
        Rat lead = v.back();
        for (Rat& c : v) c /= lead;
        return Laurent::from_poly(v, 0);
    }
    std::vector<Rat> x = a.poly_view().first;
    std::vector<Rat> y = b.poly_view().first;
    while (!y.empty()) {
        std::vector<Rat> r = poly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    Rat lead = x.back();
    for (Rat& c : x) c /= lead;
    return Laurent::from_poly(x, 0);
}

}  // namespace qra
