#include "qra/cyclotomic.hpp"

#include <map>

#include "qra/errors.hpp"
#include "qra/qnum.hpp"

namespace qra {

// dense exact division, ascending coefficients, remainder must vanish
static std::vector<Rat> dense_div(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> rem = a;
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    std::vector<Rat> bb = b;
    while (!bb.empty() && bb.back() == 0) bb.pop_back();
    if (bb.empty()) throw QraError("dense_div by zero");
    if (rem.size() < bb.size()) throw QraError("dense_div: not divisible");
    std::vector<Rat> quot(rem.size() - bb.size() + 1, Rat(0));
    for (size_t i = quot.size(); i-- > 0;) {
        Rat c = rem[i + bb.size() - 1] / bb.back();
        quot[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < bb.size(); ++j) rem[i + j] -= c * bb[j];
    }
    for (const Rat& c : rem)
        if (c != 0) throw QraError("dense_div: remainder nonzero");
    return quot;
}

const std::vector<Rat>& cyclotomic_poly(long ell) {
    if (ell < 1) throw QraError("cyclotomic_poly: ell must be >= 1");
    static std::map<long, std::vector<Rat>> memo;
    auto it = memo.find(ell);
    if (it != memo.end()) return it->second;
    // x^ell - 1 divided by all Phi_d, d | ell, d < ell
    std::vector<Rat> num(static_cast<size_t>(ell + 1), Rat(0));
    num[0] = -1;
    num[static_cast<size_t>(ell)] = 1;
    for (long d = 1; d < ell; ++d) {
        if (ell % d != 0) continue;
        num = dense_div(num, cyclotomic_poly(d));
    }
    return memo.emplace(ell, std::move(num)).first->second;
}

long phi_degree(long ell) { return static_cast<long>(cyclotomic_poly(ell).size()) - 1; }

// reduce a dense polynomial (ascending) mod the monic Phi_ell, resize to phi(ell)
static std::vector<Rat> reduce_mod_phi(std::vector<Rat> v, long ell) {
    const std::vector<Rat>& phi = cyclotomic_poly(ell);
    size_t deg = phi.size() - 1;
    for (size_t i = v.size(); i-- > deg;) {
        Rat c = v[i];
        if (c == 0) continue;
        for (size_t j = 0; j < phi.size(); ++j) v[i - deg + j] -= c * phi[j];
    }
    v.resize(deg, Rat(0));
    return v;
}

Cyc cyc_from_coeffs(std::vector<Rat> v, long ell) {
    Cyc r;
    r.ell_ = ell;
    r.c_ = reduce_mod_phi(std::move(v), ell);
    return r;
}

Cyc Cyc::from_rat(const Rat& r, long ell) {
    if (ell < 1) throw QraError("Cyc: ell must be >= 1");
    Cyc c;
    c.ell_ = ell;
    c.c_.assign(static_cast<size_t>(phi_degree(ell)), Rat(0));
    c.c_[0] = r;  // phi(ell) >= 1 for every ell >= 1
    return c;
}

Cyc Cyc::eps_power(long j, long ell) {
    if (ell < 1) throw QraError("Cyc: ell must be >= 1");
    long jm = ((j % ell) + ell) % ell;
    std::vector<Rat> v(static_cast<size_t>(jm + 1), Rat(0));
    v[static_cast<size_t>(jm)] = 1;
    return cyc_from_coeffs(std::move(v), ell);
}

void Cyc::bind(long ell) {
    if (ell_ == ell) return;
    if (ell_ != 0) throw QraError("Cyc: mixed moduli");
    *this = from_rat(Rat(0), ell);
}

long Cyc::common_ell(const Cyc& a, const Cyc& b) {
    if (a.ell_ == 0) return b.ell_;
    if (b.ell_ == 0 || a.ell_ == b.ell_) return a.ell_;
    throw QraError("Cyc: mixed moduli");
}

bool Cyc::is_zero() const {
    for (const Rat& c : c_)
        if (c != 0) return false;
    return true;
}

bool Cyc::is_one() const {
    if (ell_ == 0) return false;
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyc::is_rat() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyc::as_rat() const {
    if (!is_rat()) throw QraError("Cyc: not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

Rat Cyc::coeff(long i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return Rat(0);
    return c_[static_cast<size_t>(i)];
}

Cyc& Cyc::operator+=(const Cyc& o) {
    long ell = common_ell(*this, o);
    if (ell == 0) return *this;
    bind(ell);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.coeff(static_cast<long>(i));
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    long ell = common_ell(*this, o);
    if (ell == 0) return *this;
    bind(ell);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.coeff(static_cast<long>(i));
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    long ell = common_ell(*this, o);
    if (ell == 0) return *this;
    bind(ell);
    Cyc ob = o;
    ob.bind(ell);
    std::vector<Rat> acc(2 * c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < ob.c_.size(); ++j) acc[i + j] += c_[i] * ob.c_[j];
    }
    c_ = reduce_mod_phi(std::move(acc), ell);
    return *this;
}

Cyc& Cyc::operator/=(const Cyc& o) {
    *this *= o.inverse();
    return *this;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (Rat& c : r.c_) c = -c;
    return r;
}

// extended Euclid in Q[x]: u * a == 1 mod Phi_ell
Cyc Cyc::inverse() const {
    if (ell_ == 0 || is_zero()) throw QraError("Cyc: inverse of zero");
    std::vector<Rat> r0 = cyclotomic_poly(ell_);
    std::vector<Rat> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{}, s1{Rat(1)};  // s tracks the coefficient of a
    auto trim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    while (!r1.empty()) {
        // r0 = qq * r1 + r2
        std::vector<Rat> rem = r0;
        std::vector<Rat> qq(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rat(0));
        for (size_t i = qq.size(); i-- > 0;) {
            if (i + r1.size() - 1 >= rem.size()) continue;
            Rat c = rem[i + r1.size() - 1] / r1.back();
            qq[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= c * r1[j];
        }
        trim(rem);
        // s2 = s0 - qq * s1
        std::vector<Rat> s2 = s0;
        s2.resize(std::max(s2.size(), qq.size() + (s1.empty() ? 1 : s1.size())), Rat(0));
        for (size_t i = 0; i < qq.size(); ++i) {
            if (qq[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= qq[i] * s1[j];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (nonzero constant since Phi is irreducible and a != 0)
    if (r0.size() != 1) throw QraError("Cyc: inverse failed (gcd not constant)");
    for (Rat& c : s0) c /= r0[0];
    return cyc_from_coeffs(std::move(s0), ell_);
}

Cyc Cyc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    long ell = ell_ == 0 ? 1 : ell_;
    Cyc r = from_rat(Rat(1), ell);
    Cyc base = *this;
    if (base.ell_ == 0) base.bind(ell);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Cyc Cyc::galois(long j) const {
    if (ell_ == 0) return *this;
    std::vector<Rat> acc(static_cast<size_t>(ell_), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long e = ((static_cast<long>(i) * j) % ell_ + ell_) % ell_;
        acc[static_cast<size_t>(e)] += c_[i];
    }
    return cyc_from_coeffs(std::move(acc), ell_);
}

Cyc Cyc::conj() const { return galois(ell_ - 1); }

bool Cyc::operator==(const Cyc& o) const {
    if (ell_ != 0 && o.ell_ != 0 && ell_ != o.ell_) return false;
    size_t n = std::max(c_.size(), o.c_.size());
    for (size_t i = 0; i < n; ++i)
        if (coeff(static_cast<long>(i)) != o.coeff(static_cast<long>(i))) return false;
    return true;
}

bool Cyc::operator<(const Cyc& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    for (size_t i = n; i-- > 0;) {
        Rat a = coeff(static_cast<long>(i)), b = o.coeff(static_cast<long>(i));
        if (a != b) return a < b;
    }
    return false;
}

Cyc operator+(Cyc a, const Cyc& b) {
    a += b;
    return a;
}
Cyc operator-(Cyc a, const Cyc& b) {
    a -= b;
    return a;
}
Cyc operator*(Cyc a, const Cyc& b) {
    a *= b;
    return a;
}
Cyc operator/(Cyc a, const Cyc& b) {
    a /= b;
    return a;
}

Cyc cyc_eval(const Laurent& f, long ell) {
    std::vector<Rat> acc(static_cast<size_t>(ell), Rat(0));
    for (const auto& [e, c] : f.terms()) {
        long em = ((e % ell) + ell) % ell;
        acc[static_cast<size_t>(em)] += c;
    }
    return cyc_from_coeffs(std::move(acc), ell);
}

Cyc specialize(const RatFunc& f, long ell) {
    Cyc d = cyc_eval(f.den(), ell);
    if (d.is_zero()) throw PoleAtRoot("denominator vanishes at primitive root (l=" + std::to_string(ell) + ")");
    return cyc_eval(f.num(), ell) * d.inverse();
}

bool has_pole(const RatFunc& f, long ell) { return cyc_eval(f.den(), ell).is_zero(); }

Cyc qint_eps(long n, long ell) { return cyc_eval(qint(n), ell); }
Cyc qfact_eps(long n, long ell) { return cyc_eval(qfact(n), ell); }
Cyc qbinom_eps(long n, long r, long ell) { return cyc_eval(qbinom(n, r), ell); }

}  // namespace qra
