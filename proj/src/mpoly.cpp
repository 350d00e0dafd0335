#include "qra/mpoly.hpp"

#include <sstream>

#include "qra/errors.hpp"
#include "qra/ring_io.hpp"

namespace qra {

void MPoly::add_term(const Expo& e, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

MPoly MPoly::constant(const RatFunc& c) {
    MPoly p;
    p.add_term({}, c);
    return p;
}

MPoly MPoly::var(long i, long e) {
    MPoly p;
    if (e == 0) return constant(RatFunc(1L));
    p.add_term({{i, e}}, RatFunc(1L));
    return p;
}

bool MPoly::is_one() const {
    return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second.is_one();
}

bool MPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

const RatFunc& MPoly::constant_term() const {
    static const RatFunc zero{};
    auto it = t_.find({});
    return it == t_.end() ? zero : it->second;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

MPoly& MPoly::scale(const RatFunc& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [e, v] : t_) v *= c;
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    MPoly r;
    for (const auto& [ea, ca] : t_) {
        for (const auto& [eb, cb] : o.t_) {
            Expo e = ea;
            for (const auto& [i, k] : eb) {
                long& v = e[i];
                v += k;
                if (v == 0) e.erase(i);
            }
            r.add_term(e, ca * cb);
        }
    }
    *this = std::move(r);
    return *this;
}

MPoly MPoly::inverse() const {
    if (t_.size() != 1) throw QraError("inverse of a non-monomial parameter value");
    Expo e;
    for (const auto& [i, k] : t_.begin()->first) e[i] = -k;
    MPoly r;
    r.add_term(e, t_.begin()->second.inverse());
    return r;
}

RatFunc MPoly::eval(const std::vector<RatFunc>& point) const {
    RatFunc acc;
    for (const auto& [e, c] : t_) {
        RatFunc m = c;
        for (const auto& [i, k] : e) {
            if (i < 0 || static_cast<size_t>(i) >= point.size())
                throw QraError("parameter index out of range in eval");
            m *= point[static_cast<size_t>(i)].pow(k);
        }
        acc += m;
    }
    return acc;
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    r *= b;
    return r;
}

std::string mpoly_str(const MPoly& p) {
    if (p.is_zero()) return "(0)";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << ratfunc_str(c) << ")";
        for (const auto& [i, k] : e) {
            os << "*a" << i;
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace qra
