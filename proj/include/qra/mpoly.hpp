#pragma once

#include <map>
#include <string>
#include <vector>

#include "qra/ratfunc.hpp"

namespace qra {

// Laurent polynomial over Q(q) in finitely many symbolic parameters.
// Exponent maps are sparse (variable index -> nonzero exponent), so values
// with different variable counts mix freely.
class MPoly {
public:
    using Expo = std::map<long, long>;

    MPoly() = default;
    static MPoly constant(const RatFunc& c);
    static MPoly var(long i, long e = 1);

    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    const RatFunc& constant_term() const;  // coefficient of the empty monomial

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly operator-() const;
    MPoly& scale(const RatFunc& c);

    // defined only for single-monomial values; throws QraError otherwise
    MPoly inverse() const;

    // substitute values for the variables; point must cover every used index
    RatFunc eval(const std::vector<RatFunc>& point) const;

    bool operator==(const MPoly&) const = default;

    const std::map<Expo, RatFunc>& terms() const { return t_; }

private:
    std::map<Expo, RatFunc> t_;
    void add_term(const Expo& e, const RatFunc& c);
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);

std::string mpoly_str(const MPoly& p);  // debug form, variables printed a0, a1, ...

}  // namespace qra
