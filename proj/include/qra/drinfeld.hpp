#pragma once

#include <utility>
#include <vector>

#include "qra/derived.hpp"
#include "qra/words.hpp"

namespace qra {

// Eigenvalue series of the two Cartan generating families on a highest
// weight vector, ascending in u with constant term 1.  weight is the common
// degree; the minus part is the plus part reversed and divided by its top
// coefficient.
template <class S>
struct DrinfeldPoly {
    std::vector<S> plus_coeffs;
    std::vector<S> minus_coeffs;
    long weight = 0;
};
using DrinfeldPolynomial = DrinfeldPoly<Cyc>;

// dense polynomial product, ascending coefficients
template <class S>
std::vector<S> poly_mul(const std::vector<S>& a, const std::vector<S>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<S> c(a.size() + b.size() - 1, a.front() - a.front());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// A vector certified to lie in one weight space and in the joint kernel of
// every raising operator x_n^+ the source provides for |n| <= window,
// together with their l-divided powers.  Scaled so the leading coordinate
// is 1.  evidence records (radius, total joint kernel dimension) per window
// growth step, so stabilization is checked rather than assumed.
struct HighestWeightCertificate {
    Vec<Cyc> vector;
    long weight = 0;
    long window = 0;
    std::vector<std::pair<long, long>> evidence;
};

// All joint-kernel lines, grouped by weight space and ordered by descending
// weight.  The radius starts at dim V and grows until the kernel is
// unchanged for two consecutive steps; throws NoStabilization if it is
// still moving at radius dim V + 2l + 8.
std::vector<HighestWeightCertificate> highest_weight_vectors(EpsSource& src);

// Weight of a joint eigenvector of k and [k;0/l]: n = n0 + l*n1 where the
// k-eigenvalue is eps^{n0} and the [k;0/l]-eigenvalue is the integer n1.
// Throws NotEigen if v is not a joint eigenvector of the Cartan pair.
long read_weight(EpsSource& src, const Vec<Cyc>& v);

// Word whose eigenvalue on a highest weight vector is the coefficient of
// u^r in the plus (resp. minus) Cartan series: the divided pairing
// (-1)^r q^{r^2} k^{-r} (x_0^+)^{(r)} (x_1^-)^{(r)}, and its minus-side
// mirror (-1)^r q^{-r^2} k^r (x_{-1}^+)^{(r)} (x_0^-)^{(r)}.
Element cartan_pairing_word(long r, bool plus_side);

// Reads coefficients 0..weight of both series on the certified vector.
// Checks on every extraction: each applied word returns a multiple of the
// vector (else NotEigen), the top plus coefficient is nonzero, coefficient
// weight+1 of both series vanishes, and minus[r] * plus[n] == plus[n-r]
// for every r (else RelationViolation).
DrinfeldPolynomial extract_polynomial(EpsSource& src, const HighestWeightCertificate& cert);

// Same extraction at generic q on the presentation's highest weight line.
template <class S>
DrinfeldPoly<S> extract_polynomial_generic(DerivedWindow<S>& win);

// Extracts on V and W at the given certificates, then on V (x) W at the
// tensor of the two vectors, and compares coefficient-wise with the
// polynomial products on both sides.  A tensor vector that fails to be a
// highest weight line reports false; extraction failures on the factors
// propagate.
bool check_multiplicativity(const EpsPtr& V, const EpsPtr& W,
                            const HighestWeightCertificate& cv,
                            const HighestWeightCertificate& cw);

}  // namespace qra
