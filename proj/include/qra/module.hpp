#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "qra/cyclotomic.hpp"
#include "qra/errors.hpp"
#include "qra/matrix.hpp"
#include "qra/mpoly.hpp"
#include "qra/qnum.hpp"

namespace qra {

// Scalar shims so module constructors work over Q(q) (RatFunc), symbolic
// parameters (MPoly) and Q(eps) (Cyc).  ell is consulted only for Cyc.
template <class S>
S scalar_rf(const RatFunc& c, long ell) {
    if constexpr (std::is_same_v<S, Cyc>) {
        return specialize(c, ell);
    } else if constexpr (std::is_same_v<S, MPoly>) {
        (void)ell;
        return MPoly::constant(c);
    } else {
        (void)ell;
        return c;
    }
}

template <class S>
S scalar_one(long ell) { return scalar_rf<S>(RatFunc(1L), ell); }

template <class S>
S scalar_qpow(long e, long ell) {
    if constexpr (std::is_same_v<S, Cyc>) return Cyc::eps_power(e, ell);
    else return scalar_rf<S>(RatFunc::q_power(e), ell);
}

template <class S>
S scalar_qint(long n, long ell) { return scalar_rf<S>(RatFunc(qint(n)), ell); }

// Presentation of a finite-dimensional type-I module: the Chevalley operator
// matrices on a weight basis, with integer weight labels (k acts on basis
// vector j by q^wt[j], eps^wt[j] when specialized).  ell == 0 means generic
// coefficients; has_e0 is false for bare sl2 cores before an evaluation twist
// or another loop-operator construction fills in e0.
template <class S>
struct Module {
    long ell = 0;
    long dim = 0;
    bool has_e0 = false;
    Mat<S> e1p, e1m, e0p, e0m, k, kinv;
    std::vector<long> wt;
    std::string name;
};

template <class S>
long hw_index(const Module<S>& V) {
    long best = 0;
    for (long j = 1; j < V.dim; ++j)
        if (V.wt[static_cast<size_t>(j)] > V.wt[static_cast<size_t>(best)]) best = j;
    for (long j = 0; j < V.dim; ++j)
        if (j != best && V.wt[static_cast<size_t>(j)] == V.wt[static_cast<size_t>(best)])
            throw QraError("top weight space is not one-dimensional");
    return best;
}

// Simple (n+1)-dimensional core: k v_r = q^{n-2r} v_r, e+ v_r = [n-r+1] v_{r-1},
// e- v_r = [r+1] v_{r+1}.  Specialized mode keeps the same formulas and is
// restricted to n < l, where the core stays simple.
template <class S>
Module<S> make_Vn(long n, long ell = 0) {
    if (n < 0) throw QraError("V(n) needs n >= 0");
    if constexpr (std::is_same_v<S, Cyc>) {
        if (ell < 3 || ell % 2 == 0) throw QraError("specialized modules need odd l >= 3");
        if (n >= ell) throw QraError("specialized V(n) needs n < l");
    } else {
        if (ell != 0) throw QraError("generic modules take ell = 0");
    }
    Module<S> V;
    V.ell = ell;
    V.dim = n + 1;
    V.name = "V(" + std::to_string(n) + ")";
    V.e1p = Mat<S>(V.dim, V.dim);
    V.e1m = Mat<S>(V.dim, V.dim);
    V.k = Mat<S>(V.dim, V.dim);
    V.kinv = Mat<S>(V.dim, V.dim);
    for (long r = 0; r <= n; ++r) {
        V.wt.push_back(n - 2 * r);
        V.k.at(r, r) = scalar_qpow<S>(n - 2 * r, ell);
        V.kinv.at(r, r) = scalar_qpow<S>(2 * r - n, ell);
        if (r > 0) V.e1p.at(r - 1, r) = scalar_qint<S>(n - r + 1, ell);
        if (r < n) V.e1m.at(r + 1, r) = scalar_qint<S>(r + 1, ell);
    }
    return V;
}

// e0+ = q a e-, e0- = q^{-1} a^{-1} e+ on the same basis.
template <class S>
Module<S> evaluation_twist(Module<S> V, const S& a) {
    if (V.has_e0) throw QraError("module already carries loop operators");
    if (a.is_zero()) throw QraError("evaluation parameter must be nonzero");
    const S ainv = a.inverse();
    V.e0p = V.e1m;
    V.e0p.scale(a * scalar_qpow<S>(1, V.ell));
    V.e0m = V.e1p;
    V.e0m.scale(ainv * scalar_qpow<S>(-1, V.ell));
    V.has_e0 = true;
    V.name += "@ev";
    return V;
}

// Coproduct action on V (x) W with the flattening (i, j) -> i * dimW + j.
template <class S>
Module<S> tensor(const Module<S>& V, const Module<S>& W) {
    if (V.ell != W.ell) throw QraError("tensor factors disagree on l");
    Module<S> T;
    T.ell = V.ell;
    T.dim = V.dim * W.dim;
    T.name = "(" + V.name + ")(x)(" + W.name + ")";
    const S one = scalar_one<S>(V.ell);
    const Mat<S> iv = Mat<S>::identity(V.dim, one);
    const Mat<S> iw = Mat<S>::identity(W.dim, one);
    T.e1p = kron(V.e1p, W.k) + kron(iv, W.e1p);
    T.e1m = kron(V.e1m, iw) + kron(V.kinv, W.e1m);
    T.k = kron(V.k, W.k);
    T.kinv = kron(V.kinv, W.kinv);
    if (V.has_e0 && W.has_e0) {
        T.e0p = kron(V.e0p, W.kinv) + kron(iv, W.e0p);
        T.e0m = kron(V.e0m, iw) + kron(V.k, W.e0m);
        T.has_e0 = true;
    }
    for (long i = 0; i < V.dim; ++i)
        for (long j = 0; j < W.dim; ++j)
            T.wt.push_back(V.wt[static_cast<size_t>(i)] + W.wt[static_cast<size_t>(j)]);
    return T;
}

Module<Cyc> specialize_module(const Module<RatFunc>& V, long ell);

// Defining relations of the presentation, checked exactly; throws
// RelationViolation naming the first failure.  Covers k conjugation, the
// sl2 commutator, the mixed Serre relations and k k^{-1} = 1.
template <class S>
void relation_audit(const Module<S>& V) {
    const long ell = V.ell;
    const S one = scalar_one<S>(ell);
    const Mat<S> id = Mat<S>::identity(V.dim, one);
    auto fail = [&V](const std::string& what) {
        throw RelationViolation(what + " fails on " + V.name);
    };
    if (!(V.k * V.kinv == id)) fail("k k^{-1} = 1");
    if (!V.k.is_diagonal()) fail("k diagonal");
    for (long j = 0; j < V.dim; ++j)
        if (!(V.k.at(j, j) == scalar_qpow<S>(V.wt[static_cast<size_t>(j)], ell)))
            fail("k matches weight labels");

    auto conj_check = [&](const Mat<S>& e, long pw, const std::string& what) {
        Mat<S> lhs = V.k * e * V.kinv;
        Mat<S> rhs = e;
        rhs.scale(scalar_qpow<S>(pw, ell));
        if (!(lhs == rhs)) fail(what);
    };
    conj_check(V.e1p, 2, "k e1+ k^{-1} = q^2 e1+");
    conj_check(V.e1m, -2, "k e1- k^{-1} = q^{-2} e1-");

    const S qmqi = scalar_qpow<S>(1, ell) + (-scalar_qpow<S>(-1, ell));
    {
        Mat<S> lhs = commutator(V.e1p, V.e1m);
        lhs.scale(qmqi);
        if (!(lhs == V.k - V.kinv)) fail("[e1+, e1-] = (k - k^{-1})/(q - q^{-1})");
    }
    if (!V.has_e0) return;

    conj_check(V.e0p, -2, "k e0+ k^{-1} = q^{-2} e0+");
    conj_check(V.e0m, 2, "k e0- k^{-1} = q^2 e0-");
    {
        Mat<S> lhs = commutator(V.e0p, V.e0m);
        lhs.scale(qmqi);
        if (!(lhs == V.kinv - V.k)) fail("[e0+, e0-] = (k0 - k0^{-1})/(q - q^{-1})");
    }
    if (!commutator(V.e1p, V.e0m).is_zero()) fail("[e1+, e0-] = 0");
    if (!commutator(V.e0p, V.e1m).is_zero()) fail("[e0+, e1-] = 0");

    auto serre = [&](const Mat<S>& x, const Mat<S>& y, const std::string& what) {
        Mat<S> acc(V.dim, V.dim);
        for (long s = 0; s <= 3; ++s) {
            Mat<S> t = mat_pow(x, s, one) * y * mat_pow(x, 3 - s, one);
            RatFunc c{qbinom(3, s)};
            if (s % 2) c = -c;
            t.scale(scalar_rf<S>(c, ell));
            acc += t;
        }
        if (!acc.is_zero()) fail(what);
    };
    serre(V.e1p, V.e0p, "Serre e1+ e0+");
    serre(V.e0p, V.e1p, "Serre e0+ e1+");
    serre(V.e1m, V.e0m, "Serre e1- e0-");
    serre(V.e0m, V.e1m, "Serre e0- e1-");
}

}  // namespace qra
