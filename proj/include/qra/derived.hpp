#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qra/builders.hpp"
#include "qra/module.hpp"
#include "qra/words.hpp"

namespace qra {

// Matrices of the loop generators on a generic-coefficient module, derived
// from the presentation and cached by symbol.  Seeds: x_0^± = e1^±,
// x_1^- = k e0^+, x_{-1}^+ = e0^- k^{-1}; h_{±1} from the mixed commutators;
// the rest by the h-ladder, the psi commutators and the h log-recursion.
// Divided powers are plain powers over [r]!, legitimate in generic mode.
template <class S>
class DerivedWindow {
public:
    explicit DerivedWindow(Module<S> V) : V_(std::move(V)) {
        if (V_.ell != 0) throw QraError("derived window needs generic coefficients");
    }

    const Module<S>& module() const { return V_; }

    bool supports(const Sym& s) const {
        switch (s.kind) {
            case SymKind::K:
            case SymKind::KINV:
            case SymKind::KBIN:
                return true;
            case SymKind::XP:
            case SymKind::XM:
                return V_.has_e0 || s.n == 0;
            case SymKind::H:
                return V_.has_e0 && s.n != 0;
            default:
                return V_.has_e0;
        }
    }

    const Mat<S>& op(const Sym& s) {
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(s, compute(s)).first->second;
    }

private:
    Module<S> V_;
    std::map<Sym, Mat<S>> cache_;

    Mat<S> scale_rf(Mat<S> m, const RatFunc& c) const {
        m.scale(scalar_rf<S>(c, 0));
        return m;
    }

    Mat<S> xgen(bool plus, long n) {
        if (!V_.has_e0 && n != 0) throw MissingSymbol("module has no loop operators");
        const RatFunc inv2{RatFunc(qint(2)).inverse()};
        if (plus) {
            if (n == 0) return V_.e1p;
            if (n == -1) return V_.e0m * V_.kinv;
            if (n > 0) return scale_rf(commutator(op(sym_h(1)), op(sym_xp(n - 1))), inv2);
            return scale_rf(commutator(op(sym_h(-1)), op(sym_xp(n + 1))), inv2);
        }
        if (n == 0) return V_.e1m;
        if (n == 1) return V_.k * V_.e0p;
        if (n > 1) return scale_rf(commutator(op(sym_xm(n - 1)), op(sym_h(1))), inv2);
        return scale_rf(commutator(op(sym_xm(n + 1)), op(sym_h(-1))), inv2);
    }

    // psi_1^+ and psi_{-1}^- must come from seed pairs only; the higher ones
    // may use the h-ladder, which depends on just those two.
    Mat<S> psi(bool plus, long n) {
        const RatFunc qmqi{Laurent::q_power(1) - Laurent::q_power(-1)};
        if (plus) {
            if (n < 0) return Mat<S>(V_.dim, V_.dim);
            if (n == 0) return V_.k;
            if (n == 1) return scale_rf(commutator(op(sym_xp(0)), op(sym_xm(1))), qmqi);
            return scale_rf(commutator(op(sym_xp(n)), op(sym_xm(0))), qmqi);
        }
        if (n > 0) return Mat<S>(V_.dim, V_.dim);
        if (n == 0) return V_.kinv;
        return scale_rf(commutator(op(sym_xp(n)), op(sym_xm(0))), -qmqi);
    }

    // (q - q^{-1}) h_{±r} via log of the psi series; the E_s commute, so the
    // recursion C_r = (r E_r - sum_{s<r} s C_s E_{r-s}) / r needs no ordering.
    Mat<S> hgen(long n) {
        const bool plus = n > 0;
        const long r = plus ? n : -n;
        std::vector<Mat<S>> C;
        for (long s = 1; s <= r; ++s) {
            Mat<S> E = plus ? V_.kinv * op(sym_psip(s)) : V_.k * op(sym_psim(-s));
            E.scale(scalar_rf<S>(RatFunc(Rat(s)), 0));
            for (long t = 1; t < s; ++t) {
                Mat<S> term = C[static_cast<size_t>(t - 1)] * (plus ? V_.kinv * op(sym_psip(s - t))
                                                                    : V_.k * op(sym_psim(t - s)));
                term.scale(scalar_rf<S>(RatFunc(Rat(t)), 0));
                E -= term;
            }
            E.scale(scalar_rf<S>(RatFunc(Rat(1, s)), 0));
            C.push_back(std::move(E));
        }
        RatFunc c{RatFunc(Laurent::q_power(1) - Laurent::q_power(-1)).inverse()};
        if (!plus) c = -c;
        return scale_rf(C.back(), c);
    }

    Mat<S> compute(const Sym& s) {
        const S one = scalar_one<S>(0);
        switch (s.kind) {
            case SymKind::K:
                return V_.k;
            case SymKind::KINV:
                return V_.kinv;
            case SymKind::XP:
            case SymKind::XM: {
                const bool plus = s.kind == SymKind::XP;
                if (s.r < 0) throw QraError("negative divided power");
                if (s.r == 0) return Mat<S>::identity(V_.dim, one);
                if (s.r == 1) return xgen(plus, s.n);
                Mat<S> m = mat_pow(op(Sym{s.kind, s.n, 1}), s.r, one);
                return scale_rf(std::move(m), RatFunc(qfact(s.r)).inverse());
            }
            case SymKind::PSIP:
                return psi(true, s.n);
            case SymKind::PSIM:
                return psi(false, s.n);
            case SymKind::H:
                if (s.n == 0) throw MissingSymbol("h[0] is not a generator");
                return hgen(s.n);
            case SymKind::P: {
                if (s.n == 0) return Mat<S>::identity(V_.dim, one);
                Element P = build_P(s.n);
                Mat<S> acc(V_.dim, V_.dim);
                for (const auto& [w, c] : P.terms()) {
                    Mat<S> term = Mat<S>::identity(V_.dim, one);
                    for (const Sym& sym : w) term = term * op(sym);
                    term.scale(scalar_rf<S>(c, 0));
                    acc += term;
                }
                return acc;
            }
            case SymKind::KBIN: {
                if (s.r < 0) throw QraError("negative binomial order");
                Mat<S> m = Mat<S>::identity(V_.dim, one);
                for (long t = 1; t <= s.r; ++t) {
                    Mat<S> f = V_.k;
                    f.scale(scalar_qpow<S>(1 - t, 0));
                    Mat<S> g = V_.kinv;
                    g.scale(scalar_qpow<S>(t - 1, 0));
                    f -= g;
                    f = scale_rf(std::move(f),
                                 RatFunc(Laurent::q_power(t) - Laurent::q_power(-t)).inverse());
                    m = m * f;
                }
                return m;
            }
        }
        throw MissingSymbol("no matrix for " + sym_str(s));
    }
};

// Exact check of the loop relations on all derived matrices with indices in
// [-radius, radius]: the x-x relation, the x+ x- pairing against the psi
// ladder, the h action and commutativity of the h family.  Throws
// RelationViolation naming the first failing relation.
template <class S>
void drinfeld_audit(DerivedWindow<S>& W, long radius) {
    if (!W.module().has_e0) throw QraError("loop relation audit needs loop operators");
    const long dim = W.module().dim;
    auto fail = [&](const std::string& what, long r, long ss) {
        throw RelationViolation(what + " fails at (" + std::to_string(r) + "," +
                                std::to_string(ss) + ") on " + W.module().name);
    };
    const RatFunc q2{Laurent::q_power(2)}, qm2{Laurent::q_power(-2)};
    const RatFunc qmqi{Laurent::q_power(1) - Laurent::q_power(-1)};
    for (long r = -radius; r <= radius; ++r)
        for (long s = -radius; s <= radius; ++s) {
            for (bool plus : {true, false}) {
                auto X = [&](long n) { return W.op(Sym{plus ? SymKind::XP : SymKind::XM, n, 1}); };
                const RatFunc& c = plus ? q2 : qm2;
                Mat<S> lhs = X(r + 1) * X(s);
                Mat<S> t = X(s) * X(r + 1);
                t.scale(scalar_rf<S>(c, 0));
                lhs -= t;
                Mat<S> rhs = X(r) * X(s + 1);
                rhs.scale(scalar_rf<S>(c, 0));
                rhs -= X(s + 1) * X(r);
                if (!(lhs == rhs)) fail(plus ? "x+ ladder relation" : "x- ladder relation", r, s);
            }
            {
                Mat<S> lhs = commutator(W.op(sym_xp(r)), W.op(sym_xm(s)));
                lhs.scale(scalar_rf<S>(qmqi, 0));
                Mat<S> rhs = W.op(sym_psip(r + s)) - W.op(sym_psim(r + s));
                if (!(lhs == rhs)) fail("x+ x- pairing", r, s);
            }
            if (r != 0) {
                for (bool plus : {true, false}) {
                    const Sym xs = Sym{plus ? SymKind::XP : SymKind::XM, s, 1};
                    const Sym xrs = Sym{plus ? SymKind::XP : SymKind::XM, r + s, 1};
                    Mat<S> lhs = commutator(W.op(sym_h(r)), W.op(xs));
                    lhs.scale(scalar_rf<S>(RatFunc(Rat(r)), 0));
                    RatFunc c{qint(2 * r)};
                    Mat<S> rhs = W.op(xrs);
                    rhs.scale(scalar_rf<S>(plus ? c : -c, 0));
                    if (!(lhs == rhs)) fail("h action", r, s);
                }
                if (s != 0 && !commutator(W.op(sym_h(r)), W.op(sym_h(s))).is_zero())
                    fail("h commutativity", r, s);
            }
        }
    (void)dim;
}

// Full drinfeld package for a generic module: derives the window and audits.
template <class S>
DerivedWindow<S> drinfeld_matrices(Module<S> V, long audit_radius = 2) {
    DerivedWindow<S> W(std::move(V));
    if (W.module().has_e0) drinfeld_audit(W, audit_radius);
    return W;
}

// Operator provider for modules at q = eps.  Every concrete source keeps the
// module presentation plus whatever it needs to produce divided-power and
// loop-generator matrices exactly.
class EpsSource {
public:
    virtual ~EpsSource() = default;

    const Module<Cyc>& mod() const { return mod_; }
    long ell() const { return mod_.ell; }
    virtual bool supports(const Sym& s) const = 0;

    const Mat<Cyc>& op(const Sym& s) {
        auto it = memo_.find(s);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(s, compute(s)).first->second;
    }

protected:
    explicit EpsSource(Module<Cyc> m) : mod_(std::move(m)) {}
    virtual Mat<Cyc> compute(const Sym& s) = 0;
    Module<Cyc> mod_;

private:
    std::map<Sym, Mat<Cyc>> memo_;
};

using EpsPtr = std::shared_ptr<EpsSource>;

// Specialization of a generic module: every operator is computed generically
// and evaluated at eps entry by entry (divided powers and [k; 0 / r] brackets
// included, so cancellations happen before specialization).
EpsPtr specialized_source(const Module<RatFunc>& generic, long ell);

// Same route for a generic module with symbolic parameters: operators are
// computed over MPoly and evaluated at q = eps, var_i = values[i].  Needed
// when twist parameters live in Q(eps) rather than Q.  Values must be
// nonzero and bound to the same l.
EpsPtr symbolic_specialized_source(const Module<MPoly>& generic,
                                   const std::vector<Cyc>& values, long ell);

// Evaluation module V(n)_a with a in Q(eps): symbolic twist of the generic
// V(n) specialized at var_0 = a.
EpsPtr evaluation_source(long n, const Cyc& a, long ell);

// Pullback of the classical (n+1)-dimensional evaluation module at b^l along
// the root-of-unity Frobenius: plain loop generators act as zero, divided
// powers of order lm act through classical m-th powers over m!, k acts
// trivially and the weight labels are l times the classical ones.
EpsPtr frobenius_pullback(long n, const Cyc& b, long ell);

// Same pullback given the classical parameter c = b^l directly; c need not
// have an l-th root inside Q(eps).
EpsPtr frobenius_pullback_classical(long n, const Cyc& c, long ell);

// Tensor product of two sources; divided powers of the four generator
// families combine through the q^2-commuting power law at eps.
EpsPtr tensor_source(const EpsPtr& L, const EpsPtr& R);

// Simple module of highest weight m at a primitive l-th root of unity:
// V(m0) (x) Frobenius pullback of the classical V(m1), m = m0 + l m1.
EpsPtr lusztig_tensor(long m, long ell);

// Generator matrices spanning the restricted-algebra action that a source can
// provide: k, k^{-1}, [k; 0 / l], and the divided families built on x_0^±,
// x_1^-, x_{-1}^+ up to order max_r (the e0-side families only when the
// source supports them).  Descriptors let two sources build matched lists.
struct GenDesc {
    enum Kind { Kmat, Kinv, Kbin, E1pDiv, E1mDiv, E0pDiv, E0mDiv } kind;
    long r = 0;
};
std::vector<GenDesc> restricted_gen_descs(const EpsSource& src, long max_r);
Mat<Cyc> materialize_gen(EpsSource& src, const GenDesc& d);
std::vector<Mat<Cyc>> restricted_generators(EpsSource& src, long max_r);

// Joint eigenspace labels of k and [k; 0 / l]: basis index j carries the
// integer n with k = eps^n and [k; 0 / l] = floor(n / l) there.  Throws
// NonSemisimple when the matrices are not simultaneously diagonal with
// eigenvalues of that shape, RelationViolation when they contradict the
// stored weight labels.
std::map<long, std::vector<long>> weight_decomposition(const Module<Cyc>& V,
                                                       const Mat<Cyc>& kbin_l);
std::map<long, std::vector<long>> weight_decomposition(EpsSource& src);

// Compares the Frobenius pullback of the classical module at b^l with the
// specialization of the generic evaluation module V(l n)_b: builds the
// highest-weight-matched linear map and checks it intertwines every
// restricted generator, i.e. the pullback is the simple quotient.
bool commuting_square_check(const Rat& b, long n, long ell);

}  // namespace qra
