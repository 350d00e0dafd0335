#include "qra/derived.hpp"

#include "qra/rationals.hpp"

namespace qra {

namespace {

Rat inv_factorial(long m) {
    mpz_class f = 1;
    for (long t = 2; t <= m; ++t) f *= t;
    Rat c(mpz_class(1), f);
    c.canonicalize();
    return c;
}

class SpecializedSource final : public EpsSource {
public:
    SpecializedSource(const Module<RatFunc>& generic, long ell)
        : EpsSource(specialize_module(generic, ell)), win_(generic) {}

    bool supports(const Sym& s) const override { return win_.supports(s); }

protected:
    Mat<Cyc> compute(const Sym& s) override {
        const Mat<RatFunc>& g = win_.op(s);
        Mat<Cyc> r(g.rows(), g.cols());
        for (long i = 0; i < g.rows(); ++i)
            for (long j = 0; j < g.cols(); ++j) {
                try {
                    r.at(i, j) = specialize(g.at(i, j), mod_.ell);
                } catch (const PoleAtRoot& e) {
                    throw PoleAtRoot(std::string(e.what()) + " at " + sym_str(s) + " entry (" +
                                     std::to_string(i) + "," + std::to_string(j) + ") on " +
                                     mod_.name);
                }
            }
        return r;
    }

private:
    DerivedWindow<RatFunc> win_;
};

Cyc mpoly_at(const MPoly& p, const std::vector<Cyc>& vals, long ell) {
    Cyc acc = Cyc::zero(ell);
    for (const auto& [expo, c] : p.terms()) {
        Cyc t = specialize(c, ell);
        for (const auto& [i, e] : expo) {
            if (i < 0 || i >= static_cast<long>(vals.size()))
                throw QraError("symbolic specialization is missing a parameter value");
            t *= vals[static_cast<size_t>(i)].pow(e);
        }
        acc += t;
    }
    return acc;
}

Module<Cyc> specialize_sym_module(const Module<MPoly>& V, const std::vector<Cyc>& vals, long ell) {
    if (V.ell != 0) throw QraError("symbolic specialization expects a generic module");
    if (ell < 3 || ell % 2 == 0) throw QraError("specialized modules need odd l >= 3");
    for (const Cyc& v : vals) {
        if (v.is_zero()) throw QraError("evaluation parameter must be nonzero");
        if (v.ell() != 0 && v.ell() != ell) throw QraError("parameter bound to a different l");
    }
    auto spec = [&](const Mat<MPoly>& m, const char* label) {
        Mat<Cyc> r(m.rows(), m.cols());
        for (long i = 0; i < m.rows(); ++i)
            for (long j = 0; j < m.cols(); ++j) {
                try {
                    r.at(i, j) = mpoly_at(m.at(i, j), vals, ell);
                } catch (const PoleAtRoot& e) {
                    throw PoleAtRoot(std::string(e.what()) + " at " + label + " entry (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
                }
            }
        return r;
    };
    Module<Cyc> R;
    R.ell = ell;
    R.dim = V.dim;
    R.has_e0 = V.has_e0;
    R.wt = V.wt;
    R.name = V.name + "|l=" + std::to_string(ell);
    R.e1p = spec(V.e1p, "e1+");
    R.e1m = spec(V.e1m, "e1-");
    R.k = spec(V.k, "k");
    R.kinv = spec(V.kinv, "k^{-1}");
    if (V.has_e0) {
        R.e0p = spec(V.e0p, "e0+");
        R.e0m = spec(V.e0m, "e0-");
    }
    return R;
}

class SymbolicSource final : public EpsSource {
public:
    SymbolicSource(const Module<MPoly>& generic, std::vector<Cyc> values, long ell)
        : EpsSource(specialize_sym_module(generic, values, ell)),
          win_(generic),
          vals_(std::move(values)) {}

    bool supports(const Sym& s) const override { return win_.supports(s); }

protected:
    Mat<Cyc> compute(const Sym& s) override {
        const Mat<MPoly>& g = win_.op(s);
        Mat<Cyc> r(g.rows(), g.cols());
        for (long i = 0; i < g.rows(); ++i)
            for (long j = 0; j < g.cols(); ++j) {
                try {
                    r.at(i, j) = mpoly_at(g.at(i, j), vals_, mod_.ell);
                } catch (const PoleAtRoot& e) {
                    throw PoleAtRoot(std::string(e.what()) + " at " + sym_str(s) + " entry (" +
                                     std::to_string(i) + "," + std::to_string(j) + ") on " +
                                     mod_.name);
                }
            }
        return r;
    }

private:
    DerivedWindow<MPoly> win_;
    std::vector<Cyc> vals_;
};

Module<Cyc> frob_module(long n, const Cyc& c, long ell) {
    if (ell < 3 || ell % 2 == 0) throw QraError("specialized modules need odd l >= 3");
    if (n < 0) throw QraError("Frobenius pullback needs n >= 0");
    if (c.is_zero()) throw QraError("evaluation parameter must be nonzero");
    Module<Cyc> V;
    V.ell = ell;
    V.dim = n + 1;
    V.has_e0 = true;
    V.name = "Frob(" + std::to_string(n) + ")|l=" + std::to_string(ell);
    V.e1p = Mat<Cyc>(V.dim, V.dim);
    V.e1m = Mat<Cyc>(V.dim, V.dim);
    V.e0p = Mat<Cyc>(V.dim, V.dim);
    V.e0m = Mat<Cyc>(V.dim, V.dim);
    V.k = Mat<Cyc>::identity(V.dim, Cyc::from_long(1, ell));
    V.kinv = V.k;
    for (long j = 0; j <= n; ++j) V.wt.push_back(ell * (n - 2 * j));
    return V;
}

// Classical evaluation module at c = b^l: x_r^± go to c^{r m} ebar^±{}^m / m!
// on divided order l m and to zero otherwise; psi and h collapse onto k = 1.
class FrobeniusSource final : public EpsSource {
public:
    FrobeniusSource(long n, const Cyc& c, long ell)
        : EpsSource(frob_module(n, c, ell)), c_(c) {
        ebar_p_ = Mat<Cyc>(mod_.dim, mod_.dim);
        ebar_m_ = Mat<Cyc>(mod_.dim, mod_.dim);
        for (long j = 0; j <= n; ++j) {
            if (j > 0) ebar_p_.at(j - 1, j) = Cyc::from_long(n - j + 1, ell);
            if (j < n) ebar_m_.at(j + 1, j) = Cyc::from_long(j + 1, ell);
        }
    }

    bool supports(const Sym& s) const override { return s.kind != SymKind::P; }

protected:
    Mat<Cyc> compute(const Sym& s) override {
        const long l = mod_.ell;
        const Cyc one = Cyc::from_long(1, l);
        switch (s.kind) {
            case SymKind::K:
            case SymKind::KINV:
                return mod_.k;
            case SymKind::KBIN: {
                if (s.r < 0) throw QraError("negative binomial order");
                Vec<Cyc> d;
                for (long w : mod_.wt) d.push_back(qbinom_eps(w, s.r, l));
                return Mat<Cyc>::diag(d);
            }
            case SymKind::XP:
            case SymKind::XM: {
                if (s.r < 0) throw QraError("negative divided power");
                if (s.r == 0) return Mat<Cyc>::identity(mod_.dim, one);
                if (s.r % l != 0) return Mat<Cyc>(mod_.dim, mod_.dim);
                const long m = s.r / l;
                Mat<Cyc> r = mat_pow(s.kind == SymKind::XP ? ebar_p_ : ebar_m_, m, one);
                r.scale(c_.pow(s.n * m) * Cyc::from_rat(inv_factorial(m), l));
                return r;
            }
            case SymKind::PSIP:
                return s.n == 0 ? mod_.k : Mat<Cyc>(mod_.dim, mod_.dim);
            case SymKind::PSIM:
                return s.n == 0 ? mod_.kinv : Mat<Cyc>(mod_.dim, mod_.dim);
            case SymKind::H:
                return Mat<Cyc>(mod_.dim, mod_.dim);
            case SymKind::P:
                break;
        }
        throw MissingSymbol("no matrix for " + sym_str(s) + " on " + mod_.name);
    }

private:
    Cyc c_;
    Mat<Cyc> ebar_p_, ebar_m_;
};

class TensorSource final : public EpsSource {
public:
    TensorSource(EpsPtr L, EpsPtr R)
        : EpsSource(tensor(L->mod(), R->mod())), L_(std::move(L)), R_(std::move(R)) {}

    bool supports(const Sym& s) const override {
        switch (s.kind) {
            case SymKind::K:
            case SymKind::KINV:
            case SymKind::KBIN:
                return true;
            case SymKind::XP:
                if (s.n != 0 && s.n != -1) return false;
                break;
            case SymKind::XM:
                if (s.n != 0 && s.n != 1) return false;
                break;
            case SymKind::PSIP:
            case SymKind::PSIM:
                return s.n == 0;
            default:
                return false;
        }
        const Sym base{s.kind, s.n, 1};
        return L_->supports(base) && R_->supports(base);
    }

protected:
    Mat<Cyc> compute(const Sym& s) override {
        const long l = mod_.ell;
        const Cyc one = Cyc::from_long(1, l);
        switch (s.kind) {
            case SymKind::K:
                return mod_.k;
            case SymKind::KINV:
                return mod_.kinv;
            case SymKind::PSIP:
                if (s.n == 0) return mod_.k;
                break;
            case SymKind::PSIM:
                if (s.n == 0) return mod_.kinv;
                break;
            case SymKind::KBIN: {
                if (s.r < 0) throw QraError("negative binomial order");
                Vec<Cyc> d;
                for (long w : mod_.wt) d.push_back(qbinom_eps(w, s.r, l));
                return Mat<Cyc>::diag(d);
            }
            case SymKind::XP:
            case SymKind::XM: {
                if (s.r < 0) throw QraError("negative divided power");
                if (s.r == 0) return Mat<Cyc>::identity(mod_.dim, one);
                if (!supports(s)) break;
                Mat<Cyc> acc(mod_.dim, mod_.dim);
                for (long t = 0; t <= s.r; ++t) {
                    Mat<Cyc> term;
                    const Sym lo{s.kind, s.n, t}, hi{s.kind, s.n, s.r - t};
                    if (s.kind == SymKind::XP && s.n == 0)
                        term = kron(L_->op(lo), R_->op(hi) * mat_pow(R_->mod().k, t, one));
                    else if (s.kind == SymKind::XM && s.n == 0)
                        term = kron(L_->op(hi) * mat_pow(L_->mod().kinv, t, one), R_->op(lo));
                    else if (s.kind == SymKind::XM && s.n == 1)
                        term = kron(mat_pow(L_->mod().k, s.r - t, one) * L_->op(lo), R_->op(hi));
                    else  // XP at -1, where the slot-1 part q2-commutes the other way
                        term = kron(L_->op(lo), R_->op(hi) * mat_pow(R_->mod().kinv, t, one));
                    const long flip = s.kind == SymKind::XP && s.n == -1 ? -1 : 1;
                    term.scale(Cyc::eps_power(flip * t * (s.r - t), l));
                    acc += term;
                }
                return acc;
            }
            default:
                break;
        }
        throw MissingSymbol("no matrix for " + sym_str(s) + " on " + mod_.name);
    }

private:
    EpsPtr L_, R_;
};

}  // namespace

EpsPtr symbolic_specialized_source(const Module<MPoly>& generic, const std::vector<Cyc>& values,
                                   long ell) {
    return std::make_shared<SymbolicSource>(generic, values, ell);
}

EpsPtr evaluation_source(long n, const Cyc& a, long ell) {
    return symbolic_specialized_source(evaluation_twist(make_Vn<MPoly>(n), MPoly::var(0)), {a},
                                       ell);
}

EpsPtr specialized_source(const Module<RatFunc>& generic, long ell) {
    return std::make_shared<SpecializedSource>(generic, ell);
}

EpsPtr frobenius_pullback(long n, const Cyc& b, long ell) {
    return std::make_shared<FrobeniusSource>(n, b.pow(ell), ell);
}

EpsPtr frobenius_pullback_classical(long n, const Cyc& c, long ell) {
    return std::make_shared<FrobeniusSource>(n, c, ell);
}

EpsPtr tensor_source(const EpsPtr& L, const EpsPtr& R) {
    return std::make_shared<TensorSource>(L, R);
}

EpsPtr lusztig_tensor(long m, long ell) {
    if (m < 0) throw QraError("highest weight must be nonnegative");
    if (ell < 3 || ell % 2 == 0) throw QraError("specialized modules need odd l >= 3");
    const long m0 = m % ell, m1 = m / ell;
    if (m1 == 0) return specialized_source(make_Vn<RatFunc>(m0), ell);
    EpsPtr frob = frobenius_pullback(m1, Cyc::from_long(1, ell), ell);
    if (m0 == 0) return frob;
    return tensor_source(specialized_source(make_Vn<RatFunc>(m0), ell), frob);
}

std::vector<GenDesc> restricted_gen_descs(const EpsSource& src, long max_r) {
    std::vector<GenDesc> g{{GenDesc::Kmat, 0}, {GenDesc::Kinv, 0}, {GenDesc::Kbin, src.ell()}};
    const bool e0 = src.supports(sym_xm(1)) && src.supports(sym_xp(-1));
    for (long r = 1; r <= max_r; ++r) {
        g.push_back({GenDesc::E1pDiv, r});
        g.push_back({GenDesc::E1mDiv, r});
        if (e0) {
            g.push_back({GenDesc::E0pDiv, r});
            g.push_back({GenDesc::E0mDiv, r});
        }
    }
    return g;
}

Mat<Cyc> materialize_gen(EpsSource& src, const GenDesc& d) {
    const long l = src.ell();
    const Cyc one = Cyc::from_long(1, l);
    switch (d.kind) {
        case GenDesc::Kmat:
            return src.mod().k;
        case GenDesc::Kinv:
            return src.mod().kinv;
        case GenDesc::Kbin:
            return src.op(sym_kbin(d.r));
        case GenDesc::E1pDiv:
            return src.op(sym_xp(0, d.r));
        case GenDesc::E1mDiv:
            return src.op(sym_xm(0, d.r));
        case GenDesc::E0pDiv: {
            // (e0+)^{(r)} = q^{-r(r-1)} k^{-r} (x_1^-)^{(r)}
            Mat<Cyc> m = mat_pow(src.mod().kinv, d.r, one) * src.op(sym_xm(1, d.r));
            m.scale(Cyc::eps_power(-d.r * (d.r - 1), l));
            return m;
        }
        case GenDesc::E0mDiv: {
            // (e0-)^{(r)} = q^{r(r-1)} (x_{-1}^+)^{(r)} k^r
            Mat<Cyc> m = src.op(sym_xp(-1, d.r)) * mat_pow(src.mod().k, d.r, one);
            m.scale(Cyc::eps_power(d.r * (d.r - 1), l));
            return m;
        }
    }
    throw QraError("unknown generator descriptor");
}

std::vector<Mat<Cyc>> restricted_generators(EpsSource& src, long max_r) {
    std::vector<Mat<Cyc>> g;
    for (const GenDesc& d : restricted_gen_descs(src, max_r)) g.push_back(materialize_gen(src, d));
    return g;
}

std::map<long, std::vector<long>> weight_decomposition(const Module<Cyc>& V,
                                                       const Mat<Cyc>& kb) {
    const long l = V.ell;
    if (!V.k.is_diagonal()) throw NonSemisimple("k is not diagonal on the stored basis");
    if (!kb.is_diagonal()) throw NonSemisimple("[k;0/" + std::to_string(l) + "] is not diagonal");
    std::map<long, std::vector<long>> out;
    for (long j = 0; j < V.dim; ++j) {
        long n0 = -1;
        for (long t = 0; t < l; ++t)
            if (V.k.at(j, j) == Cyc::eps_power(t, l)) {
                n0 = t;
                break;
            }
        if (n0 < 0) throw NonSemisimple("k eigenvalue is not a power of eps");
        const Cyc& e = kb.at(j, j);
        if (!e.is_rat() || !rat_is_int(e.as_rat()))
            throw NonSemisimple("[k;0/l] eigenvalue is not an integer");
        const long n1 = rat_to_long(e.as_rat());
        const long n = n0 + l * n1;
        if (n != V.wt[static_cast<size_t>(j)])
            throw RelationViolation("weight labels disagree with k and [k;0/l] on " + V.name);
        out[n].push_back(j);
    }
    return out;
}

std::map<long, std::vector<long>> weight_decomposition(EpsSource& src) {
    return weight_decomposition(src.mod(), src.op(sym_kbin(src.ell())));
}

bool commuting_square_check(const Rat& b, long n, long ell) {
    if (ell < 3 || ell % 2 == 0) throw QraError("specialized modules need odd l >= 3");
    if (n < 0) throw QraError("commuting square needs n >= 0");
    if (b == 0) throw QraError("evaluation parameter must be nonzero");
    EpsPtr F = frobenius_pullback(n, Cyc::from_rat(b, ell), ell);
    Module<RatFunc> G = evaluation_twist(make_Vn<RatFunc>(ell * n), RatFunc(b));
    EpsPtr Sp = specialized_source(G, ell);
    const long dimS = Sp->mod().dim, dimF = F->mod().dim;
    const Cyc one = Cyc::from_long(1, ell);

    const auto descs = restricted_gen_descs(*Sp, std::max(ell * n, 1L));
    std::vector<Mat<Cyc>> gensS, gensF;
    for (const GenDesc& d : descs) {
        gensS.push_back(materialize_gen(*Sp, d));
        gensF.push_back(materialize_gen(*F, d));
    }

    const Vec<Cyc> hwS = unit_vec(dimS, hw_index(Sp->mod()), one);
    const ClosureBasis<Cyc> cb = closure_basis(gensS, hwS, dimS);
    if (cb.span.dim() != dimS)
        throw QraError("specialized evaluation module is not cyclic on its highest weight vector");
    const auto Ainv = inverse_matrix(mat_from_columns(cb.raw, dimS), one);
    if (!Ainv) throw QraError("closure basis is singular");

    std::vector<Vec<Cyc>> f(cb.raw.size());
    f[0] = unit_vec(dimF, hw_index(F->mod()), one);
    for (size_t t = 1; t < cb.raw.size(); ++t) {
        const auto [g, parent] = cb.steps[t];
        f[t] = mat_vec(gensF[static_cast<size_t>(g)], f[static_cast<size_t>(parent)]);
    }
    const Mat<Cyc> Fm = mat_from_columns(f, dimF);
    if (rank(Fm) != dimF) return false;
    const Mat<Cyc> phi = Fm * (*Ainv);

    auto intertwines = [&phi](const Mat<Cyc>& gS, const Mat<Cyc>& gF) {
        return phi * gS == gF * phi;
    };
    for (size_t t = 0; t < descs.size(); ++t)
        if (!intertwines(gensS[t], gensF[t])) return false;
    if (!intertwines(Sp->mod().e1p, F->mod().e1p)) return false;
    if (!intertwines(Sp->mod().e1m, F->mod().e1m)) return false;
    if (!intertwines(Sp->mod().e0p, F->mod().e0p)) return false;
    if (!intertwines(Sp->mod().e0m, F->mod().e0m)) return false;
    for (long r = -2; r <= 2; ++r)
        for (long s : {1L, ell}) {
            if (!intertwines(Sp->op(sym_xp(r, s)), F->op(sym_xp(r, s)))) return false;
            if (!intertwines(Sp->op(sym_xm(r, s)), F->op(sym_xm(r, s)))) return false;
        }
    return true;
}

}  // namespace qra
