#include "qra/registry.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "json.hpp"
#include "qra/builders.hpp"
#include "qra/errors.hpp"
#include "qra/evaluator.hpp"
#include "qra/qnum.hpp"

namespace qra {

namespace {

using Grid = std::vector<std::pair<std::string, long>>;

RatFunc rfq(long e) { return RatFunc::q_power(e); }
RatFunc rfi(long n) { return RatFunc(qint(n)); }
RatFunc rfb(long n, long r) { return RatFunc(qbinom(n, r)); }
RatFunc rf_sgn(long t) { return RatFunc(t % 2 == 0 ? 1L : -1L); }
RatFunc rf_fact_inv(long n) { return RatFunc(qfact(n)).inverse(); }

Element S_el(const Sym& s) { return Element::from_sym(s); }
Element P_el(long m) { return m == 0 ? Element::one() : Element::from_sym(sym_p(m)); }

MPoly mp_c(const RatFunc& c) { return MPoly::constant(c); }

std::string loc2(const char* k1, long v1, const char* k2, long v2) {
    std::ostringstream os;
    os << "(" << k1 << "=" << v1 << ", " << k2 << "=" << v2 << ")";
    return os.str();
}

std::string loc1(const char* k, long v) {
    std::ostringstream os;
    os << "(" << k << "=" << v << ")";
    return os.str();
}

// Shared fixtures: the default module family is one rational evaluation
// tensor with deterministically drawn distinct parameters plus a rank-two
// symbolic tensor; faithful comparisons use symbolic tensors of matching
// rank, cached per degree.
struct Ctx {
    const RegistryOptions& opt;
    std::unique_ptr<DerivedWindow<RatFunc>> ratw_;
    std::unique_ptr<DerivedWindow<MPoly>> symw_;
    std::map<long, std::unique_ptr<UplusOracle>> oracles_;

    explicit Ctx(const RegistryOptions& o) : opt(o) {}

    DerivedWindow<RatFunc>& rat_win() {
        if (!ratw_) {
            std::mt19937 gen(20260819u);
            std::uniform_int_distribution<long> num(1, 9), den(1, 4), coin(0, 1);
            auto draw = [&] {
                Rat x = Rat(num(gen)) / Rat(den(gen));
                if (coin(gen)) x = -x;
                return x;
            };
            Rat a = draw(), b = draw();
            while (b == a) b = draw();
            Module<RatFunc> m =
                tensor(evaluation_twist(make_Vn<RatFunc>(2), RatFunc(a)),
                       evaluation_twist(make_Vn<RatFunc>(1), RatFunc(b)));
            ratw_ = std::make_unique<DerivedWindow<RatFunc>>(std::move(m));
        }
        return *ratw_;
    }

    DerivedWindow<MPoly>& sym_win() {
        if (!symw_) {
            Module<MPoly> m =
                tensor(evaluation_twist(make_Vn<MPoly>(1), MPoly::var(0)),
                       evaluation_twist(make_Vn<MPoly>(1), MPoly::var(1)));
            symw_ = std::make_unique<DerivedWindow<MPoly>>(std::move(m));
        }
        return *symw_;
    }

    UplusOracle& oracle(long degree) {
        auto it = oracles_.find(degree);
        if (it == oracles_.end())
            it = oracles_.emplace(degree, std::make_unique<UplusOracle>(degree)).first;
        return *it->second;
    }
};

bool equal_on_family(Ctx& c, const Element& x, const Element& y, std::string& d,
                     const std::string& where) {
    if (!operators_equal_on(x, y, c.rat_win())) {
        d = where + ": operators differ on " + c.rat_win().module().name;
        return false;
    }
    if (!operators_equal_on(x, y, c.sym_win())) {
        d = where + ": operators differ on " + c.sym_win().module().name;
        return false;
    }
    return true;
}

bool faithful_zero(Ctx& c, const Element& diff, long degree, std::string& d,
                   const std::string& where) {
    if (!c.oracle(degree).kills(diff)) {
        d = where + ": faithful comparison fails at plus degree " + std::to_string(degree);
        return false;
    }
    return true;
}

// elementary symmetric polynomials E_0..E_cnt in vars off..off+cnt-1
std::vector<MPoly> esym(long off, long cnt) {
    std::vector<MPoly> E(cnt + 1);
    E[0] = scalar_one<MPoly>(0);
    for (long i = 0; i < cnt; ++i)
        for (long t = std::min(i + 1, cnt); t >= 1; --t)
            E[t] = E[t] + E[t - 1] * MPoly::var(off + i);
    return E;
}

// ---- individual checks ----------------------------------------------------

bool chk_qbinom_alternating(Ctx&, Grid& g, std::string& d) {
    g = {{"n", 20}};
    for (long n = 1; n <= 20; ++n) {
        Laurent s;
        for (long r = 0; r <= n; ++r)
            s += qbinom(n, r) * Laurent::q_power(r * (n - 1), Rat(r % 2 == 0 ? 1 : -1));
        if (!s.is_zero()) {
            d = "alternating q-binomial sum nonzero at " + loc1("n", n);
            return false;
        }
    }
    return true;
}

// product form of the Cartan binomial [k; n over t]
template <class S>
Mat<S> kbin_general(const Module<S>& V, long n, long t) {
    Mat<S> m = Mat<S>::identity(V.dim, scalar_one<S>(V.ell));
    for (long s = 1; s <= t; ++s) {
        Mat<S> pos = V.k;
        pos.scale(scalar_qpow<S>(n - s + 1, V.ell));
        Mat<S> neg = V.kinv;
        neg.scale(scalar_qpow<S>(-(n - s + 1), V.ell));
        Mat<S> num = pos - neg;
        num.scale(scalar_rf<S>((rfq(s) - rfq(-s)).inverse(), V.ell));
        m = m * num;
    }
    return m;
}

template <class S>
bool divided_commutation_on(const Module<S>& V, long max_r, long max_s,
                            std::string& d) {
    const S one = scalar_one<S>(V.ell);
    std::vector<Mat<S>> E{Mat<S>::identity(V.dim, one)}, F{Mat<S>::identity(V.dim, one)};
    for (long r = 1; r <= max_r; ++r) {
        Mat<S> m = E.back() * V.e1p;
        m.scale(scalar_rf<S>(rfi(r).inverse(), V.ell));
        E.push_back(std::move(m));
    }
    for (long s = 1; s <= max_s; ++s) {
        Mat<S> m = F.back() * V.e1m;
        m.scale(scalar_rf<S>(rfi(s).inverse(), V.ell));
        F.push_back(std::move(m));
    }
    for (long r = 0; r <= max_r; ++r)
        for (long s = 0; s <= max_s; ++s) {
            Mat<S> lhs = E[r] * F[s];
            Mat<S> rhs(V.dim, V.dim);
            for (long t = 0; t <= std::min(r, s); ++t)
                rhs += F[s - t] * kbin_general(V, 2 * t - r - s, t) * E[r - t];
            if (!(lhs == rhs)) {
                d = "divided commutation fails at " + loc2("r", r, "s", s) + " on " + V.name;
                return false;
            }
        }
    return true;
}

bool chk_divided_commutation(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", c.opt.max_n}, {"r", c.opt.max_r}, {"s", c.opt.max_s}};
    for (long n = 1; n <= c.opt.max_n; ++n)
        if (!divided_commutation_on(make_Vn<RatFunc>(n), c.opt.max_r, c.opt.max_s, d))
            return false;
    if (!divided_commutation_on(c.rat_win().module(), c.opt.max_r, c.opt.max_s, d))
        return false;
    return divided_commutation_on(c.sym_win().module(), c.opt.max_r, c.opt.max_s, d);
}

bool chk_cartan_poly_routes(Ctx& c, Grid& g, std::string& d) {
    const long N = std::min(2 * c.opt.max_n, 6L);
    g = {{"n", N}};
    for (long a = 1; a <= N; ++a)
        for (long n : {a, -a}) {
            Mat<RatFunc> h = eval_element(build_P(n, PRoute::h_recursion), c.rat_win());
            Mat<RatFunc> p = eval_element(build_P(n, PRoute::psi_route), c.rat_win());
            Mat<RatFunc> x = eval_element(build_P(n, PRoute::exp_formula), c.rat_win());
            if (!(h == p) || !(h == x)) {
                d = "Cartan polynomial routes disagree at " + loc1("n", n);
                return false;
            }
            if (a <= c.opt.max_n) {
                Mat<MPoly> hs = eval_element(build_P(n, PRoute::h_recursion), c.sym_win());
                Mat<MPoly> xs = eval_element(build_P(n, PRoute::exp_formula), c.sym_win());
                if (!(hs == xs)) {
                    d = "Cartan polynomial routes disagree on the symbolic tensor at " + loc1("n", n);
                    return false;
                }
            }
        }
    return true;
}

bool chk_cartan_poly_xplus_left(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", c.opt.max_n}, {"r", c.opt.max_r}};
    for (long n = 1; n <= c.opt.max_n; ++n)
        for (long r = -c.opt.max_r; r <= c.opt.max_r; ++r) {
            Element lhs = P_el(n) * S_el(sym_xp(r));
            Element rhs = S_el(sym_xp(r)) * P_el(n) -
                          (rfq(2) + RatFunc(1L)) * (S_el(sym_xp(r + 1)) * P_el(n - 1));
            if (n >= 2) rhs += rfq(2) * (S_el(sym_xp(r + 2)) * P_el(n - 2));
            if (!equal_on_family(c, lhs, rhs, d, "left multiplication rule " + loc2("n", n, "r", r)))
                return false;
        }
    return true;
}

bool chk_cartan_poly_xplus_right(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", c.opt.max_n}, {"r", c.opt.max_r}};
    for (long n = 1; n <= c.opt.max_n; ++n)
        for (long r = -c.opt.max_r; r <= c.opt.max_r; ++r) {
            Element lhs = S_el(sym_xp(r)) * P_el(n);
            Element rhs;
            for (long m = 0; m <= n; ++m)
                rhs += (rfq(m) * rfi(m + 1)) * (P_el(n - m) * S_el(sym_xp(r + m)));
            if (!equal_on_family(c, lhs, rhs, d, "right expansion rule " + loc2("n", n, "r", r)))
                return false;
        }
    return true;
}

bool chk_cartan_poly_xplus_power(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", c.opt.max_n}, {"r", c.opt.max_r}};
    for (long r = 1; r <= c.opt.max_r; ++r)
        for (long n = 1; n <= c.opt.max_n; ++n) {
            Element lhs = Element::from_word(Word(r, sym_xp(0))) * P_el(n);
            Element rhs;
            std::vector<long> m(r, 0);
            std::function<void(long, long)> rec = [&](long i, long sum) {
                if (i == r) {
                    RatFunc coeff = rfq(sum);
                    Word w;
                    for (long mi : m) {
                        coeff *= rfi(mi + 1);
                        w.push_back(sym_xp(mi));
                    }
                    rhs += coeff * (P_el(n - sum) * Element::from_word(w));
                    return;
                }
                for (long mi = 0; sum + mi <= n; ++mi) {
                    m[i] = mi;
                    rec(i + 1, sum + mi);
                }
            };
            rec(0, 0);
            if (!equal_on_family(c, lhs, rhs, d, "power expansion rule " + loc2("n", n, "r", r)))
                return false;
        }
    return true;
}

bool chk_psi_series_vs_exp(Ctx& c, Grid& g, std::string& d) {
    const long N = c.opt.max_n + 1;
    g = {{"n", N}};
    for (long n = 0; n <= N; ++n) {
        Element lhs;
        for (long r = 0; r <= n; ++r) {
            Element psi = r == 0 ? S_el(sym_k()) : S_el(sym_psip(r));
            lhs += psi * build_P_exp(n - r);
        }
        Element rhs = rfq(-2 * n) * (S_el(sym_k()) * build_P_exp(n));
        if (!equal_on_family(c, lhs, rhs, d, "gauge series consistency " + loc1("n", n)))
            return false;
        // mirrored half via the bar involution; exercises negative indices
        if (!equal_on_family(c, apply_Omega(lhs), apply_Omega(rhs), d,
                             "mirrored gauge series consistency " + loc1("n", n)))
            return false;
    }
    return true;
}

bool chk_layer_contraction_plus(Ctx& c, Grid& g, std::string& d) {
    const long R = std::min(c.opt.max_r, c.opt.tensor_rank);
    g = {{"n", c.opt.max_n}, {"r", R}};
    for (long r = 1; r <= R; ++r)
        for (long n = 1; n <= c.opt.max_n; ++n) {
            Element lhs = (rfq(n + r - 1) * rfi(n)) * build_D_plus(n, r);
            Element rhs;
            for (long t = 1; t <= n; ++t)
                rhs += (rfq(t) * rfi(t)) * (S_el(sym_xp(t)) * build_D_plus(n - t, r - 1));
            if (!faithful_zero(c, lhs - rhs, r, d, "plus layer contraction " + loc2("n", n, "r", r)))
                return false;
        }
    return true;
}

bool chk_layer_contraction_minus(Ctx& c, Grid& g, std::string& d) {
    const long R = std::min(c.opt.max_r, c.opt.tensor_rank);
    g = {{"n", c.opt.max_n}, {"r", R}};
    for (long r = 1; r <= R; ++r)
        for (long n = 0; n <= c.opt.max_n; ++n) {
            Element lhs = rfi(n + r) * build_D_minus(n, r);
            Element rhs;
            for (long t = 0; t <= n; ++t)
                rhs += (rfq(-t) * rfi(n - t + 1)) *
                       (build_D_minus(t, r - 1) * S_el(sym_xm(n - t + 1)));
            Element diff = lhs - rhs;
            if (!faithful_zero(c, apply_Phi(diff), r, d,
                               "minus layer contraction " + loc2("n", n, "r", r)))
                return false;
            if (!equal_on_family(c, lhs, rhs, d, "minus layer contraction " + loc2("n", n, "r", r)))
                return false;
        }
    return true;
}

bool series_shift_core(Ctx& c, long rmax, long order, long mid_sign, std::string& d) {
    USeries A = xplus_series(order, 2), B = xplus_series(order, 0);
    for (long r = 1; r <= rmax; ++r) {
        USeries lhs = series_mul(A, series_pow(B, r - 1, order), order);
        series_scale(lhs, rfi(r));
        USeries mid = series_pow(B, r, order);
        series_scale(mid, RatFunc(mid_sign) * rfq(-1) * rfi(r - 1));
        series_add(lhs, mid);
        USeries rhs = series_pow(A, r, order);
        series_scale(rhs, rfq(r - 1));
        for (long m = 0; m <= order; ++m)
            if (!faithful_zero(c, lhs[m] - rhs[m], r, d,
                               "shifted series identity " + loc2("r", r, "order", m)))
                return false;
    }
    return true;
}

bool chk_series_shift_identity(Ctx& c, Grid& g, std::string& d) {
    const long R = std::min(c.opt.max_r, c.opt.tensor_rank);
    const long M = c.opt.max_n + 2;
    g = {{"r", R}, {"order", M}};
    return series_shift_core(c, R, M, -1, d);
}

bool chk_series_shift_squared(Ctx& c, Grid& g, std::string& d) {
    g = {{"r", 2}, {"order", 4}};
    USeries A = xplus_series(4, 2), B = xplus_series(4, 0);
    USeries lhs = series_mul(A, B, 4);
    series_scale(lhs, rfi(2));
    USeries mid = series_pow(B, 2, 4);
    series_scale(mid, rfq(-1));
    series_sub(lhs, mid);
    USeries rhs = series_pow(A, 2, 4);
    series_scale(rhs, rfq(1));
    for (long m = 0; m <= 4; ++m)
        if (!faithful_zero(c, lhs[m] - rhs[m], 2, d, "squared shift identity " + loc1("order", m)))
            return false;
    return true;
}

bool chk_layer_recursion(Ctx& c, Grid& g, std::string& d) {
    const long R = std::min(c.opt.max_r, c.opt.tensor_rank);
    g = {{"n", c.opt.max_n}, {"r", R}};
    for (long r = 1; r <= R; ++r)
        for (long n = 1; n <= c.opt.max_n; ++n) {
            Element lhs = build_D_plus(n, r, DPlusRoute::series);
            Element rhs;
            for (long s = 1; s <= r - 1; ++s)
                rhs += (rf_sgn(s + 1) * rfq(s * (r - 1))) *
                       (S_el(sym_xp(0, s)) * build_D_plus(n, r - s, DPlusRoute::series));
            if (r <= n)
                rhs += rfq(r * (r - 1)) *
                       tau_shift(build_D_plus(n - r, r, DPlusRoute::series), 1);
            if (!faithful_zero(c, lhs - rhs, r, d, "layer recursion " + loc2("n", n, "r", r)))
                return false;
        }
    return true;
}

bool chk_layer_leading_coefficient(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", c.opt.max_n}, {"r", c.opt.max_r}};
    for (long r = 1; r <= c.opt.max_r; ++r)
        for (long n = 1; n <= c.opt.max_n; ++n)
            for (DPlusRoute route : {DPlusRoute::recursion, DPlusRoute::young}) {
                Element e = build_D_plus(n * r, r, route);
                Word top{sym_xp(n, r)};
                auto it = e.terms().find(top);
                if (it == e.terms().end() || !(it->second == rfq(n * r * (r - 1)))) {
                    d = "leading divided coefficient wrong at " + loc2("n", n, "r", r);
                    return false;
                }
            }
    return true;
}

bool chk_young_vs_series(Ctx& c, Grid& g, std::string& d) {
    const long R = std::min(c.opt.max_r, c.opt.tensor_rank);
    const long N = 2 * c.opt.max_n;
    g = {{"n", N}, {"r", R}};
    for (long r = 1; r <= R; ++r)
        for (long n = 0; n <= N; ++n) {
            Element young = build_D_plus(n, r, DPlusRoute::young);
            Element series = build_D_plus(n, r, DPlusRoute::series);
            if (!c.oracle(r).kills(young - series)) {
                d = "tableau expansion differs from the series route at " + loc2("n", n, "r", r);
                return false;
            }
        }
    return true;
}

bool chk_young_stats_spot(Ctx&, Grid& g, std::string& d) {
    g = {{"parts", 4}};
    auto [l, f] = young_stats({2, 1, 3, 1});
    if (l != 7 || f != 59) {
        d = "tableau statistics for (2,1,3,1) gave (" + std::to_string(l) + ", " +
            std::to_string(f) + "), want (7, 59)";
        return false;
    }
    return true;
}

bool chk_hw_transport(Ctx& c, Grid& g, std::string& d) {
    const long R = std::min(c.opt.max_r, c.opt.tensor_rank);
    g = {{"r", R}};
    for (long r = 1; r <= R; ++r) {
        UplusOracle& orc = c.oracle(r);
        const long dim = orc.window().module().dim;
        std::vector<MPoly> E = esym(0, r);
        const long M = r + 2;
        for (long s = 0; s <= r; ++s) {
            USeries xdiv = series_divided(xplus_series(M, 0), r - s, M);
            std::vector<MPoly> gs;
            for (long m = 0; m <= M; ++m) {
                Vec<MPoly> v = orc.apply(S_el(sym_xp(0, s)) * xdiv[m]);
                for (long i = 1; i < dim; ++i)
                    if (!v[i].is_zero()) {
                        d = "transported vector leaves the top line at " + loc2("s", s, "order", m);
                        return false;
                    }
                gs.push_back(v[0]);
            }
            for (long m = 0; m <= M; ++m) {
                MPoly h;
                for (long j = 0; j <= std::min(m, r); ++j)
                    h = h + mp_c(rf_sgn(j)) * E[j] * gs[m - j];
                MPoly want;
                if (m <= s)
                    want = mp_c(rf_sgn(m) * rfb(r - m, s - m) * rfq(m * (r - s))) * E[m];
                if (!(h == want)) {
                    d = "transport numerator coefficient wrong at " + loc2("s", s, "order", m) +
                        " with rank " + std::to_string(r);
                    return false;
                }
            }
        }
    }
    return true;
}

// numerator of the transport coefficient: degree-s polynomial in u over the
// symmetric functions of vars off..off+r-1, returned as u-coefficients
std::vector<MPoly> transport_numerator(long s, long r, long off) {
    std::vector<MPoly> E = esym(off, r);
    std::vector<MPoly> N(s + 1);
    for (long t = 0; t <= s; ++t) {
        if (t > r) break;  // E_t vanishes beyond the variable count
        N[t] = mp_c(rf_sgn(t) * rfb(r - t, s - t) * rfq(t * (r - s))) * E[t];
    }
    return N;
}

// (c0 + c1 u) * N
std::vector<MPoly> poly_mul_linear(const std::vector<MPoly>& N, const MPoly& c0,
                                   const MPoly& c1) {
    std::vector<MPoly> out(N.size() + 1);
    for (size_t t = 0; t < N.size(); ++t) {
        out[t] = out[t] + c0 * N[t];
        out[t + 1] = out[t + 1] + c1 * N[t];
    }
    return out;
}

bool chk_f_recursion(Ctx&, Grid& g, std::string& d) {
    const long R = 4;
    g = {{"r", R}};
    for (long r = 2; r <= R; ++r)
        for (long s = 1; s <= r; ++s) {
            std::vector<MPoly> lhs = transport_numerator(s, r, 0);
            std::vector<MPoly> rhs = poly_mul_linear(
                transport_numerator(s - 1, r - 1, 1), mp_c(rfq(s - r)),
                mp_c(RatFunc(-1L) * rfq(r - s)) * MPoly::var(0));
            std::vector<MPoly> t2 = transport_numerator(s, r - 1, 1);
            for (size_t t = 0; t < t2.size(); ++t)
                rhs[t] = rhs[t] + mp_c(rfq(s)) * t2[t];
            for (size_t t = 0; t < rhs.size(); ++t) {
                MPoly want = t < lhs.size() ? lhs[t] : MPoly();
                if (!(rhs[t] == want)) {
                    d = "transport numerator recursion fails at " + loc2("s", s, "r", r);
                    return false;
                }
            }
        }
    return true;
}

bool chk_shift_eigenvalue(Ctx& c, Grid& g, std::string& d) {
    const long R = std::min(c.opt.max_r, c.opt.tensor_rank);
    g = {{"n", c.opt.max_n}, {"r", R}};
    for (long r = 1; r <= R; ++r) {
        UplusOracle& orc = c.oracle(r);
        MPoly prod = scalar_one<MPoly>(0);
        for (long i = 0; i < r; ++i) prod = prod * MPoly::var(i);
        for (long n = 0; n <= c.opt.max_n; ++n) {
            Element e = build_D_plus(n, r);
            Vec<MPoly> lhs = orc.apply(tau_shift(e, 1));
            Vec<MPoly> rhs = orc.apply(e);
            for (auto& x : rhs) x = x * prod;
            if (!(lhs == rhs)) {
                d = "shift eigenvalue fails at " + loc2("n", n, "r", r);
                return false;
            }
        }
    }
    return true;
}

bool chk_coproduct_power_law(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", c.opt.max_n}, {"s", c.opt.max_s}};
    Module<MPoly> L = evaluation_twist(make_Vn<MPoly>(1), MPoly::var(0));
    Module<MPoly> R = evaluation_twist(make_Vn<MPoly>(1), MPoly::var(1));
    DerivedWindow<MPoly> WL(L), WR(R);
    const MPoly one = scalar_one<MPoly>(0);
    const Mat<MPoly> id2 = Mat<MPoly>::identity(2, one);
    for (long n = 0; n <= c.opt.max_n; ++n) {
        const Mat<MPoly>& XL = WL.op(sym_xp(n));
        const Mat<MPoly>& XR = WR.op(sym_xp(n));
        Mat<MPoly> A = kron(XL, WR.module().k);
        Mat<MPoly> B = kron(id2, XR);
        for (long s = 1; s <= c.opt.max_s; ++s) {
            Mat<MPoly> lhs = mat_pow(A + B, s, one);
            Mat<MPoly> rhs(4, 4);
            for (long t = 0; t <= s; ++t) {
                Mat<MPoly> term = kron(mat_pow(XL, t, one),
                                       mat_pow(XR, s - t, one) * mat_pow(WR.module().k, t, one));
                term.scale(scalar_rf<MPoly>(rfq(t * (s - t)) * rfb(s, t), 0));
                rhs += term;
            }
            if (!(lhs == rhs)) {
                d = "twisted power law fails at " + loc2("n", n, "s", s);
                return false;
            }
        }
    }
    return true;
}

Element nested_rhs(long r, long n) {
    Element rhs;
    for (long s = 0; s <= r; ++s) {
        Element tb = tau_shift(build_B(r - s, n - r - 1), 1);
        tb.scale(rf_fact_inv(r - s + 1));
        Element term = s == 0 ? tb : S_el(sym_xp(1, s)) * tb;
        term.scale(rf_sgn(s) * rfq(r * (r - s + 1)));
        rhs += term;
    }
    return rhs;
}

bool chk_nested_commutator(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", c.opt.max_n}, {"r", c.opt.max_r}};
    for (long r = 0; r <= c.opt.max_r; ++r) {
        for (long n = -2; n <= c.opt.max_n; ++n) {
            Element lhs = build_A(r, n);
            lhs.scale(rf_fact_inv(r + 1));
            Element rhs = nested_rhs(r, n);
            if (!equal_on_family(c, lhs, rhs, d, "nested commutator expansion " + loc2("n", n, "r", r)))
                return false;
        }
        if (r + 1 > c.opt.tensor_rank) continue;
        for (long n = r + 1; n <= r + 1 + c.opt.max_n; ++n) {
            Element lhs = build_A(r, n);
            lhs.scale(rf_fact_inv(r + 1));
            if (!faithful_zero(c, lhs - nested_rhs(r, n), r + 1, d,
                               "nested commutator expansion " + loc2("n", n, "r", r)))
                return false;
        }
    }
    return true;
}

bool chk_symmetrized_expansion(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", c.opt.max_n}, {"r", c.opt.max_r}};
    for (long r = 0; r <= c.opt.max_r; ++r)
        for (long n = -2; n <= c.opt.max_n; ++n) {
            Element lhs = build_B(r, n);
            lhs.scale(rf_fact_inv(r + 1));
            Element rhs;
            for (long s = 0; s <= r; ++s) {
                Element ta = build_A(s, n);
                ta.scale(rf_fact_inv(s + 1));
                Element term = s == r ? ta : S_el(sym_xp(0, r - s)) * ta;
                term.scale(rfq((r - s) * (s + 1)));
                rhs += term;
            }
            if (!equal_on_family(c, lhs, rhs, d, "symmetrized expansion " + loc2("n", n, "r", r)))
                return false;
            if (n >= 0 && r + 1 <= c.opt.tensor_rank &&
                !faithful_zero(c, lhs - rhs, r + 1, d, "symmetrized expansion " + loc2("n", n, "r", r)))
                return false;
        }
    return true;
}

Element pairing_rhs(long r, long s, long exp_sign) {
    Element rhs;
    for (long t = 0; t <= std::min(r, s); ++t)
        for (long m = 0; m <= t; ++m) {
            long n2 = t - m;
            Element term = build_D_minus(m, s - t) *
                           Element::from_word(Word(t, sym_k())) * build_Dbb(n2, r - t);
            term.scale(rf_sgn(t) * rfq(exp_sign * t * (r + s - t)));
            rhs += term;
        }
    return rhs;
}

bool chk_pairing_expansion(Ctx& c, Grid& g, std::string& d) {
    g = {{"r", c.opt.max_r}, {"s", c.opt.max_s}};
    for (long r = 0; r <= c.opt.max_r; ++r)
        for (long s = 0; s <= c.opt.max_s; ++s) {
            Element lhs = Element::from_word({sym_xp(0, r), sym_xm(1, s)});
            if (!equal_on_family(c, lhs, pairing_rhs(r, s, -1), d,
                                 "divided pairing expansion " + loc2("r", r, "s", s)))
                return false;
        }
    return true;
}

bool chk_cartan_layer_commutation(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", c.opt.max_n}, {"r", c.opt.max_r}};
    for (long r = 1; r <= c.opt.max_r; ++r)
        for (long n = 0; n <= c.opt.max_n; ++n) {
            Element lhs = build_Dbb(n, r) * S_el(sym_xm(1));
            Element rhs = (RatFunc(-1L) * rfq(-n - r) * rfi(n + 1)) *
                          (S_el(sym_k()) * build_Dbb(n + 1, r - 1));
            for (long m = 1; m <= n + 1; ++m)
                rhs += (rfq(m - 1) * rfi(m)) * (S_el(sym_xm(m)) * build_Dbb(n - m + 1, r));
            if (!equal_on_family(c, lhs, rhs, d, "Cartan layer commutation " + loc2("n", n, "r", r)))
                return false;
        }
    return true;
}

bool chk_psi_sandwich(Ctx& c, Grid& g, std::string& d) {
    const long R = std::min(c.opt.max_r, c.opt.tensor_rank - 1);
    const long M = c.opt.max_n;
    g = {{"r", R}, {"order", M}};
    DerivedWindow<RatFunc>& rw = c.rat_win();
    const Vec<RatFunc> rbot =
        unit_vec<RatFunc>(rw.module().dim, rw.module().dim - 1, scalar_one<RatFunc>(0));
    for (long r = 1; r <= R; ++r) {
        UplusOracle& orc = c.oracle(r + 1);
        USeries X = xplus_series(M, 0), PSI = psip_series(M);
        std::vector<USeries> Xp(r + 2);
        Xp[0] = USeries(M + 1);
        Xp[0][0] = Element::one();
        for (long j = 1; j <= r + 1; ++j) Xp[j] = series_mul(Xp[j - 1], X, M);
        USeries lhs(M + 1);
        for (long t = 0; t <= r; ++t)
            series_add(lhs, series_mul(Xp[t], series_mul(PSI, Xp[r - t], M), M));
        USeries rhs(M + 1);
        for (long m = 0; m <= M; ++m) {
            Element t1 = S_el(sym_kinv()) * Xp[r][m];
            t1.scale(rfq(r) * rfi(r + 1));
            Element t2 = S_el(sym_xm(0)) * Xp[r + 1][m];
            t2.scale(rfq(1) - rfq(-1));
            rhs[m] = t1 - t2;
        }
        for (long m = 0; m <= M; ++m) {
            if (!(orc.apply(lhs[m]) == orc.apply(rhs[m]))) {
                d = "gauge sandwich congruence fails on the bottom vector at " +
                    loc2("r", r, "order", m);
                return false;
            }
            if (!(eval_apply(lhs[m], rw, rbot) == eval_apply(rhs[m], rw, rbot))) {
                d = "gauge sandwich congruence fails on the rational bottom vector at " +
                    loc2("r", r, "order", m);
                return false;
            }
        }
    }
    return true;
}

bool pole_free_mat(const Mat<RatFunc>& m, std::string& d, const std::string& where) {
    for (long ell : {3L, 5L})
        for (long i = 0; i < m.rows(); ++i)
            for (long j = 0; j < m.cols(); ++j) {
                try {
                    specialize(m.at(i, j), ell);
                } catch (const PoleAtRoot&) {
                    d = where + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") has a pole at the order-" + std::to_string(ell) + " root";
                    return false;
                }
            }
    return true;
}

bool chk_integrality_cartan_poly(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", 4}};
    for (long a = 1; a <= 4; ++a)
        for (long n : {a, -a})
            if (!pole_free_mat(eval_element(build_P(n), c.rat_win()), d,
                               "Cartan polynomial " + loc1("n", n)))
                return false;
    return true;
}

bool chk_integrality_layers(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", 4}, {"r", 3}};
    for (long r = 1; r <= 3; ++r)
        for (long n = 1; n <= 4; ++n) {
            if (!pole_free_mat(eval_element(build_D_plus(n, r), c.rat_win()), d,
                               "plus layer " + loc2("n", n, "r", r)))
                return false;
            if (!pole_free_mat(eval_element(build_D_minus(n, r), c.rat_win()), d,
                               "minus layer " + loc2("n", n, "r", r)))
                return false;
        }
    return true;
}

bool chk_integrality_symmetrized(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", 3}, {"r", 3}};
    for (long r = 1; r <= 3; ++r)
        for (long n = -3; n <= 3; ++n) {
            Element b = build_B(r, n);
            b.scale(rf_fact_inv(r + 1));
            if (!pole_free_mat(eval_element(b, c.rat_win()), d,
                               "symmetrized product " + loc2("n", n, "r", r)))
                return false;
            Element a = build_A(r, n);
            a.scale(rf_fact_inv(r + 1));
            if (!pole_free_mat(eval_element(a, c.rat_win()), d,
                               "nested commutator " + loc2("n", n, "r", r)))
                return false;
        }
    return true;
}

// ---- designed mutations: each must FAIL when run --------------------------

bool chk_mutant_series_shift_sign(Ctx& c, Grid& g, std::string& d) {
    g = {{"r", 2}, {"order", 3}};
    std::string scratch;
    if (series_shift_core(c, 2, 3, +1, scratch)) return true;  // unexpectedly held
    d = "flipped middle sign breaks the shifted series identity, as designed";
    return false;
}

bool chk_mutant_pairing_exponent(Ctx& c, Grid& g, std::string& d) {
    g = {{"r", 1}, {"s", 1}};
    Element lhs = Element::from_word({sym_xp(0, 1), sym_xm(1, 1)});
    if (operators_equal_on(lhs, pairing_rhs(1, 1, +1), c.rat_win())) return true;
    d = "flipped pairing exponent breaks the expansion, as designed";
    return false;
}

bool chk_mutant_young_offset(Ctx& c, Grid& g, std::string& d) {
    g = {{"n", 2}, {"r", 2}};
    Element young = build_D_plus(2, 2, DPlusRoute::young);
    young.scale(rfq(1));
    if (c.oracle(2).kills(young - build_D_plus(2, 2, DPlusRoute::series))) return true;
    d = "globally rescaled tableau expansion differs from the series route, as designed";
    return false;
}

struct EntryDef {
    const char* name;
    bool conjecture;
    bool mutant;
    bool (*fn)(Ctx&, Grid&, std::string&);
};

const EntryDef kEntries[] = {
    {"qbinom-alternating-sum", false, false, chk_qbinom_alternating},
    {"divided-commutation", false, false, chk_divided_commutation},
    {"cartan-poly-routes", false, false, chk_cartan_poly_routes},
    {"cartan-poly-xplus-left", false, false, chk_cartan_poly_xplus_left},
    {"cartan-poly-xplus-right", false, false, chk_cartan_poly_xplus_right},
    {"cartan-poly-xplus-power", false, false, chk_cartan_poly_xplus_power},
    {"psi-series-vs-exp", false, false, chk_psi_series_vs_exp},
    {"layer-contraction-plus", false, false, chk_layer_contraction_plus},
    {"layer-contraction-minus", false, false, chk_layer_contraction_minus},
    {"series-shift-identity", false, false, chk_series_shift_identity},
    {"series-shift-squared", false, false, chk_series_shift_squared},
    {"layer-recursion", false, false, chk_layer_recursion},
    {"layer-leading-coefficient", false, false, chk_layer_leading_coefficient},
    {"young-vs-series", true, false, chk_young_vs_series},
    {"young-stats-spot", false, false, chk_young_stats_spot},
    {"hw-transport-coefficients", false, false, chk_hw_transport},
    {"f-recursion-closed-form", false, false, chk_f_recursion},
    {"shift-eigenvalue", false, false, chk_shift_eigenvalue},
    {"coproduct-power-law", false, false, chk_coproduct_power_law},
    {"nested-commutator-expansion", false, false, chk_nested_commutator},
    {"symmetrized-product-expansion", false, false, chk_symmetrized_expansion},
    {"pairing-expansion", false, false, chk_pairing_expansion},
    {"cartan-layer-commutation", false, false, chk_cartan_layer_commutation},
    {"psi-sandwich-congruence", false, false, chk_psi_sandwich},
    {"integrality-cartan-poly", false, false, chk_integrality_cartan_poly},
    {"integrality-layers", false, false, chk_integrality_layers},
    {"integrality-symmetrized", false, false, chk_integrality_symmetrized},
    {"mutant-series-shift-sign", false, true, chk_mutant_series_shift_sign},
    {"mutant-pairing-exponent", false, true, chk_mutant_pairing_exponent},
    {"mutant-young-offset", false, true, chk_mutant_young_offset},
};

}  // namespace

std::vector<std::string> registry_check_names(bool include_mutants) {
    std::vector<std::string> out;
    for (const EntryDef& e : kEntries)
        if (!e.mutant || include_mutants) out.emplace_back(e.name);
    return out;
}

std::vector<CheckReport> run_registry(const RegistryOptions& opt) {
    Ctx ctx(opt);
    std::vector<CheckReport> out;
    for (const EntryDef& e : kEntries) {
        bool selected;
        if (!opt.selection.empty())
            selected = std::find(opt.selection.begin(), opt.selection.end(), e.name) !=
                       opt.selection.end();
        else
            selected = !e.mutant || opt.include_mutants;
        if (!selected) continue;
        CheckReport r;
        r.name = e.name;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = e.fn(ctx, r.grid, r.detail);
        } catch (const std::exception& ex) {
            ok = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.status = ok ? "pass" : (e.conjecture ? "finding" : "fail");
        out.push_back(std::move(r));
    }
    return out;
}

bool registry_all_pass(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports) {
        const bool mutant = r.name.rfind("mutant-", 0) == 0;
        if (mutant ? r.status != "fail" : r.status != "pass") return false;
    }
    return true;
}

std::string registry_report_json(const std::vector<CheckReport>& reports, bool timings,
                                 bool pretty) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckReport& r : reports) {
        nlohmann::ordered_json o;
        o["check"] = r.name;
        nlohmann::ordered_json grid = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.grid) grid[k] = v;
        o["grid"] = std::move(grid);
        o["status"] = r.status;
        if (!r.detail.empty()) o["detail"] = r.detail;
        if (timings) o["seconds"] = r.seconds;
        arr.push_back(std::move(o));
    }
    return pretty ? arr.dump(2) : arr.dump();
}

}  // namespace qra
